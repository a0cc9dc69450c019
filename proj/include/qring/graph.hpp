#ifndef QRING_GRAPH_HPP
#define QRING_GRAPH_HPP

#include <Eigen/Dense>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "qring/errors.hpp"

namespace qring {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using Edge = std::pair<int, int>;

/// Simple undirected graph over dense 0-based node indices.
///
/// Edges are stored canonically: (u, v) with u < v, sorted lexicographically.
/// Construction rejects self-loops, duplicate edges, and out-of-range
/// endpoints. Instances are immutable values and safe to share across
/// threads.
class Graph {
 public:
  Graph(int node_count, std::vector<Edge> edges);

  int node_count() const noexcept { return n_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::span<const int> neighbors(int u) const { return adjacency_.at(u); }
  int degree(int u) const { return static_cast<int>(adjacency_.at(u).size()); }
  bool is_connected() const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
};

/// Parameters of one member of the triangulated ring family.
/// q = 0 denotes the base ring itself.
struct FamilySpec {
  int n = 0;  ///< base ring size
  int r = 0;  ///< base node degree (even)
  int q = 0;  ///< triangulation parameter

  /// Throws ValidationError unless n >= 3, r even, 2 <= r,
  /// r/2 <= floor((n-1)/2) and q >= 0.
  void validate() const;
};

struct BipartiteResult {
  bool is_bipartite = false;
  /// Per-node color in {0, 1}; node 0 gets color 0. Meaningful only when
  /// is_bipartite is true.
  std::vector<int> coloring;
};

/// Circulant ring on n nodes with connection offsets {±1, ..., ±r/2}.
Graph build_ring(int n, int r);

/// For each edge (u, v) of g, add q new nodes adjacent to exactly u and v.
/// New nodes are appended copy-major: all copy-1 nodes in edge order, then
/// copy-2, and so on, so node n + (i-1)*m + j is copy i of edge j.
Graph q_triangulate(const Graph& g, int q);

/// build_ring followed by q_triangulate.
Graph build_family(const FamilySpec& spec);

/// BFS 2-coloring from node 0. Requires a connected graph.
BipartiteResult is_bipartite(const Graph& g);

/// L = D - A. Row sums are exactly zero.
template <typename Scalar = double>
DenseMatrix<Scalar> laplacian(const Graph& g) {
  const int n = g.node_count();
  DenseMatrix<Scalar> lap = DenseMatrix<Scalar>::Zero(n, n);
  for (const auto& [u, v] : g.edges()) {
    lap(u, v) = Scalar(-1);
    lap(v, u) = Scalar(-1);
    lap(u, u) += Scalar(1);
    lap(v, v) += Scalar(1);
  }
  return lap;
}

/// Node-by-edge 0/1 incidence matrix B; column j marks the endpoints of
/// edge j. Satisfies L = 2D - B*B^T.
template <typename Scalar = double>
DenseMatrix<Scalar> incidence(const Graph& g) {
  DenseMatrix<Scalar> b =
      DenseMatrix<Scalar>::Zero(g.node_count(), g.edge_count());
  int j = 0;
  for (const auto& [u, v] : g.edges()) {
    b(u, j) = Scalar(1);
    b(v, j) = Scalar(1);
    ++j;
  }
  return b;
}

template <typename Scalar = double>
DenseMatrix<Scalar> adjacency_matrix(const Graph& g) {
  const int n = g.node_count();
  DenseMatrix<Scalar> adj = DenseMatrix<Scalar>::Zero(n, n);
  for (const auto& [u, v] : g.edges()) {
    adj(u, v) = Scalar(1);
    adj(v, u) = Scalar(1);
  }
  return adj;
}

/// Plain-text edge list: header "# nodes=<n> edges=<m>", then one "u v" line
/// per edge in canonical order.
void write_edge_list(const Graph& g, std::ostream& out);
Graph read_edge_list(std::istream& in);

}  // namespace qring

#endif
