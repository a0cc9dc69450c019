#include "qring/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace qring {

Graph::Graph(int node_count, std::vector<Edge> edges)
    : n_(node_count), edges_(std::move(edges)) {
  if (n_ <= 0) throw ValidationError("graph needs at least one node");
  for (auto& [u, v] : edges_) {
    if (u == v) throw ValidationError("self-loop on node " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n_)
      throw ValidationError("edge endpoint out of range: (" +
                            std::to_string(u) + ", " + std::to_string(v) + ")");
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw ValidationError("duplicate edge");
  adjacency_.resize(n_);
  for (const auto& [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::is_connected() const {
  std::vector<char> seen(n_, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int v : adjacency_[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == n_;
}

void FamilySpec::validate() const {
  if (n < 3) throw ValidationError("ring size n must be >= 3");
  if (r < 2) throw ValidationError("node degree r must be >= 2");
  if (r % 2 != 0) throw ValidationError("node degree r must be even");
  if (r / 2 > (n - 1) / 2)
    throw ValidationError("r/2 exceeds floor((n-1)/2): ring would not be simple");
  if (q < 0) throw ValidationError("triangulation parameter q must be >= 0");
}

Graph build_ring(int n, int r) {
  FamilySpec{n, r, 0}.validate();
  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(n) * r / 2);
  // Each unordered pair {u, u+off mod n} is emitted exactly once because
  // off + off' <= r <= n - 1 rules out wraparound collisions.
  for (int u = 0; u < n; ++u) {
    for (int off = 1; off <= r / 2; ++off) {
      const int v = (u + off) % n;
      edges.emplace_back(std::min(u, v), std::max(u, v));
    }
  }
  return Graph(n, std::move(edges));
}

Graph q_triangulate(const Graph& g, int q) {
  if (q < 0) throw ValidationError("triangulation parameter q must be >= 0");
  if (q == 0) return g;
  const int n = g.node_count();
  const int m = g.edge_count();
  std::vector<Edge> edges = g.edges();
  edges.reserve(static_cast<size_t>(m) * (1 + 2 * q));
  for (int copy = 0; copy < q; ++copy) {
    for (int j = 0; j < m; ++j) {
      const int w = n + copy * m + j;
      edges.emplace_back(g.edges()[j].first, w);
      edges.emplace_back(g.edges()[j].second, w);
    }
  }
  return Graph(n + q * m, std::move(edges));
}

Graph build_family(const FamilySpec& spec) {
  spec.validate();
  return q_triangulate(build_ring(spec.n, spec.r), spec.q);
}

BipartiteResult is_bipartite(const Graph& g) {
  BipartiteResult result;
  result.coloring.assign(g.node_count(), -1);
  std::vector<int> queue{0};
  result.coloring[0] = 0;
  for (size_t head = 0; head < queue.size(); ++head) {
    const int u = queue[head];
    for (int v : g.neighbors(u)) {
      if (result.coloring[v] < 0) {
        result.coloring[v] = 1 - result.coloring[u];
        queue.push_back(v);
      } else if (result.coloring[v] == result.coloring[u]) {
        result.is_bipartite = false;
        return result;
      }
    }
  }
  if (queue.size() != static_cast<size_t>(g.node_count()))
    throw ValidationError("is_bipartite requires a connected graph");
  result.is_bipartite = true;
  return result;
}

void write_edge_list(const Graph& g, std::ostream& out) {
  out << "# nodes=" << g.node_count() << " edges=" << g.edge_count() << "\n";
  for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
}

Graph read_edge_list(std::istream& in) {
  std::string header;
  if (!std::getline(in, header))
    throw ValidationError("edge list: missing header line");
  int n = 0, m = 0;
  if (std::sscanf(header.c_str(), "# nodes=%d edges=%d", &n, &m) != 2)
    throw ValidationError("edge list: header must be '# nodes=<n> edges=<m>'");
  std::vector<Edge> edges;
  edges.reserve(m);
  int u = 0, v = 0;
  while (in >> u >> v) edges.emplace_back(u, v);
  if (static_cast<int>(edges.size()) != m)
    throw ValidationError("edge list: expected " + std::to_string(m) +
                          " edges, found " + std::to_string(edges.size()));
  return Graph(n, std::move(edges));
}

}  // namespace qring
