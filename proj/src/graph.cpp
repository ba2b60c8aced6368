#include "spectree/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

namespace spectree {

std::string describe(const Edge& e) {
  return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

Graph::Graph(int n, std::span<const Edge> edges) : n_(n), adj_(n < 0 ? 0 : n) {
  if (n <= 0) throw GraphError(GraphError::Kind::BadInput, "vertex count must be positive");
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw GraphError(GraphError::Kind::OutOfRange,
                       "edge " + describe({u, v}) + " has an endpoint outside 0.." + std::to_string(n - 1));
    if (u == v) throw GraphError(GraphError::Kind::SelfLoop, "self-loop at vertex " + std::to_string(u));
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end())
    throw GraphError(GraphError::Kind::DuplicateEdge, "duplicate edge " + describe(*dup));
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& nb : adj_) best = std::max(best, static_cast<int>(nb.size()));
  return best;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

namespace {

std::vector<int> bfs_distances(const Graph& g, Vertex src) {
  std::vector<int> dist(g.order(), -1);
  std::queue<Vertex> q;
  dist[src] = 0;
  q.push(src);
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop();
    for (Vertex w : g.neighbors(u))
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
  }
  return dist;
}

}  // namespace

bool Graph::connected() const {
  auto d = bfs_distances(*this, 0);
  return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

Tree::Tree(Graph g) : g_(std::move(g)) {
  if (g_.size() != g_.order() - 1 || !g_.connected())
    throw GraphError(GraphError::Kind::NotATree, "graph with " + std::to_string(g_.order()) + " vertices and " +
                                                     std::to_string(g_.size()) + " edges is not a tree");
}

Graph from_edges(int n, std::span<const Edge> edges) { return Graph(n, edges); }

std::optional<Tree> as_tree(const Graph& g) {
  if (g.size() != g.order() - 1 || !g.connected()) return std::nullopt;
  return Tree(g);
}

RootedTree root_bottom_up(const Tree& t, Vertex root) {
  const int n = t.order();
  if (root < 0 || root >= n) throw GraphError(GraphError::Kind::OutOfRange, "root out of range");
  RootedTree rt;
  rt.tree = t;
  rt.root = root;
  rt.parent.assign(n, -1);
  rt.children.assign(n, {});
  std::vector<Vertex> bfs;
  bfs.reserve(n);
  std::vector<char> seen(n, 0);
  bfs.push_back(root);
  seen[root] = 1;
  for (std::size_t i = 0; i < bfs.size(); ++i) {
    Vertex u = bfs[i];
    for (Vertex w : t.neighbors(u))
      if (!seen[w]) {
        seen[w] = 1;
        rt.parent[w] = u;
        rt.children[u].push_back(w);
        bfs.push_back(w);
      }
  }
  rt.order.assign(bfs.rbegin(), bfs.rend());
  return rt;
}

int diameter(const Tree& t) {
  auto d0 = bfs_distances(t.graph(), 0);
  Vertex far = static_cast<Vertex>(std::max_element(d0.begin(), d0.end()) - d0.begin());
  auto d1 = bfs_distances(t.graph(), far);
  return *std::max_element(d1.begin(), d1.end());
}

std::optional<int> graph_diameter(const Graph& g) {
  int best = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    auto d = bfs_distances(g, v);
    for (int x : d) {
      if (x < 0) return std::nullopt;
      best = std::max(best, x);
    }
  }
  return best;
}

Graph add_edges(const Graph& g, std::span<const Edge> extra) {
  std::vector<Edge> all = g.edges();
  for (const auto& e : extra) {
    if (g.has_edge(e.first, e.second))
      throw GraphError(GraphError::Kind::DuplicateEdge, "edge " + describe(e) + " already present");
    all.push_back(e);
  }
  return Graph(g.order(), all);
}

Graph remove_edge(const Graph& g, Edge e) {
  Edge key{std::min(e.first, e.second), std::max(e.first, e.second)};
  std::vector<Edge> rest;
  rest.reserve(g.edges().size());
  bool found = false;
  for (const auto& x : g.edges()) {
    if (x == key)
      found = true;
    else
      rest.push_back(x);
  }
  if (!found) throw GraphError(GraphError::Kind::BadInput, "edge " + describe(e) + " not present");
  return Graph(g.order(), rest);
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<char> seen(g.order(), 0);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (Vertex w : g.neighbors(comp[i]))
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<int> index(g.order(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<int>(i);
  std::vector<Edge> sub;
  for (auto [u, v] : g.edges())
    if (index[u] >= 0 && index[v] >= 0) sub.emplace_back(index[u], index[v]);
  return Graph(static_cast<int>(vertices.size()), sub);
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  long n = 0;
  if (!(in >> n)) throw GraphError(GraphError::Kind::BadInput, "edge list: missing vertex count");
  if (n <= 0) throw GraphError(GraphError::Kind::BadInput, "edge list: vertex count must be positive");
  std::vector<Edge> edges;
  long u = 0, v = 0;
  while (in >> u) {
    if (!(in >> v)) throw GraphError(GraphError::Kind::BadInput, "edge list: dangling endpoint");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!in.eof()) throw GraphError(GraphError::Kind::BadInput, "edge list: non-numeric token");
  return Graph(static_cast<int>(n), edges);
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace spectree
