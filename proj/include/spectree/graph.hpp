#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace spectree {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

class GraphError : public std::invalid_argument {
 public:
  enum class Kind { SelfLoop, DuplicateEdge, OutOfRange, NotATree, BadInput };

  GraphError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
 public:
  Graph() = default;
  /// Validates and normalizes the edge list (u < v, sorted).
  Graph(int n, std::span<const Edge> edges);

  int order() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(adj_.at(v).size()); }
  int max_degree() const;
  bool has_edge(Vertex u, Vertex v) const;
  bool connected() const;
  /// c such that |E| = n - 1 + c; meaningful for connected graphs.
  int cyclomatic() const noexcept { return size() - n_ + 1; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

/// A connected acyclic Graph.
class Tree {
 public:
  Tree() = default;
  explicit Tree(Graph g);
  Tree(int n, std::span<const Edge> edges) : Tree(Graph(n, edges)) {}

  const Graph& graph() const noexcept { return g_; }
  int order() const noexcept { return g_.order(); }
  const std::vector<Edge>& edges() const noexcept { return g_.edges(); }
  const std::vector<Vertex>& neighbors(Vertex v) const { return g_.neighbors(v); }
  int degree(Vertex v) const { return g_.degree(v); }
  int max_degree() const { return g_.max_degree(); }

  operator const Graph&() const noexcept { return g_; }
  friend bool operator==(const Tree& a, const Tree& b) { return a.g_ == b.g_; }

 private:
  Graph g_;
};

/// Tree plus a bottom-up vertex ordering: every vertex precedes its parent,
/// the root comes last. Children lists are sorted by vertex id.
struct RootedTree {
  Tree tree;
  Vertex root = 0;
  std::vector<Vertex> order;
  std::vector<Vertex> parent;  // parent[root] == -1
  std::vector<std::vector<Vertex>> children;
};

Graph from_edges(int n, std::span<const Edge> edges);
std::optional<Tree> as_tree(const Graph& g);

RootedTree root_bottom_up(const Tree& t, Vertex root);

/// Longest shortest path. Double BFS for trees.
int diameter(const Tree& t);
/// Diameter of a connected graph (all-pairs BFS); nullopt if disconnected.
std::optional<int> graph_diameter(const Graph& g);

/// Adds edges that are not yet present; throws DuplicateEdge otherwise.
Graph add_edges(const Graph& g, std::span<const Edge> extra);
Graph remove_edge(const Graph& g, Edge e);

/// Vertex sets of the connected components, each sorted, ordered by smallest vertex.
std::vector<std::vector<Vertex>> components(const Graph& g);
/// Subgraph induced on `vertices`, relabelled 0..k-1 in the given order.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Edge-list text: first line n, then one "u v" pair per line.
Graph parse_edge_list(std::string_view text);
std::string format_edge_list(const Graph& g);

std::string describe(const Edge& e);

}  // namespace spectree
