#include "spectree/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <queue>
#include <set>

namespace spectree {

int enum_cap() {
  if (const char* env = std::getenv("SPECTREE_ENUM_CAP")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < 64) return static_cast<int>(v);
  }
  return kDefaultEnumCap;
}

namespace {

std::vector<Vertex> centroids(const Tree& t) {
  const int n = t.order();
  if (n == 1) return {0};
  RootedTree rt = root_bottom_up(t, 0);
  std::vector<int> size(n, 1);
  for (Vertex v : rt.order)
    if (rt.parent[v] >= 0) size[rt.parent[v]] += size[v];
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v) {
    int worst = n - size[v];
    for (Vertex c : rt.children[v]) worst = std::max(worst, size[c]);
    if (2 * worst <= n) out.push_back(v);
  }
  return out;
}

std::string rooted_encoding(const Tree& t, Vertex root) {
  RootedTree rt = root_bottom_up(t, root);
  std::vector<std::string> enc(t.order());
  for (Vertex v : rt.order) {
    std::vector<std::string> parts;
    parts.reserve(rt.children[v].size());
    for (Vertex c : rt.children[v]) parts.push_back(std::move(enc[c]));
    std::sort(parts.begin(), parts.end());
    std::string s = "(";
    for (auto& p : parts) s += p;
    s += ')';
    enc[v] = std::move(s);
  }
  return std::move(enc[root]);
}

}  // namespace

std::string canonical_encoding(const Tree& t) {
  std::string best;
  for (Vertex c : centroids(t)) {
    std::string e = rooted_encoding(t, c);
    if (best.empty() || e < best) best = std::move(e);
  }
  return best;
}

Tree tree_from_encoding(std::string_view encoding) {
  if (encoding.size() < 2 || encoding.front() != '(')
    throw GraphError(GraphError::Kind::BadInput, "tree encoding must start with '('");
  std::vector<Edge> edges;
  std::vector<Vertex> stack;
  int next = 0;
  for (std::size_t i = 0; i < encoding.size(); ++i) {
    char c = encoding[i];
    if (c == '(') {
      if (next > 0 && stack.empty())
        throw GraphError(GraphError::Kind::BadInput, "tree encoding has more than one root");
      Vertex v = next++;
      if (!stack.empty()) edges.emplace_back(stack.back(), v);
      stack.push_back(v);
    } else if (c == ')') {
      if (stack.empty()) throw GraphError(GraphError::Kind::BadInput, "unbalanced tree encoding");
      stack.pop_back();
    } else {
      throw GraphError(GraphError::Kind::BadInput, "tree encoding may only contain '(' and ')'");
    }
  }
  if (!stack.empty()) throw GraphError(GraphError::Kind::BadInput, "unbalanced tree encoding");
  return Tree(next, edges);
}

std::vector<Tree> enumerate_free_trees(int n) { return enumerate_free_trees(n, enum_cap()); }

std::vector<Tree> enumerate_free_trees(int n, int cap) {
  if (n < 1) throw std::invalid_argument("enumerate_free_trees: n must be positive");
  if (n > cap)
    throw EnumerationCapError("enumeration of " + std::to_string(n) + "-vertex trees exceeds the cap " +
                              std::to_string(cap) + " (set SPECTREE_ENUM_CAP to raise it)");
  std::set<std::string> level{"()"};
  for (int m = 1; m < n; ++m) {
    std::set<std::string> next;
    for (const auto& enc : level) {
      Tree base = tree_from_encoding(enc);
      std::vector<Edge> edges = base.edges();
      edges.emplace_back(0, m);
      for (Vertex v = 0; v < m; ++v) {
        edges.back() = {v, m};
        next.insert(canonical_encoding(Tree(m + 1, edges)));
      }
    }
    level = std::move(next);
  }
  std::vector<Tree> out;
  out.reserve(level.size());
  for (const auto& enc : level) out.push_back(tree_from_encoding(enc));
  return out;
}

Tree prufer_decode(std::span<const int> sequence) {
  const int n = static_cast<int>(sequence.size()) + 2;
  for (int x : sequence)
    if (x < 0 || x >= n) throw GraphError(GraphError::Kind::OutOfRange, "Prüfer entry out of range");
  std::vector<int> degree(n, 1);
  for (int x : sequence) ++degree[x];
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.push(v);
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (int x : sequence) {
    int leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, x);
    if (--degree[x] == 1) leaves.push(x);
  }
  int u = leaves.top();
  leaves.pop();
  int v = leaves.top();
  edges.emplace_back(u, v);
  return Tree(n, edges);
}

Tree random_tree(int n, std::mt19937_64& rng) {
  if (n < 1) throw std::invalid_argument("random_tree: n must be positive");
  if (n == 1) return Tree(1, std::vector<Edge>{});
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> seq(n - 2);
  for (auto& x : seq) x = pick(rng);
  return prufer_decode(seq);
}

}  // namespace spectree
