#include "spectree/family.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace spectree {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

int ftree_order(const FTree& f) {
  return f.p + static_cast<int>(f.s.size()) + 2 * static_cast<int>(f.t.size()) + 1 +
         std::accumulate(f.s.begin(), f.s.end(), 0) + std::accumulate(f.t.begin(), f.t.end(), 0);
}

void validate_ftree(const FTree& f) {
  if (f.p < 0) throw SpecError("FTree: pendant count must be nonnegative");
  for (int x : f.s)
    if (x < 1) throw SpecError("FTree: every height-one branch needs at least one leaf");
  for (int x : f.t)
    if (x < 1) throw SpecError("FTree: every height-two branch needs at least one leaf");
  if (f.s.size() + f.t.size() < 2) throw SpecError("FTree: needs at least two branches of types 1 and 2");
  if (!std::is_sorted(f.s.begin(), f.s.end()) || !std::is_sorted(f.t.begin(), f.t.end()))
    throw SpecError("FTree: leaf counts must be listed in nondecreasing order");
}

}  // namespace

FCounter make_fcounter(int n, bool allow_small) { return FCounter{n, n / 3, allow_small}; }

FTree as_ftree(const FCounter& fc) { return FTree{fc.n - 2 * fc.k - 1, {fc.k - 1, fc.k - 1}, {}}; }

void validate(const FamilySpec& spec) {
  std::visit(overloaded{
                 [](const Star& s) {
                   if (s.n < 1) throw SpecError("star: n must be positive");
                 },
                 [](const Diam3& d) {
                   if (d.b < 1 || d.a < d.b) throw SpecError("T(a,b): requires a >= b >= 1");
                 },
                 [](const Path& p) {
                   if (p.n < 1) throw SpecError("path: n must be positive");
                 },
                 [](const FTree& f) { validate_ftree(f); },
                 [](const FCounter& fc) {
                   if (!fc.allow_small && fc.n < 16) throw SpecError("F(n,k): requires n >= 16");
                   if (fc.k < 2) throw SpecError("F(n,k): requires k >= 2");
                   if (fc.n - 2 * fc.k - 1 < 0) throw SpecError("F(n,k): requires n >= 2k+1");
                 },
             },
             spec);
}

int vertex_count(const FamilySpec& spec) {
  return std::visit(overloaded{
                        [](const Star& s) { return s.n; },
                        [](const Diam3& d) { return d.a + d.b + 2; },
                        [](const Path& p) { return p.n; },
                        [](const FTree& f) { return ftree_order(f); },
                        [](const FCounter& fc) { return fc.n; },
                    },
                    spec);
}

namespace {

Tree build_ftree(const FTree& f) {
  std::vector<Edge> edges;
  int next = 1;
  auto fresh = [&] { return next++; };
  for (int i = 0; i < f.p; ++i) edges.emplace_back(0, fresh());
  for (int s : f.s) {
    int v = fresh();
    edges.emplace_back(0, v);
    for (int i = 0; i < s; ++i) edges.emplace_back(v, fresh());
  }
  for (int t : f.t) {
    int wstar = fresh();
    int w = fresh();
    edges.emplace_back(0, wstar);
    edges.emplace_back(wstar, w);
    for (int i = 0; i < t; ++i) edges.emplace_back(w, fresh());
  }
  return Tree(next, edges);
}

}  // namespace

Tree generate(const FamilySpec& spec) {
  validate(spec);
  return std::visit(overloaded{
                        [](const Star& s) {
                          std::vector<Edge> e;
                          for (int i = 1; i < s.n; ++i) e.emplace_back(0, i);
                          return Tree(s.n, e);
                        },
                        [](const Diam3& d) {
                          std::vector<Edge> e{{0, 1}};
                          int next = 2;
                          for (int i = 0; i < d.a; ++i) e.emplace_back(0, next++);
                          for (int i = 0; i < d.b; ++i) e.emplace_back(1, next++);
                          return Tree(next, e);
                        },
                        [](const Path& p) {
                          std::vector<Edge> e;
                          for (int i = 0; i + 1 < p.n; ++i) e.emplace_back(i, i + 1);
                          return Tree(p.n, e);
                        },
                        [](const FTree& f) { return build_ftree(f); },
                        [](const FCounter& fc) { return build_ftree(as_ftree(fc)); },
                    },
                    spec);
}

FClass f_class(const FTree& spec) {
  if (spec.t.empty()) return FClass::F4;
  return spec.t.size() == 1 ? FClass::F5 : FClass::F6;
}

std::optional<FClassification> classify_F(const Tree& t) {
  std::optional<FTree> best;
  auto is_leaf = [&](Vertex v) { return t.degree(v) == 1; };
  for (Vertex root = 0; root < t.order(); ++root) {
    if (t.degree(root) < 2) continue;
    FTree cand;
    bool ok = true;
    for (Vertex u : t.neighbors(root)) {
      if (is_leaf(u)) {
        ++cand.p;
        continue;
      }
      bool star_branch = true;
      for (Vertex x : t.neighbors(u))
        if (x != root && !is_leaf(x)) star_branch = false;
      if (star_branch) {
        cand.s.push_back(t.degree(u) - 1);
        continue;
      }
      if (t.degree(u) == 2) {
        Vertex w = t.neighbors(u)[0] == root ? t.neighbors(u)[1] : t.neighbors(u)[0];
        bool leaves_only = true;
        for (Vertex x : t.neighbors(w))
          if (x != u && !is_leaf(x)) leaves_only = false;
        if (leaves_only) {
          cand.t.push_back(t.degree(w) - 1);
          continue;
        }
      }
      ok = false;
      break;
    }
    if (!ok || cand.s.size() + cand.t.size() < 2) continue;
    std::sort(cand.s.begin(), cand.s.end());
    std::sort(cand.t.begin(), cand.t.end());
    if (!best || cand < *best) best = std::move(cand);
  }
  if (!best) return std::nullopt;
  FClass cls = f_class(*best);
  return FClassification{std::move(*best), cls};
}

namespace {

int parse_int(std::string_view s, const std::string& ctx) {
  int value = 0;
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw SpecError("family spec '" + ctx + "': bad integer '" + std::string(s) + "'");
  return value;
}

std::vector<int> parse_list(std::string_view s, const std::string& ctx) {
  std::vector<int> out;
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    auto comma = s.find(',', start);
    out.push_back(parse_int(s.substr(start, comma - start), ctx));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string join(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

}  // namespace

FamilySpec parse_family_spec(std::string_view text) {
  std::string ctx(text);
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw SpecError("family spec '" + ctx + "': missing ':'");
  std::string_view kind = text.substr(0, colon);
  std::string_view body = text.substr(colon + 1);
  FamilySpec spec;
  if (kind == "star") {
    spec = Star{parse_int(body, ctx)};
  } else if (kind == "path") {
    spec = Path{parse_int(body, ctx)};
  } else if (kind == "t") {
    auto xs = parse_list(body, ctx);
    if (xs.size() != 2) throw SpecError("family spec '" + ctx + "': expected t:a,b");
    spec = Diam3{xs[0], xs[1]};
  } else if (kind == "fc") {
    auto xs = parse_list(body, ctx);
    if (xs.size() == 1)
      spec = make_fcounter(xs[0]);
    else if (xs.size() == 2)
      spec = FCounter{xs[0], xs[1], false};
    else
      throw SpecError("family spec '" + ctx + "': expected fc:n,k");
  } else if (kind == "f") {
    FTree f;
    auto semi1 = body.find(';');
    if (semi1 == std::string_view::npos) throw SpecError("family spec '" + ctx + "': expected f:p;s..;t..");
    f.p = parse_int(body.substr(0, semi1), ctx);
    auto rest = body.substr(semi1 + 1);
    auto semi2 = rest.find(';');
    f.s = parse_list(rest.substr(0, semi2), ctx);
    if (semi2 != std::string_view::npos) f.t = parse_list(rest.substr(semi2 + 1), ctx);
    spec = std::move(f);
  } else {
    throw SpecError("family spec '" + ctx + "': unknown family '" + std::string(kind) + "'");
  }
  validate(spec);
  return spec;
}

std::string to_string(const FamilySpec& spec) {
  return std::visit(overloaded{
                        [](const Star& s) { return "star:" + std::to_string(s.n); },
                        [](const Diam3& d) { return "t:" + std::to_string(d.a) + "," + std::to_string(d.b); },
                        [](const Path& p) { return "path:" + std::to_string(p.n); },
                        [](const FTree& f) { return "f:" + std::to_string(f.p) + ";" + join(f.s) + ";" + join(f.t); },
                        [](const FCounter& fc) { return "fc:" + std::to_string(fc.n) + "," + std::to_string(fc.k); },
                    },
                    spec);
}

std::string to_string(FClass c) {
  switch (c) {
    case FClass::F4: return "F4";
    case FClass::F5: return "F5";
    case FClass::F6: return "F6";
  }
  return "?";
}

std::string label(const FamilySpec& spec) {
  return std::visit(overloaded{
                        [](const Star& s) { return "S_" + std::to_string(s.n); },
                        [](const Diam3& d) { return "T(" + std::to_string(d.a) + "," + std::to_string(d.b) + ")"; },
                        [](const Path& p) { return "P_" + std::to_string(p.n); },
                        [](const FTree& f) {
                          return "F[" + std::to_string(f.p) + ";" + join(f.s) + ";" + join(f.t) + "]";
                        },
                        [](const FCounter& fc) {
                          return "F(" + std::to_string(fc.n) + "," + std::to_string(fc.k) + ")";
                        },
                    },
                    spec);
}

}  // namespace spectree
