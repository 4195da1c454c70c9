#pragma once

#include <charconv>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "tree.hpp"

namespace sqfree {

enum class FamilyKind {
  Path,
  WhiskeredPath,
  Star,
  Fig1,
  Fig2,
  G1,
  G2,
  RandomTree,
  RandomCaterpillar,
};

struct FamilyDescriptor {
  FamilyKind kind = FamilyKind::Path;
  int n = 1;
  std::uint64_t seed = 0;
};

// A generated tree together with a role name per vertex (indexed like the
// tree's internal vertices), e.g. "r", "t1", "r''_2".
struct NamedTree {
  Tree tree;
  std::vector<std::string> names;

  int vertex(std::string_view name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return static_cast<int>(i);
    throw Error(Errc::BadParameter, "no vertex named " + std::string(name));
  }
};

namespace detail {

inline std::uint64_t parse_uint(std::string_view s, std::string_view what) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || p != s.data() + s.size())
    throw Error(Errc::BadParameter, "bad " + std::string(what) + " \"" + std::string(s) + "\"");
  return v;
}

// Vertices are added with names; labels are assigned afterwards by BFS
// from an anchor, visiting neighbors in insertion order.
class Builder {
 public:
  int add(std::string name) {
    names_.push_back(std::move(name));
    adj_.emplace_back();
    return static_cast<int>(names_.size()) - 1;
  }
  void link(int a, int b) {
    adj_[a].push_back(b);
    adj_[b].push_back(a);
  }

  NamedTree finish_bfs(int anchor) const {
    const int n = static_cast<int>(names_.size());
    std::vector<Label> label(static_cast<std::size_t>(n), 0);
    std::vector<int> queue{anchor};
    label[anchor] = 1;
    Label next = 2;
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (int w : adj_[queue[h]])
        if (label[w] == 0) {
          label[w] = next++;
          queue.push_back(w);
        }
    return finish(label);
  }

  // Keeps labels 1..n in insertion order.
  NamedTree finish_in_order() const {
    std::vector<Label> label(names_.size());
    for (std::size_t i = 0; i < label.size(); ++i) label[i] = static_cast<Label>(i + 1);
    return finish(label);
  }

 private:
  NamedTree finish(const std::vector<Label>& label) const {
    const int n = static_cast<int>(names_.size());
    if (n == 1) return {Tree::single_vertex(1), names_};
    std::vector<LabeledEdge> edges;
    for (int u = 0; u < n; ++u)
      for (int w : adj_[u])
        if (u < w) edges.emplace_back(label[u], label[w]);
    NamedTree out{Tree::from_edges(edges), std::vector<std::string>(static_cast<std::size_t>(n))};
    for (int u = 0; u < n; ++u) out.names[out.tree.index_of(label[u])] = names_[u];
    return out;
  }

  std::vector<std::string> names_;
  std::vector<std::vector<int>> adj_;
};

// Uniform draw from [0, bound) by rejection, identical on every platform.
inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  for (;;) {
    std::uint64_t x = rng();
    if (x < limit) return x % bound;
  }
}

inline void require(bool ok, const std::string& msg) {
  if (!ok) throw Error(Errc::BadParameter, msg);
}

}  // namespace detail

// Decodes a Prüfer sequence over 1..n (n = seq.size() + 2).
inline Tree tree_from_prufer(const std::vector<int>& seq) {
  const int n = static_cast<int>(seq.size()) + 2;
  std::vector<int> degree(static_cast<std::size_t>(n + 1), 1);
  for (int x : seq) {
    detail::require(x >= 1 && x <= n, "Prüfer entry out of range");
    ++degree[x];
  }
  std::vector<LabeledEdge> edges;
  for (int x : seq) {
    int leaf = 1;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(leaf, x);
    --degree[leaf];
    --degree[x];
  }
  int a = 0;
  for (int v = 1; v <= n; ++v)
    if (degree[v] == 1) {
      if (a == 0) {
        a = v;
      } else {
        edges.emplace_back(a, v);
        break;
      }
    }
  return Tree::from_edges(edges);
}

inline Tree random_tree(int n, std::uint64_t seed) {
  detail::require(n >= 1 && n <= kMaxBits, "random_tree needs 1 <= n <= 64");
  if (n == 1) return Tree::single_vertex(1);
  if (n == 2) return Tree::from_edges({{1, 2}});
  std::mt19937_64 rng(seed);
  std::vector<int> seq(static_cast<std::size_t>(n - 2));
  for (int& x : seq) x = 1 + static_cast<int>(detail::bounded(rng, static_cast<std::uint64_t>(n)));
  return tree_from_prufer(seq);
}

// Spine of uniform length in [1, n], remaining vertices hung on uniformly
// chosen spine vertices; labeled by BFS from the first spine vertex.
inline Tree random_caterpillar(int n, std::uint64_t seed) {
  detail::require(n >= 1 && n <= kMaxBits, "random_caterpillar needs 1 <= n <= 64");
  std::mt19937_64 rng(seed);
  int spine = 1 + static_cast<int>(detail::bounded(rng, static_cast<std::uint64_t>(n)));
  detail::Builder b;
  for (int i = 0; i < spine; ++i) {
    b.add("p" + std::to_string(i + 1));
    if (i > 0) b.link(i - 1, i);
  }
  for (int i = spine; i < n; ++i) {
    int at = static_cast<int>(detail::bounded(rng, static_cast<std::uint64_t>(spine)));
    b.link(b.add("l" + std::to_string(i + 1)), at);
  }
  return b.finish_bfs(0).tree;
}

inline FamilyDescriptor parse_family(std::string_view spec) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  for (;;) {
    std::size_t c = spec.find(':', pos);
    parts.push_back(spec.substr(pos, c == std::string_view::npos ? std::string_view::npos : c - pos));
    if (c == std::string_view::npos) break;
    pos = c + 1;
  }
  const std::string_view name = parts[0];
  auto arg = [&](std::size_t i, std::string_view what) { return detail::parse_uint(parts[i], what); };
  auto arity = [&](std::size_t k) {
    detail::require(parts.size() == k + 1, "family \"" + std::string(name) + "\" takes " +
                                               std::to_string(k) + " argument(s)");
  };
  FamilyDescriptor d;
  if (name == "fig1" || name == "fig2") {
    arity(0);
    d.kind = name == "fig1" ? FamilyKind::Fig1 : FamilyKind::Fig2;
    return d;
  }
  struct Entry {
    std::string_view name;
    FamilyKind kind;
    bool seeded;
  };
  static constexpr Entry table[] = {
      {"path", FamilyKind::Path, false},
      {"whiskered_path", FamilyKind::WhiskeredPath, false},
      {"star", FamilyKind::Star, false},
      {"g1", FamilyKind::G1, false},
      {"g2", FamilyKind::G2, false},
      {"random_tree", FamilyKind::RandomTree, true},
      {"random_caterpillar", FamilyKind::RandomCaterpillar, true},
  };
  for (const Entry& e : table) {
    if (e.name != name) continue;
    arity(e.seeded ? 2 : 1);
    d.kind = e.kind;
    std::uint64_t n = arg(1, "size");
    detail::require(n <= 1000, "family size too large");
    d.n = static_cast<int>(n);
    if (e.seeded) d.seed = arg(2, "seed");
    return d;
  }
  throw Error(Errc::BadParameter, "unknown family \"" + std::string(name) + "\"");
}

inline std::string to_string(const FamilyDescriptor& d) {
  switch (d.kind) {
    case FamilyKind::Path: return "path:" + std::to_string(d.n);
    case FamilyKind::WhiskeredPath: return "whiskered_path:" + std::to_string(d.n);
    case FamilyKind::Star: return "star:" + std::to_string(d.n);
    case FamilyKind::Fig1: return "fig1";
    case FamilyKind::Fig2: return "fig2";
    case FamilyKind::G1: return "g1:" + std::to_string(d.n);
    case FamilyKind::G2: return "g2:" + std::to_string(d.n);
    case FamilyKind::RandomTree:
      return "random_tree:" + std::to_string(d.n) + ":" + std::to_string(d.seed);
    case FamilyKind::RandomCaterpillar:
      return "random_caterpillar:" + std::to_string(d.n) + ":" + std::to_string(d.seed);
  }
  return "?";
}

inline NamedTree named_family(const FamilyDescriptor& d) {
  using detail::require;
  detail::Builder b;
  const int n = d.n;
  switch (d.kind) {
    case FamilyKind::Path: {
      require(n >= 1 && n <= kMaxBits, "path needs 1 <= n <= 64");
      for (int i = 0; i < n; ++i) {
        b.add("p" + std::to_string(i + 1));
        if (i > 0) b.link(i - 1, i);
      }
      return b.finish_bfs(0);
    }
    case FamilyKind::WhiskeredPath: {
      require(n >= 1 && 2 * n <= kMaxBits, "whiskered_path needs 1 <= n <= 32");
      for (int i = 0; i < n; ++i) {
        b.add("p" + std::to_string(i + 1));
        if (i > 0) b.link(i - 1, i);
      }
      for (int i = 0; i < n; ++i) b.link(i, b.add("w" + std::to_string(i + 1)));
      return b.finish_bfs(0);
    }
    case FamilyKind::Star: {
      require(n >= 2 && n + 1 <= kMaxBits, "star needs 2 <= k <= 63");
      int c = b.add("c");
      for (int i = 0; i < n; ++i) b.link(c, b.add("l" + std::to_string(i + 1)));
      return b.finish_bfs(c);
    }
    case FamilyKind::Fig1: {
      for (int i = 1; i <= 10; ++i) b.add(std::to_string(i));
      for (int i = 1; i <= 8; ++i) b.link(i - 1, i);
      b.link(4, 9);
      return b.finish_in_order();
    }
    case FamilyKind::Fig2: {
      for (int i = 1; i <= 14; ++i) b.add(std::to_string(i));
      for (int i = 1; i <= 10; ++i) b.link(i - 1, i);
      b.link(3, 11);
      b.link(11, 12);
      b.link(12, 13);
      return b.finish_in_order();
    }
    case FamilyKind::G1: {
      require(n >= 1 && 6 * n + 8 <= kMaxBits, "g1 needs 1 <= n <= 9");
      int r = b.add("r");
      int s = b.add("s");
      b.link(r, s);
      for (char side : {'r', 's'}) {
        int hub = side == 'r' ? r : s;
        for (int i = 1; i <= n + 1; ++i) {
          std::string idx = "_" + std::to_string(i);
          int a = b.add(std::string(1, side) + idx);
          int a1 = b.add(std::string(1, side) + "'" + idx);
          int a2 = b.add(std::string(1, side) + "''" + idx);
          b.link(hub, a);
          b.link(a, a1);
          b.link(a1, a2);
        }
      }
      return b.finish_bfs(r);
    }
    case FamilyKind::G2: {
      require(n >= 1 && 10 * n + 4 <= kMaxBits, "g2 needs 1 <= n <= 6");
      int r = b.add("r");
      int t = b.add("t");
      int s = b.add("s");
      int t1 = b.add("t1");
      b.link(r, t);
      b.link(t, s);
      b.link(t, t1);
      for (char side : {'r', 's'}) {
        int hub = side == 'r' ? r : s;
        std::string p(1, side);
        for (int i = 1; i <= n; ++i) {
          std::string idx = "_" + std::to_string(i);
          int a = b.add(p + idx);
          int a1 = b.add(p + "'" + idx);
          int a2 = b.add(p + "''" + idx);
          int c1 = b.add(p + "~" + idx);
          int c2 = b.add(p + "~~" + idx);
          b.link(hub, a);
          b.link(a, a1);
          b.link(a1, a2);
          b.link(a, c1);
          b.link(c1, c2);
        }
      }
      return b.finish_bfs(r);
    }
    case FamilyKind::RandomTree:
    case FamilyKind::RandomCaterpillar: {
      Tree t = d.kind == FamilyKind::RandomTree ? random_tree(n, d.seed) : random_caterpillar(n, d.seed);
      std::vector<std::string> names;
      for (Label l : t.labels()) names.push_back(std::to_string(l));
      return {std::move(t), std::move(names)};
    }
  }
  throw Error(Errc::BadParameter, "unknown family");
}

inline Tree gen_family(const FamilyDescriptor& d) { return named_family(d).tree; }
inline Tree gen_family(std::string_view spec) { return gen_family(parse_family(spec)); }

}  // namespace sqfree
