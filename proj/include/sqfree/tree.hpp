#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bits.hpp"
#include "error.hpp"

namespace sqfree {

using Label = std::int64_t;
using LabeledEdge = std::pair<Label, Label>;

namespace detail {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace detail

// Labeled tree on at most 64 vertices. Internally vertices are 0..n-1 in
// ascending label order, so index order and label order agree.
class Tree {
 public:
  Tree() = default;

  // `lines[i]` is reported in errors for `edges[i]`; when empty, the edge
  // position (1-based) is used instead.
  static Tree from_edges(const std::vector<LabeledEdge>& edges,
                         const std::vector<int>& lines = {}) {
    auto line_of = [&](std::size_t i) {
      return lines.empty() ? static_cast<int>(i + 1) : lines[i];
    };
    if (edges.empty()) throw Error(Errc::BadToken, "edge list is empty");

    std::vector<Label> labels;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto [a, b] = edges[i];
      if (a <= 0 || b <= 0)
        throw Error(Errc::BadToken, "vertex labels must be positive", line_of(i));
      if (a == b)
        throw Error(Errc::SelfLoop, "self-loop at vertex " + std::to_string(a), line_of(i));
      labels.push_back(a);
      labels.push_back(b);
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    if (labels.size() > static_cast<std::size_t>(kMaxBits))
      throw Error(Errc::TooLarge, "trees are limited to 64 vertices");

    Tree t;
    t.labels_ = std::move(labels);
    const int n = t.size();
    t.adj_.assign(static_cast<std::size_t>(n), {});
    std::set<std::pair<int, int>> seen;
    detail::UnionFind uf(n);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      int u = t.index_of(edges[i].first);
      int v = t.index_of(edges[i].second);
      if (!seen.insert({std::min(u, v), std::max(u, v)}).second)
        throw Error(Errc::DuplicateEdge,
                    "edge " + std::to_string(edges[i].first) + " " +
                        std::to_string(edges[i].second) + " repeated",
                    line_of(i));
      if (!uf.unite(u, v))
        throw Error(Errc::HasCycle,
                    "edge " + std::to_string(edges[i].first) + " " +
                        std::to_string(edges[i].second) + " closes a cycle",
                    line_of(i));
      t.adj_[u].push_back(v);
      t.adj_[v].push_back(u);
    }
    int root = uf.find(t.index_of(edges[0].first));
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (uf.find(t.index_of(edges[i].first)) != root)
        throw Error(Errc::Disconnected,
                    "edge " + std::to_string(edges[i].first) + " " +
                        std::to_string(edges[i].second) +
                        " is not connected to the first edge",
                    line_of(i));
    }
    t.finish();
    return t;
  }

  static Tree single_vertex(Label label = 1) {
    if (label <= 0) throw Error(Errc::BadParameter, "vertex labels must be positive");
    Tree t;
    t.labels_ = {label};
    t.adj_.assign(1, {});
    t.finish();
    return t;
  }

  int size() const noexcept { return static_cast<int>(labels_.size()); }
  int edge_count() const noexcept { return size() == 0 ? 0 : size() - 1; }

  Label label(int v) const { return labels_[static_cast<std::size_t>(v)]; }
  const std::vector<Label>& labels() const noexcept { return labels_; }

  std::optional<int> find(Label l) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), l);
    if (it == labels_.end() || *it != l) return std::nullopt;
    return static_cast<int>(it - labels_.begin());
  }

  int index_of(Label l) const {
    auto v = find(l);
    if (!v) throw Error(Errc::BadParameter, "no vertex labeled " + std::to_string(l));
    return *v;
  }

  const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  bool is_pendant(int v) const { return degree(v) == 1; }

  VertexSet closed_neighborhood(int v) const { return closed_[static_cast<std::size_t>(v)]; }
  VertexSet vertex_set() const noexcept { return full_set(size()); }

  VertexSet pendants() const {
    VertexSet s = 0;
    for (int v = 0; v < size(); ++v)
      if (is_pendant(v)) s |= bit(v);
    return s;
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < size(); ++u)
      for (int v : neighbors(u))
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  std::vector<int> distances_from(int src) const {
    std::vector<int> dist(static_cast<std::size_t>(size()), -1);
    std::vector<int> queue{src};
    dist[src] = 0;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      int u = queue[h];
      for (int w : neighbors(u))
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          queue.push_back(w);
        }
    }
    return dist;
  }

  // The unique path from `from` to `to`, both ends included.
  std::vector<int> path(int from, int to) const {
    std::vector<int> parent(static_cast<std::size_t>(size()), -1);
    std::vector<int> queue{to};
    parent[to] = to;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      int u = queue[h];
      for (int w : neighbors(u))
        if (parent[w] < 0) {
          parent[w] = u;
          queue.push_back(w);
        }
    }
    std::vector<int> out{from};
    while (out.back() != to) out.push_back(parent[out.back()]);
    return out;
  }

  // Vertex sets of the components of T - v, ordered by smallest member.
  std::vector<VertexSet> components_without(int v) const {
    std::vector<VertexSet> comps;
    for (int w : neighbors(v)) {
      VertexSet comp = bit(w);
      std::vector<int> stack{w};
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int x : neighbors(u))
          if (x != v && !has(comp, x)) {
            comp |= bit(x);
            stack.push_back(x);
          }
      }
      comps.push_back(comp);
    }
    std::sort(comps.begin(), comps.end(),
              [](VertexSet a, VertexSet b) { return lowest(a) < lowest(b); });
    return comps;
  }

  std::string to_edge_list() const {
    std::ostringstream out;
    for (auto [u, v] : edges()) out << label(u) << ' ' << label(v) << '\n';
    return out.str();
  }

  // "1-2,2-3" for messages.
  std::string compact() const {
    if (size() == 1) return std::to_string(label(0));
    std::string s;
    for (auto [u, v] : edges()) s += (s.empty() ? "" : ",") + std::to_string(label(u)) + "-" + std::to_string(label(v));
    return s;
  }

  friend bool operator==(const Tree& a, const Tree& b) {
    return a.labels_ == b.labels_ && a.adj_ == b.adj_;
  }

 private:
  void finish() {
    closed_.assign(labels_.size(), 0);
    for (int v = 0; v < size(); ++v) {
      std::sort(adj_[v].begin(), adj_[v].end());
      closed_[v] = bit(v);
      for (int w : adj_[v]) closed_[v] |= bit(w);
    }
  }

  std::vector<Label> labels_;
  std::vector<std::vector<int>> adj_;
  std::vector<VertexSet> closed_;
};

// Edge-list document: one "u v" pair per line, '#' starts a comment.
inline Tree parse_tree(std::string_view text) {
  std::vector<LabeledEdge> edges;
  std::vector<int> lines;
  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(pos, end - pos));
    pos = end + 1;
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream in(line);
    std::vector<std::string> tokens;
    for (std::string tok; in >> tok;) tokens.push_back(tok);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (tokens.size() != 2)
      throw Error(Errc::BadToken, "expected two vertex labels, got \"" + line + "\"", lineno);
    Label ends[2];
    for (int i = 0; i < 2; ++i) {
      const std::string& tok = tokens[static_cast<std::size_t>(i)];
      bool digits = !tok.empty() && tok.size() <= 18 &&
                    std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; });
      if (!digits || std::stoll(tok) <= 0)
        throw Error(Errc::BadToken, "\"" + tok + "\" is not a positive integer", lineno);
      ends[i] = std::stoll(tok);
    }
    edges.emplace_back(ends[0], ends[1]);
    lines.push_back(lineno);
    if (end == text.size()) break;
  }
  if (edges.empty()) throw Error(Errc::BadToken, "edge list is empty");
  return Tree::from_edges(edges, lines);
}

inline Tree read_tree_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::BadParameter, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_tree(buf.str());
}

struct CaterpillarWitness {
  std::vector<int> central_path;
  std::map<int, int> off_path;  // vertex -> path vertex it hangs from
};

// Removing the pendant vertices must leave a path (possibly empty or a
// single vertex). The returned central path is extended by one pendant at
// each end, so it is maximal.
inline std::optional<CaterpillarWitness> is_caterpillar(const Tree& t) {
  const int n = t.size();
  CaterpillarWitness w;
  if (n <= 2) {
    for (int v = 0; v < n; ++v) w.central_path.push_back(v);
    return w;
  }
  VertexSet spine = t.vertex_set() & ~t.pendants();
  std::vector<int> ends;
  bool ok = true;
  for_each_bit(spine, [&](int v) {
    int d = 0;
    for (int x : t.neighbors(v)) d += has(spine, x) ? 1 : 0;
    if (d > 2) ok = false;
    if (d <= 1) ends.push_back(v);
  });
  if (!ok) return std::nullopt;

  std::vector<int> core;
  if (popcount(spine) == 1) {
    core.push_back(lowest(spine));
  } else {
    int prev = -1, cur = ends.front();
    while (cur >= 0) {
      core.push_back(cur);
      int next = -1;
      for (int x : t.neighbors(cur))
        if (has(spine, x) && x != prev) next = x;
      prev = cur;
      cur = next;
    }
  }
  auto first_leaf = [&](int v, int skip) {
    for (int x : t.neighbors(v))
      if (t.is_pendant(x) && x != skip) return x;
    return -1;
  };
  int head = first_leaf(core.front(), -1);
  int tail = first_leaf(core.back(), head);
  w.central_path.push_back(head);
  w.central_path.insert(w.central_path.end(), core.begin(), core.end());
  w.central_path.push_back(tail);

  VertexSet on_path = 0;
  for (int v : w.central_path) on_path |= bit(v);
  for (int v = 0; v < n; ++v) {
    if (has(on_path, v)) continue;
    w.off_path[v] = t.neighbors(v).front();
  }
  return w;
}

}  // namespace sqfree
