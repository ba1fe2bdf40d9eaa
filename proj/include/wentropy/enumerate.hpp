#pragma once

// Exhaustive generation of free trees (one per isomorphism class) and of
// connected graphs on few vertices.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "wentropy/error.hpp"
#include "wentropy/graph.hpp"

namespace wentropy {

inline constexpr int kMaxTreeOrder = 18;
inline constexpr int kMaxGraphOrder = 8;

// Free trees as level sequences of a center-rooted tree, following Wright,
// Richmond, Odlyzko and McKay (constant amortized time per tree). The
// sequence lists vertex depths in preorder; vertex 0 is the root.
class FreeTreeGenerator {
 public:
  explicit FreeTreeGenerator(int n) : n_(n) {
    if (n < 1 || n > kMaxTreeOrder) {
      throw DomainError("free trees supported for 1 <= n <= " + std::to_string(kMaxTreeOrder));
    }
  }

  // Advances to the next tree; the first call yields the first tree.
  bool next() {
    if (done_) return false;
    if (!started_) {
      started_ = true;
      if (n_ == 1) {
        layout_ = {0};
        return true;
      }
      std::vector<int> initial;
      for (int i = 0; i <= n_ / 2; ++i) initial.push_back(i);
      for (int i = 1; i < (n_ + 1) / 2; ++i) initial.push_back(i);
      return settle(std::move(initial));
    }
    if (n_ == 1) return finish();
    auto successor = next_rooted(layout_, std::nullopt);
    if (!successor) return finish();
    return settle(std::move(*successor));
  }

  [[nodiscard]] const std::vector<int>& levels() const noexcept { return layout_; }

  [[nodiscard]] std::vector<Edge> edges() const {
    std::vector<Edge> out;
    std::vector<std::size_t> stack;
    for (std::size_t i = 0; i < layout_.size(); ++i) {
      while (!stack.empty() && layout_[stack.back()] >= layout_[i]) stack.pop_back();
      if (!stack.empty()) {
        out.push_back({static_cast<Vertex>(stack.back()), static_cast<Vertex>(i)});
      }
      stack.push_back(i);
    }
    return out;
  }

  [[nodiscard]] Graph graph() const { return Graph(layout_.size(), edges()); }

  [[nodiscard]] BitGraph bit_graph() const {
    BitGraph g(layout_.size());
    for (const Edge& e : edges()) g.add_edge(e.u, e.v);
    return g;
  }

 private:
  bool finish() {
    done_ = true;
    return false;
  }

  bool settle(std::vector<int> candidate) {
    auto tree = next_free(std::move(candidate));
    if (!tree) return finish();
    layout_ = std::move(*tree);
    return true;
  }

  // Beyer–Hedetniemi successor of a rooted level sequence.
  static std::optional<std::vector<int>> next_rooted(const std::vector<int>& pred,
                                                     std::optional<std::size_t> from) {
    std::size_t p = 0;
    if (from) {
      p = *from;
    } else {
      p = pred.size() - 1;
      while (p > 0 && pred[p] == 1) --p;
    }
    if (p == 0) return std::nullopt;
    std::size_t q = p - 1;
    while (pred[q] != pred[p] - 1) --q;
    std::vector<int> result(pred);
    for (std::size_t i = p; i < result.size(); ++i) result[i] = result[i - p + q];
    return result;
  }

  struct Split {
    std::vector<int> left;  // leftmost root subtree, depths shifted by -1
    std::vector<int> rest;  // tree with that subtree removed
  };

  static Split split(const std::vector<int>& layout) {
    std::size_t m = layout.size();
    bool one_found = false;
    for (std::size_t i = 0; i < layout.size(); ++i) {
      if (layout[i] == 1) {
        if (one_found) {
          m = i;
          break;
        }
        one_found = true;
      }
    }
    Split s;
    for (std::size_t i = 1; i < m; ++i) s.left.push_back(layout[i] - 1);
    s.rest.push_back(0);
    for (std::size_t i = m; i < layout.size(); ++i) s.rest.push_back(layout[i]);
    return s;
  }

  // Accept the candidate if it is the canonical center rooting; otherwise jump
  // to the next candidate that is.
  static std::optional<std::vector<int>> next_free(std::vector<int> candidate) {
    const Split s = split(candidate);
    const int left_height = *std::max_element(s.left.begin(), s.left.end());
    const int rest_height = *std::max_element(s.rest.begin(), s.rest.end());
    bool valid = rest_height >= left_height;
    if (valid && rest_height == left_height) {
      if (s.left.size() > s.rest.size()) {
        valid = false;
      } else if (s.left.size() == s.rest.size() && s.left > s.rest) {
        valid = false;
      }
    }
    if (valid) return candidate;

    const std::size_t p = s.left.size();
    auto jumped = next_rooted(candidate, p);
    if (!jumped) return std::nullopt;
    if (candidate[p] > 2) {
      const Split js = split(*jumped);
      const int new_left_height = *std::max_element(js.left.begin(), js.left.end());
      const auto suffix_len = static_cast<std::size_t>(new_left_height + 1);
      for (std::size_t t = 0; t < suffix_len; ++t) {
        (*jumped)[jumped->size() - suffix_len + t] = static_cast<int>(t) + 1;
      }
    }
    return jumped;
  }

  int n_;
  std::vector<int> layout_;
  bool started_ = false;
  bool done_ = false;
};

template <typename Fn>
void for_each_free_tree(int n, Fn&& fn) {
  FreeTreeGenerator gen(n);
  while (gen.next()) fn(gen);
}

inline std::vector<Graph> free_trees(int n) {
  std::vector<Graph> out;
  for_each_free_tree(n, [&](const FreeTreeGenerator& g) { out.push_back(g.graph()); });
  return out;
}

// ---------------------------------------------------------------------------
// Tree canonical form (AHU encoding rooted at a center).

namespace detail {

inline std::vector<Vertex> tree_centers(const Graph& t) {
  const std::size_t n = t.order();
  if (n <= 2) {
    std::vector<Vertex> all;
    for (Vertex v = 0; v < n; ++v) all.push_back(v);
    return all;
  }
  std::vector<std::size_t> degree(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = t.degree(v);
    if (degree[v] == 1) layer.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<Vertex> next;
    for (Vertex leaf : layer) {
      for (Vertex w : t.neighbors(leaf)) {
        if (--degree[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

struct RootedCode {
  std::string code;
  std::vector<Vertex> preorder;  // vertices in canonical preorder
  std::vector<Vertex> parent;
};

inline std::string encode_subtree(const Graph& t, Vertex v, Vertex parent,
                                  std::vector<std::string>& memo) {
  std::vector<std::string> children;
  for (Vertex w : t.neighbors(v)) {
    if (w != parent) children.push_back(encode_subtree(t, w, v, memo));
  }
  std::sort(children.begin(), children.end());
  std::string out = "(";
  for (const auto& c : children) out += c;
  out += ")";
  memo[v] = out;
  return out;
}

inline RootedCode rooted_code(const Graph& t, Vertex root) {
  RootedCode rc;
  std::vector<std::string> memo(t.order());
  constexpr Vertex kNone = ~Vertex{0};
  rc.code = encode_subtree(t, root, kNone, memo);
  rc.parent.assign(t.order(), kNone);
  // preorder with children visited in code order
  std::vector<std::pair<Vertex, Vertex>> stack{{root, kNone}};
  while (!stack.empty()) {
    auto [v, p] = stack.back();
    stack.pop_back();
    rc.preorder.push_back(v);
    rc.parent[v] = p;
    std::vector<Vertex> kids;
    for (Vertex w : t.neighbors(v)) {
      if (w != p) kids.push_back(w);
    }
    std::sort(kids.begin(), kids.end(),
              [&](Vertex a, Vertex b) { return memo[a] < memo[b]; });
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.emplace_back(*it, v);
  }
  return rc;
}

inline RootedCode best_center_code(const Graph& t) {
  std::optional<RootedCode> best;
  for (Vertex c : tree_centers(t)) {
    RootedCode rc = rooted_code(t, c);
    if (!best || rc.code < best->code) best = std::move(rc);
  }
  return std::move(*best);
}

inline void require_tree(const Graph& t) {
  if (t.size() + 1 != t.order()) throw DomainError("graph is not a tree");
}

}  // namespace detail

// Equal strings iff the trees are isomorphic.
inline std::string tree_canonical_form(const Graph& t) {
  detail::require_tree(t);
  return detail::best_center_code(t).code;
}

// Isomorphic copy of `t` relabeled in canonical preorder (root 0).
inline Graph canonical_tree(const Graph& t) {
  detail::require_tree(t);
  const detail::RootedCode rc = detail::best_center_code(t);
  std::vector<Vertex> label(t.order());
  for (std::size_t i = 0; i < rc.preorder.size(); ++i) label[rc.preorder[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (Vertex v : rc.preorder) {
    if (rc.parent[v] != ~Vertex{0}) edges.push_back({label[rc.parent[v]], label[v]});
  }
  return Graph(t.order(), edges);
}

// ---------------------------------------------------------------------------
// Connected graphs on n <= 8 vertices.

inline std::uint64_t labeled_graph_count(int n) {
  const int pairs = n * (n - 1) / 2;
  return std::uint64_t{1} << pairs;
}

inline void check_graph_order(int n) {
  if (n < 1 || n > kMaxGraphOrder) {
    throw DomainError("connected graphs supported for 1 <= n <= " +
                      std::to_string(kMaxGraphOrder));
  }
}

// Visits every connected labeled graph whose pair mask lies in shard `shard`
// of `shard_count` contiguous, disjoint mask ranges.
template <typename Fn>
void for_each_connected_labeled(int n, Fn&& fn, std::uint64_t shard = 0,
                                std::uint64_t shard_count = 1) {
  check_graph_order(n);
  if (shard_count == 0 || shard >= shard_count) throw DomainError("invalid shard");
  const std::uint64_t total = labeled_graph_count(n);
  const std::uint64_t lo = total / shard_count * shard + std::min(shard, total % shard_count);
  const std::uint64_t hi = lo + total / shard_count + (shard < total % shard_count ? 1 : 0);
  for (std::uint64_t mask = lo; mask < hi; ++mask) {
    const BitGraph g = BitGraph::from_pair_mask(static_cast<std::size_t>(n), mask);
    if (g.connected()) fn(g);
  }
}

namespace detail {

inline std::size_t pair_index(std::size_t n, std::size_t a, std::size_t b) {
  if (a > b) std::swap(a, b);
  return a * (2 * n - a - 1) / 2 + (b - a - 1);
}

// Minimum pair mask over relabelings that list vertices by ascending degree.
// Any isomorphism preserves degrees, so this is a canonical form.
inline std::uint64_t canonical_pair_mask(const BitGraph& g) {
  const std::size_t n = g.order();
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < n;) {
    std::size_t e = i + 1;
    while (e < n && g.degree(order[e]) == g.degree(order[i])) ++e;
    cells.emplace_back(i, e);
    i = e;
  }
  const auto edges = g.edges();
  std::uint64_t best = ~std::uint64_t{0};
  std::vector<std::size_t> pos(n);
  while (true) {
    for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;
    std::uint64_t mask = 0;
    for (const Edge& e : edges) mask |= std::uint64_t{1} << pair_index(n, pos[e.u], pos[e.v]);
    best = std::min(best, mask);
    // odometer over per-cell permutations
    std::size_t c = 0;
    for (; c < cells.size(); ++c) {
      auto first = order.begin() + static_cast<std::ptrdiff_t>(cells[c].first);
      auto last = order.begin() + static_cast<std::ptrdiff_t>(cells[c].second);
      if (std::next_permutation(first, last)) break;
    }
    if (c == cells.size()) break;
  }
  return best;
}

}  // namespace detail

// Canonical pair mask: equal iff the graphs are isomorphic.
inline std::uint64_t graph_canonical_mask(const BitGraph& g) {
  return detail::canonical_pair_mask(g);
}

// One representative per isomorphism class of connected graphs on n
// vertices, built by adding a vertex to each connected graph on n-1 vertices
// (every connected graph has a non-cut vertex). Representatives are the
// canonical masks in ascending order.
inline std::vector<BitGraph> connected_graph_classes(int n) {
  check_graph_order(n);
  std::vector<std::uint64_t> level{0};  // K_1
  for (int order = 2; order <= n; ++order) {
    std::unordered_set<std::uint64_t> seen;
    const auto prev = static_cast<std::size_t>(order - 1);
    for (std::uint64_t mask : level) {
      const BitGraph base = BitGraph::from_pair_mask(prev, mask);
      for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << prev); ++subset) {
        BitGraph g(static_cast<std::size_t>(order));
        for (const Edge& e : base.edges()) g.add_edge(e.u, e.v);
        for (std::uint64_t s = subset; s; s &= s - 1) {
          g.add_edge(static_cast<Vertex>(std::countr_zero(s)), static_cast<Vertex>(order - 1));
        }
        seen.insert(graph_canonical_mask(g));
      }
    }
    level.assign(seen.begin(), seen.end());
    std::sort(level.begin(), level.end());
  }
  std::vector<BitGraph> out;
  out.reserve(level.size());
  for (std::uint64_t mask : level) {
    out.push_back(BitGraph::from_pair_mask(static_cast<std::size_t>(n), mask));
  }
  return out;
}

// Connected graphs on n vertices: every labeled one, or one per class.
template <typename Fn>
void for_each_connected_graph(int n, bool dedup, Fn&& fn) {
  if (dedup) {
    for (const BitGraph& g : connected_graph_classes(n)) fn(g);
  } else {
    for_each_connected_labeled(n, fn);
  }
}

}  // namespace wentropy
