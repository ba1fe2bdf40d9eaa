#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "wentropy/entropy.hpp"
#include "wentropy/error.hpp"

namespace wentropy {

using Vertex = std::uint32_t;

struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Simple, undirected, connected graph on vertices 0..n-1. Immutable after
// construction; the constructor rejects loops, multi-edges, out-of-range
// endpoints and disconnected input.
class Graph {
 public:
  Graph(std::size_t n, std::span<const Edge> edges) : n_(n) {
    if (n == 0) throw DomainError("graph must have at least one vertex");
    std::vector<std::size_t> degree(n, 0);
    for (const Edge& e : edges) {
      if (e.u >= n || e.v >= n) {
        throw DomainError("edge endpoint out of range: " + std::to_string(e.u) + " " +
                          std::to_string(e.v));
      }
      if (e.u == e.v) throw DomainError("loop at vertex " + std::to_string(e.u));
      ++degree[e.u];
      ++degree[e.v];
    }
    offsets_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
    adjacency_.resize(offsets_[n]);
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (const Edge& e : edges) {
      adjacency_[fill[e.u]++] = e.v;
      adjacency_[fill[e.v]++] = e.u;
    }
    for (std::size_t v = 0; v < n; ++v) {
      auto first = adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]);
      auto last = adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]);
      std::sort(first, last);
      if (std::adjacent_find(first, last) != last) {
        throw DomainError("multi-edge at vertex " + std::to_string(v));
      }
    }
    if (!connected()) throw DomainError("graph is not connected");
  }

  Graph(std::size_t n, const std::vector<Edge>& edges) : Graph(n, std::span<const Edge>(edges)) {}

  [[nodiscard]] std::size_t order() const noexcept { return n_; }
  [[nodiscard]] std::size_t size() const noexcept { return adjacency_.size() / 2; }

  [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const {
    check_vertex(v);
    return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }

  [[nodiscard]] std::size_t degree(Vertex v) const {
    check_vertex(v);
    return offsets_[v + 1] - offsets_[v];
  }

  [[nodiscard]] bool has_edge(Vertex u, Vertex v) const {
    const auto nb = neighbors(u);
    check_vertex(v);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  // Edges with u < v, sorted lexicographically.
  [[nodiscard]] std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(size());
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v : neighbors(u)) {
        if (u < v) out.push_back({u, v});
      }
    }
    return out;
  }

  void check_vertex(Vertex v) const {
    if (v >= n_) throw DomainError("vertex " + std::to_string(v) + " out of range");
  }

 private:
  [[nodiscard]] bool connected() const {
    std::vector<char> seen(n_, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (std::size_t i = offsets_[u]; i < offsets_[u + 1]; ++i) {
        const Vertex w = adjacency_[i];
        if (!seen[w]) {
          seen[w] = 1;
          ++reached;
          stack.push_back(w);
        }
      }
    }
    return reached == n_;
  }

  std::size_t n_;
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adjacency_;
};

// Dense adjacency-bitset graph on up to 64·Words vertices, used by the
// exhaustive scans and the BFS oracles. Unlike Graph it may be disconnected;
// callers check connected() first.
template <std::size_t Words>
class BasicBitGraph {
 public:
  static constexpr std::size_t kMaxOrder = 64 * Words;
  using Row = std::array<std::uint64_t, Words>;

  explicit BasicBitGraph(std::size_t n) : n_(n) {
    if (n == 0 || n > kMaxOrder) {
      throw DomainError("bit graph order must be in [1, " + std::to_string(kMaxOrder) + "]");
    }
  }

  // Decode a labeled graph from the bits of `mask`, one bit per pair (u, v),
  // u < v, ordered (0,1), (0,2), ..., (0,n-1), (1,2), ...
  static BasicBitGraph from_pair_mask(std::size_t n, std::uint64_t mask) {
    BasicBitGraph g(n);
    std::size_t bit = 0;
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v, ++bit) {
        if ((mask >> bit) & 1U) g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
      }
    }
    return g;
  }

  static BasicBitGraph from_graph(const Graph& g) {
    BasicBitGraph out(g.order());
    for (const Edge& e : g.edges()) out.add_edge(e.u, e.v);
    return out;
  }

  void add_edge(Vertex u, Vertex v) {
    if (u >= n_ || v >= n_ || u == v) throw DomainError("bit graph: invalid edge");
    rows_[u][v / 64] |= std::uint64_t{1} << (v % 64);
    rows_[v][u / 64] |= std::uint64_t{1} << (u % 64);
  }

  [[nodiscard]] std::size_t order() const noexcept { return n_; }
  [[nodiscard]] const Row& row(Vertex v) const noexcept { return rows_[v]; }
  [[nodiscard]] bool has_edge(Vertex u, Vertex v) const noexcept {
    return (rows_[u][v / 64] >> (v % 64)) & 1U;
  }
  [[nodiscard]] std::size_t degree(Vertex v) const noexcept {
    std::size_t d = 0;
    for (std::uint64_t w : rows_[v]) d += static_cast<std::size_t>(std::popcount(w));
    return d;
  }
  [[nodiscard]] std::size_t size() const noexcept {
    std::size_t twice = 0;
    for (std::size_t v = 0; v < n_; ++v) twice += degree(static_cast<Vertex>(v));
    return twice / 2;
  }

  // Bitset of all vertices.
  [[nodiscard]] Row all() const noexcept {
    Row r{};
    for (std::size_t v = 0; v < n_; ++v) r[v / 64] |= std::uint64_t{1} << (v % 64);
    return r;
  }

  [[nodiscard]] bool connected() const noexcept {
    Row seen{};
    seen[0] = 1;
    Row frontier = seen;
    while (true) {
      Row next{};
      bool any = false;
      for_each_bit(frontier, [&](std::size_t u) {
        for (std::size_t w = 0; w < Words; ++w) next[w] |= rows_[u][w];
      });
      for (std::size_t w = 0; w < Words; ++w) {
        next[w] &= ~seen[w];
        seen[w] |= next[w];
        any = any || next[w] != 0;
      }
      if (!any) break;
      frontier = next;
    }
    return seen == all();
  }

  [[nodiscard]] std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v = u + 1; v < n_; ++v) {
        if (has_edge(u, v)) out.push_back({u, v});
      }
    }
    return out;
  }

  [[nodiscard]] Graph to_graph() const { return Graph(n_, edges()); }

  template <typename Fn>
  static void for_each_bit(const Row& r, Fn&& fn) {
    for (std::size_t w = 0; w < Words; ++w) {
      for (std::uint64_t bits = r[w]; bits; bits &= bits - 1) {
        fn(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      }
    }
  }

  friend bool operator==(const BasicBitGraph& a, const BasicBitGraph& b) {
    return a.n_ == b.n_ && std::equal(a.rows_.begin(), a.rows_.begin() + a.n_, b.rows_.begin());
  }

 private:
  std::size_t n_;
  std::array<Row, kMaxOrder> rows_{};
};

using BitGraph = BasicBitGraph<1>;

// Per-vertex eccentricities and transmissions, kept in exact integers.
struct DistanceProfile {
  std::vector<int> ecc;
  std::vector<std::int64_t> sigma;
  int diameter = 0;
  int radius = 0;
  std::int64_t wiener = 0;

  [[nodiscard]] std::size_t order() const noexcept { return ecc.size(); }
};

namespace detail {

inline void finish_profile(DistanceProfile& p) {
  p.diameter = *std::max_element(p.ecc.begin(), p.ecc.end());
  p.radius = *std::min_element(p.ecc.begin(), p.ecc.end());
  const std::int64_t total = std::accumulate(p.sigma.begin(), p.sigma.end(), std::int64_t{0});
  p.wiener = total / 2;
}

}  // namespace detail

// Shortest-path distances from `source` (BFS).
inline std::vector<std::int64_t> bfs_distances(const Graph& g, Vertex source) {
  g.check_vertex(source);
  std::vector<std::int64_t> dist(g.order(), -1);
  std::vector<Vertex> queue;
  queue.reserve(g.order());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

// All-sources BFS, O(n·m).
inline DistanceProfile distance_profile(const Graph& g) {
  const std::size_t n = g.order();
  DistanceProfile p;
  p.ecc.resize(n);
  p.sigma.resize(n);
  std::vector<int> dist(n);
  std::vector<Vertex> queue(n);
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    queue[0] = s;
    std::size_t tail = 1;
    std::int64_t sigma = 0;
    int ecc = 0;
    for (std::size_t head = 0; head < tail; ++head) {
      const Vertex u = queue[head];
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          sigma += dist[w];
          ecc = dist[w];
          queue[tail++] = w;
        }
      }
    }
    p.ecc[s] = ecc;
    p.sigma[s] = sigma;
  }
  detail::finish_profile(p);
  return p;
}

// Frontier-bitset BFS from every source; the graph must be connected.
template <std::size_t Words>
DistanceProfile distance_profile(const BasicBitGraph<Words>& g) {
  using Row = typename BasicBitGraph<Words>::Row;
  const std::size_t n = g.order();
  const Row everything = g.all();
  DistanceProfile p;
  p.ecc.resize(n);
  p.sigma.resize(n);
  for (Vertex s = 0; s < n; ++s) {
    Row seen{};
    seen[s / 64] = std::uint64_t{1} << (s % 64);
    Row frontier = seen;
    int depth = 0;
    std::int64_t sigma = 0;
    while (true) {
      Row next{};
      BasicBitGraph<Words>::for_each_bit(frontier, [&](std::size_t u) {
        const Row& r = g.row(static_cast<Vertex>(u));
        for (std::size_t w = 0; w < Words; ++w) next[w] |= r[w];
      });
      std::int64_t reached = 0;
      for (std::size_t w = 0; w < Words; ++w) {
        next[w] &= ~seen[w];
        seen[w] |= next[w];
        reached += std::popcount(next[w]);
      }
      if (reached == 0) break;
      ++depth;
      sigma += static_cast<std::int64_t>(depth) * reached;
      frontier = next;
    }
    if (seen != everything) throw DomainError("distance_profile: graph is not connected");
    p.ecc[s] = depth;
    p.sigma[s] = sigma;
  }
  detail::finish_profile(p);
  return p;
}

// Entropy of an arbitrary positive vertex functional.
template <typename G, typename F>
double generic_entropy(const G& g, F&& functional) {
  std::vector<double> values(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    values[v] = static_cast<double>(functional(v));
    if (!(values[v] > 0.0)) {
      throw DomainError("information functional must be positive at every vertex");
    }
  }
  return shannon_entropy(WeightSequence(std::move(values)));
}

// Entropy of an integer-valued positive sequence given as (value, multiplicity)
// runs: log2(S) - Σ m·x·log2 x / S with S = Σ m·x computed exactly.
template <typename Range>
double entropy_of_runs(const Range& runs) {
  std::int64_t total = 0;
  std::int64_t count = 0;
  CompensatedSum weighted;
  for (const auto& [value, multiplicity] : runs) {
    if (multiplicity == 0) continue;
    if (value <= 0) throw DomainError("entropy_of_runs: values must be positive");
    total += static_cast<std::int64_t>(value) * static_cast<std::int64_t>(multiplicity);
    count += static_cast<std::int64_t>(multiplicity);
    weighted += static_cast<double>(multiplicity) * xlog2x(static_cast<double>(value));
  }
  if (count == 0) throw DomainError("entropy_of_runs: empty sequence");
  const double s = static_cast<double>(total);
  const double h = std::log2(s) - weighted.value() / s;
  return std::clamp(h, 0.0, std::log2(static_cast<double>(count)));
}

namespace detail {

template <typename T>
std::vector<std::pair<T, std::int64_t>> runs_of(std::vector<T> values) {
  std::sort(values.begin(), values.end());
  std::vector<std::pair<T, std::int64_t>> runs;
  for (T v : values) {
    if (!runs.empty() && runs.back().first == v) {
      ++runs.back().second;
    } else {
      runs.emplace_back(v, 1);
    }
  }
  return runs;
}

}  // namespace detail

// I_w via log2(2W) - Σ σ log2 σ / (2W).
inline double wiener_entropy(const DistanceProfile& p) {
  if (p.order() < 2) throw DomainError("wiener_entropy requires n >= 2");
  return entropy_of_runs(detail::runs_of(p.sigma));
}

inline double eccentricity_entropy(const DistanceProfile& p) {
  if (p.order() < 2) throw DomainError("eccentricity_entropy requires n >= 2");
  return entropy_of_runs(detail::runs_of(p.ecc));
}

template <typename G>
double wiener_entropy(const G& g) {
  return wiener_entropy(distance_profile(g));
}

template <typename G>
double eccentricity_entropy(const G& g) {
  return eccentricity_entropy(distance_profile(g));
}

template <typename G>
double degree_entropy(const G& g) {
  if (g.order() < 2) throw DomainError("degree_entropy requires n >= 2");
  std::vector<std::int64_t> degrees(g.order());
  for (Vertex v = 0; v < g.order(); ++v) degrees[v] = static_cast<std::int64_t>(g.degree(v));
  return entropy_of_runs(detail::runs_of(std::move(degrees)));
}

}  // namespace wentropy
