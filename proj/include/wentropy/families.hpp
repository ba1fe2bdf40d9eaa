#pragma once

// Named graph families and closed-form transmission profiles.
//
// Vertex labeling used by every constructor here:
//   path / broom / gnkj : path vertices 0..k-1, vertex 0 is the attachment end;
//                         the remaining vertices follow in order.
//   star                : center 0.
//   diam-tree           : diametral path 0..d, extra leaves d+1..n-1.

#include <cstdint>
#include <string>
#include <vector>

#include "wentropy/error.hpp"
#include "wentropy/graph.hpp"

namespace wentropy {

// G_{n,k,j}: path P_k and clique K_{n-k}, one path end joined to j clique
// vertices.
struct GnkjSpec {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t j = 0;

  [[nodiscard]] std::int64_t clique() const noexcept { return n - k; }

  void validate() const {
    if (k < 1 || n - k < 1 || j < 1 || j > n - k) {
      throw DomainError("invalid G(n,k,j) parameters (" + std::to_string(n) + "," +
                        std::to_string(k) + "," + std::to_string(j) +
                        "): need k >= 1, n - k >= 1, 1 <= j <= n - k");
    }
  }
};

struct VertexClass {
  std::int64_t transmission = 0;
  std::int64_t multiplicity = 0;
};

// Transmissions grouped by vertex class.
struct ClassProfile {
  std::vector<VertexClass> classes;
  std::int64_t wiener = 0;

  [[nodiscard]] std::int64_t order() const noexcept {
    std::int64_t n = 0;
    for (const auto& c : classes) n += c.multiplicity;
    return n;
  }

  [[nodiscard]] double wiener_entropy() const {
    std::vector<std::pair<std::int64_t, std::int64_t>> runs;
    runs.reserve(classes.size());
    for (const auto& c : classes) runs.emplace_back(c.transmission, c.multiplicity);
    return entropy_of_runs(runs);
  }
};

namespace detail {

// Σ_l |i - l| over path positions l = 0..k-1.
constexpr std::int64_t path_transmission(std::int64_t k, std::int64_t i) noexcept {
  return i * (i + 1) / 2 + (k - 1 - i) * (k - i) / 2;
}

inline ClassProfile close_profile(std::vector<VertexClass> classes) {
  ClassProfile p;
  std::int64_t total = 0;
  for (const auto& c : classes) {
    if (c.multiplicity > 0) {
      total += c.transmission * c.multiplicity;
      p.classes.push_back(c);
    }
  }
  p.wiener = total / 2;
  return p;
}

inline void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

}  // namespace detail

// Classes in order: path position i = 0..k-1 (multiplicity 1 each), attached
// clique vertices (j), unattached clique vertices (n-k-j, dropped when empty).
inline ClassProfile gnkj_class_profile(const GnkjSpec& spec) {
  spec.validate();
  const std::int64_t k = spec.k;
  const std::int64_t c = spec.clique();
  const std::int64_t j = spec.j;
  std::vector<VertexClass> classes;
  classes.reserve(static_cast<std::size_t>(k) + 2);
  for (std::int64_t i = 0; i < k; ++i) {
    // attached clique vertices sit at i+1, the others at i+2
    const std::int64_t sigma = detail::path_transmission(k, i) + j * (i + 1) + (c - j) * (i + 2);
    classes.push_back({sigma, 1});
  }
  const std::int64_t attached = c - 1 + k * (k + 1) / 2;
  classes.push_back({attached, j});
  classes.push_back({attached + k, c - j});
  return detail::close_profile(std::move(classes));
}

// Classes in order: path position i = 0..k-1 (i = 0 is the hub), then the
// n-k pendant leaves at the hub (dropped when k = n).
inline ClassProfile broom_class_profile(std::int64_t n, std::int64_t k) {
  detail::require(k >= 1 && k <= n, "broom requires 1 <= k <= n");
  const std::int64_t leaves = n - k;
  std::vector<VertexClass> classes;
  classes.reserve(static_cast<std::size_t>(k) + 1);
  for (std::int64_t i = 0; i < k; ++i) {
    classes.push_back({detail::path_transmission(k, i) + leaves * (i + 1), 1});
  }
  classes.push_back({2 * (leaves - 1) + k * (k + 1) / 2, leaves});
  return detail::close_profile(std::move(classes));
}

inline double gnkj_wiener_entropy(const GnkjSpec& spec) {
  return gnkj_class_profile(spec).wiener_entropy();
}

namespace detail {

inline Graph build(std::int64_t n, const std::vector<Edge>& edges) {
  return Graph(static_cast<std::size_t>(n), edges);
}

inline void add_path(std::vector<Edge>& edges, Vertex first, std::int64_t count) {
  for (std::int64_t i = 1; i < count; ++i) {
    edges.push_back({static_cast<Vertex>(first + i - 1), static_cast<Vertex>(first + i)});
  }
}

}  // namespace detail

inline Graph make_path(std::int64_t n) {
  detail::require(n >= 1, "path requires n >= 1");
  std::vector<Edge> edges;
  detail::add_path(edges, 0, n);
  return detail::build(n, edges);
}

inline Graph make_star(std::int64_t n) {
  detail::require(n >= 1, "star requires n >= 1");
  std::vector<Edge> edges;
  for (std::int64_t v = 1; v < n; ++v) edges.push_back({0, static_cast<Vertex>(v)});
  return detail::build(n, edges);
}

inline Graph make_cycle(std::int64_t n) {
  detail::require(n >= 3, "cycle requires n >= 3");
  std::vector<Edge> edges;
  detail::add_path(edges, 0, n);
  edges.push_back({0, static_cast<Vertex>(n - 1)});
  return detail::build(n, edges);
}

inline Graph make_complete(std::int64_t n) {
  detail::require(n >= 1, "complete graph requires n >= 1");
  std::vector<Edge> edges;
  for (std::int64_t u = 0; u < n; ++u) {
    for (std::int64_t v = u + 1; v < n; ++v) {
      edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
  }
  return detail::build(n, edges);
}

// Path P_k whose end vertex 0 carries n-k pendant leaves.
inline Graph make_broom(std::int64_t n, std::int64_t k) {
  detail::require(k >= 1 && k <= n, "broom requires 1 <= k <= n");
  std::vector<Edge> edges;
  detail::add_path(edges, 0, k);
  for (std::int64_t v = k; v < n; ++v) edges.push_back({0, static_cast<Vertex>(v)});
  return detail::build(n, edges);
}

inline Graph make_gnkj(const GnkjSpec& spec) {
  spec.validate();
  std::vector<Edge> edges;
  detail::add_path(edges, 0, spec.k);
  for (std::int64_t u = spec.k; u < spec.n; ++u) {
    for (std::int64_t v = u + 1; v < spec.n; ++v) {
      edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
  }
  for (std::int64_t a = 0; a < spec.j; ++a) {
    edges.push_back({0, static_cast<Vertex>(spec.k + a)});
  }
  return detail::build(spec.n, edges);
}

// Spider: center 0 with pendant paths of the given lengths.
inline Graph make_spider(const std::vector<std::int64_t>& legs) {
  std::int64_t n = 1;
  std::vector<Edge> edges;
  for (std::int64_t len : legs) {
    detail::require(len >= 1, "spider legs must have length >= 1");
    Vertex prev = 0;
    for (std::int64_t i = 0; i < len; ++i) {
      const auto v = static_cast<Vertex>(n++);
      edges.push_back({prev, v});
      prev = v;
    }
  }
  return detail::build(n, edges);
}

// Diametral path 0..d plus n-d-1 leaves, each of eccentricity exactly b. A
// leaf hung on path vertex i has eccentricity 1 + max(i, d - i), so the leaves
// go on vertex d - b + 1.
inline Graph make_diam_tree(std::int64_t n, std::int64_t d, std::int64_t b) {
  detail::require(d >= 3 && d <= n - 1, "diam tree requires 3 <= d <= n - 1");
  std::vector<Edge> edges;
  detail::add_path(edges, 0, d + 1);
  if (n > d + 1) {
    detail::require(b >= (d + 1) / 2 + 1 && b <= d,
                    "diam tree leaf eccentricity must lie in [ceil(d/2)+1, d]");
    const auto hub = static_cast<Vertex>(d - b + 1);
    for (std::int64_t v = d + 1; v < n; ++v) edges.push_back({hub, static_cast<Vertex>(v)});
  }
  return detail::build(n, edges);
}

// Diameter-3 double star: path 0-1-2-3 with the n-4 extra leaves on vertex 1.
inline Graph make_t3(std::int64_t n) {
  detail::require(n >= 4, "T3 requires n >= 4");
  return make_diam_tree(n, 3, 3);
}

// Tree with eccentricity multiset {3, 3, 4^(n-4), 5, 5}.
inline Graph make_t5(std::int64_t n) {
  detail::require(n >= 6, "T5 requires n >= 6");
  return make_diam_tree(n, 5, 4);
}

}  // namespace wentropy
