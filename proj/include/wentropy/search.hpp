#pragma once

// Extremal searches and computational checks of the eccentricity- and
// Wiener-entropy results: exhaustive scans over trees and small connected
// graphs, closed-form optima, and asymptotic trend tables.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "wentropy/entropy.hpp"
#include "wentropy/enumerate.hpp"
#include "wentropy/error.hpp"
#include "wentropy/families.hpp"
#include "wentropy/gnkj_sweep.hpp"
#include "wentropy/graph.hpp"

namespace wentropy {

// One row of an extremal table: order, family parameters, entropy in bits and
// whatever witness the search can afford to keep.
struct SearchRecord {
  std::int64_t n = 0;
  std::vector<std::int64_t> params;
  double value = 0.0;
  std::vector<Graph> witnesses;            // all minimizers/maximizers, when kept
  std::optional<ClassProfile> profile;     // compressed witness for G(n,k,j)
  std::vector<int> eccentricities;         // witness multiset for I_ecc searches
  bool boundary_hit = false;
};

// ---------------------------------------------------------------------------
// G(n,k,j)

inline SearchRecord min_iw_gnkj(std::int64_t n, const SweepOptions& opt = {}) {
  const GnkjSweepResult r = sweep_gnkj(n, opt);
  SearchRecord rec;
  rec.n = n;
  rec.params = {r.best.k, r.best.j};
  rec.profile = gnkj_class_profile({n, r.best.k, r.best.j});
  rec.value = rec.profile->wiener_entropy();
  rec.boundary_hit = r.boundary_hit;
  return rec;
}

// ---------------------------------------------------------------------------
// Trees

namespace detail {

template <typename Fn>
void for_each_tree_profile(int n, Fn&& fn) {
  for_each_free_tree(n, [&](const FreeTreeGenerator& gen) {
    const BitGraph g = gen.bit_graph();
    fn(gen, distance_profile(g));
  });
}

inline std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace detail

// Minimum I_w over all trees of order n; every minimizer (within the tie
// tolerance) is returned in canonical labeling.
inline SearchRecord min_iw_tree(int n) {
  if (n < 3 || n > kMaxTreeOrder) {
    throw DomainError("min_iw_tree requires 3 <= n <= " + std::to_string(kMaxTreeOrder));
  }
  SearchRecord rec;
  rec.n = n;
  rec.value = std::numeric_limits<double>::infinity();
  detail::for_each_tree_profile(n, [&](const FreeTreeGenerator& gen, const DistanceProfile& p) {
    const double v = wiener_entropy(p);
    if (v < rec.value - kTieTolerance) {
      rec.value = v;
      rec.witnesses.clear();
    }
    if (v <= rec.value + kTieTolerance) rec.witnesses.push_back(canonical_tree(gen.graph()));
  });
  return rec;
}

// A broom: a path, or a tree with exactly one vertex of degree >= 3 all of
// whose neighbours but at most one are leaves.
inline bool is_broom(const Graph& t) {
  detail::require_tree(t);
  const std::size_t n = t.order();
  std::vector<Vertex> branch;
  for (Vertex v = 0; v < n; ++v) {
    if (t.degree(v) >= 3) branch.push_back(v);
  }
  if (branch.empty()) return true;
  if (branch.size() > 1) return false;
  std::size_t non_leaf = 0;
  for (Vertex w : t.neighbors(branch[0])) non_leaf += t.degree(w) > 1 ? 1 : 0;
  return non_leaf <= 1;
}

inline bool is_star(const Graph& g) {
  if (g.order() <= 2) return true;
  if (g.size() != g.order() - 1) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == g.order() - 1) return true;
  }
  return false;
}

struct StarConjectureRow {
  int n = 0;
  std::size_t trees = 0;
  double star_value = 0.0;
  double runner_up = 0.0;  // largest I_w over non-star trees
  bool pass = false;
  std::optional<Graph> counterexample;
};

// I_w(T) < I_w(S_n) for every non-star tree T of order n.
inline std::vector<StarConjectureRow> verify_conjecture_star_iw(int n_lo, int n_hi) {
  if (n_lo < 5 || n_hi > kMaxTreeOrder || n_lo > n_hi) {
    throw DomainError("star conjecture check requires 5 <= n_lo <= n_hi <= 18");
  }
  std::vector<StarConjectureRow> rows;
  for (int n = n_lo; n <= n_hi; ++n) {
    StarConjectureRow row;
    row.n = n;
    row.star_value = wiener_entropy(make_star(n));
    row.runner_up = -1.0;
    row.pass = true;
    detail::for_each_tree_profile(n, [&](const FreeTreeGenerator& gen, const DistanceProfile& p) {
      ++row.trees;
      if (p.diameter == 2) return;  // the star
      const double v = wiener_entropy(p);
      row.runner_up = std::max(row.runner_up, v);
      if (!(v < row.star_value) && row.pass) {
        row.pass = false;
        row.counterexample = gen.graph();
      }
    });
    rows.push_back(std::move(row));
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Eccentricity entropy

// I_ecc of a radius-1 graph of order n with k universal vertices.
inline double radius1_ecc_entropy(std::int64_t n, std::int64_t k) {
  const auto nd = static_cast<double>(n);
  const auto kd = static_cast<double>(k);
  return std::log2(2.0 * nd - kd) - 2.0 * (nd - kd) / (2.0 * nd - kd);
}

struct Radius1Minimum {
  std::int64_t n = 0;
  std::int64_t k = 0;
  double value = 0.0;
  double k_real = 0.0;        // (2 - 2 ln 2)·n
  bool in_floor_ceil = false;  // k ∈ {floor(k_real), ceil(k_real)}
};

// f(k+1) - f(k) in a cancellation-free form. With m = 2n - k the rational
// parts combine to 2n / (m (m - 1)). Near the minimum the increments are of
// order 1/n^2, far below what subtracting two f values near log2 n resolves.
inline double radius1_ecc_increment(std::int64_t n, std::int64_t k) {
  const auto m = static_cast<double>(2 * n - k);
  return std::log1p(-1.0 / m) * kInvLn2 + 2.0 * static_cast<double>(n) / (m * (m - 1.0));
}

enum class Radius1Scan { kExhaustive, kConvex };

// Minimizes log2(2n-k) - 2(n-k)/(2n-k) over integers k ∈ [1, n]; exact ties
// go to the smaller k. kExhaustive compares every k through the compensated
// running sum of increments; kConvex uses convexity and walks up from just
// below the real minimizer while the increment is negative.
inline Radius1Minimum min_iecc_radius1(std::int64_t n, Radius1Scan scan = Radius1Scan::kExhaustive) {
  if (n < 2) throw DomainError("min_iecc_radius1 requires n >= 2");
  Radius1Minimum out;
  out.n = n;
  out.k_real = (2.0 - 2.0 * std::numbers::ln2) * static_cast<double>(n);
  const auto lo = static_cast<std::int64_t>(std::floor(out.k_real));
  const auto hi = static_cast<std::int64_t>(std::ceil(out.k_real));
  if (scan == Radius1Scan::kConvex) {
    std::int64_t k = std::max<std::int64_t>(1, lo - 1);
    while (k < n && radius1_ecc_increment(n, k) < 0.0) ++k;
    out.k = k;
  } else {
    CompensatedSum offset;  // f(k) - f(1)
    double best = 0.0;
    out.k = 1;
    for (std::int64_t k = 2; k <= n; ++k) {
      offset += radius1_ecc_increment(n, k - 1);
      if (offset.value() < best) {
        best = offset.value();
        out.k = k;
      }
    }
  }
  out.value = radius1_ecc_entropy(n, out.k);
  out.in_floor_ceil = out.k == lo || out.k == hi;
  return out;
}

struct EccMinimumScan {
  int n = 0;
  double value = 0.0;
  std::size_t graphs = 0;
  std::size_t minimizers = 0;
  bool all_radius1 = true;
  bool universal_count_matches = true;  // every minimizer has k* universal vertices
  std::int64_t closed_form_k = 0;
  std::optional<Graph> witness;

  [[nodiscard]] bool ok() const { return all_radius1 && universal_count_matches; }
};

// Exhaustive minimum of I_ecc over all labeled connected graphs of order n.
inline EccMinimumScan min_iecc_graph_bruteforce(int n) {
  if (n < 2 || n > 7) throw DomainError("min_iecc_graph_bruteforce requires 2 <= n <= 7");
  EccMinimumScan out;
  out.n = n;
  out.closed_form_k = min_iecc_radius1(n).k;
  out.value = std::numeric_limits<double>::infinity();
  struct Hit {
    bool radius1;
    std::int64_t universal;
    BitGraph g;
  };
  std::vector<Hit> hits;
  for_each_connected_labeled(n, [&](const BitGraph& g) {
    ++out.graphs;
    const DistanceProfile p = distance_profile(g);
    const double v = eccentricity_entropy(p);
    if (v < out.value - kTieTolerance) {
      out.value = v;
      hits.clear();
    }
    if (v <= out.value + kTieTolerance) {
      const auto universal = std::count(p.ecc.begin(), p.ecc.end(), 1);
      hits.push_back({p.radius == 1, universal, g});
    }
  });
  out.minimizers = hits.size();
  for (const Hit& h : hits) {
    out.all_radius1 = out.all_radius1 && h.radius1;
    out.universal_count_matches = out.universal_count_matches && h.universal == out.closed_form_k;
  }
  if (!hits.empty()) out.witness = hits.front().g.to_graph();
  return out;
}

struct Top3Level {
  double value = 0.0;
  std::size_t count = 0;
  std::vector<int> eccentricities;  // multiset of the first witness
  std::optional<Graph> witness;
  bool class_ok = true;             // every tree at this level has the expected shape
};

struct Top3Report {
  int n = 0;
  std::vector<Top3Level> levels;
  double t3_value = 0.0;
  double t5_value = 0.0;
  double star_value = 0.0;

  [[nodiscard]] bool ok() const {
    if (levels.size() != 3) return false;
    const bool strict = levels[0].value > levels[1].value && levels[1].value > levels[2].value;
    const bool shapes = levels[0].class_ok && levels[1].class_ok && levels[2].class_ok;
    const bool values = std::abs(levels[0].value - t3_value) < 1e-12 &&
                        std::abs(levels[1].value - t5_value) < 1e-12 &&
                        std::abs(levels[2].value - star_value) < 1e-12;
    return strict && shapes && values;
  }
};

inline std::vector<int> t5_eccentricities(int n) {
  std::vector<int> e{3, 3, 5, 5};
  e.insert(e.end(), static_cast<std::size_t>(n - 4), 4);
  return detail::sorted(e);
}

// The three largest distinct I_ecc values over trees of order n: expected to
// be attained exactly by the diameter-3 trees, the trees with eccentricity
// multiset {3,3,4^(n-4),5,5}, and the star.
inline Top3Report max_iecc_trees_top3(int n) {
  if (n < 6 || n > kMaxTreeOrder) throw DomainError("max_iecc_trees_top3 requires 6 <= n <= 18");
  Top3Report rep;
  rep.n = n;
  rep.t3_value = eccentricity_entropy(make_t3(n));
  rep.t5_value = eccentricity_entropy(make_t5(n));
  rep.star_value = eccentricity_entropy(make_star(n));
  struct Entry {
    double value;
    DistanceProfile profile;
    std::vector<Edge> edges;
  };
  std::vector<Entry> all;
  detail::for_each_tree_profile(n, [&](const FreeTreeGenerator& gen, const DistanceProfile& p) {
    all.push_back({eccentricity_entropy(p), p, gen.edges()});
  });
  std::sort(all.begin(), all.end(), [](const Entry& a, const Entry& b) { return a.value > b.value; });
  const auto expected_shape = [&](std::size_t level, const DistanceProfile& p) {
    switch (level) {
      case 0: return p.diameter == 3;
      case 1: return detail::sorted(p.ecc) == t5_eccentricities(n);
      default: return p.diameter == 2;
    }
  };
  for (const Entry& e : all) {
    if (rep.levels.empty() || e.value < rep.levels.back().value - kTieTolerance) {
      if (rep.levels.size() == 3) break;
      Top3Level lvl;
      lvl.value = e.value;
      lvl.eccentricities = detail::sorted(e.profile.ecc);
      lvl.witness = Graph(static_cast<std::size_t>(n), e.edges);
      rep.levels.push_back(std::move(lvl));
    }
    Top3Level& lvl = rep.levels.back();
    ++lvl.count;
    lvl.class_ok = lvl.class_ok && expected_shape(rep.levels.size() - 1, e.profile);
  }
  return rep;
}

// Eccentricities along a diametral path of length d: max(i, d - i).
inline std::vector<double> path_eccentricities(std::int64_t d) {
  std::vector<double> e;
  for (std::int64_t i = 0; i <= d; ++i) e.push_back(static_cast<double>(std::max(i, d - i)));
  return e;
}

struct DiameterOptimum {
  std::int64_t n = 0;
  std::int64_t d = 0;
  std::int64_t b = 0;   // eccentricity shared by the n-d-1 off-path vertices
  double beta = 0.0;    // real fill value of the path eccentricities
  double value = 0.0;
};

// Maximum I_ecc over trees of order n and diameter d: the path eccentricities
// are forced, and every other vertex gets the best admissible integer value.
inline DiameterOptimum max_iecc_tree_given_diam(std::int64_t n, std::int64_t d) {
  if (d < 3 || n - d - 1 < 1) {
    throw DomainError("max_iecc_tree_given_diam requires d >= 3 and n - d - 1 >= 1");
  }
  const WeightSequence fixed(path_eccentricities(d));
  const auto leaves = static_cast<std::size_t>(n - d - 1);
  DiameterOptimum out;
  out.n = n;
  out.d = d;
  out.beta = beta_fill(fixed).beta;
  const std::int64_t lowest = (d + 1) / 2 + 1;
  out.b = std::clamp<std::int64_t>(optimal_integer_fill(fixed, leaves), lowest, d);
  out.value = shannon_entropy(fixed.padded(static_cast<double>(out.b), leaves));
  return out;
}

// Brute-force maximum I_ecc per diameter over all trees of order n.
inline std::map<int, double> max_iecc_by_diameter(int n) {
  std::map<int, double> best;
  detail::for_each_tree_profile(n, [&](const FreeTreeGenerator&, const DistanceProfile& p) {
    const double v = eccentricity_entropy(p);
    auto [it, inserted] = best.try_emplace(p.diameter, v);
    if (!inserted) it->second = std::max(it->second, v);
  });
  return best;
}

// ---------------------------------------------------------------------------
// Transmission lemmas over small connected graphs

struct LemmaRow {
  int n = 0;
  std::size_t graphs = 0;
  bool bound_w = true;             // (n-1)σ(v) >= W
  bool bound_w_equality = true;    // equality exactly at star centres
  bool sigma_floor = true;         // σ(v) >= n-1
  bool edge_gap = true;            // |σ(u)-σ(v)| <= n-2 on edges
  bool edge_gap_equality = true;   // equality exactly at pendant edges
  std::optional<Graph> counterexample;

  [[nodiscard]] bool pass() const {
    return bound_w && bound_w_equality && sigma_floor && edge_gap && edge_gap_equality;
  }
};

inline LemmaRow check_distance_lemmas(int n) {
  LemmaRow row;
  row.n = n;
  const auto nn = static_cast<std::int64_t>(n);
  for_each_connected_labeled(n, [&](const BitGraph& g) {
    ++row.graphs;
    const DistanceProfile p = distance_profile(g);
    const bool star = g.size() == g.order() - 1;
    bool ok = true;
    for (Vertex v = 0; v < g.order(); ++v) {
      const std::int64_t lhs = (nn - 1) * p.sigma[v];
      const bool centre = star && g.degree(v) == g.order() - 1;
      if (lhs < p.wiener) row.bound_w = ok = false;
      if ((lhs == p.wiener) != centre) row.bound_w_equality = ok = false;
      if (p.sigma[v] < nn - 1) row.sigma_floor = ok = false;
    }
    for (const Edge& e : g.edges()) {
      const std::int64_t gap = std::abs(p.sigma[e.u] - p.sigma[e.v]);
      const bool pendant = g.degree(e.u) == 1 || g.degree(e.v) == 1;
      if (gap > nn - 2) row.edge_gap = ok = false;
      if ((gap == nn - 2) != pendant) row.edge_gap_equality = ok = false;
    }
    if (!ok && !row.counterexample) row.counterexample = g.to_graph();
  });
  return row;
}

inline std::vector<LemmaRow> verify_distance_lemmas(int n_lo, int n_hi) {
  if (n_lo < 2 || n_hi > 7 || n_lo > n_hi) {
    throw DomainError("distance lemma check requires 2 <= n_lo <= n_hi <= 7");
  }
  std::vector<LemmaRow> rows;
  for (int n = n_lo; n <= n_hi; ++n) rows.push_back(check_distance_lemmas(n));
  return rows;
}

// ---------------------------------------------------------------------------
// Trends

struct TrendRow {
  std::int64_t n = 0;
  std::vector<std::int64_t> params;
  double value = 0.0;
  double ratio = 0.0;  // value / log2 n
};

struct TrendReport {
  std::vector<TrendRow> rows;
  bool above_floor = true;       // every ratio > 0.75
  bool strictly_decreasing = true;

  [[nodiscard]] bool ok() const {
    return above_floor && rows.size() >= 2 && rows.back().ratio < rows.front().ratio;
  }
};

// min over G(n,k,j) of I_w divided by log2 n, for each n in order.
inline TrendReport lower_bound_trend(const std::vector<std::int64_t>& orders,
                                     const SweepOptions& opt = {}) {
  TrendReport rep;
  for (std::int64_t n : orders) {
    const SearchRecord r = min_iw_gnkj(n, opt);
    TrendRow row{n, r.params, r.value, r.value / std::log2(static_cast<double>(n))};
    rep.above_floor = rep.above_floor && row.ratio > 0.75;
    if (!rep.rows.empty()) {
      rep.strictly_decreasing = rep.strictly_decreasing && row.ratio < rep.rows.back().ratio;
    }
    rep.rows.push_back(row);
  }
  return rep;
}

// I_w(broom(n, ceil(n^exponent))) / log2 n, for each n in order.
inline std::vector<TrendRow> broom_trend(const std::vector<std::int64_t>& orders, double exponent) {
  std::vector<TrendRow> rows;
  for (std::int64_t n : orders) {
    const auto k = static_cast<std::int64_t>(std::ceil(std::pow(static_cast<double>(n), exponent)));
    const double v = broom_class_profile(n, k).wiener_entropy();
    rows.push_back({n, {k}, v, v / std::log2(static_cast<double>(n))});
  }
  return rows;
}

}  // namespace wentropy
