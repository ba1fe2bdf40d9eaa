#pragma once

// Minimum Wiener-entropy over the family G(n,k,j).
//
// For fixed (n, k) every path transmission drops by one per extra attachment,
// σ_i(j) = Q_i - j, so Σ σ log2 σ over the path is
//
//   Σ g(Q_i - j) = Σ g(Q_i) - j Σ g'(Q_i) + (1/ln 2) Σ_{m>=2} j^m/(m(m-1)) Σ Q_i^{1-m}
//
// with g(x) = x log2 x. The power sums are accumulated once per k and the
// series is truncated with an explicit tail bound, which makes a full j scan
// O(k·M + (n-k)·M) instead of O(k·(n-k)). The plain per-(k,j) evaluation is
// kept as the reference route.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

#include "wentropy/entropy.hpp"
#include "wentropy/error.hpp"
#include "wentropy/families.hpp"

namespace wentropy {

inline constexpr double kTieTolerance = 1e-12;

enum class SweepMethod { kSeries, kReference };

struct SweepOptions {
  std::optional<std::int64_t> k_min;  // default 1
  std::optional<std::int64_t> k_max;  // default gnkj_default_k_max(n)
  bool full_k = false;                // k in [1, n-1]
  unsigned threads = 1;
  SweepMethod method = SweepMethod::kSeries;
};

struct GnkjCandidate {
  std::int64_t k = 0;
  std::int64_t j = 0;
  double value = 0.0;
};

// Upper end of the default k range: min(n-1, ceil(4·sqrt(n)·log2 n)).
inline std::int64_t gnkj_default_k_max(std::int64_t n) {
  const double bound = 4.0 * std::sqrt(static_cast<double>(n)) * std::log2(static_cast<double>(n));
  return std::min<std::int64_t>(n - 1, static_cast<std::int64_t>(std::ceil(bound)));
}

// Keeps the current best unless the challenger is lower by more than the tie
// tolerance; candidates must arrive in lexicographic (k, j) order.
inline void offer(std::optional<GnkjCandidate>& best, const GnkjCandidate& c) {
  if (!best || c.value < best->value - kTieTolerance) best = c;
}

namespace detail {

struct FixedK {
  std::int64_t n, k, c;
  std::int64_t attached;    // σ of an attached clique vertex
  std::int64_t unattached;  // σ of an unattached clique vertex
  std::int64_t q_sum;       // Σ Q_i
  std::vector<std::int64_t> q;

  FixedK(std::int64_t n_, std::int64_t k_) : n(n_), k(k_), c(n_ - k_) {
    attached = c - 1 + k * (k + 1) / 2;
    unattached = attached + k;
    q.resize(static_cast<std::size_t>(k));
    q_sum = 0;
    for (std::int64_t i = 0; i < k; ++i) {
      q[static_cast<std::size_t>(i)] = path_transmission(k, i) + c * (i + 2);
      q_sum += q[static_cast<std::size_t>(i)];
    }
  }

  // 2W(G(n,k,j)), exact.
  [[nodiscard]] std::int64_t total(std::int64_t j) const noexcept {
    return q_sum + c * attached + c * k - 2 * k * j;
  }

  [[nodiscard]] double clique_part(std::int64_t j) const {
    return static_cast<double>(j) * xlog2x(static_cast<double>(attached)) +
           static_cast<double>(c - j) * xlog2x(static_cast<double>(unattached));
  }

  [[nodiscard]] double entropy(std::int64_t j, double path_part) const {
    const auto t = static_cast<double>(total(j));
    return std::log2(t) - (path_part + clique_part(j)) / t;
  }

  [[nodiscard]] double path_part_direct(std::int64_t j) const {
    CompensatedSum s;
    for (std::int64_t qi : q) s += xlog2x(static_cast<double>(qi - j));
    return s.value();
  }
};

inline void scan_reference(const FixedK& fk, std::optional<GnkjCandidate>& best) {
  for (std::int64_t j = 1; j <= fk.c; ++j) {
    offer(best, {fk.k, j, gnkj_wiener_entropy({fk.n, fk.k, j})});
  }
}

inline void scan_direct(const FixedK& fk, std::optional<GnkjCandidate>& best) {
  for (std::int64_t j = 1; j <= fk.c; ++j) {
    offer(best, {fk.k, j, fk.entropy(j, fk.path_part_direct(j))});
  }
}

inline constexpr int kMaxSeriesTerms = 64;

inline void scan_series(const FixedK& fk, std::optional<GnkjCandidate>& best) {
  const std::int64_t q_min = *std::min_element(fk.q.begin(), fk.q.end());
  const double qm = static_cast<double>(q_min);
  const double x_max = static_cast<double>(fk.c) / qm;  // <= 1/2 since Q_i >= 2c
  const double kd = static_cast<double>(fk.k);
  // Tail after M terms is at most qm·k·x^(M+1) / ((M+1)·M·(1-x)·ln 2); keep
  // it below 1e-17 of the smallest 2W in the scan.
  const double budget = 1e-17 * static_cast<double>(fk.total(fk.c));
  int terms = 2;
  double xp = x_max * x_max * x_max;
  while (terms < kMaxSeriesTerms &&
         qm * kd * xp * kInvLn2 / ((terms + 1.0) * terms * (1.0 - x_max)) > budget) {
    ++terms;
    xp *= x_max;
  }
  if (terms >= fk.k || terms >= kMaxSeriesTerms) {
    scan_direct(fk, best);
    return;
  }

  CompensatedSum g0;
  CompensatedSum g1;
  std::vector<CompensatedSum> power(static_cast<std::size_t>(terms + 1));
  for (std::int64_t qi : fk.q) {
    const double x = static_cast<double>(qi);
    g0 += xlog2x(x);
    g1 += std::log2(x) + kInvLn2;
    const double ratio = qm / x;
    double pw = ratio;
    for (int m = 2; m <= terms; ++m) {
      power[static_cast<std::size_t>(m)] += pw;
      pw *= ratio;
    }
  }
  std::vector<double> coef(static_cast<std::size_t>(terms + 1), 0.0);
  for (int m = 2; m <= terms; ++m) {
    coef[static_cast<std::size_t>(m)] = power[static_cast<std::size_t>(m)].value() / (m * (m - 1.0));
  }
  const double g0v = g0.value();
  const double g1v = g1.value();
  for (std::int64_t j = 1; j <= fk.c; ++j) {
    const double jd = static_cast<double>(j);
    const double x = jd / qm;
    double poly = coef[static_cast<std::size_t>(terms)];
    for (int m = terms - 1; m >= 2; --m) poly = poly * x + coef[static_cast<std::size_t>(m)];
    poly *= x * x;
    const double path_part = g0v - jd * g1v + qm * kInvLn2 * poly;
    offer(best, {fk.k, j, fk.entropy(j, path_part)});
  }
}

}  // namespace detail

// Best (smallest-entropy, then lexicographically first) j for fixed (n, k).
inline GnkjCandidate best_j_for_k(std::int64_t n, std::int64_t k,
                                  SweepMethod method = SweepMethod::kSeries) {
  GnkjSpec{n, k, 1}.validate();
  const detail::FixedK fk(n, k);
  std::optional<GnkjCandidate> best;
  if (method == SweepMethod::kSeries) {
    detail::scan_series(fk, best);
  } else {
    detail::scan_reference(fk, best);
  }
  return *best;
}

struct GnkjSweepResult {
  GnkjCandidate best;
  std::int64_t k_min = 1;
  std::int64_t k_max = 1;
  bool boundary_hit = false;  // argmin k equals a restricted k_max
};

inline GnkjSweepResult sweep_gnkj(std::int64_t n, const SweepOptions& opt = {}) {
  if (n < 3) throw DomainError("G(n,k,j) sweep requires n >= 3");
  GnkjSweepResult r;
  r.k_min = opt.k_min.value_or(1);
  r.k_max = opt.full_k ? n - 1 : opt.k_max.value_or(gnkj_default_k_max(n));
  r.k_max = std::min(r.k_max, n - 1);
  if (r.k_min < 1 || r.k_min > r.k_max) throw DomainError("empty k range");

  const auto count = static_cast<std::size_t>(r.k_max - r.k_min + 1);
  std::vector<GnkjCandidate> per_k(count);
  const unsigned workers = std::max(1U, std::min<unsigned>(opt.threads, static_cast<unsigned>(count)));
  auto work = [&](unsigned w) {
    // interleaved k keeps the per-thread cost balanced
    for (std::size_t idx = w; idx < count; idx += workers) {
      per_k[idx] = best_j_for_k(n, r.k_min + static_cast<std::int64_t>(idx), opt.method);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  std::optional<GnkjCandidate> best;
  for (const auto& c : per_k) offer(best, c);
  r.best = *best;
  r.boundary_hit = r.best.k == r.k_max && r.k_max < n - 1;
  return r;
}

// I_w(G(n,k,j)) for j = 1..n-k.
inline std::vector<double> gnkj_curve(std::int64_t n, std::int64_t k) {
  GnkjSpec{n, k, 1}.validate();
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n - k));
  for (std::int64_t j = 1; j <= n - k; ++j) out.push_back(gnkj_wiener_entropy({n, k, j}));
  return out;
}

// Indices that are strict local minima of `curve` (ends compare with their
// single neighbour).
inline std::vector<std::size_t> local_minima(const std::vector<double>& curve) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    const bool left = i == 0 || curve[i] < curve[i - 1];
    const bool right = i + 1 == curve.size() || curve[i] < curve[i + 1];
    if (left && right && curve.size() > 1) out.push_back(i);
  }
  return out;
}

}  // namespace wentropy
