#pragma once

// Shannon entropy (in bits) of positive weight sequences, majorization, and
// the entropy-maximizing fill value used to pad a fixed sequence.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "wentropy/error.hpp"

namespace wentropy {

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  CompensatedSum& operator+=(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
    return *this;
  }
  [[nodiscard]] double value() const noexcept { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

inline double xlog2x(double x) noexcept { return x * std::log2(x); }

inline constexpr double kInvLn2 = 1.0 / std::numbers::ln2;

// Nonempty sequence of strictly positive, finite weights.
class WeightSequence {
 public:
  WeightSequence(std::initializer_list<double> values) : values_(values) { validate(); }
  explicit WeightSequence(std::vector<double> values) : values_(std::move(values)) { validate(); }
  explicit WeightSequence(std::span<const double> values)
      : values_(values.begin(), values.end()) {
    validate();
  }

  [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
  [[nodiscard]] std::span<const double> values() const noexcept { return values_; }
  [[nodiscard]] double operator[](std::size_t i) const { return values_[i]; }

  [[nodiscard]] double sum() const {
    CompensatedSum s;
    for (double v : values_) s += v;
    return s.value();
  }

  // Σ a·log2(a), compensated.
  [[nodiscard]] double sum_xlog2x() const {
    CompensatedSum s;
    for (double v : values_) s += xlog2x(v);
    return s.value();
  }

  // This sequence followed by `copies` copies of `value`.
  [[nodiscard]] WeightSequence padded(double value, std::size_t copies) const {
    std::vector<double> out(values_);
    out.insert(out.end(), copies, value);
    return WeightSequence(std::move(out));
  }

 private:
  void validate() const {
    if (values_.empty()) throw DomainError("weight sequence must be nonempty");
    for (double v : values_) {
      if (!(v > 0.0) || !std::isfinite(v)) {
        throw DomainError("weight sequence entries must be finite and > 0, got " +
                          std::to_string(v));
      }
    }
  }

  std::vector<double> values_;
};

// H(a) = -Σ p_i log2 p_i with p = a / Σa. Clamped to [0, log2 n] to absorb
// rounding at the uniform and one-point ends.
inline double shannon_entropy(const WeightSequence& a) {
  const double total = a.sum();
  CompensatedSum acc;
  for (double v : a.values()) {
    const double p = v / total;
    acc += -p * std::log2(p);
  }
  const double h = acc.value();
  const double ceiling = std::log2(static_cast<double>(a.size()));
  return std::clamp(h, 0.0, ceiling);
}

// Non-strict majorization: for each k the k largest entries of `a` sum to at
// least those of `b`, and the totals agree (relative tolerance `rel_tol`).
inline bool majorizes(const WeightSequence& a, const WeightSequence& b, double rel_tol = 1e-12) {
  if (a.size() != b.size()) throw DomainError("majorizes: sequences differ in length");
  std::vector<double> x(a.values().begin(), a.values().end());
  std::vector<double> y(b.values().begin(), b.values().end());
  std::sort(x.begin(), x.end(), std::greater<>());
  std::sort(y.begin(), y.end(), std::greater<>());
  const double tol = rel_tol * std::max(a.sum(), b.sum());
  CompensatedSum px, py;
  for (std::size_t k = 0; k < x.size(); ++k) {
    px += x[k];
    py += y[k];
    if (px.value() < py.value() - tol) return false;
  }
  return std::abs(px.value() - py.value()) <= tol;
}

struct FillSolution {
  double beta = 0.0;            // log2(beta) = Σ a log2 a / Σ a
  double r = 0.0;               // s - Σa / beta
  std::size_t fill_count = 0;   // n - s copies of beta
};

// Closed-form entropy-maximizing fill value for the fixed part `a`.
inline FillSolution beta_fill(const WeightSequence& a, std::size_t n) {
  if (n < a.size()) throw DomainError("beta_fill: target length below sequence length");
  const double total = a.sum();
  const double beta = std::exp2(a.sum_xlog2x() / total);
  const double r = static_cast<double>(a.size()) - total / beta;
  return {beta, r, n - a.size()};
}

inline FillSolution beta_fill(const WeightSequence& a) { return beta_fill(a, a.size()); }

// Entropy of `a` padded to length n with the optimal fill value, as log2(n - r).
inline double h_n(const WeightSequence& a, std::size_t n) {
  if (n < a.size()) throw DomainError("h_n: n must be at least the sequence length");
  const FillSolution fill = beta_fill(a, n);
  return std::log2(static_cast<double>(n) - fill.r);
}

// Same quantity, evaluated as the entropy of the explicitly padded sequence.
inline double h_n_direct(const WeightSequence& a, std::size_t n) {
  if (n < a.size()) throw DomainError("h_n: n must be at least the sequence length");
  const FillSolution fill = beta_fill(a, n);
  return shannon_entropy(a.padded(fill.beta, fill.fill_count));
}

// Integer b ∈ {floor(beta), ceil(beta)} maximizing H(a ∥ b^t). Requires every
// a_j > 1. Ties within 1e-12 go to the floor.
inline long long optimal_integer_fill(const WeightSequence& a, std::size_t t) {
  if (t < 1) throw DomainError("optimal_integer_fill: t must be >= 1");
  for (double v : a.values()) {
    if (!(v > 1.0)) throw PreconditionError("optimal_integer_fill requires every entry > 1");
  }
  const double beta = beta_fill(a).beta;
  const auto lo = static_cast<long long>(std::floor(beta));
  const auto hi = static_cast<long long>(std::ceil(beta));
  if (lo == hi) return lo;
  const double h_lo = shannon_entropy(a.padded(static_cast<double>(lo), t));
  const double h_hi = shannon_entropy(a.padded(static_cast<double>(hi), t));
  return h_hi > h_lo + 1e-12 ? hi : lo;
}

// h(c) = log2(nb + c) - (c(b+1)log2(b+1) + (n-c) b log2 b) / (nb + c), strictly
// convex in c on [0, n] for b >= 1.
inline double h_claim_convexity(double c, double n, double b) {
  if (!(n > 0.0)) throw DomainError("h_claim_convexity: n must be > 0");
  if (!(b >= 1.0)) throw DomainError("h_claim_convexity: b must be >= 1");
  if (!(c >= 0.0 && c <= n)) throw DomainError("h_claim_convexity: c must lie in [0, n]");
  const double denom = n * b + c;
  return std::log2(denom) - (c * xlog2x(b + 1.0) + (n - c) * xlog2x(b)) / denom;
}

}  // namespace wentropy
