#pragma once

// Row sets of the extremal tables, regenerated by search rather than stored.

#include <cstdint>
#include <string>
#include <vector>

#include "wentropy/error.hpp"
#include "wentropy/search.hpp"

namespace wentropy {

enum class TableId { k1a, k1b, k2, k3a, k3b, k4 };

inline TableId parse_table_id(const std::string& s) {
  if (s == "1a") return TableId::k1a;
  if (s == "1b") return TableId::k1b;
  if (s == "2") return TableId::k2;
  if (s == "3a") return TableId::k3a;
  if (s == "3b") return TableId::k3b;
  if (s == "4") return TableId::k4;
  throw DomainError("unknown table id '" + s + "' (expected 1a, 1b, 2, 3a, 3b or 4)");
}

inline std::vector<std::int64_t> orders_between(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  for (std::int64_t n = lo; n <= hi; ++n) out.push_back(n);
  return out;
}

inline constexpr std::int64_t kJumpScanLo = 1000;
inline constexpr std::int64_t kJumpScanHi = 2540;

// Orders with j > 1 checked by default; the full scan covers [1000, 2540].
inline std::vector<std::int64_t> jump_spot_orders() { return {1003, 1029, 1080, 1133, 1269}; }

inline std::vector<std::int64_t> power_of_two_orders() {
  std::vector<std::int64_t> out;
  for (std::int64_t n = 16; n <= 8192; n *= 2) out.push_back(n);
  return out;
}

struct GnkjTable {
  std::vector<SearchRecord> rows;
  bool partial = false;  // a bounded run of a table whose full range was skipped
};

// Minimum of I_w over G(n,k,j) for each order of a table. For 3a the full
// scan keeps only the orders whose minimizer has j > 1.
inline GnkjTable gnkj_table(TableId id, bool unbounded, const SweepOptions& opt = {}) {
  std::vector<std::int64_t> orders;
  bool jumps_only = false;
  GnkjTable out;
  switch (id) {
    case TableId::k1a: orders = orders_between(32, 46); break;
    case TableId::k1b: orders = orders_between(208, 222); break;
    case TableId::k2: orders = orders_between(16, 94); break;
    case TableId::k3b: orders = power_of_two_orders(); break;
    case TableId::k3a:
      if (unbounded) {
        orders = orders_between(kJumpScanLo, kJumpScanHi);
        jumps_only = true;
      } else {
        orders = jump_spot_orders();
        out.partial = true;
      }
      break;
    case TableId::k4: throw DomainError("table 4 lists trees, not G(n,k,j) rows");
  }
  for (std::int64_t n : orders) {
    SearchRecord r = min_iw_gnkj(n, opt);
    if (!jumps_only || r.params[1] > 1) out.rows.push_back(std::move(r));
  }
  return out;
}

inline constexpr int kTreeTableLo = 3;
inline constexpr int kTreeTableHi = 16;

// Minimum-I_w trees for each order in [lo, hi].
inline std::vector<SearchRecord> tree_table(int lo = kTreeTableLo, int hi = kTreeTableHi) {
  std::vector<SearchRecord> rows;
  for (int n = lo; n <= hi; ++n) rows.push_back(min_iw_tree(n));
  return rows;
}

}  // namespace wentropy
