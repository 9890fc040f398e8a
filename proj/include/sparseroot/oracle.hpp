#pragma once
#include <optional>
#include <stdexcept>
#include <vector>

#include "sparseroot/polyparse.hpp"
#include "sparseroot/signlog.hpp"

namespace sparseroot {
namespace oracle {

// Half-open interval (lo, hi]; a missing endpoint means -inf / +inf.
struct Interval {
  std::optional<Rat> lo, hi;
  static Interval whole() { return {}; }
  static Interval positive() { return {Rat(0), std::nullopt}; }
  static Interval negative() { return {std::nullopt, Rat(0)}; }
};

struct DegreeCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NeedsMorePrecision : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Dense rational polynomial, index = exponent.
struct DensePoly {
  std::vector<Rat> c;
  int degree() const;
  void trim();
};

DensePoly to_dense(const SparsePoly& p, long long degree_cap);

// Exact count of distinct real roots in (lo, hi] via Sturm sequences over
// rationals (content-normalized remainders).  Counts roots of the
// normalized part only; the root at 0 is excluded by construction.
long long sturm_count(const SparsePoly& p, const Interval& iv = Interval::whole(),
                      long long degree_cap = 2000);

// Distinct-root count on the sparse form itself: recursive critical-point
// isolation plus certified sign evaluations; cost per evaluation scales
// with term count, not degree.  budget caps total bisection steps.
long long descartes_bisection_count(const SparsePoly& p,
                                    const Interval& iv = Interval::positive(),
                                    int budget = 100000);

// Checks x^(2^k) - 2^k x + 2^k - 1 == 2^(k-1) * sum 2^-i (x^(2^i) - 1)^2.
bool verify_log_sos_identity(int k);

}  // namespace oracle
}  // namespace sparseroot
