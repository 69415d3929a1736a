#pragma once

#include <set>

#include "onematch/drawing.hpp"
#include "onematch/report.hpp"

namespace onematch {

/// Exact rational, always reduced with positive denominator. Enough
/// arithmetic for the cardinality bounds; no floating point anywhere.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d = 1);

  bool operator==(const Rational&) const = default;
  // a/b <= c/d with positive denominators
  bool operator<=(const Rational& o) const { return num * o.den <= o.num * den; }
};

/// Independent-set degree bound on a simple 1-planar drawing:
/// 2|A_3| + sum_{d>3} (3d-6)|A_d| <= 12|V \ A| - 24, A_d the degree-d
/// vertices of A. Unmet preconditions (empty A, dependence, degree < 3,
/// multi-edges) yield a vacuous record naming the reason.
CheckRecord check_independent_set_bound(const Drawing& d, const std::set<int>& A);

/// Crossing-weighted variant: 2|W_3| + 2|W_4| + sum_{d>=5} (3d-12)|W_d|
/// <= 12|V \ A| - 24 with W_d the A-vertices of crossing-weighted degree
/// d. Requires the drawing to be simple, or to have no empty lens and at
/// most one uncrossed copy per multi-edge; otherwise vacuous.
CheckRecord check_weighted_independent_set_bound(const Drawing& d,
                                                 const std::set<int>& A);

/// Matching-size lower bound as an exact rational:
/// (delta=3,k=9) -> (n+12)/7, (delta=3,k=3) -> (n+12)/8,
/// (delta=4,k=9) -> 3(n+12)/10, (delta>=5,k=9) -> (n+12)/3.
/// Throws std::invalid_argument on unsupported (delta, k).
Rational theorem_bound(int n, int delta, int k);

}  // namespace onematch
