#include "onematch/bounds.hpp"

#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace onematch {

Rational::Rational(long long n, long long d) : num(n), den(d) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) num = -num, den = -den;
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) num /= g, den /= g;
}

namespace {

// shared precondition screening for both independent-set bounds; returns
// an empty string when A is usable
std::string independence_problem(const Drawing& d, const std::set<int>& A) {
  if (A.empty()) return "A is empty";
  for (int v : A) {
    if (!d.has_vertex(v)) return "A contains absent vertex " + std::to_string(v);
    if (d.degree(v) < 3) return "vertex " + std::to_string(v) + " has degree < 3";
  }
  for (const auto& [id, e] : d.edges()) {
    (void)id;
    if (A.count(e.u) && A.count(e.v))
      return "A not independent: edge (" + std::to_string(e.u) + "," +
             std::to_string(e.v) + ")";
  }
  return "";
}

std::map<VertexPair, std::vector<int>> parallel_classes(const Drawing& d) {
  std::map<VertexPair, std::vector<int>> classes;
  for (const auto& [id, e] : d.edges()) classes[canon(e.u, e.v)].push_back(id);
  return classes;
}

}  // namespace

CheckRecord check_independent_set_bound(const Drawing& d, const std::set<int>& A) {
  const std::string name = "independent-set degree bound";
  if (!d.validate(true).ok())
    return vacuous_record(name, "drawing is not simple and valid");
  if (auto why = independence_problem(d, A); !why.empty())
    return vacuous_record(name, why);
  long long lhs = 0;
  for (int v : A) {
    long long deg = d.degree(v);
    lhs += deg == 3 ? 2 : 3 * deg - 6;
  }
  long long rhs = 12 * (d.vertex_count() - static_cast<long long>(A.size())) - 24;
  return checked(name, lhs, rhs, "degree-weighted sum exceeds the bound");
}

CheckRecord check_weighted_independent_set_bound(const Drawing& d,
                                                 const std::set<int>& A) {
  const std::string name = "weighted independent-set bound";
  if (!d.validate(false).ok()) return vacuous_record(name, "drawing invalid");
  if (!d.validate(true).ok()) {
    // non-simple: no empty lens and at most one uncrossed copy per class
    if (!d.find_empty_lenses().empty())
      return vacuous_record(name, "drawing has an empty lens");
    for (const auto& [pair, ids] : parallel_classes(d)) {
      int uncrossed = 0;
      for (int e : ids)
        if (!d.is_crossed(e)) ++uncrossed;
      if (uncrossed > 1)
        return vacuous_record(name, "multi-edge (" + std::to_string(pair.first) +
                                        "," + std::to_string(pair.second) +
                                        ") has " + std::to_string(uncrossed) +
                                        " uncrossed copies");
    }
  }
  if (auto why = independence_problem(d, A); !why.empty())
    return vacuous_record(name, why);
  long long lhs = 0;
  for (int v : A) {
    long long w = d.crossing_weighted_degree(v);
    lhs += w <= 4 ? 2 : 3 * w - 12;
  }
  long long rhs = 12 * (d.vertex_count() - static_cast<long long>(A.size())) - 24;
  return checked(name, lhs, rhs, "weighted sum exceeds the bound");
}

Rational theorem_bound(int n, int delta, int k) {
  if (delta < 3) throw std::invalid_argument("minimum degree below 3");
  if (delta == 3 && k == 9) return Rational(n + 12, 7);
  if (delta == 3 && k == 3) return Rational(n + 12, 8);
  if (delta == 4 && k == 9) return Rational(3LL * (n + 12), 10);
  if (delta >= 5 && k == 9) return Rational(n + 12, 3);
  throw std::invalid_argument("unsupported (delta, k) combination: (" +
                              std::to_string(delta) + "," + std::to_string(k) + ")");
}

}  // namespace onematch
