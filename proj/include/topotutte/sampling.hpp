#pragma once

#include "topotutte/polynomial.hpp"

#include <cstdint>
#include <random>
#include <set>

namespace topotutte {

// Deterministic source of random positive rationals n/d with n, d in [1, 97].
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}

  Rational next() {
    Rational r(dist_(rng_), dist_(rng_));
    r.canonicalize();
    return r;
  }

  // Values for every variable of the polynomials not already fixed.
  void fill(Assignment& values, const std::set<Var>& vars) {
    for (Var v : vars)
      if (!values.count(v)) values[v] = next();
  }

 private:
  std::mt19937_64 rng_;
  std::uniform_int_distribution<int> dist_{1, 97};
};

inline std::set<Var> variables_of(std::initializer_list<const Poly*> polys) {
  std::set<Var> out;
  for (const Poly* p : polys)
    for (Var v : p->variables()) out.insert(v);
  return out;
}

}  // namespace topotutte
