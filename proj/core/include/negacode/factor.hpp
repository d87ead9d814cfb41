#pragma once

#include <vector>

#include "negacode/errors.hpp"
#include "negacode/poly.hpp"

namespace negacode {

// Factorization data for odd length n: x^n-1 over F2, its Hensel lifts to
// Z4, and the negacyclic factors of x^n+1 obtained via x -> -x.  Factor
// lists are sorted by (degree, ascending coefficient order) and aligned:
// z4_factors[i] mod 2 == f2_factors[i], nega_factors[i] = monic phi-image.
struct FactorSet {
  int n = 0;
  std::vector<PolyF2> f2_factors;
  std::vector<PolyZ4> z4_factors;
  std::vector<PolyZ4> nega_factors;

  bool operator==(const FactorSet&) const = default;
};

// Partition of {0,...,n-1} into orbits under multiplication by 2 mod n.
// Each coset is sorted ascending; cosets are sorted by smallest element.
std::vector<std::vector<int>> cyclotomic_cosets(int n);  // EvenN

// Monic irreducible factors of x^n-1 over F2, one per cyclotomic coset.
std::vector<PolyF2> factor_f2(int n);  // EvenN

// The unique monic divisor of x^n-1 over Z4 reducing to g mod 2, computed
// by the Graeffe iteration F(x^2) = +-f(x)f(-x) run to a fixed point.
PolyZ4 hensel_lift_z4(const PolyF2& g, int n);  // NotADivisor

FactorSet negacyclic_factors(int n);  // EvenN, NotADivisor

PolyZ4 xn_minus_1_z4(int n);
PolyZ4 xn_plus_1_z4(int n);

}  // namespace negacode
