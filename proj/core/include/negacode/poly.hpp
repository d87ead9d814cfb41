#pragma once

#include <string>
#include <utility>
#include <vector>

#include "negacode/errors.hpp"
#include "negacode/ring.hpp"

namespace negacode {

// Dense polynomials, coefficient of x^i at index i, trailing zeros trimmed.
// degree() of the zero polynomial is -1 (the distinguished "minus infinity").
struct PolyF2 {
  std::vector<int> c;
  bool operator==(const PolyF2&) const = default;
};

struct PolyZ4 {
  std::vector<int> c;
  bool operator==(const PolyZ4&) const = default;
};

struct PolyR {
  std::vector<RElem> c;
  bool operator==(const PolyR&) const = default;
};

PolyF2 make_poly_f2(std::vector<int> coeffs);
PolyZ4 make_poly_z4(std::vector<int> coeffs);
PolyR make_poly_r(std::vector<RElem> coeffs);
// a(x) + u*b(x) from two Z4 polynomials.
PolyR make_poly_r(const PolyZ4& a, const PolyZ4& b);

inline int degree(const PolyF2& f) { return static_cast<int>(f.c.size()) - 1; }
inline int degree(const PolyZ4& f) { return static_cast<int>(f.c.size()) - 1; }
inline int degree(const PolyR& f) { return static_cast<int>(f.c.size()) - 1; }

PolyF2 poly_add(const PolyF2& f, const PolyF2& g);
PolyF2 poly_mul(const PolyF2& f, const PolyF2& g);
PolyZ4 poly_add(const PolyZ4& f, const PolyZ4& g);
PolyZ4 poly_mul(const PolyZ4& f, const PolyZ4& g);
PolyZ4 poly_scale(int c, const PolyZ4& f);
PolyR poly_add(const PolyR& f, const PolyR& g);
PolyR poly_mul(const PolyR& f, const PolyR& g);

PolyZ4 project_z4(const PolyR& f);
PolyF2 project_f2(const PolyR& f);
PolyF2 project_f2(const PolyZ4& f);
PolyZ4 lift_z4(const PolyF2& f);  // 0/1 coefficient lift
PolyR lift_r(const PolyZ4& f);

// f = q*g + r with deg r < deg g; g must have unit leading coefficient.
std::pair<PolyZ4, PolyZ4> poly_divmod_z4(const PolyZ4& f, const PolyZ4& g);

// Coefficient reversal x^{deg f} * f(1/x) of the trimmed polynomial.
PolyR reciprocal(const PolyR& g);
PolyZ4 reciprocal(const PolyZ4& g);

// f(-x): negate odd-degree coefficients.
PolyR phi_negate(const PolyR& f);
PolyZ4 phi_negate(const PolyZ4& f);

// ------------------------------------------------------------- residues

enum class RingTag { F2, Z4, R };
enum class ModTag { XnMinus1, XnPlus1 };

// Element of ring[x]/(x^n -+ 1): exactly n coefficients, always reduced.
struct Residue {
  RingTag ring = RingTag::R;
  ModTag mod = ModTag::XnPlus1;
  int n = 0;
  std::vector<RElem> c;
  bool operator==(const Residue&) const = default;
};

// Reduce a polynomial into the quotient; wraparound sign -1 for x^n+1, +1
// for x^n-1.  Coefficients must fit the ring tag (no u parts outside R,
// no 2/3 over F2) or MixedRings is thrown.
Residue make_residue(RingTag ring, ModTag mod, int n, const PolyR& f);
Residue make_residue(RingTag ring, ModTag mod, int n, const PolyZ4& f);
Residue zero_residue(RingTag ring, ModTag mod, int n);
Residue one_residue(RingTag ring, ModTag mod, int n);

Residue res_add(const Residue& f, const Residue& g);
Residue res_mul(const Residue& f, const Residue& g);
Residue res_neg(const Residue& f);
Residue res_scale(RElem c, const Residue& f);
bool res_is_zero(const Residue& f);
// u * f: over R only.
Residue res_mul_u(const Residue& f);
// x^k * f.
Residue res_shift(const Residue& f, int k);

// Coefficients f_0..f_{n-1} of f = sum f_j (x+1)^j, the unique expansion
// with j < n (1, x+1, ..., (x+1)^{n-1} is a free basis of the quotient).
// Requires ring Z4 or R and modulus x^n+1.
std::vector<RElem> to_xp1_basis(const Residue& f);
Residue from_xp1_basis(RingTag ring, int n, const std::vector<RElem>& coeffs);

// (x+1)^k in R[x]/(x^n+1).
Residue xp1_pow(int n, int k);

// Residue version of f(-x); swaps the modulus tag and needs odd n.
Residue phi_negate(const Residue& f);

// ------------------------------------------------- text grammar
// Terms "c*x^i" highest degree first joined by "+"; coefficient 1 elided;
// u-coefficients parenthesized: "(2+u)*x^2+3*x+1", "(1+u)", "x", "0".

std::string to_string(const PolyF2& f);
std::string to_string(const PolyZ4& f);
std::string to_string(const PolyR& f);
std::string to_string(const Residue& f);

// Parses the same grammar (also accepts '-' separators and implicit '*').
PolyR parse_poly_r(const std::string& text);
PolyZ4 parse_poly_z4(const std::string& text);

}  // namespace negacode
