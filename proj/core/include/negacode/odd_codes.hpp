#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "negacode/errors.hpp"
#include "negacode/factor.hpp"
#include "negacode/oracle.hpp"
#include "negacode/poly.hpp"

namespace negacode {

// Odd-length negacyclic code over R, presented as <g(x)+u p(x), u a(x)>
// inside R[x]/(x^n+1).  Generators are reduced mod x^n+1 at construction.
struct OddCode {
  int n = 0;
  PolyZ4 g, p, a;

  bool operator==(const OddCode&) const = default;
};

OddCode make_odd_code(int n, const PolyZ4& g, const PolyZ4& p, const PolyZ4& a);  // EvenN

// first generator g+up as a residue; second generator ua as a residue
Residue gen_elem(const OddCode& code);
Residue tor_elem(const OddCode& code);

// full ideal generated by the two generators
IdealSpan code_span(const OddCode& code);

// 7^m where m is the number of negacyclic factors of x^n+1
unsigned long long count_codes(int n);  // EvenN

// Rank statement and generator-shift spanning family.  Branches:
//  - regular-monic (g mod 2 != 0 and a monic): rank n-k2, family sizes
//    (n-k1, k1-k2); inputs with k1 < k2 are rejected.
//  - two-generator (otherwise): rank 2n-k1-k2, family sizes (n-k1, n-k2).
// Here k1 = deg g, k2 = deg a, with deg 0 taken as n (zero polynomial
// contributes no shifts).
struct SpanningFamily {
  int rank = 0;
  bool regular_monic_branch = false;
  int k1 = 0;
  int k2 = 0;
  int gen_shifts = 0;  // members x^i (g+up) for i < gen_shifts
  int tor_shifts = 0;  // members x^i (u a) for i < tor_shifts
  std::vector<Residue> members;
};

SpanningFamily rank_and_spanning(const OddCode& code);  // DegenerateGenerators, BadParameters

// Z4-row span of a family: rows f and u*f per member, no shift closure.
std::vector<std::vector<int>> family_rows(const std::vector<Residue>& fam);  // MixedLengths
bool family_spans(const std::vector<Residue>& fam, const IdealSpan& code);

// Minimal number of generators over the local ring R: log2 |C / <2,u>C|.
int nakayama_rank(const IdealSpan& s);

// Monic divisors of x^n+1 over Z4: products over subsets of the basic
// negacyclic factors (including the empty product 1 and the full product).
std::vector<PolyZ4> monic_divisors(int n);  // EvenN

// Freeness of a principally generated code: free iff some monic divisor
// of x^n+1 generates the same ideal; free_rank = n - deg(divisor).
struct FreeCheck {
  bool free = false;
  std::optional<int> free_rank;
  std::optional<PolyZ4> monic_divisor;
};

FreeCheck is_free(const OddCode& code, const PolyR& principal_gen);  // BadParameters

// Res(C) = image of C under u -> 0; Tor(C) = {b : ub in C}.
std::pair<Z4Span, Z4Span> res_tor(const OddCode& code);

// C1 = Z4-parts of all codewords, C2 = torsion u-parts; both come back
// verified closed under the negacyclic shift.
std::pair<Z4Span, Z4Span> component_split(const IdealSpan& span);

}  // namespace negacode
