#pragma once

#include <compare>
#include <string>
#include <vector>

#include "negacode/errors.hpp"
#include "negacode/poly.hpp"

namespace negacode {

// Formula-independent ground truth for ideals of R[x]/(x^n+1).  A codeword
// a(x) + u*b(x) is the length-2n Z4 vector (a_0..a_{n-1} | b_0..b_{n-1});
// an ideal is the Z4-span of a canonical Howell basis that is closed under
// multiplication by x and by u.

struct IdealSpan {
  int n = 0;
  std::vector<std::vector<int>> rows;  // Howell form, width 2n
  auto operator<=>(const IdealSpan&) const = default;
};

// Z4-side span of width n (projections, torsion codes, negacyclic Z4 ideals).
struct Z4Span {
  int n = 0;
  std::vector<std::vector<int>> rows;  // Howell form, width n
  auto operator<=>(const Z4Span&) const = default;
};

// ---- vector-level ring operations (width 2n, layout a-half | u-half) ----

std::vector<int> vec_ring_mul(const std::vector<int>& e, const std::vector<int>& f, int n);
std::vector<int> vec_x_times(const std::vector<int>& e, int n);
std::vector<int> vec_u_times(const std::vector<int>& e, int n);
// Pair (z4-part, u-part) of the R-valued inner product sum_i e_i * f_i.
std::pair<int, int> vec_pairing(const std::vector<int>& e, const std::vector<int>& f, int n);

std::vector<int> residue_to_vec(const Residue& f);  // requires ring R, mod x^n+1
Residue vec_to_residue(const std::vector<int>& v, int n);

// ---- Howell normal form over Z4 (any width) ----
// Canonical: two row sets have equal Z4-spans iff their Howell forms are
// identical.  Pivots are 1 or 2; entries above a 1-pivot are 0, above a
// 2-pivot in {0,1}; rows sorted by leading index.

std::vector<std::vector<int>> howell_form(const std::vector<std::vector<int>>& rows, int width);
unsigned long long span_size_rows(const std::vector<std::vector<int>>& rows);
bool member_rows(std::vector<int> v, const std::vector<std::vector<int>>& rows);
// {f : sum_i f_i * rows[i] = 0} as Howell rows of length |rows|-ish width m.
std::vector<std::vector<int>> kernel_rows(const std::vector<std::vector<int>>& rows, int m);

// ---- ideal spans ----

// Wraps rows into a span (Howell form applied; x-/u-closure verified).
IdealSpan make_span(int n, const std::vector<std::vector<int>>& rows);
IdealSpan ideal_closure_vecs(const std::vector<std::vector<int>>& gens, int n);
// Generators as residues over R mod x^n+1; MixedLengths on length mismatch.
IdealSpan ideal_closure(const std::vector<Residue>& gens);
IdealSpan span_sum(const IdealSpan& a, const IdealSpan& b);

unsigned long long span_size(const IdealSpan& s);
bool member(const std::vector<int>& v, const IdealSpan& s);
bool member(const Residue& f, const IdealSpan& s);
bool is_subspan(const IdealSpan& a, const IdealSpan& b);
// All span elements (size must be small; used by tests).
std::vector<std::vector<int>> span_elements(const IdealSpan& s);

// {f : f*g = 0 for all g in the span}; ann(<0>) = <1>.
IdealSpan ann_oracle(const IdealSpan& s);
// {f : <f,c> = (0,0) for all c in the span} under the inner product above.
IdealSpan dual_oracle(const IdealSpan& s);
// Image under the ring automorphism x -> x^{-1} = -x^{n-1}.
IdealSpan reciprocal_image(const IdealSpan& s);

// Every ideal of R[x]/(x^n+1): closures of all 16^n principal seeds, then
// pairwise-sum fixpoint; sorted by (size, rows).  Supported n: 1..4.
std::vector<IdealSpan> enumerate_ideals_oracle(int n);

// ---- Z4-side helpers ----

Z4Span z4_closure(const std::vector<std::vector<int>>& gens, int n);  // negacyclic
Z4Span res_span(const IdealSpan& s);  // projections a(x) of codewords
Z4Span tor_span(const IdealSpan& s);  // {b : u*b(x) in the ideal}
unsigned long long span_size(const Z4Span& s);
bool member(const std::vector<int>& v, const Z4Span& s);
std::vector<int> z4_x_times(const std::vector<int>& v);

// "r0 r1 ...; ..." rendering of span rows, for fixtures and reports.
std::string format_span(const IdealSpan& s);

}  // namespace negacode
