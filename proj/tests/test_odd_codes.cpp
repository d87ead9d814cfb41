#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "negacode/errors.hpp"
#include "negacode/odd_codes.hpp"

using namespace negacode;

TEST_CASE("code construction reduces generators modulo x^n+1") {
  const OddCode code = make_odd_code(3, parse_poly_z4("x^3+1"), parse_poly_z4("x^4"),
                                     parse_poly_z4("x+1"));
  CHECK(code.g == make_poly_z4({}));        // x^3+1 = 0
  CHECK(code.p == make_poly_z4({0, 3}));    // x^4 = -x
  CHECK(code.a == make_poly_z4({1, 1}));
  CHECK_THROWS_AS((void)make_odd_code(4, make_poly_z4({1}), {}, {}), EvenN);
}

TEST_CASE("code counts are 7 to the number of negacyclic factors") {
  CHECK(count_codes(1) == 7);
  CHECK(count_codes(3) == 49);
  CHECK(count_codes(5) == 49);
  CHECK(count_codes(7) == 343);
  CHECK(count_codes(9) == 343);
  CHECK(count_codes(15) == 16807);
  CHECK_THROWS_AS((void)count_codes(2), EvenN);
}

TEST_CASE("the count formula undercounts the length-3 census") {
  // the exhaustive oracle finds 63 ideals at n = 3; the 7^m formula gives
  // 49 -- seven ideals per factor is right only for degree-1 factors (the
  // degree-2 component ring has nine ideals, and 7 * 9 = 63)
  CHECK(enumerate_ideals_oracle(3).size() == 63);
  CHECK(count_codes(3) == 49);
}

TEST_CASE("worked example: rank claim at length 7 fails against the oracle") {
  // C = <g + u p, u a> with g = x^3+2x^2+x+1, p = x^2+x+1, a = x+1
  const OddCode code = make_odd_code(7, parse_poly_z4("x^3+2*x^2+x+1"),
                                     parse_poly_z4("x^2+x+1"), parse_poly_z4("x+1"));
  const SpanningFamily fam = rank_and_spanning(code);
  CHECK(fam.regular_monic_branch);
  CHECK(fam.k1 == 3);
  CHECK(fam.k2 == 1);
  CHECK(fam.rank == 6);        // the formula's claim ...
  CHECK(fam.gen_shifts == 4);  // x^i (g+up), i < n-k1
  CHECK(fam.tor_shifts == 2);  // x^i (u a),  i < k1-k2
  const IdealSpan span = code_span(code);
  CHECK(span_size(span) == 4194304);  // 2^22
  // ... but the claimed family spans only 2^20 of the 2^22 codewords
  CHECK(!family_spans(fam.members, span));
  CHECK(span_size_rows(family_rows(fam.members)) == 1048576);
  // and the true minimal generator count is 7, not 6
  CHECK(nakayama_rank(span) == 7);
  // the u-side saturates: u*1 lies in C, and C = <g, u>
  const Residue u1 = res_mul_u(one_residue(RingTag::R, ModTag::XnPlus1, 7));
  CHECK(member(u1, span));
  const Residue g_res =
      make_residue(RingTag::R, ModTag::XnPlus1, 7, parse_poly_z4("x^3+2*x^2+x+1"));
  CHECK(ideal_closure({g_res, u1}) == span);
  // the family rows are not an ideal, so test plain row-span membership
  CHECK(!member_rows(residue_to_vec(u1), howell_form(family_rows(fam.members), 14)));
}

TEST_CASE("worked example: free code of rank 11 at length 15") {
  const PolyZ4 g = parse_poly_z4("x^4+2*x^2+x+1");
  // g is a monic divisor of x^15+1
  CHECK(poly_divmod_z4(xn_plus_1_z4(15), g).second == make_poly_z4({}));
  const OddCode code = make_odd_code(15, g, {}, {});
  const IdealSpan span = code_span(code);
  CHECK(span_size(span) == 17592186044416ull);  // 16^11
  CHECK(nakayama_rank(span) == 11);  // log2 |C / <2,u>C| for a free rank-11 code
  const FreeCheck fc = is_free(code, lift_r(g));
  CHECK(fc.free);
  REQUIRE(fc.free_rank.has_value());
  CHECK(*fc.free_rank == 11);
  REQUIRE(fc.monic_divisor.has_value());
  CHECK(*fc.monic_divisor == g);
  // the basis x^i g, i < 11, spans C
  std::vector<Residue> basis;
  const Residue g_res = make_residue(RingTag::R, ModTag::XnPlus1, 15, g);
  for (int i = 0; i < 11; ++i) basis.push_back(res_shift(g_res, i));
  CHECK(family_spans(basis, span));
}

TEST_CASE("worked example: a non-free principally generated code at length 7") {
  // gen = 2x^2 + u(x^3+x+1)
  const PolyZ4 g = parse_poly_z4("2*x^2");
  const PolyZ4 p = parse_poly_z4("x^3+x+1");
  const OddCode code = make_odd_code(7, g, p, {});
  const PolyR gen = make_poly_r(g, p);
  const FreeCheck fc = is_free(code, gen);
  CHECK(!fc.free);
  CHECK(!fc.free_rank.has_value());
  CHECK(!fc.monic_divisor.has_value());
  const auto [res, tor] = res_tor(code);
  CHECK(res == z4_closure({{0, 0, 2, 0, 0, 0, 0}}, 7));
  const IdealSpan span = code_span(code);
  CHECK(span_size(span) == span_size(res) * span_size(tor));
  // Res is not free over Z4: it is not generated by any monic divisor
  bool res_free = false;
  for (const auto& d : monic_divisors(7)) {
    if (degree(d) == 7) continue;
    std::vector<int> v(7, 0);
    for (size_t i = 0; i < d.c.size(); ++i) v[i] = d.c[i];
    if (z4_closure({v}, 7) == res) res_free = true;
  }
  CHECK(!res_free);
}

TEST_CASE("freeness requires the stated principal generator") {
  const OddCode code = make_odd_code(15, parse_poly_z4("x^4+2*x^2+x+1"), {}, {});
  CHECK_THROWS_AS((void)is_free(code, parse_poly_r("x+1")), BadParameters);
}

TEST_CASE("rank formula guards") {
  // regular-monic branch with deg a > deg g is rejected
  const OddCode bad = make_odd_code(3, parse_poly_z4("x+1"), {}, parse_poly_z4("x^2+3*x+1"));
  CHECK_THROWS_AS((void)rank_and_spanning(bad), BadParameters);
  const OddCode zero = make_odd_code(3, {}, {}, {});
  CHECK_THROWS_AS((void)rank_and_spanning(zero), DegenerateGenerators);
  // zero a(x) has k2 = n and contributes no shifts (two-generator branch:
  // the zero polynomial is not monic)
  const OddCode principal = make_odd_code(3, parse_poly_z4("x+1"), {}, {});
  const SpanningFamily fam = rank_and_spanning(principal);
  CHECK(!fam.regular_monic_branch);
  CHECK(fam.k1 == 1);
  CHECK(fam.k2 == 3);
  CHECK(fam.rank == 2);
  CHECK(fam.gen_shifts == 2);
  CHECK(fam.tor_shifts == 0);
  CHECK(fam.members.size() == 2);
}

TEST_CASE("monic divisors of x^3+1") {
  std::vector<std::string> got;
  for (const auto& d : monic_divisors(3)) got.push_back(to_string(d));
  CHECK(got == std::vector<std::string>{"1", "x+1", "x^2+3*x+1", "x^3+1"});
}

TEST_CASE("residue components multiply to the code size over all length-3 ideals") {
  const auto ideals = enumerate_ideals_oracle(3);
  REQUIRE(ideals.size() == 63);
  for (const auto& ideal : ideals) {
    const auto [c1, c2] = component_split(ideal);
    CHECK(span_size(ideal) == span_size(c1) * span_size(c2));
    for (const auto& r : c1.rows) CHECK(member(z4_x_times(r), c1));
    for (const auto& r : c2.rows) CHECK(member(z4_x_times(r), c2));
  }
}

// all (S1, S2) with S2 | S1 ranging over subset products of the two basic
// negacyclic factors at n = 3, paired with every u-part p of degree < 3
struct GridCase {
  PolyZ4 s1, s2, p;
  int k1 = 0, k2 = 0;
  bool a_divides_p = false;
};

static std::vector<GridCase> grid_cases() {
  const FactorSet fs = negacyclic_factors(3);
  const std::vector<PolyZ4>& f = fs.nega_factors;
  std::vector<std::pair<std::vector<int>, std::vector<int>>> pairs;
  for (int c1 = 0; c1 < 4; ++c1) {
    std::vector<int> set1;
    for (int i = 0; i < 2; ++i)
      if (c1 & (1 << i)) set1.push_back(i);
    for (int c2 = 0; c2 < 4; ++c2) {
      if ((c2 & c1) != c2) continue;
      std::vector<int> set2;
      for (int i = 0; i < 2; ++i)
        if (c2 & (1 << i)) set2.push_back(i);
      pairs.emplace_back(set1, set2);
    }
  }
  std::vector<GridCase> out;
  for (const auto& [set1, set2] : pairs) {
    PolyZ4 s1 = make_poly_z4({1}), s2 = make_poly_z4({1});
    for (int i : set1) s1 = poly_mul(s1, f[static_cast<size_t>(i)]);
    for (int i : set2) s2 = poly_mul(s2, f[static_cast<size_t>(i)]);
    for (int bits = 0; bits < 64; ++bits) {
      GridCase gc;
      gc.s1 = s1;
      gc.s2 = s2;
      gc.p = make_poly_z4({bits & 3, (bits >> 2) & 3, (bits >> 4) & 3});
      gc.k1 = degree(s1);
      gc.k2 = degree(s2);
      gc.a_divides_p =
          gc.p.c.empty() || poly_divmod_z4(gc.p, s2).second == make_poly_z4({});
      out.push_back(std::move(gc));
    }
  }
  return out;
}

static std::vector<Residue> shift_family(const Residue& gen, int gcount, const Residue& tor,
                                         int tcount) {
  std::vector<Residue> fam;
  for (int i = 0; i < gcount; ++i) fam.push_back(res_shift(gen, i));
  for (int i = 0; i < tcount; ++i) fam.push_back(res_shift(tor, i));
  return fam;
}

TEST_CASE("regular-monic rank formula succeeds exactly when a divides p (n = 3 grid)") {
  const int n = 3;
  int checked = 0, mismatches = 0;
  for (const auto& gc : grid_cases()) {
    const OddCode code = make_odd_code(n, gc.s1, gc.p, gc.s2);
    const IdealSpan span = code_span(code);
    const auto fam = shift_family(gen_elem(code), n - gc.k1, tor_elem(code), gc.k1 - gc.k2);
    const bool ok = family_spans(fam, span) && nakayama_rank(span) == n - gc.k2;
    if (ok != gc.a_divides_p) ++mismatches;
    ++checked;
  }
  CHECK(checked == 576);
  CHECK(mismatches == 0);
}

TEST_CASE("two-generator rank formula holds whenever a divides p (n = 3 grid)") {
  const int n = 3;
  int restricted = 0, failures = 0;
  for (const auto& gc : grid_cases()) {
    if (!gc.a_divides_p) continue;
    const OddCode code = make_odd_code(n, poly_scale(2, gc.s1), gc.p, gc.s2);
    const IdealSpan span = code_span(code);
    const auto fam = shift_family(gen_elem(code), n - gc.k1, tor_elem(code), n - gc.k2);
    const bool ok =
        family_spans(fam, span) && nakayama_rank(span) == 2 * n - gc.k1 - gc.k2;
    if (!ok) ++failures;
    ++restricted;
  }
  CHECK(restricted == 297);
  CHECK(failures == 0);
}

TEST_CASE("family rows reject mixed lengths") {
  const Residue a = one_residue(RingTag::R, ModTag::XnPlus1, 3);
  const Residue b = one_residue(RingTag::R, ModTag::XnPlus1, 5);
  CHECK_THROWS_AS((void)family_rows({a, b}), MixedLengths);
}
