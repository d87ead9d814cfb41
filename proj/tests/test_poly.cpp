#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "negacode/errors.hpp"
#include "negacode/poly.hpp"

using namespace negacode;

TEST_CASE("construction trims trailing zeros and zero has degree -1") {
  CHECK(make_poly_z4({1, 2, 0, 0}).c == std::vector<int>{1, 2});
  CHECK(make_poly_z4({0, 0}).c.empty());
  CHECK(degree(make_poly_z4({})) == -1);
  CHECK(degree(make_poly_z4({0, 0, 1})) == 2);
  CHECK(make_poly_z4({5, -1}).c == std::vector<int>{1, 3});
  CHECK(make_poly_f2({1, 2, 3}).c == std::vector<int>{1, 0, 1});
}

TEST_CASE("arithmetic samples in all three coefficient rings") {
  // F2: (x+1)^2 = x^2+1
  CHECK(poly_mul(make_poly_f2({1, 1}), make_poly_f2({1, 1})) == make_poly_f2({1, 0, 1}));
  // Z4: (x+1)(x+3) = x^2+3
  CHECK(poly_mul(make_poly_z4({1, 1}), make_poly_z4({3, 1})) == make_poly_z4({3, 0, 1}));
  CHECK(poly_add(make_poly_z4({3, 1}), make_poly_z4({1, 3})) == make_poly_z4({}));
  CHECK(poly_scale(2, make_poly_z4({1, 2, 3})) == make_poly_z4({2, 0, 2}));
  // R: (u) * (u) = 0, (1+u)(1-u) = 1
  const PolyR u_poly = make_poly_r({RElem{0, 1}});
  CHECK(poly_mul(u_poly, u_poly) == make_poly_r(std::vector<RElem>{}));
  CHECK(poly_mul(make_poly_r({RElem{1, 1}}), make_poly_r({RElem{1, 3}})) ==
        make_poly_r({RElem{1, 0}}));
}

TEST_CASE("projections and lifts") {
  const PolyR f = make_poly_r(make_poly_z4({1, 2, 3}), make_poly_z4({0, 1}));
  CHECK(project_z4(f) == make_poly_z4({1, 2, 3}));
  CHECK(project_f2(f) == make_poly_f2({1, 0, 1}));
  CHECK(project_f2(make_poly_z4({2, 3})) == make_poly_f2({0, 1}));
  CHECK(lift_z4(make_poly_f2({1, 0, 1})) == make_poly_z4({1, 0, 1}));
  CHECK(project_z4(lift_r(make_poly_z4({1, 2}))) == make_poly_z4({1, 2}));
}

TEST_CASE("division with remainder over Z4") {
  // x^2+3 = (x+1)(x+3)
  const auto [q, r] = poly_divmod_z4(make_poly_z4({3, 0, 1}), make_poly_z4({1, 1}));
  CHECK(q == make_poly_z4({3, 1}));
  CHECK(r == make_poly_z4({}));

  std::mt19937 rng(20260819u);
  std::uniform_int_distribution<int> coeff(0, 3);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> fc(1 + rng() % 7), gc(1 + rng() % 4);
    for (auto& c : fc) c = coeff(rng);
    for (auto& c : gc) c = coeff(rng);
    gc.back() = (rng() % 2) ? 1 : 3;  // unit leading coefficient
    const PolyZ4 f = make_poly_z4(fc), g = make_poly_z4(gc);
    const auto [qq, rr] = poly_divmod_z4(f, g);
    CHECK(poly_add(poly_mul(qq, g), rr) == f);
    CHECK(degree(rr) < degree(g));
  }
  CHECK_THROWS_AS((void)poly_divmod_z4(make_poly_z4({1, 1}), make_poly_z4({1, 2})),
                  NonMonicDivisor);
  CHECK_THROWS_AS((void)poly_divmod_z4(make_poly_z4({1}), make_poly_z4({})),
                  NonMonicDivisor);
}

TEST_CASE("reciprocal reverses coefficients and is multiplicative") {
  CHECK(reciprocal(make_poly_z4({2, 1})) == make_poly_z4({1, 2}));
  CHECK(reciprocal(make_poly_z4({1, 3, 0, 1})) == make_poly_z4({1, 0, 3, 1}));
  std::mt19937 rng(7u);
  std::uniform_int_distribution<int> coeff(0, 3);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<int> fc(1 + rng() % 5), gc(1 + rng() % 5);
    for (auto& c : fc) c = coeff(rng);
    for (auto& c : gc) c = coeff(rng);
    fc.front() = 1;  // unit constant terms keep degrees additive under reversal
    gc.front() = 3;
    fc.back() = 1;
    gc.back() = 1;
    const PolyZ4 f = make_poly_z4(fc), g = make_poly_z4(gc);
    CHECK(reciprocal(poly_mul(f, g)) == poly_mul(reciprocal(f), reciprocal(g)));
  }
}

TEST_CASE("substituting -x negates odd coefficients and is an involution") {
  CHECK(phi_negate(make_poly_z4({1, 1, 1, 1})) == make_poly_z4({1, 3, 1, 3}));
  const PolyR f = make_poly_r(make_poly_z4({1, 2, 3}), make_poly_z4({1, 1, 1}));
  CHECK(phi_negate(phi_negate(f)) == f);
}

TEST_CASE("residue reduction applies the wraparound sign") {
  const PolyZ4 x3 = make_poly_z4({0, 0, 0, 1});
  // x^3 = -1 in Z4[x]/(x^3+1)
  const Residue neg = make_residue(RingTag::Z4, ModTag::XnPlus1, 3, x3);
  CHECK(neg == make_residue(RingTag::Z4, ModTag::XnPlus1, 3, make_poly_z4({3})));
  // x^3 = 1 in Z4[x]/(x^3-1)
  const Residue pos = make_residue(RingTag::Z4, ModTag::XnMinus1, 3, x3);
  CHECK(pos == one_residue(RingTag::Z4, ModTag::XnMinus1, 3));
}

TEST_CASE("residue multiplication is negacyclic convolution") {
  const Residue x2 = make_residue(RingTag::R, ModTag::XnPlus1, 3, make_poly_z4({0, 0, 1}));
  // x^2 * x^2 = x^4 = -x
  const Residue want = make_residue(RingTag::R, ModTag::XnPlus1, 3, make_poly_z4({0, 3}));
  CHECK(res_mul(x2, x2) == want);
  // shifting by n negates mod x^n+1
  const Residue f = make_residue(RingTag::R, ModTag::XnPlus1, 3,
                                 make_poly_r(make_poly_z4({1, 2, 3}), make_poly_z4({0, 1})));
  CHECK(res_shift(f, 3) == res_neg(f));
  CHECK(res_shift(f, 6) == f);
}

TEST_CASE("residue operand mismatches are rejected") {
  const Residue a = zero_residue(RingTag::Z4, ModTag::XnPlus1, 3);
  const Residue b = zero_residue(RingTag::Z4, ModTag::XnPlus1, 4);
  const Residue c = zero_residue(RingTag::Z4, ModTag::XnMinus1, 3);
  CHECK_THROWS_AS((void)res_add(a, b), MixedRings);
  CHECK_THROWS_AS((void)res_mul(a, c), MixedRings);
  CHECK_THROWS_AS((void)res_mul_u(a), MixedRings);
  CHECK_THROWS_AS(
      (void)make_residue(RingTag::Z4, ModTag::XnPlus1, 2,
                         make_poly_r(make_poly_z4({0}), make_poly_z4({1}))),
      MixedRings);
}

TEST_CASE("(x+1)-basis expansion round-trips and matches (x+1)^k") {
  const int n = 4;
  std::mt19937 rng(11u);
  std::uniform_int_distribution<int> coeff(0, 3);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<RElem> cs(n);
    for (auto& e : cs) e = RElem{coeff(rng), coeff(rng)};
    const Residue f = make_residue(RingTag::R, ModTag::XnPlus1, n, make_poly_r(cs));
    const std::vector<RElem> basis = to_xp1_basis(f);
    CHECK(static_cast<int>(basis.size()) == n);
    CHECK(from_xp1_basis(RingTag::R, n, basis) == f);
  }
  for (int k = 0; k < n; ++k) {
    std::vector<RElem> unit(n, RElem{0, 0});
    unit[static_cast<size_t>(k)] = RElem{1, 0};
    CHECK(from_xp1_basis(RingTag::R, n, unit) == xp1_pow(n, k));
  }
  CHECK_THROWS_AS((void)to_xp1_basis(zero_residue(RingTag::F2, ModTag::XnPlus1, 2)),
                  BadParameters);
}

TEST_CASE("x -> -x is a ring isomorphism between the cyclic and negacyclic quotients") {
  const int n = 7;
  std::mt19937 rng(13u);
  std::uniform_int_distribution<int> coeff(0, 3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<RElem> fc(n), gc(n);
    for (auto& e : fc) e = RElem{coeff(rng), coeff(rng)};
    for (auto& e : gc) e = RElem{coeff(rng), coeff(rng)};
    const Residue f = make_residue(RingTag::R, ModTag::XnMinus1, n, make_poly_r(fc));
    const Residue g = make_residue(RingTag::R, ModTag::XnMinus1, n, make_poly_r(gc));
    CHECK(phi_negate(f).mod == ModTag::XnPlus1);
    CHECK(phi_negate(res_mul(f, g)) == res_mul(phi_negate(f), phi_negate(g)));
    CHECK(phi_negate(res_add(f, g)) == res_add(phi_negate(f), phi_negate(g)));
    CHECK(phi_negate(phi_negate(f)) == f);
  }
  CHECK_THROWS_AS((void)phi_negate(zero_residue(RingTag::R, ModTag::XnPlus1, 2)),
                  EvenLength);
}

TEST_CASE("polynomial formatting follows the descending-term grammar") {
  CHECK(to_string(make_poly_z4({})) == "0");
  CHECK(to_string(make_poly_z4({1, 1})) == "x+1");
  CHECK(to_string(make_poly_z4({1, 3, 1})) == "x^2+3*x+1");
  CHECK(to_string(make_poly_z4({1, 3, 1, 3, 1})) == "x^4+3*x^3+x^2+3*x+1");
  CHECK(to_string(make_poly_z4({0, 2})) == "2*x");
  CHECK(to_string(make_poly_r(make_poly_z4({1, 3, 0}), make_poly_z4({0, 0, 2}))) ==
        "(2u)*x^2+3*x+1");
  CHECK(to_string(make_poly_r(make_poly_z4({1, 0, 2}), make_poly_z4({0, 0, 1}))) ==
        "(2+u)*x^2+1");
  CHECK(to_string(make_poly_r(make_poly_z4({0}), make_poly_z4({1}))) == "(u)");
}

TEST_CASE("parsing inverts formatting") {
  for (const char* text : {"x^2+3*x+1", "x+1", "x^4+3*x^3+x^2+3*x+1", "2*x", "0", "x^6+3*x^3+1"}) {
    CHECK(to_string(parse_poly_z4(text)) == text);
  }
  for (const char* text : {"(2+u)*x^2+1", "(u)*x+3", "(2u)*x^2+3*x+1", "(1+3u)*x^3+(u)"}) {
    CHECK(to_string(parse_poly_r(text)) == text);
  }
  // unparenthesized u-terms are accepted on input
  CHECK(parse_poly_r("u*x+3") == parse_poly_r("(u)*x+3"));
  CHECK(parse_poly_r("2u*x^2+u") == parse_poly_r("(2u)*x^2+(u)"));
  // implicit '*' and '-' separators are accepted on input
  CHECK(parse_poly_z4("x^2 - x + 3") == make_poly_z4({3, 3, 1}));
  CHECK(parse_poly_z4("3x") == make_poly_z4({0, 3}));
  CHECK_THROWS_AS((void)parse_poly_z4("u*x"), Error);
  CHECK_THROWS_AS((void)parse_poly_r("x^^2"), Error);
  CHECK_THROWS_AS((void)parse_poly_r(""), Error);
}
