#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "negacode/errors.hpp"
#include "negacode/oracle.hpp"

using namespace negacode;
using Rows = std::vector<std::vector<int>>;

TEST_CASE("howell form canonicalizes fixed examples") {
  CHECK(howell_form({{2}}, 1) == Rows{{2}});
  CHECK(howell_form({{3, 1}}, 2) == Rows{{1, 3}});
  CHECK(howell_form({{1, 3}, {0, 2}}, 2) == Rows{{1, 1}, {0, 2}});
  CHECK(howell_form({{1, 1}, {0, 2}}, 2) == howell_form({{1, 3}, {0, 2}}, 2));
  CHECK(howell_form({{1, 1}, {1, 1}, {2, 2}}, 2) == Rows{{1, 1}});
  CHECK(howell_form({}, 3).empty());
  CHECK(howell_form({{0, 0}}, 2).empty());
  // a 2-pivot contributes its doubling constraint: span{[2,1]} contains [0,2]
  CHECK(howell_form({{2, 1}}, 2) == Rows{{2, 1}, {0, 2}});
}

TEST_CASE("howell form is a canonical span invariant (randomized)") {
  std::mt19937 rng(42u);
  std::uniform_int_distribution<int> entry(0, 3);
  for (int trial = 0; trial < 300; ++trial) {
    const int w = 2 + static_cast<int>(rng() % 4);
    const int k = static_cast<int>(rng() % 5);
    Rows rows(k, std::vector<int>(w));
    for (auto& r : rows)
      for (auto& e : r) e = entry(rng);

    const Rows h = howell_form(rows, w);
    CHECK(howell_form(h, w) == h);

    // shuffling and adding random combinations of rows preserves the form
    Rows noisy = rows;
    std::shuffle(noisy.begin(), noisy.end(), rng);
    if (k > 0) {
      for (int extra = 0; extra < 2; ++extra) {
        std::vector<int> combo(w, 0);
        for (const auto& r : rows) {
          const int c = entry(rng);
          for (int j = 0; j < w; ++j) combo[j] = (combo[j] + c * r[j]) % 4;
        }
        noisy.push_back(std::move(combo));
      }
    }
    CHECK(howell_form(noisy, w) == h);

    // brute-force span: all Z4-combinations of the original rows
    std::set<std::vector<int>> brute;
    std::vector<int> coef(k, 0);
    while (true) {
      std::vector<int> v(w, 0);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < w; ++j) v[j] = (v[j] + coef[i] * rows[i][j]) % 4;
      brute.insert(std::move(v));
      int pos = 0;
      while (pos < k && coef[pos] == 3) coef[pos++] = 0;
      if (pos == k) break;
      ++coef[pos];
    }
    CHECK(span_size_rows(h) == brute.size());
    for (const auto& v : brute) CHECK(member_rows(v, h));
    for (int probe = 0; probe < 10; ++probe) {
      std::vector<int> v(w);
      for (auto& e : v) e = entry(rng);
      CHECK(member_rows(v, h) == (brute.count(v) > 0));
    }

    // kernel: (coefficient vectors killing the rows); |image|*|kernel| = 4^k
    const Rows ker = kernel_rows(rows, k);
    for (const auto& f : ker) {
      std::vector<int> v(w, 0);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < w; ++j) v[j] = (v[j] + f[i] * rows[i][j]) % 4;
      CHECK(std::all_of(v.begin(), v.end(), [](int e) { return e == 0; }));
    }
    unsigned long long total = span_size_rows(h) * span_size_rows(ker);
    unsigned long long expect = 1;
    for (int i = 0; i < k; ++i) expect *= 4;
    CHECK(total == expect);
  }
}

TEST_CASE("span size overflow is reported") {
  Rows big(32, std::vector<int>(32, 0));
  for (int i = 0; i < 32; ++i) big[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
  CHECK_THROWS_AS((void)span_size_rows(big), TooLarge);
}

TEST_CASE("kernel argument count is checked") {
  CHECK_THROWS_AS((void)kernel_rows({{1, 1}}, 2), BadParameters);
}

TEST_CASE("spans must be closed under x and u") {
  CHECK_THROWS_AS((void)make_span(2, {{1, 0, 0, 0}}), Error);
  CHECK_NOTHROW((void)make_span(2, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));
}

TEST_CASE("closure generator lengths must agree") {
  const Residue a = zero_residue(RingTag::R, ModTag::XnPlus1, 2);
  const Residue b = zero_residue(RingTag::R, ModTag::XnPlus1, 3);
  CHECK_THROWS_AS((void)ideal_closure({a, b}), MixedLengths);
  CHECK_THROWS_AS((void)residue_to_vec(zero_residue(RingTag::Z4, ModTag::XnPlus1, 2)),
                  MixedRings);
  CHECK_THROWS_AS((void)residue_to_vec(zero_residue(RingTag::R, ModTag::XnMinus1, 3)),
                  MixedRings);
}

TEST_CASE("vector ring operations agree with residue arithmetic") {
  const int n = 3;
  std::mt19937 rng(5u);
  std::uniform_int_distribution<int> entry(0, 3);
  std::vector<int> xvec(2 * n, 0), uvec(2 * n, 0);
  xvec[1] = 1;       // x
  uvec[n] = 1;       // u
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> e(2 * n), f(2 * n);
    for (auto& v : e) v = entry(rng);
    for (auto& v : f) v = entry(rng);
    CHECK(vec_ring_mul(e, f, n) == vec_ring_mul(f, e, n));
    CHECK(vec_x_times(e, n) == vec_ring_mul(e, xvec, n));
    CHECK(vec_u_times(e, n) == vec_ring_mul(e, uvec, n));
    CHECK(vec_pairing(e, f, n) == vec_pairing(f, e, n));
    // the vector product mirrors residue multiplication
    const Residue re = vec_to_residue(e, n), rf = vec_to_residue(f, n);
    CHECK(vec_ring_mul(e, f, n) == residue_to_vec(res_mul(re, rf)));
    CHECK(residue_to_vec(re) == e);
  }
}

TEST_CASE("ideal census at length 1: the base ring has seven ideals") {
  const auto ideals = enumerate_ideals_oracle(1);
  REQUIRE(ideals.size() == 7);
  std::vector<unsigned long long> sizes;
  for (const auto& s : ideals) sizes.push_back(span_size(s));
  CHECK(sizes == std::vector<unsigned long long>{1, 2, 4, 4, 4, 8, 16});
}

TEST_CASE("ideal census at lengths 2 and 3") {
  CHECK(enumerate_ideals_oracle(2).size() == 23);
  CHECK(enumerate_ideals_oracle(3).size() == 63);
  CHECK_THROWS_AS((void)enumerate_ideals_oracle(5), TooLarge);
  CHECK_THROWS_AS((void)enumerate_ideals_oracle(0), TooLarge);
}

static void check_duality_sweep(int n, size_t expect_count, size_t expect_sd,
                                size_t expect_so) {
  const auto ideals = enumerate_ideals_oracle(n);
  REQUIRE(ideals.size() == expect_count);
  const unsigned long long full = span_size(ideals.back());
  size_t sd = 0, so = 0;
  for (const auto& ideal : ideals) {
    const IdealSpan ann = ann_oracle(ideal);
    CHECK(span_size(ideal) * span_size(ann) == full);
    CHECK(ann_oracle(ann) == ideal);
    const IdealSpan dual = dual_oracle(ideal);
    CHECK(dual_oracle(dual) == ideal);
    CHECK(dual == reciprocal_image(ann));
    CHECK(reciprocal_image(reciprocal_image(ideal)) == ideal);
    CHECK(span_size(res_span(ideal)) * span_size(tor_span(ideal)) == span_size(ideal));
    if (ideal == dual) ++sd;
    if (is_subspan(ideal, dual)) ++so;
  }
  CHECK(sd == expect_sd);
  CHECK(so == expect_so);
}

TEST_CASE("annihilator and dual involutions at length 2") {
  check_duality_sweep(2, 23, 7, 15);
}

TEST_CASE("annihilator and dual involutions at length 3") {
  const auto ideals = enumerate_ideals_oracle(3);
  const unsigned long long full = span_size(ideals.back());
  CHECK(full == 16ull * 16 * 16);
  for (const auto& ideal : ideals) {
    const IdealSpan ann = ann_oracle(ideal);
    CHECK(span_size(ideal) * span_size(ann) == full);
    CHECK(ann_oracle(ann) == ideal);
    CHECK(dual_oracle(ideal) == reciprocal_image(ann));
  }
}

TEST_CASE("annihilator and dual involutions at length 4") {
  check_duality_sweep(4, 135, 19, 71);
}

TEST_CASE("edge ideals: zero and unit") {
  const IdealSpan zero = ideal_closure_vecs({}, 2);
  CHECK(span_size(zero) == 1);
  const IdealSpan one = ideal_closure_vecs({{1, 0, 0, 0}}, 2);
  CHECK(span_size(one) == 256);
  CHECK(ann_oracle(zero) == one);
  CHECK(ann_oracle(one) == zero);
  CHECK(dual_oracle(zero) == one);
  CHECK(span_elements(zero) == Rows{std::vector<int>(4, 0)});
  CHECK(span_elements(one).size() == 256);
}

TEST_CASE("subspan and sum behave like lattice operations") {
  const IdealSpan u_ideal = ideal_closure_vecs({{0, 0, 1, 0}}, 2);
  const IdealSpan two_u = ideal_closure_vecs({{0, 0, 2, 0}}, 2);
  CHECK(is_subspan(two_u, u_ideal));
  CHECK(!is_subspan(u_ideal, two_u));
  CHECK(span_sum(two_u, u_ideal) == u_ideal);
  const IdealSpan zero = ideal_closure_vecs({}, 2);
  CHECK(span_sum(zero, u_ideal) == u_ideal);
  // membership via residues
  const Residue u = res_mul_u(one_residue(RingTag::R, ModTag::XnPlus1, 2));
  CHECK(member(u, u_ideal));
  CHECK(!member(u, two_u));
}

TEST_CASE("z4-side closures and projections") {
  // <x+1> in Z4[x]/(x^2+1): z4_closure of (1,1)
  const Z4Span s = z4_closure({{1, 1}}, 2);
  CHECK(span_size(s) == 8);  // contains (x+1), 2x and 2
  CHECK(member({1, 1}, s));
  CHECK(member({3, 1}, s));  // x*(1+x) = x + x^2 = -1 + x
  CHECK(!member({1, 0}, s));
  CHECK(z4_x_times(std::vector<int>{1, 2, 3}) == std::vector<int>{1, 1, 2});
}

TEST_CASE("span formatting") {
  CHECK(format_span(ideal_closure_vecs({}, 2)) == "<0>");
  CHECK(format_span(ideal_closure_vecs({{0, 0, 1, 0}}, 2)) == "0010; 0001");
}
