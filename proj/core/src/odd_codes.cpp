#include "negacode/odd_codes.hpp"

#include <algorithm>

namespace negacode {

namespace {

PolyZ4 reduce_mod_xn_plus_1(const PolyZ4& f, int n) {
  std::vector<int> c(n, 0);
  for (size_t i = 0; i < f.c.size(); ++i) {
    const int sign = (static_cast<int>(i) / n) % 2 == 0 ? 1 : -1;
    const int r = static_cast<int>(i) % n;
    c[r] = ((c[r] + sign * f.c[i]) % 4 + 4) % 4;
  }
  return make_poly_z4(c);
}

// deg with the zero polynomial counted as degree n (no shifts contributed)
int deg_or_n(const PolyZ4& f, int n) {
  return f.c.empty() ? n : degree(f);
}

}  // namespace

OddCode make_odd_code(int n, const PolyZ4& g, const PolyZ4& p, const PolyZ4& a) {
  if (n < 1 || n % 2 == 0) throw EvenN("odd-length codes require odd positive n");
  return OddCode{n, reduce_mod_xn_plus_1(g, n), reduce_mod_xn_plus_1(p, n),
                 reduce_mod_xn_plus_1(a, n)};
}

Residue gen_elem(const OddCode& code) {
  return make_residue(RingTag::R, ModTag::XnPlus1, code.n, make_poly_r(code.g, code.p));
}

Residue tor_elem(const OddCode& code) {
  return make_residue(RingTag::R, ModTag::XnPlus1, code.n, make_poly_r(PolyZ4{}, code.a));
}

IdealSpan code_span(const OddCode& code) {
  return ideal_closure({gen_elem(code), tor_elem(code)});
}

unsigned long long count_codes(int n) {
  const auto fs = negacyclic_factors(n);
  unsigned long long out = 1;
  for (size_t i = 0; i < fs.nega_factors.size(); ++i) {
    if (out > (1ULL << 60) / 7) throw TooLarge("code count exceeds 64 bits");
    out *= 7;
  }
  return out;
}

SpanningFamily rank_and_spanning(const OddCode& code) {
  const int n = code.n;
  if (code.g.c.empty() && code.p.c.empty() && code.a.c.empty())
    throw DegenerateGenerators("both generators of the code are zero");
  const int k1 = deg_or_n(code.g, n);
  const int k2 = deg_or_n(code.a, n);
  const bool g_regular = !project_f2(code.g).c.empty();
  const bool a_monic = !code.a.c.empty() && code.a.c.back() == 1;
  SpanningFamily out;
  out.k1 = k1;
  out.k2 = k2;
  out.regular_monic_branch = g_regular && a_monic;
  if (out.regular_monic_branch) {
    if (k1 < k2)
      throw BadParameters("regular-monic branch needs deg a <= deg g");
    out.rank = n - k2;
    out.gen_shifts = n - k1;
    out.tor_shifts = k1 - k2;
  } else {
    out.rank = 2 * n - k1 - k2;
    out.gen_shifts = n - k1;
    out.tor_shifts = n - k2;
  }
  const Residue ge = gen_elem(code);
  const Residue ta = tor_elem(code);
  for (int i = 0; i < out.gen_shifts; ++i) out.members.push_back(res_shift(ge, i));
  for (int i = 0; i < out.tor_shifts; ++i) out.members.push_back(res_shift(ta, i));
  return out;
}

std::vector<std::vector<int>> family_rows(const std::vector<Residue>& fam) {
  if (fam.empty()) return {};
  const int n = fam[0].n;
  std::vector<std::vector<int>> rows;
  for (const auto& f : fam) {
    if (f.n != n) throw MixedLengths("family members have different lengths");
    const auto v = residue_to_vec(f);
    rows.push_back(v);
    rows.push_back(vec_u_times(v, n));
  }
  return howell_form(rows, 2 * n);
}

bool family_spans(const std::vector<Residue>& fam, const IdealSpan& code) {
  if (fam.empty()) return code.rows.empty();
  return family_rows(fam) == code.rows;
}

int nakayama_rank(const IdealSpan& s) {
  if (s.rows.empty()) return 0;
  std::vector<std::vector<int>> mrows;
  for (const auto& r : s.rows) {
    std::vector<int> twice(r.size());
    for (size_t i = 0; i < r.size(); ++i) twice[i] = (2 * r[i]) % 4;
    mrows.push_back(std::move(twice));
    mrows.push_back(vec_u_times(r, s.n));
  }
  const auto mhb = howell_form(mrows, 2 * s.n);
  const unsigned long long q = span_size_rows(s.rows) / span_size_rows(mhb);
  int bits = 0;
  while ((1ULL << bits) < q) ++bits;
  if ((1ULL << bits) != q)
    throw Error("internal: Nakayama quotient is not a power of two");
  return bits;
}

std::vector<PolyZ4> monic_divisors(int n) {
  const auto fs = negacyclic_factors(n);
  const size_t m = fs.nega_factors.size();
  std::vector<PolyZ4> out;
  for (size_t mask = 0; mask < (1ULL << m); ++mask) {
    PolyZ4 p = make_poly_z4({1});
    for (size_t i = 0; i < m; ++i)
      if (mask & (1ULL << i)) p = poly_mul(p, fs.nega_factors[i]);
    out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end(), [](const PolyZ4& a, const PolyZ4& b) {
    if (degree(a) != degree(b)) return degree(a) < degree(b);
    return a.c < b.c;
  });
  return out;
}

FreeCheck is_free(const OddCode& code, const PolyR& principal_gen) {
  const int n = code.n;
  const Residue gen = make_residue(RingTag::R, ModTag::XnPlus1, n, principal_gen);
  const IdealSpan C = ideal_closure({gen});
  if (!(C == code_span(code)))
    throw BadParameters("code is not generated by the given principal generator");
  FreeCheck out;
  for (const auto& d : monic_divisors(n)) {
    if (degree(d) == n) continue;  // the full product is 0 mod x^n+1
    const Residue de = make_residue(RingTag::R, ModTag::XnPlus1, n, make_poly_r(d, PolyZ4{}));
    if (ideal_closure({de}) == C) {
      out.free = true;
      out.free_rank = n - degree(d);
      out.monic_divisor = d;
      return out;
    }
  }
  return out;
}

std::pair<Z4Span, Z4Span> res_tor(const OddCode& code) {
  const IdealSpan C = code_span(code);
  return {res_span(C), tor_span(C)};
}

std::pair<Z4Span, Z4Span> component_split(const IdealSpan& span) {
  return {res_span(span), tor_span(span)};
}

}  // namespace negacode
