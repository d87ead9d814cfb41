#include "negacode/factor.hpp"

#include <algorithm>
#include <string>

namespace negacode {

namespace {

PolyF2 xn_minus_1_f2(int n) {
  std::vector<int> c(n + 1, 0);
  c[0] = 1;  // -1 == 1 over F2
  c[n] = 1;
  return make_poly_f2(c);
}

// divmod over F2 (leading coefficient of a nonzero divisor is always 1)
std::pair<PolyF2, PolyF2> divmod_f2(const PolyF2& f, const PolyF2& g) {
  if (g.c.empty()) throw NonMonicDivisor("division by the zero polynomial over F2");
  std::vector<int> r = f.c;
  std::vector<int> q(r.size() > g.c.size() ? r.size() - g.c.size() + 1 : 1, 0);
  while (r.size() >= g.c.size() && !r.empty()) {
    while (!r.empty() && r.back() == 0) r.pop_back();
    if (r.size() < g.c.size()) break;
    const size_t shift = r.size() - g.c.size();
    q[shift] = 1;
    for (size_t j = 0; j < g.c.size(); ++j) r[shift + j] = (r[shift + j] + g.c[j]) % 2;
  }
  return {make_poly_f2(q), make_poly_f2(r)};
}

PolyF2 poly_from_bits(int bits, int deg) {
  std::vector<int> c(deg + 1, 0);
  for (int i = 0; i < deg; ++i) c[i] = (bits >> i) & 1;
  c[deg] = 1;
  return make_poly_f2(c);
}

bool f2_irreducible(const PolyF2& p) {
  const int d = degree(p);
  if (d <= 1) return d == 1;
  for (int dd = 1; dd <= d / 2; ++dd)
    for (int bits = 0; bits < (1 << dd); ++bits) {
      const PolyF2 q = poly_from_bits(bits, dd);
      if (divmod_f2(p, q).second.c.empty()) return false;
    }
  return true;
}

// F with F(x^2) = +-f(x)f(-x), sign chosen to keep F monic
PolyZ4 graeffe_step(const PolyZ4& f) {
  const PolyZ4 neg = phi_negate(f);
  const PolyZ4 prod = poly_mul(f, neg);
  std::vector<int> even;
  for (size_t i = 0; i < prod.c.size(); ++i) {
    if (i % 2 == 1 && prod.c[i] != 0)
      throw Error("internal: odd-degree term survived the Graeffe product");
    if (i % 2 == 0) even.push_back(prod.c[i]);
  }
  PolyZ4 out = make_poly_z4(even);
  if (!out.c.empty() && out.c.back() == 3) out = poly_scale(3, out);
  return out;
}

PolyZ4 monic_phi(const PolyZ4& f) {
  PolyZ4 g = phi_negate(f);
  if (!g.c.empty() && g.c.back() == 3) g = poly_scale(3, g);
  return g;
}

}  // namespace

PolyZ4 xn_minus_1_z4(int n) {
  std::vector<int> c(n + 1, 0);
  c[0] = 3;
  c[n] = 1;
  return make_poly_z4(c);
}

PolyZ4 xn_plus_1_z4(int n) {
  std::vector<int> c(n + 1, 0);
  c[0] = 1;
  c[n] = 1;
  return make_poly_z4(c);
}

std::vector<std::vector<int>> cyclotomic_cosets(int n) {
  if (n < 1 || n % 2 == 0)
    throw EvenN("cyclotomic cosets mod 2 require odd positive n");
  std::vector<bool> seen(n, false);
  std::vector<std::vector<int>> cosets;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> orb;
    int t = s;
    while (!seen[t]) {
      seen[t] = true;
      orb.push_back(t);
      t = (2 * t) % n;
    }
    std::sort(orb.begin(), orb.end());
    cosets.push_back(std::move(orb));
  }
  return cosets;
}

std::vector<PolyF2> factor_f2(int n) {
  if (n < 1 || n % 2 == 0)
    throw EvenN("factoring x^n-1 over F2 requires odd positive n");
  PolyF2 rem = xn_minus_1_f2(n);
  std::vector<PolyF2> factors;
  int d = 1;
  while (degree(rem) > 0) {
    bool found = false;
    for (int bits = 0; bits < (1 << d) && !found; ++bits) {
      const PolyF2 q = poly_from_bits(bits, d);
      if (!f2_irreducible(q)) continue;
      auto [quo, r] = divmod_f2(rem, q);
      if (r.c.empty()) {
        factors.push_back(q);
        rem = quo;
        found = true;
      }
    }
    if (!found) ++d;
  }
  std::sort(factors.begin(), factors.end(), [](const PolyF2& a, const PolyF2& b) {
    if (degree(a) != degree(b)) return degree(a) < degree(b);
    return a.c < b.c;
  });
  return factors;
}

PolyZ4 hensel_lift_z4(const PolyF2& g, int n) {
  PolyZ4 f = lift_z4(g);
  bool stable = false;
  for (int it = 0; it < 8; ++it) {
    const PolyZ4 nxt = graeffe_step(f);
    if (nxt == f) {
      stable = true;
      break;
    }
    f = nxt;
  }
  if (!stable) throw Error("internal: Graeffe iteration did not stabilize");
  if (f.c.empty() || f.c.back() != 1 || !(project_f2(f) == g))
    throw NotADivisor("Graeffe lift is not a monic lift of the given factor");
  const auto [q, r] = poly_divmod_z4(xn_minus_1_z4(n), f);
  if (!r.c.empty())
    throw NotADivisor("lift of " + to_string(g) + " does not divide x^" +
                      std::to_string(n) + "-1 over Z4");
  return f;
}

FactorSet negacyclic_factors(int n) {
  FactorSet out;
  out.n = n;
  out.f2_factors = factor_f2(n);
  for (const auto& g : out.f2_factors) {
    const PolyZ4 lift = hensel_lift_z4(g, n);
    out.z4_factors.push_back(lift);
    out.nega_factors.push_back(monic_phi(lift));
  }
  return out;
}

}  // namespace negacode
