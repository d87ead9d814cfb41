#include "negacode/poly.hpp"

#include <cctype>

namespace negacode {

namespace {

template <class V>
void trim_vec(V& c) {
  while (!c.empty() && c.back() == typename V::value_type{}) c.pop_back();
}

int mod4(int x) { return ((x % 4) + 4) % 4; }

void check_fits(RingTag ring, const RElem& e) {
  if (ring == RingTag::R) return;
  if (e.a1 != 0) throw MixedRings("u coefficient in a residue over a u-free ring");
  if (ring == RingTag::F2 && e.a0 > 1)
    throw MixedRings("coefficient " + std::to_string(e.a0) + " in an F2 residue");
}

void check_same(const Residue& f, const Residue& g) {
  if (f.ring != g.ring || f.mod != g.mod || f.n != g.n)
    throw MixedRings("residue operands have different ring, modulus, or length");
}

}  // namespace

PolyF2 make_poly_f2(std::vector<int> coeffs) {
  for (auto& x : coeffs) x = ((x % 2) + 2) % 2;
  PolyF2 f{std::move(coeffs)};
  trim_vec(f.c);
  return f;
}

PolyZ4 make_poly_z4(std::vector<int> coeffs) {
  for (auto& x : coeffs) x = mod4(x);
  PolyZ4 f{std::move(coeffs)};
  trim_vec(f.c);
  return f;
}

PolyR make_poly_r(std::vector<RElem> coeffs) {
  PolyR f{std::move(coeffs)};
  while (!f.c.empty() && f.c.back().is_zero()) f.c.pop_back();
  return f;
}

PolyR make_poly_r(const PolyZ4& a, const PolyZ4& b) {
  std::vector<RElem> c(std::max(a.c.size(), b.c.size()));
  for (size_t i = 0; i < a.c.size(); ++i) c[i].a0 = a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) c[i].a1 = b.c[i];
  return make_poly_r(std::move(c));
}

PolyF2 poly_add(const PolyF2& f, const PolyF2& g) {
  std::vector<int> c(std::max(f.c.size(), g.c.size()), 0);
  for (size_t i = 0; i < f.c.size(); ++i) c[i] ^= f.c[i];
  for (size_t i = 0; i < g.c.size(); ++i) c[i] ^= g.c[i];
  PolyF2 out{std::move(c)};
  trim_vec(out.c);
  return out;
}

PolyF2 poly_mul(const PolyF2& f, const PolyF2& g) {
  if (f.c.empty() || g.c.empty()) return {};
  std::vector<int> c(f.c.size() + g.c.size() - 1, 0);
  for (size_t i = 0; i < f.c.size(); ++i)
    if (f.c[i])
      for (size_t j = 0; j < g.c.size(); ++j) c[i + j] ^= f.c[i] & g.c[j];
  PolyF2 out{std::move(c)};
  trim_vec(out.c);
  return out;
}

PolyZ4 poly_add(const PolyZ4& f, const PolyZ4& g) {
  std::vector<int> c(std::max(f.c.size(), g.c.size()), 0);
  for (size_t i = 0; i < f.c.size(); ++i) c[i] = f.c[i];
  for (size_t i = 0; i < g.c.size(); ++i) c[i] = mod4(c[i] + g.c[i]);
  PolyZ4 out{std::move(c)};
  trim_vec(out.c);
  return out;
}

PolyZ4 poly_mul(const PolyZ4& f, const PolyZ4& g) {
  if (f.c.empty() || g.c.empty()) return {};
  std::vector<int> c(f.c.size() + g.c.size() - 1, 0);
  for (size_t i = 0; i < f.c.size(); ++i)
    if (f.c[i])
      for (size_t j = 0; j < g.c.size(); ++j)
        c[i + j] = mod4(c[i + j] + f.c[i] * g.c[j]);
  PolyZ4 out{std::move(c)};
  trim_vec(out.c);
  return out;
}

PolyZ4 poly_scale(int k, const PolyZ4& f) {
  std::vector<int> c(f.c.size());
  for (size_t i = 0; i < f.c.size(); ++i) c[i] = mod4(k * f.c[i]);
  PolyZ4 out{std::move(c)};
  trim_vec(out.c);
  return out;
}

PolyR poly_add(const PolyR& f, const PolyR& g) {
  std::vector<RElem> c(std::max(f.c.size(), g.c.size()));
  for (size_t i = 0; i < f.c.size(); ++i) c[i] = f.c[i];
  for (size_t i = 0; i < g.c.size(); ++i) c[i] = c[i] + g.c[i];
  return make_poly_r(std::move(c));
}

PolyR poly_mul(const PolyR& f, const PolyR& g) {
  if (f.c.empty() || g.c.empty()) return {};
  std::vector<RElem> c(f.c.size() + g.c.size() - 1);
  for (size_t i = 0; i < f.c.size(); ++i)
    if (!f.c[i].is_zero())
      for (size_t j = 0; j < g.c.size(); ++j) c[i + j] = c[i + j] + f.c[i] * g.c[j];
  return make_poly_r(std::move(c));
}

PolyZ4 project_z4(const PolyR& f) {
  std::vector<int> c(f.c.size());
  for (size_t i = 0; i < f.c.size(); ++i) c[i] = f.c[i].a0;
  return make_poly_z4(std::move(c));
}

PolyF2 project_f2(const PolyR& f) { return project_f2(project_z4(f)); }

PolyF2 project_f2(const PolyZ4& f) {
  std::vector<int> c(f.c.size());
  for (size_t i = 0; i < f.c.size(); ++i) c[i] = f.c[i] % 2;
  return make_poly_f2(std::move(c));
}

PolyZ4 lift_z4(const PolyF2& f) { return make_poly_z4(f.c); }

PolyR lift_r(const PolyZ4& f) { return make_poly_r(f, PolyZ4{}); }

std::pair<PolyZ4, PolyZ4> poly_divmod_z4(const PolyZ4& f, const PolyZ4& g) {
  if (g.c.empty() || g.c.back() % 2 == 0)
    throw NonMonicDivisor("division requires a divisor with unit leading coefficient");
  const int inv = g.c.back();  // 1 and 3 are self-inverse mod 4
  std::vector<int> r = f.c;
  std::vector<int> q(f.c.size() >= g.c.size() ? f.c.size() - g.c.size() + 1 : 0, 0);
  while (r.size() >= g.c.size()) {
    if (r.back() == 0) {
      r.pop_back();
      continue;
    }
    const size_t shift = r.size() - g.c.size();
    const int c = mod4(r.back() * inv);
    q[shift] = c;
    for (size_t j = 0; j < g.c.size(); ++j)
      r[shift + j] = mod4(r[shift + j] - c * g.c[j]);
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  return {make_poly_z4(std::move(q)), make_poly_z4(std::move(r))};
}

PolyR reciprocal(const PolyR& g) {
  std::vector<RElem> c(g.c.rbegin(), g.c.rend());
  return make_poly_r(std::move(c));
}

PolyZ4 reciprocal(const PolyZ4& g) {
  std::vector<int> c(g.c.rbegin(), g.c.rend());
  return make_poly_z4(std::move(c));
}

PolyR phi_negate(const PolyR& f) {
  std::vector<RElem> c = f.c;
  for (size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return make_poly_r(std::move(c));
}

PolyZ4 phi_negate(const PolyZ4& f) {
  std::vector<int> c = f.c;
  for (size_t i = 1; i < c.size(); i += 2) c[i] = mod4(-c[i]);
  return make_poly_z4(std::move(c));
}

// ------------------------------------------------------------- residues

Residue make_residue(RingTag ring, ModTag mod, int n, const PolyR& f) {
  if (n < 1) throw BadParameters("residue length must be positive");
  Residue out{ring, mod, n, std::vector<RElem>(n)};
  const int wrap = (mod == ModTag::XnPlus1) ? -1 : 1;
  for (size_t i = 0; i < f.c.size(); ++i) {
    const int q = static_cast<int>(i) / n;
    const int r = static_cast<int>(i) % n;
    const int sign = (q % 2 == 0) ? 1 : wrap;
    out.c[r] = out.c[r] + RElem(sign * f.c[i].a0, sign * f.c[i].a1);
  }
  for (const auto& e : out.c) check_fits(ring, e);
  return out;
}

Residue make_residue(RingTag ring, ModTag mod, int n, const PolyZ4& f) {
  return make_residue(ring, mod, n, lift_r(f));
}

Residue zero_residue(RingTag ring, ModTag mod, int n) {
  return Residue{ring, mod, n, std::vector<RElem>(n)};
}

Residue one_residue(RingTag ring, ModTag mod, int n) {
  Residue out = zero_residue(ring, mod, n);
  out.c[0] = RElem(1, 0);
  return out;
}

Residue res_add(const Residue& f, const Residue& g) {
  check_same(f, g);
  Residue out = f;
  for (int i = 0; i < f.n; ++i) {
    out.c[i] = f.c[i] + g.c[i];
    if (f.ring == RingTag::F2) out.c[i].a0 %= 2;
  }
  return out;
}

Residue res_mul(const Residue& f, const Residue& g) {
  check_same(f, g);
  const int n = f.n;
  const int wrap = (f.mod == ModTag::XnPlus1) ? -1 : 1;
  std::vector<RElem> c(n);
  for (int i = 0; i < n; ++i) {
    if (f.c[i].is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (g.c[j].is_zero()) continue;
      int k = i + j;
      int sign = 1;
      if (k >= n) {
        k -= n;
        sign = wrap;
      }
      RElem p = f.c[i] * g.c[j];
      c[k] = c[k] + RElem(sign * p.a0, sign * p.a1);
    }
  }
  if (f.ring == RingTag::F2)
    for (auto& e : c) e.a0 %= 2;
  return Residue{f.ring, f.mod, n, std::move(c)};
}

Residue res_neg(const Residue& f) {
  Residue out = f;
  for (auto& e : out.c) {
    e = -e;
    if (f.ring == RingTag::F2) e.a0 %= 2;
  }
  return out;
}

Residue res_scale(RElem k, const Residue& f) {
  check_fits(f.ring, k);
  Residue out = f;
  for (auto& e : out.c) {
    e = k * e;
    if (f.ring == RingTag::F2) e.a0 %= 2;
  }
  return out;
}

bool res_is_zero(const Residue& f) {
  for (const auto& e : f.c)
    if (!e.is_zero()) return false;
  return true;
}

Residue res_mul_u(const Residue& f) {
  if (f.ring != RingTag::R) throw MixedRings("u-multiplication needs an R residue");
  Residue out = f;
  for (auto& e : out.c) e = RElem(0, e.a0);
  return out;
}

Residue res_shift(const Residue& f, int k) {
  if (k < 0) throw BadParameters("negative shift");
  Residue out = f;
  const int wrap = (f.mod == ModTag::XnPlus1) ? -1 : 1;
  for (int step = 0; step < k; ++step) {
    RElem last = out.c[f.n - 1];
    for (int i = f.n - 1; i > 0; --i) out.c[i] = out.c[i - 1];
    out.c[0] = RElem(wrap * last.a0, wrap * last.a1);
  }
  return out;
}

std::vector<RElem> to_xp1_basis(const Residue& f) {
  if (f.ring == RingTag::F2 || f.mod != ModTag::XnPlus1)
    throw BadParameters("(x+1)-basis conversion needs a Z4 or R residue mod x^n+1");
  // Iterated synthetic division by (x+1): remainder at -1 is the next digit.
  std::vector<RElem> work = f.c;
  std::vector<RElem> out(f.n);
  for (int j = 0; j < f.n; ++j) {
    const int len = static_cast<int>(work.size());
    std::vector<RElem> q(len > 1 ? len - 1 : 0);
    for (int i = len - 1; i >= 1; --i)
      q[i - 1] = (i == len - 1) ? work[i] : work[i] - q[i];
    out[j] = work[0] - (q.empty() ? RElem() : q[0]);
    if (len == 1) out[j] = work[0];
    work = q.empty() ? std::vector<RElem>{RElem()} : std::move(q);
  }
  return out;
}

Residue from_xp1_basis(RingTag ring, int n, const std::vector<RElem>& coeffs) {
  if (ring == RingTag::F2)
    throw BadParameters("(x+1)-basis conversion needs a Z4 or R residue mod x^n+1");
  Residue acc = zero_residue(ring, ModTag::XnPlus1, n);
  const Residue xp1 = make_residue(ring, ModTag::XnPlus1, n,
                                   make_poly_r({RElem(1, 0), RElem(1, 0)}));
  for (int j = static_cast<int>(coeffs.size()) - 1; j >= 0; --j) {
    acc = res_mul(acc, xp1);
    Residue term = zero_residue(ring, ModTag::XnPlus1, n);
    term.c[0] = coeffs[j];
    check_fits(ring, coeffs[j]);
    acc = res_add(acc, term);
  }
  return acc;
}

Residue xp1_pow(int n, int k) {
  Residue acc = one_residue(RingTag::R, ModTag::XnPlus1, n);
  const Residue xp1 = make_residue(RingTag::R, ModTag::XnPlus1, n,
                                   make_poly_r({RElem(1, 0), RElem(1, 0)}));
  for (int i = 0; i < k; ++i) acc = res_mul(acc, xp1);
  return acc;
}

Residue phi_negate(const Residue& f) {
  if (f.n % 2 == 0)
    throw EvenLength("x -> -x swaps the moduli x^n-1 and x^n+1 only for odd n");
  Residue out = f;
  out.mod = (f.mod == ModTag::XnPlus1) ? ModTag::XnMinus1 : ModTag::XnPlus1;
  for (int i = 1; i < f.n; i += 2) out.c[i] = -out.c[i];
  return out;
}

// ------------------------------------------------- rendering and parsing

namespace {

void append_term(std::string& out, const RElem& coeff, int exp) {
  if (coeff.is_zero()) return;
  if (!out.empty()) out += "+";
  std::string cs;
  bool need_star = true;
  if (coeff.a1 != 0) {
    cs = "(" + to_string(coeff) + ")";
  } else if (coeff.a0 == 1 && exp > 0) {
    need_star = false;
  } else {
    cs = std::to_string(coeff.a0);
  }
  out += cs;
  if (exp > 0) {
    if (!cs.empty() && need_star) out += "*";
    out += (exp == 1) ? "x" : "x^" + std::to_string(exp);
  }
}

template <class Poly, class GetElem>
std::string render(const Poly& f, GetElem get) {
  std::string out;
  for (int i = static_cast<int>(f.c.size()) - 1; i >= 0; --i)
    append_term(out, get(f.c[i]), i);
  return out.empty() ? "0" : out;
}

struct Cursor {
  const std::string& s;
  size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++i;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& why) {
    throw Error("cannot parse polynomial at position " + std::to_string(i) +
                ": " + why);
  }
};

int parse_int(Cursor& cur) {
  cur.skip_ws();
  size_t start = cur.i;
  while (cur.i < cur.s.size() && std::isdigit(static_cast<unsigned char>(cur.s[cur.i])))
    ++cur.i;
  if (cur.i == start) cur.fail("expected digits");
  return std::stoi(cur.s.substr(start, cur.i - start));
}

// "2", "u", "3u", "2+u", "2+3u" (used inside parentheses and for bare parts).
RElem parse_relem_body(Cursor& cur, char stop) {
  RElem acc;
  int sign = 1;
  while (true) {
    cur.skip_ws();
    int a = 1;
    bool saw_digits = false;
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
      a = parse_int(cur);
      saw_digits = true;
    }
    if (cur.peek() == 'u') {
      ++cur.i;
      acc = acc + RElem(0, sign * a);
    } else if (saw_digits) {
      acc = acc + RElem(sign * a, 0);
    } else {
      cur.fail("expected a scalar");
    }
    if (cur.eat('+')) {
      sign = 1;
    } else if (cur.eat('-')) {
      sign = -1;
    } else {
      break;
    }
    if (cur.peek() == stop) cur.fail("dangling sign");
  }
  return acc;
}

}  // namespace

std::string to_string(const PolyF2& f) {
  return render(f, [](int c) { return RElem(c, 0); });
}

std::string to_string(const PolyZ4& f) {
  return render(f, [](int c) { return RElem(c, 0); });
}

std::string to_string(const PolyR& f) {
  return render(f, [](const RElem& c) { return c; });
}

std::string to_string(const Residue& f) {
  PolyR p = make_poly_r(f.c);
  return to_string(p);
}

PolyR parse_poly_r(const std::string& text) {
  Cursor cur{text};
  std::vector<RElem> coeffs;
  auto add = [&](int exp, const RElem& c) {
    if (exp >= static_cast<int>(coeffs.size())) coeffs.resize(exp + 1);
    coeffs[exp] = coeffs[exp] + c;
  };
  bool any = false;
  int sign = 1;
  if (cur.eat('-')) sign = -1;
  while (!cur.done()) {
    RElem coeff(1, 0);
    bool have_coeff = false;
    if (cur.eat('(')) {
      coeff = parse_relem_body(cur, ')');
      if (!cur.eat(')')) cur.fail("expected ')'");
      have_coeff = true;
    } else if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
      int a = parse_int(cur);
      if (cur.peek() == 'u') {
        ++cur.i;
        coeff = RElem(0, a);
      } else {
        coeff = RElem(a, 0);
      }
      have_coeff = true;
    } else if (cur.peek() == 'u') {
      ++cur.i;
      coeff = RElem(0, 1);
      have_coeff = true;
    }
    cur.eat('*');
    int exp = 0;
    if (cur.peek() == 'x') {
      ++cur.i;
      exp = 1;
      if (cur.eat('^')) exp = parse_int(cur);
    } else if (!have_coeff) {
      cur.fail("expected a term");
    }
    add(exp, RElem(sign * coeff.a0, sign * coeff.a1));
    any = true;
    if (cur.done()) break;
    if (cur.eat('+')) {
      sign = 1;
    } else if (cur.eat('-')) {
      sign = -1;
    } else {
      cur.fail("expected '+' or '-' between terms");
    }
  }
  if (!any) throw Error("cannot parse polynomial: empty input");
  return make_poly_r(std::move(coeffs));
}

PolyZ4 parse_poly_z4(const std::string& text) {
  PolyR f = parse_poly_r(text);
  for (const auto& e : f.c)
    if (e.a1 != 0) throw Error("u coefficient in a Z4 polynomial: " + text);
  return project_z4(f);
}

}  // namespace negacode
