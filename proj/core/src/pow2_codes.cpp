#include "negacode/pow2_codes.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

namespace negacode {

namespace {

using Vec = std::vector<int>;

int mod4(int x) { return ((x % 4) + 4) % 4; }

Vec vadd(const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = mod4(a[i] + b[i]);
  return out;
}

Vec vscale(int c, const Vec& a) {
  Vec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = mod4(c * a[i]);
  return out;
}

Vec unit_elem(int n) {
  Vec e(2 * n, 0);
  e[0] = 1;
  return e;
}

Vec zero_elem(int n) { return Vec(2 * n, 0); }

// powers of (x+1): table[k] for k = 0..2n, table[2n] = 0 (nilpotency)
const std::vector<Vec>& ypow_table(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<Vec>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& t = cache[n];
  if (t.empty()) {
    Vec y(2 * n, 0);
    y[0] = 1;
    if (n > 1) y[1] = 1;
    t.push_back(unit_elem(n));
    for (int k = 1; k <= 2 * n; ++k) t.push_back(vec_ring_mul(t.back(), y, n));
  }
  return t;
}

// (x+1)^k, vanishing once k >= 2n
Vec ypow(int k, int n) {
  if (k < 0) throw Error("internal: negative (x+1) exponent");
  const auto& t = ypow_table(n);
  return k >= 2 * n ? zero_elem(n) : t[k];
}

// bitmask in the (x+1)-basis as an element with 0/1 coefficients
Vec h_elem(unsigned mask, int n) {
  Vec acc = zero_elem(n);
  for (int i = 0; mask; ++i, mask >>= 1)
    if (mask & 1) acc = vadd(acc, ypow(i, n));
  return acc;
}

// all unit masks (constant term 1) of (x+1)-degree <= degbound
std::vector<unsigned> h_units(int degbound) {
  if (degbound < 0) return {};
  std::vector<unsigned> out;
  out.reserve(1u << degbound);
  for (unsigned rest = 0; rest < (1u << degbound); ++rest) out.push_back(1u | (rest << 1));
  return out;
}

std::string bits_lsb(unsigned mask) {
  std::string s;
  for (; mask; mask >>= 1) s += static_cast<char>('0' + (mask & 1));
  return s;
}

unsigned mask_from_bits(const std::string& s) {
  unsigned mask = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '0' && s[i] != '1')
      throw BadParameters("h masks are bit strings over {0,1}");
    if (s[i] == '1') mask |= 1u << i;
  }
  return mask;
}

bool is_mixed(TypeTag t) {
  return t == TypeTag::T2_3 || t == TypeTag::T3_4 || t == TypeTag::T3_5;
}

bool has_m(TypeTag t) {
  return t == TypeTag::T3_0 || t == TypeTag::T3_1 || t == TypeTag::T3_2 ||
         t == TypeTag::T3_4;
}

bool has_m1(TypeTag t) { return t == TypeTag::T3_3 || t == TypeTag::T3_5; }

std::vector<Vec> generator_vecs(const CodeDescriptor& d) {
  const int n = d.n;
  if (d.type == TypeTag::T0_zero) return {};
  if (d.type == TypeTag::T0_unit) return {unit_elem(n)};
  if (d.type == TypeTag::T1) return {vec_u_times(ypow(d.m, n), n)};
  Vec g1 = ypow(d.s, n);
  switch (h_class(d)) {
    case HClass::Zero:
      break;
    case HClass::Unit: {
      const Vec up = vec_ring_mul(ypow(d.t, n), h_elem(d.h, n), n);
      g1 = vadd(g1, vec_u_times(up, n));
      break;
    }
    case HClass::Two: {
      const Vec up = vec_ring_mul(ypow(d.t, n), h_elem(d.h, n), n);
      g1 = vadd(g1, vscale(2, vec_u_times(up, n)));
      break;
    }
    case HClass::Mixed: {
      const Vec mix = vadd(vscale(2, h_elem(d.h1, n)),
                           vec_ring_mul(ypow(d.l, n), h_elem(d.h2, n), n));
      const Vec up = vec_ring_mul(ypow(d.t, n), mix, n);
      g1 = vadd(g1, vec_u_times(up, n));
      break;
    }
  }
  std::vector<Vec> gens{g1};
  if (has_m(d.type)) gens.push_back(vec_u_times(ypow(d.m, n), n));
  if (has_m1(d.type)) gens.push_back(vscale(2, vec_u_times(ypow(d.m1, n), n)));
  return gens;
}

std::vector<Vec> ann_gen_vecs(const CodeDescriptor& d) {
  const int n = d.n;
  const int N2 = 2 * n;

  auto g = [&](int e) { return e < N2 ? ypow(e, n) : zero_elem(n); };
  auto ug = [&](int e) { return vec_u_times(g(e), n); };
  // u (x+1)^e h(x), vanishing for e >= 2n or h = 0
  auto uh = [&](int e, unsigned mask) {
    if (mask == 0 || e >= N2) return zero_elem(n);
    return vec_u_times(vec_ring_mul(ypow(e, n), h_elem(mask, n), n), n);
  };

  const int t = d.t, s = d.s, m = d.m, m1 = d.m1, l = d.l;
  switch (d.type) {
    case TypeTag::T0_zero:
      return {unit_elem(n)};
    case TypeTag::T0_unit:
      return {};
    case TypeTag::T1:
      return {g(N2 - m), ug(0)};
    case TypeTag::T2_0: {
      if (d.h == 0) return {g(N2 - s)};
      if (t < 2 * s - n) return {vadd(g(N2 - s), uh(N2 - 2 * s + t, d.h))};
      const Vec factor = vadd(unit_elem(n), ypow(n / 2, n));
      const Vec tail = vec_ring_mul(ypow(n - 2 * s + t, n),
                                    vec_ring_mul(factor, h_elem(d.h, n), n), n);
      return {vadd(g(N2 - s), vscale(2, vec_u_times(tail, n)))};
    }
    case TypeTag::T2_1: {
      if (d.h == 0) return {g(N2 - s)};
      if (t < 2 * s - 2 * n) return {vadd(g(s - t), uh(0, d.h)), ug(N2 - s)};
      return {vadd(g(N2 - s), uh(N2 - 2 * s + t, d.h))};
    }
    case TypeTag::T2_2: {
      if (t < 2 * s - 3 * n) return {g(n - t), ug(N2 - s)};
      const Vec factor = vadd(unit_elem(n), ypow(n / 2, n));
      const Vec tail = vec_ring_mul(ypow(3 * n - 2 * s + t, n),
                                    vec_ring_mul(factor, h_elem(d.h, n), n), n);
      return {vadd(g(N2 - s), vec_u_times(tail, n))};
    }
    case TypeTag::T2_3: {
      const Vec mix = vadd(vscale(2, h_elem(d.h1, n)),
                           vec_ring_mul(ypow(l, n), h_elem(d.h2, n), n));
      return {vadd(g(s - t), vec_u_times(mix, n)), ug(N2 - s)};
    }
    case TypeTag::T3_0:
      return {vadd(g(N2 - m), uh(N2 - m - s + t, d.h)), ug(N2 - s)};
    case TypeTag::T3_1: {
      if (d.h == 0 || t >= s + m - N2)
        return {vadd(g(N2 - m), uh(N2 - m - s + t, d.h)), ug(N2 - s)};
      return {vadd(g(s - t), uh(0, d.h)), ug(N2 - s)};
    }
    case TypeTag::T3_2:
      return {g(N2 - m), ug(N2 - s)};
    case TypeTag::T3_3: {
      if (t >= s + m1 - N2) {
        const Vec factor = vadd(unit_elem(n), ypow(n / 2, n));
        const Vec tail = vec_ring_mul(ypow(N2 - m1 - s + t, n),
                                      vec_ring_mul(factor, h_elem(d.h, n), n), n);
        return {vadd(g(n - m1), vec_u_times(tail, n)), ug(N2 - s)};
      }
      return {g(n - t), ug(N2 - s)};
    }
    case TypeTag::T3_4: {
      if (t + l >= s + m - N2)
        return {vadd(g(N2 - m), uh(N2 - m - s + t + l, d.h2)), ug(N2 - s)};
      return {g(N2 - l), ug(N2 - s)};
    }
    case TypeTag::T3_5: {
      if (t + l >= s + m1 - n) {
        const Vec hp = vadd(vec_ring_mul(h_elem(d.h1, n), ypow(n - l, n), n),
                            vec_ring_mul(h_elem(d.h2, n),
                                         vadd(unit_elem(n), ypow(n / 2, n)), n));
        const Vec tail = n - m1 - s + t + l < N2
                             ? vec_ring_mul(ypow(n - m1 - s + t + l, n), hp, n)
                             : zero_elem(n);
        return {vadd(g(n - m1), vec_u_times(tail, n)), ug(N2 - s)};
      }
      return {g(N2 - l), ug(N2 - s)};
    }
  }
  throw BadParameters("unknown code type");
}

IdealSpan ann_formula_span(const CodeDescriptor& d) {
  return ideal_closure_vecs(ann_gen_vecs(d), d.n);
}

void check_pow2_length(int n) {
  if (n < 2 || n > 16 || (n & (n - 1)) != 0)
    throw UnsupportedLength("classification lengths are n = 2^k with 1 <= k <= 4");
}

// canonical span -> descriptor map for annihilator lookup
const std::map<IdealSpan, CodeDescriptor>& descriptor_by_span(int n) {
  static std::mutex mu;
  static std::map<int, std::map<IdealSpan, CodeDescriptor>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& m = cache[n];
  if (m.empty())
    for (const auto& d : enumerate_codes(n, 16)) m.emplace(span_of(d), d);
  return m;
}

std::string pow_txt(int k) {
  if (k == 0) return "";
  if (k == 1) return "(x+1)";
  return "(x+1)^" + std::to_string(k);
}

std::string hpoly_txt(unsigned mask) {
  if (mask == 0) return "0";
  std::string out;
  for (int i = 0; mask; ++i, mask >>= 1) {
    if (!(mask & 1)) continue;
    if (!out.empty()) out += "+";
    out += i == 0 ? "1" : pow_txt(i);
  }
  return out;
}

std::string hfactor_txt(unsigned mask) {
  return mask == 1 ? "" : "(" + hpoly_txt(mask) + ")";
}

}  // namespace

const char* type_name(TypeTag t) {
  switch (t) {
    case TypeTag::T0_zero: return "T0_zero";
    case TypeTag::T0_unit: return "T0_unit";
    case TypeTag::T1: return "T1";
    case TypeTag::T2_0: return "T2_0";
    case TypeTag::T2_1: return "T2_1";
    case TypeTag::T2_2: return "T2_2";
    case TypeTag::T2_3: return "T2_3";
    case TypeTag::T3_0: return "T3_0";
    case TypeTag::T3_1: return "T3_1";
    case TypeTag::T3_2: return "T3_2";
    case TypeTag::T3_3: return "T3_3";
    case TypeTag::T3_4: return "T3_4";
    case TypeTag::T3_5: return "T3_5";
  }
  throw BadParameters("unknown code type");
}

TypeTag type_from_name(const std::string& name) {
  for (int i = 0; i < kNumTypes; ++i) {
    const TypeTag t = static_cast<TypeTag>(i);
    if (name == type_name(t)) return t;
  }
  throw BadParameters("unknown code type '" + name + "'");
}

bool descriptor_less(const CodeDescriptor& a, const CodeDescriptor& b) {
  return std::tie(a.type, a.s, a.t, a.m, a.m1, a.l, a.h, a.h1, a.h2) <
         std::tie(b.type, b.s, b.t, b.m, b.m1, b.l, b.h, b.h1, b.h2);
}

std::string to_string(const CodeDescriptor& d) {
  if (d.type == TypeTag::T0_zero) return "zero";
  if (d.type == TypeTag::T0_unit) return "one";
  std::string name = type_name(d.type);
  for (auto& c : name)
    if (c == '_') c = '.';
  std::vector<std::string> bits;
  if (d.type == TypeTag::T1) {
    bits.push_back("m=" + std::to_string(d.m));
  } else {
    bits.push_back("s=" + std::to_string(d.s));
    if (d.h || d.h1 || d.h2) bits.push_back("t=" + std::to_string(d.t));
    if (is_mixed(d.type)) bits.push_back("l=" + std::to_string(d.l));
    if (has_m(d.type)) bits.push_back("m=" + std::to_string(d.m));
    if (has_m1(d.type)) bits.push_back("m1=" + std::to_string(d.m1));
    if (is_mixed(d.type)) {
      bits.push_back("h1=" + bits_lsb(d.h1));
      bits.push_back("h2=" + bits_lsb(d.h2));
    } else if (d.h) {
      bits.push_back("h=" + bits_lsb(d.h));
    }
  }
  std::string out = name + "(";
  for (size_t i = 0; i < bits.size(); ++i) {
    if (i) out += ",";
    out += bits[i];
  }
  return out + ")";
}

CodeDescriptor parse_descriptor(const std::string& text, int n) {
  CodeDescriptor d;
  d.n = n;
  if (text == "zero") return d;
  if (text == "one") {
    d.type = TypeTag::T0_unit;
    return d;
  }
  const auto open = text.find('(');
  if (open == std::string::npos || text.back() != ')')
    throw BadParameters("descriptor must look like Type(k=v,...), 'zero' or 'one'");
  std::string name = text.substr(0, open);
  for (auto& c : name)
    if (c == '.') c = '_';
  d.type = type_from_name(name);
  std::string inner = text.substr(open + 1, text.size() - open - 2);
  size_t pos = 0;
  while (pos < inner.size()) {
    size_t comma = inner.find(',', pos);
    if (comma == std::string::npos) comma = inner.size();
    const std::string item = inner.substr(pos, comma - pos);
    pos = comma + 1;
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw BadParameters("descriptor parameter '" + item + "' is not k=v");
    const std::string key = item.substr(0, eq);
    const std::string val = item.substr(eq + 1);
    if (val.empty()) throw BadParameters("descriptor parameter '" + key + "' has no value");
    if (key == "h" || key == "h1" || key == "h2") {
      const unsigned mask = mask_from_bits(val);
      if (key == "h") d.h = mask;
      else if (key == "h1") d.h1 = mask;
      else d.h2 = mask;
    } else {
      int iv = 0;
      try {
        iv = std::stoi(val);
      } catch (const std::exception&) {
        throw BadParameters("descriptor parameter '" + key + "' has a non-integer value");
      }
      if (key == "s") d.s = iv;
      else if (key == "t") d.t = iv;
      else if (key == "m") d.m = iv;
      else if (key == "m1") d.m1 = iv;
      else if (key == "l") d.l = iv;
      else throw BadParameters("unknown descriptor parameter '" + key + "'");
    }
  }
  return d;
}

HClass h_class(const CodeDescriptor& d) {
  if (d.type == TypeTag::T2_2 || d.type == TypeTag::T3_2 || d.type == TypeTag::T3_3)
    return HClass::Two;
  if (is_mixed(d.type)) return HClass::Mixed;
  return d.h == 0 ? HClass::Zero : HClass::Unit;
}

int compute_T(int s, int t, HClass hc, int l, int n) {
  if (n < 1 || s < 0 || s > 2 * n || t < 0 || l < 0)
    throw BadParameters("T parameters out of range");
  if (s == 0) return 0;
  if (s == 2 * n) return 2 * n;
  if (hc == HClass::Zero || (1 <= s && s <= n - 1)) return s;
  if (hc == HClass::Unit) return t < 2 * s - 2 * n ? 2 * n - s + t : s;
  if (hc == HClass::Two) return t < 2 * s - 3 * n ? 3 * n - s + t : s;
  return l + t < 2 * s - 2 * n ? 2 * n - s + l + t : s;  // mixed
}

int compute_T1(int s, int t, HClass hc, int l, int n) {
  if (n < 1 || s < 0 || s > 2 * n || t < 0 || l < 0)
    throw BadParameters("T1 parameters out of range");
  if (s == 0) return 0;
  if (s == 2 * n) return n;
  if (hc == HClass::Zero) return std::max(0, s - n);
  if (1 <= s && s <= n - 1) return 0;
  if (hc == HClass::Unit) {
    if (t < s - n) return 0;
    if (t < 2 * s - 2 * n) return n - s + t;
    return s - n;
  }
  if (hc == HClass::Two) return t < 2 * s - 3 * n ? 2 * n - s + t : s - n;
  const int lt = l + t;  // mixed
  if (lt <= s - n) return 0;
  if (lt < 2 * s - 2 * n) return lt - s + n;
  return s - n;
}

int descriptor_T(const CodeDescriptor& d) {
  const int n = d.n;
  if (d.type == TypeTag::T0_zero) return 2 * n;
  if (d.type == TypeTag::T0_unit) return 0;
  if (d.type == TypeTag::T1) return d.m;
  const int base = compute_T(d.s, d.t, h_class(d), d.l, n);
  if (has_m(d.type)) return std::min(base, d.m);
  if (has_m1(d.type)) return std::min(base, n + d.m1);
  return base;
}

int descriptor_T1(const CodeDescriptor& d) {
  const int n = d.n;
  if (d.type == TypeTag::T0_zero) return n;
  if (d.type == TypeTag::T0_unit) return 0;
  if (d.type == TypeTag::T1) return std::max(0, d.m - n);
  const int base = compute_T1(d.s, d.t, h_class(d), d.l, n);
  if (has_m(d.type)) return std::min(base, std::max(0, d.m - n));
  if (has_m1(d.type)) return std::min(base, d.m1);
  return base;
}

GeneratorPair generators(const CodeDescriptor& d) {
  const auto gens = generator_vecs(d);
  GeneratorPair out{vec_to_residue(zero_elem(d.n), d.n), vec_to_residue(zero_elem(d.n), d.n)};
  if (!gens.empty()) out.gen1 = vec_to_residue(gens[0], d.n);
  if (gens.size() > 1) out.gen2 = vec_to_residue(gens[1], d.n);
  return out;
}

std::string generators_text(const CodeDescriptor& d) {
  if (d.type == TypeTag::T0_zero) return "<0>";
  if (d.type == TypeTag::T0_unit) return "<1>";
  if (d.type == TypeTag::T1) return "<u" + pow_txt(d.m) + ">";
  std::string g1 = pow_txt(d.s);
  switch (h_class(d)) {
    case HClass::Zero:
      break;
    case HClass::Unit:
      g1 += "+u" + pow_txt(d.t) + hfactor_txt(d.h);
      break;
    case HClass::Two:
      g1 += "+2u" + pow_txt(d.t) + hfactor_txt(d.h);
      break;
    case HClass::Mixed:
      g1 += "+u" + pow_txt(d.t) + "(2" + hfactor_txt(d.h1) + "+" + pow_txt(d.l) +
            hfactor_txt(d.h2) + ")";
      break;
  }
  std::string out = "<" + g1;
  if (has_m(d.type)) out += ", u" + pow_txt(d.m);
  if (has_m1(d.type)) out += ", 2u" + pow_txt(d.m1);
  return out + ">";
}

IdealSpan span_of(const CodeDescriptor& d) {
  return ideal_closure_vecs(generator_vecs(d), d.n);
}

std::vector<CodeDescriptor> enumerate_descriptors(int n) {
  check_pow2_length(n);
  std::vector<CodeDescriptor> out;
  auto add = [&](CodeDescriptor d) {
    d.n = n;
    out.push_back(d);
  };
  add({TypeTag::T0_zero});
  add({TypeTag::T0_unit});
  for (int m = 0; m < 2 * n; ++m) add({.type = TypeTag::T1, .m = m});
  // Type 2.0: 1 <= s <= n-1, u-part u(x+1)^t h or zero
  for (int s = 1; s < n; ++s) {
    add({.type = TypeTag::T2_0, .s = s});
    for (int t = 0; t < s; ++t)
      for (unsigned h : h_units(s - t - 1))
        add({.type = TypeTag::T2_0, .s = s, .t = t, .h = h});
  }
  // Type 2.1: n <= s <= 2n-1
  for (int s = n; s < 2 * n; ++s) {
    add({.type = TypeTag::T2_1, .s = s});
    for (int t = 0; t < n; ++t) {
      const int bound = t < s - n ? 2 * n - s - 1 : n - t - 1;
      for (unsigned h : h_units(bound))
        add({.type = TypeTag::T2_1, .s = s, .t = t, .h = h});
    }
  }
  // Type 2.2: u-part 2u(x+1)^t h
  for (int s = n + 1; s < 2 * n; ++s)
    for (int t = 0; t < s - n; ++t) {
      const int bound = t < 2 * s - 3 * n ? 2 * n - s - 1 : s - n - t - 1;
      for (unsigned h : h_units(bound))
        add({.type = TypeTag::T2_2, .s = s, .t = t, .h = h});
    }
  // Type 2.3: mixed u-part u(x+1)^t (2 h1 + (x+1)^l h2)
  for (int s = n + 1; s < 2 * n; ++s)
    for (int t = 0; t < s - n; ++t)
      for (int l = s - n - t + 1; l < n - t; ++l) {
        const int t1 = compute_T1(s, t, HClass::Mixed, l, n);
        for (unsigned h1 : h_units(t1 - t - 1))
          for (unsigned h2 : h_units(n - t - l - 1))
            add({.type = TypeTag::T2_3, .s = s, .t = t, .l = l, .h1 = h1, .h2 = h2});
      }
  // Type 3.0: 1 <= s <= n-1, second generator u(x+1)^m
  for (int s = 1; s < n; ++s) {
    for (int m = 0; m < s; ++m) add({.type = TypeTag::T3_0, .s = s, .m = m});
    for (int t = 0; t < s; ++t)
      for (int m = t + 1; m < s; ++m)
        for (unsigned h : h_units(m - t - 1))
          add({.type = TypeTag::T3_0, .s = s, .t = t, .m = m, .h = h});
  }
  // Type 3.1: n <= s <= 2n-1 (h-degree bound uses min{m,n}, the wider form)
  for (int s = n; s < 2 * n; ++s) {
    for (int m = 0; m < s; ++m) add({.type = TypeTag::T3_1, .s = s, .m = m});
    for (int t = 0; t < n; ++t) {
      const int T = compute_T(s, t, HClass::Unit, 0, n);
      for (int m = t + 1; m < T; ++m)
        for (unsigned h : h_units(std::min(m, n) - t - 1))
          add({.type = TypeTag::T3_1, .s = s, .t = t, .m = m, .h = h});
    }
  }
  // Type 3.2: u-part 2u(x+1)^t h, second generator u(x+1)^m
  for (int s = n + 1; s < 2 * n; ++s)
    for (int t = 0; t < s - n; ++t) {
      const int t1 = compute_T1(s, t, HClass::Two, 0, n);
      for (int m = t + 1; m < n; ++m)
        for (unsigned h : h_units(std::min(m, t1) - t - 1))
          add({.type = TypeTag::T3_2, .s = s, .t = t, .m = m, .h = h});
    }
  // Type 3.3: u-part 2u(x+1)^t h, second generator 2u(x+1)^{m1}
  for (int s = n + 1; s < 2 * n; ++s)
    for (int t = 0; t < s - n; ++t) {
      const int t1 = compute_T1(s, t, HClass::Two, 0, n);
      for (int m1 = t + 1; m1 < t1; ++m1)
        for (unsigned h : h_units(m1 - t - 1))
          add({.type = TypeTag::T3_3, .s = s, .t = t, .m1 = m1, .h = h});
    }
  // Type 3.4: mixed u-part, second generator u(x+1)^m
  for (int s = n + 1; s < 2 * n; ++s)
    for (int t = 0; t < s - n; ++t)
      for (int l = s - n - t + 1; l < n - t; ++l) {
        const int t1 = compute_T1(s, t, HClass::Mixed, l, n);
        for (int m = t + l + 1; m < n; ++m)
          for (unsigned h1 : h_units(t1 - 1))
            for (unsigned h2 : h_units(n - t - l - 1))
              add({.type = TypeTag::T3_4, .s = s, .t = t, .m = m, .l = l,
                   .h1 = h1, .h2 = h2});
      }
  // Type 3.5: mixed u-part, second generator 2u(x+1)^{m1}
  for (int s = n + 1; s < 2 * n; ++s)
    for (int t = 0; t < s - n; ++t)
      for (int l = s - n - t + 1; l < n - t; ++l) {
        const int t1 = compute_T1(s, t, HClass::Mixed, l, n);
        for (int m1 = t + 2; m1 < t1; ++m1)
          for (unsigned h1 : h_units(m1 - t - 1))
            for (unsigned h2 : h_units(n - t - l - 1))
              add({.type = TypeTag::T3_5, .s = s, .t = t, .m1 = m1, .l = l,
                   .h1 = h1, .h2 = h2});
      }
  std::sort(out.begin(), out.end(), descriptor_less);
  return out;
}

std::vector<CodeDescriptor> enumerate_codes(int n, int cap) {
  check_pow2_length(n);
  if (n > cap)
    throw TooLarge("enumeration capped at n <= " + std::to_string(cap));
  std::vector<CodeDescriptor> out;
  std::map<IdealSpan, int> seen;
  for (const auto& d : enumerate_descriptors(n))
    if (seen.emplace(span_of(d), static_cast<int>(out.size())).second) out.push_back(d);
  return out;
}

std::vector<Residue> ann_formula_gens(const CodeDescriptor& d) {
  std::vector<Residue> out;
  for (const auto& v : ann_gen_vecs(d)) out.push_back(vec_to_residue(v, d.n));
  return out;
}

CodeDescriptor annihilator(const CodeDescriptor& d) {
  const IdealSpan target = ann_formula_span(d);
  const auto& m = descriptor_by_span(d.n);
  const auto it = m.find(target);
  if (it == m.end())
    throw Error("internal: annihilator span is missing from the enumeration");
  return it->second;
}

bool annihilator_agrees(const CodeDescriptor& d) {
  return ann_formula_span(d) == ann_oracle(span_of(d));
}

CodeDescriptor descriptor_of_span(const IdealSpan& s) {
  const auto& m = descriptor_by_span(s.n);
  const auto it = m.find(s);
  if (it == m.end()) throw Error("span is not an ideal from the enumerated lattice");
  return it->second;
}

IdealSpan dual(const CodeDescriptor& d) {
  return reciprocal_image(ann_oracle(span_of(d)));
}

unsigned long long cardinality(const CodeDescriptor& d) {
  const int n = d.n;
  const int N2 = 2 * n;
  int bits = 0;
  switch (d.type) {
    case TypeTag::T0_zero: bits = 0; break;
    case TypeTag::T0_unit: bits = 4 * n; break;
    case TypeTag::T1: bits = N2 - d.m; break;
    case TypeTag::T2_0: bits = 2 * (N2 - d.s); break;
    case TypeTag::T2_1:
      bits = (d.h && d.t < 2 * d.s - 2 * n) ? N2 - d.t : 2 * (N2 - d.s);
      break;
    case TypeTag::T2_2:
      bits = d.t < 2 * d.s - 3 * n ? n - d.t : 2 * (N2 - d.s);
      break;
    case TypeTag::T2_3:
      bits = d.l + d.t < 2 * d.s - 2 * n ? N2 - d.l - d.t : 2 * (N2 - d.s);
      break;
    case TypeTag::T3_0:
    case TypeTag::T3_1:
    case TypeTag::T3_2:
    case TypeTag::T3_4:
      bits = 4 * n - d.m - d.s;
      break;
    case TypeTag::T3_3:
    case TypeTag::T3_5:
      bits = 3 * n - d.m1 - d.s;
      break;
    default:
      throw BadParameters("unknown code type");
  }
  if (bits < 0) throw BadParameters("descriptor parameters give a negative size exponent");
  if (bits >= 64) throw TooLarge("code size exceeds 64 bits");
  return 1ULL << bits;
}

bool is_self_dual(const CodeDescriptor& d) {
  const int n = d.n;
  if (d.type == TypeTag::T2_1 && d.s == n) return true;
  if (d.type == TypeTag::T2_1 && d.s > n && d.t == 0) return true;
  if (d.type == TypeTag::T2_1 && d.s > n && d.h == 0) return true;
  if (d.type == TypeTag::T3_1 && d.s + d.m == 2 * n) return true;
  if (d.type == TypeTag::T3_2 && d.s + d.m == 2 * n) return true;
  if (d.type == TypeTag::T3_3 && d.s + d.m1 == n) return true;
  if (d.type == TypeTag::T3_4 && d.s + d.m == 2 * n) return true;
  if (d.type == TypeTag::T3_5 && d.s + d.m1 == n) return true;
  return false;
}

bool is_self_orthogonal(const CodeDescriptor& d) {
  if (d.type == TypeTag::T0_zero) return true;
  if (d.type == TypeTag::T1) return true;
  if (d.type == TypeTag::T2_1) return true;
  if (d.type == TypeTag::T2_2) return true;
  if (d.type == TypeTag::T2_3) return true;
  if ((d.type == TypeTag::T3_1 || d.type == TypeTag::T3_2 || d.type == TypeTag::T3_4) &&
      d.s + d.m >= 2 * d.n)
    return true;
  if ((d.type == TypeTag::T3_3 || d.type == TypeTag::T3_5) && d.s + d.m1 >= d.n)
    return true;
  return false;
}

bool is_self_dual_semantic(const CodeDescriptor& d) {
  const IdealSpan s = span_of(d);
  return s == reciprocal_image(ann_oracle(s));
}

bool is_self_orthogonal_semantic(const CodeDescriptor& d) {
  const IdealSpan s = span_of(d);
  return is_subspan(s, reciprocal_image(ann_oracle(s)));
}

const std::vector<TableRow>& reference_table_n2() {
  static const std::vector<TableRow> table = [] {
    const int n = 2;
    auto res = [&](const Vec& v) { return vec_to_residue(v, n); };
    const Vec one = unit_elem(n);
    const Vec y1 = ypow(1, n);
    const Vec y2 = ypow(2, n);
    const Vec y3 = ypow(3, n);
    const Vec u = vec_u_times(one, n);
    const Vec uy1 = vec_u_times(y1, n);
    const Vec uy2 = vec_u_times(y2, n);
    const Vec uy3 = vec_u_times(y3, n);
    const Vec two_u = vscale(2, u);
    std::vector<TableRow> t;
    auto add = [&](int row, const std::string& text, int ann,
                   unsigned long long size, std::vector<Vec> gens) {
      TableRow r{row, text, ann, size, {}};
      for (const auto& g : gens) r.gens.push_back(res(g));
      t.push_back(std::move(r));
    };
    add(1, "<0>", 2, 1, {});
    add(2, "<1>", 1, 256, {one});
    add(3, "<u>", 3, 16, {u});
    add(4, "<u(x+1)>", 22, 8, {uy1});
    add(5, "<u(x+1)^2>", 19, 4, {uy2});
    add(6, "<u(x+1)^3>", 18, 2, {uy3});
    add(7, "<x+1>", 9, 64, {y1});
    add(8, "<(x+1)^2>", 8, 16, {y2});
    add(9, "<(x+1)^3>", 7, 4, {y3});
    add(10, "<(x+1)+u>", 16, 64, {vadd(y1, u)});
    add(11, "<(x+1)^2+u>", 11, 16, {vadd(y2, u)});
    add(12, "<(x+1)^2+u(x+1)>", 12, 16, {vadd(y2, uy1)});
    add(13, "<(x+1)^2+u+u(x+1)>", 13, 16, {vadd(y2, vadd(u, uy1))});
    add(14, "<(x+1)^3+u>", 14, 16, {vadd(y3, u)});
    add(15, "<(x+1)^3+u(x+1)>", 21, 8, {vadd(y3, uy1)});
    add(16, "<(x+1)^3+2u>", 10, 4, {vadd(y3, two_u)});
    add(17, "<x+1, u>", 6, 128, {y1, u});
    add(18, "<(x+1)^2, u>", 5, 64, {y2, u});
    add(19, "<(x+1)^2, u(x+1)>", 24, 32, {y2, uy1});
    add(20, "<(x+1)^2+u, u(x+1)>", 15, 32, {vadd(y2, u), uy1});
    add(21, "<(x+1)^3, u>", 4, 32, {y3, u});
    add(22, "<(x+1)^3, u(x+1)>", 23, 16, {y3, uy1});
    add(23, "<(x+1)^3, 2u>", 20, 8, {y3, two_u});
    add(24, "<(x+1)^3+2u, u(x+1)>", 23, 16, {vadd(y3, two_u), uy1});
    return t;
  }();
  return table;
}

DiscrepancyReport verify(int n) {
  if (n != 2 && n != 4)
    throw UnsupportedLength("verification runs at n = 2 or n = 4");
  DiscrepancyReport rep;
  rep.n = n;

  // enumeration with collision tracking
  const auto raw = enumerate_descriptors(n);
  std::vector<CodeDescriptor> codes;
  std::vector<IdealSpan> spans;
  std::map<IdealSpan, int> index_of;
  std::map<int, std::vector<std::string>> extra_names;  // kept index -> duplicates
  for (const auto& d : raw) {
    IdealSpan s = span_of(d);
    const auto it = index_of.find(s);
    if (it == index_of.end()) {
      index_of.emplace(std::move(s), static_cast<int>(codes.size()));
      codes.push_back(d);
      spans.push_back(span_of(d));
    } else {
      extra_names[it->second].push_back(to_string(d));
    }
  }
  for (const auto& [idx, names] : extra_names) {
    std::string detail = "same span as";
    for (const auto& nm : names) detail += " " + nm;
    rep.discrepancies.push_back({"descriptor-collision", to_string(codes[idx]), detail});
  }

  // coverage against the exhaustive oracle lattice
  const auto lattice = enumerate_ideals_oracle(n);
  if (lattice.size() != codes.size())
    rep.discrepancies.push_back(
        {"coverage", "lattice",
         "oracle finds " + std::to_string(lattice.size()) + " ideals, enumeration " +
             std::to_string(codes.size())});
  for (const auto& s : lattice)
    if (!index_of.count(s))
      rep.discrepancies.push_back({"coverage", format_span(s), "ideal missing from enumeration"});

  std::vector<bool> row_ok(codes.size(), true);
  auto flag = [&](int i, const std::string& kind, const std::string& detail) {
    rep.discrepancies.push_back({kind, to_string(codes[i]), detail});
    row_ok[i] = false;
  };

  const unsigned long long ambient = 1ULL << (4 * n);
  for (size_t i = 0; i < codes.size(); ++i) {
    const CodeDescriptor& d = codes[i];
    const IdealSpan& s = spans[i];
    ReportRow row;
    row.index = static_cast<int>(i);
    row.desc = d;
    row.descriptor = to_string(d);
    row.generators = generators_text(d);
    row.size = span_size(s);

    if (cardinality(d) != row.size)
      flag(static_cast<int>(i), "cardinality",
           "formula " + std::to_string(cardinality(d)) + ", oracle " +
               std::to_string(row.size));

    const IdealSpan ann = ann_oracle(s);
    const IdealSpan dual_s = reciprocal_image(ann);
    const auto ann_it = index_of.find(ann);
    const auto dual_it = index_of.find(dual_s);
    row.ann_index = ann_it == index_of.end() ? -1 : ann_it->second;
    row.dual_index = dual_it == index_of.end() ? -1 : dual_it->second;

    // oracle-level invariants (never expected to fire)
    if (!(ann_oracle(ann) == s))
      flag(static_cast<int>(i), "oracle-invariant", "ann(ann(I)) != I");
    if (span_size(s) * span_size(ann) != ambient)
      flag(static_cast<int>(i), "oracle-invariant", "|I|*|ann(I)| != 16^n");
    if (!(dual_oracle(s) == dual_s))
      flag(static_cast<int>(i), "oracle-invariant", "dual != reciprocal(ann)");
    if (!(reciprocal_image(ann_oracle(dual_s)) == s))
      flag(static_cast<int>(i), "oracle-invariant", "dual(dual(I)) != I");

    // annihilator case formula vs oracle
    const IdealSpan formula_ann = ann_formula_span(d);
    if (!(formula_ann == ann)) {
      std::string oracle_name = row.ann_index >= 0
                                    ? to_string(codes[row.ann_index])
                                    : format_span(ann);
      flag(static_cast<int>(i), "ann-formula",
           "formula span {" + format_span(formula_ann) + "} (size " +
               std::to_string(span_size(formula_ann)) + "), oracle annihilator is " +
               oracle_name + " {" + format_span(ann) + "}");
    }

    // self-dual / self-orthogonal: formula matchers vs semantics
    row.self_dual = s == dual_s;
    row.self_orthogonal = is_subspan(s, dual_s);
    if (is_self_dual(d) != row.self_dual)
      flag(static_cast<int>(i), "selfdual-flag",
           std::string("formula ") + (is_self_dual(d) ? "true" : "false") +
               ", oracle " + (row.self_dual ? "true" : "false"));
    if (is_self_orthogonal(d) != row.self_orthogonal)
      flag(static_cast<int>(i), "selforthogonal-flag",
           std::string("formula ") + (is_self_orthogonal(d) ? "true" : "false") +
               ", oracle " + (row.self_orthogonal ? "true" : "false"));

    // minimal-exponent witnesses for T and T1
    const int T = descriptor_T(d);
    const int T1 = descriptor_T1(d);
    const auto uy = [&](int e) { return vec_u_times(ypow(e, n), n); };
    const auto u2y = [&](int e) { return vscale(2, uy(e)); };
    if (!member(uy(T), s) || (T > 0 && member(uy(T - 1), s)))
      flag(static_cast<int>(i), "T-witness",
           "u(x+1)^" + std::to_string(T) + " membership pattern wrong");
    if (!member(u2y(T1), s) || (T1 > 0 && member(u2y(T1 - 1), s)))
      flag(static_cast<int>(i), "T-witness",
           "2u(x+1)^" + std::to_string(T1) + " membership pattern wrong");

    rep.rows.push_back(std::move(row));
  }
  for (size_t i = 0; i < codes.size(); ++i) rep.rows[i].agrees = row_ok[i];

  // recheck the published n=2 table row by row
  if (n == 2) {
    const auto& tbl = reference_table_n2();
    std::map<IdealSpan, std::vector<int>> rows_by_span;
    std::map<int, IdealSpan> span_by_row;
    for (const auto& r : tbl) {
      IdealSpan s = r.gens.empty() ? ideal_closure_vecs({}, n) : ideal_closure(r.gens);
      rows_by_span[s].push_back(r.row);
      span_by_row.emplace(r.row, std::move(s));
    }
    auto row_name = [&](const IdealSpan& s) -> int {
      const auto it = rows_by_span.find(s);
      return it == rows_by_span.end() ? -1 : it->second.front();
    };
    for (const auto& [s, rows] : rows_by_span)
      if (rows.size() > 1) {
        std::string detail = "rows";
        for (int r : rows) detail += " C" + std::to_string(r);
        detail += " are the same ideal";
        rep.discrepancies.push_back({"table-duplicate-row", "C" + std::to_string(rows[0]), detail});
      }
    if (rows_by_span.size() != codes.size() || rows_by_span.size() != tbl.size())
      rep.discrepancies.push_back(
          {"table-count", "n=2 table",
           std::to_string(tbl.size()) + " printed rows name " +
               std::to_string(rows_by_span.size()) + " distinct ideals; enumeration finds " +
               std::to_string(codes.size())});
    for (const auto& r : tbl) {
      const IdealSpan& s = span_by_row.at(r.row);
      if (span_size(s) != r.printed_size)
        rep.discrepancies.push_back(
            {"table-size", "C" + std::to_string(r.row),
             "printed " + std::to_string(r.printed_size) + ", oracle " +
                 std::to_string(span_size(s))});
      const int true_ann = row_name(ann_oracle(s));
      if (true_ann != r.printed_ann)
        rep.discrepancies.push_back(
            {"table-annihilator", "C" + std::to_string(r.row),
             "printed C" + std::to_string(r.printed_ann) + ", oracle gives C" +
                 std::to_string(true_ann)});
    }
  }
  return rep;
}

}  // namespace negacode
