#include "negacode/oracle.hpp"

#include <algorithm>
#include <set>

namespace negacode {

namespace {

int mod4(int x) { return ((x % 4) + 4) % 4; }

int lead(const std::vector<int>& v) {
  for (size_t j = 0; j < v.size(); ++j)
    if (v[j] % 4) return static_cast<int>(j);
  return -1;
}

std::vector<int> unit_vec(int width, int i) {
  std::vector<int> e(width, 0);
  e[i] = 1;
  return e;
}

}  // namespace

std::vector<int> vec_ring_mul(const std::vector<int>& e, const std::vector<int>& f, int n) {
  std::vector<int> out(2 * n, 0);
  for (int i = 0; i < n; ++i) {
    const int ai = e[i], bi = e[n + i];
    if (ai == 0 && bi == 0) continue;
    for (int j = 0; j < n; ++j) {
      const int cj = f[j], dj = f[n + j];
      if (cj == 0 && dj == 0) continue;
      int k = i + j;
      int s = 1;
      if (k >= n) {
        k -= n;
        s = -1;
      }
      out[k] = mod4(out[k] + s * ai * cj);
      out[n + k] = mod4(out[n + k] + s * (ai * dj + bi * cj));
    }
  }
  return out;
}

std::vector<int> vec_x_times(const std::vector<int>& e, int n) {
  std::vector<int> out(2 * n);
  out[0] = mod4(-e[n - 1]);
  out[n] = mod4(-e[2 * n - 1]);
  for (int i = 1; i < n; ++i) {
    out[i] = e[i - 1];
    out[n + i] = e[n + i - 1];
  }
  return out;
}

std::vector<int> vec_u_times(const std::vector<int>& e, int n) {
  std::vector<int> out(2 * n, 0);
  for (int i = 0; i < n; ++i) out[n + i] = e[i];
  return out;
}

std::pair<int, int> vec_pairing(const std::vector<int>& e, const std::vector<int>& f, int n) {
  int p0 = 0, p1 = 0;
  for (int i = 0; i < n; ++i) {
    p0 = mod4(p0 + e[i] * f[i]);
    p1 = mod4(p1 + e[i] * f[n + i] + e[n + i] * f[i]);
  }
  return {p0, p1};
}

std::vector<int> residue_to_vec(const Residue& f) {
  if (f.ring != RingTag::R || f.mod != ModTag::XnPlus1)
    throw MixedRings("span elements must be residues over R mod x^n+1");
  std::vector<int> v(2 * f.n);
  for (int i = 0; i < f.n; ++i) {
    v[i] = f.c[i].a0;
    v[f.n + i] = f.c[i].a1;
  }
  return v;
}

Residue vec_to_residue(const std::vector<int>& v, int n) {
  Residue out = zero_residue(RingTag::R, ModTag::XnPlus1, n);
  for (int i = 0; i < n; ++i) out.c[i] = RElem(v[i], v[n + i]);
  return out;
}

// ---- Howell form ----
// Insertion algorithm: keep at most one basis row per leading column.  A
// unit pivot is normalized to 1; inserting a 2-pivot row also enqueues its
// double (which has a later leading column); a unit row arriving at an
// occupied 2-pivot column displaces the resident row back into the queue.
// A final sweep clears entries above pivots (above a 1 fully, above a 2 to
// {0,1}), which makes the result canonical: equal spans, equal matrices.

std::vector<std::vector<int>> howell_form(const std::vector<std::vector<int>>& rows, int width) {
  std::vector<std::vector<int>> basis(width);
  std::vector<std::vector<int>> work;
  work.reserve(rows.size());
  for (const auto& r : rows) {
    std::vector<int> v(width, 0);
    for (size_t k = 0; k < r.size() && k < static_cast<size_t>(width); ++k) v[k] = mod4(r[k]);
    work.push_back(std::move(v));
  }
  while (!work.empty()) {
    std::vector<int> v = std::move(work.back());
    work.pop_back();
    while (true) {
      const int j = lead(v);
      if (j < 0) break;
      if (basis[j].empty()) {
        const int p = v[j];
        if (p == 1 || p == 3) {
          for (auto& x : v) x = mod4(x * p);  // 1 and 3 are self-inverse
          basis[j] = std::move(v);
        } else {  // p == 2
          std::vector<int> dbl(width);
          for (int k = 0; k < width; ++k) dbl[k] = mod4(2 * v[k]);
          basis[j] = std::move(v);
          work.push_back(std::move(dbl));
        }
        break;
      }
      const std::vector<int>& b = basis[j];
      if (b[j] == 1) {
        const int c = v[j];
        for (int k = 0; k < width; ++k) v[k] = mod4(v[k] - c * b[k]);
      } else {  // resident pivot is 2
        if (v[j] == 2) {
          for (int k = 0; k < width; ++k) v[k] = mod4(v[k] - b[k]);
        } else {  // unit entry displaces the 2-pivot row
          const int inv = v[j];
          for (auto& x : v) x = mod4(x * inv);
          std::vector<int> old = basis[j];
          basis[j] = std::move(v);
          work.push_back(std::move(old));
          break;
        }
      }
    }
  }
  std::vector<int> piv;
  for (int j = 0; j < width; ++j)
    if (!basis[j].empty()) piv.push_back(j);
  for (int j : piv) {
    const std::vector<int> bj = basis[j];
    const int p = bj[j];
    for (int i : piv) {
      if (i >= j) break;
      std::vector<int>& r = basis[i];
      if (p == 1) {
        const int c = r[j];
        if (c)
          for (int k = 0; k < width; ++k) r[k] = mod4(r[k] - c * bj[k]);
      } else if (r[j] == 2 || r[j] == 3) {
        for (int k = 0; k < width; ++k) r[k] = mod4(r[k] - bj[k]);
      }
    }
  }
  std::vector<std::vector<int>> out;
  out.reserve(piv.size());
  for (int j : piv) out.push_back(std::move(basis[j]));
  return out;
}

unsigned long long span_size_rows(const std::vector<std::vector<int>>& rows) {
  int bits = 0;
  for (const auto& r : rows) bits += (r[lead(r)] == 1) ? 2 : 1;
  if (bits >= 64) throw TooLarge("span size exceeds 64 bits");
  return 1ULL << bits;
}

bool member_rows(std::vector<int> v, const std::vector<std::vector<int>>& rows) {
  for (auto& x : v) x = mod4(x);
  while (true) {
    const int j = lead(v);
    if (j < 0) return true;
    const std::vector<int>* r = nullptr;
    for (const auto& row : rows)
      if (lead(row) == j) {
        r = &row;
        break;
      }
    if (!r) return false;
    if ((*r)[j] == 1) {
      const int c = v[j];
      for (size_t k = 0; k < v.size(); ++k) v[k] = mod4(v[k] - c * (*r)[k]);
    } else if (v[j] == 2) {
      for (size_t k = 0; k < v.size(); ++k) v[k] = mod4(v[k] - (*r)[k]);
    } else {
      return false;
    }
  }
}

std::vector<std::vector<int>> kernel_rows(const std::vector<std::vector<int>>& rows, int m) {
  if (static_cast<int>(rows.size()) != m)
    throw BadParameters("kernel needs one image row per coordinate");
  const int w = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  std::vector<std::vector<int>> aug;
  aug.reserve(m);
  for (int i = 0; i < m; ++i) {
    std::vector<int> r = rows[i];
    r.resize(w + m, 0);
    r[w + i] = 1;
    aug.push_back(std::move(r));
  }
  auto hb = howell_form(aug, w + m);
  std::vector<std::vector<int>> out;
  for (const auto& r : hb)
    if (lead(r) >= w) out.emplace_back(r.begin() + w, r.end());
  return howell_form(out, m);
}

// ---- ideal spans ----

IdealSpan make_span(int n, const std::vector<std::vector<int>>& rows) {
  IdealSpan s{n, howell_form(rows, 2 * n)};
  for (const auto& r : s.rows) {
    if (!member_rows(vec_x_times(r, n), s.rows) ||
        !member_rows(vec_u_times(r, n), s.rows))
      throw Error("internal: span is not closed under multiplication by x and u");
  }
  return s;
}

IdealSpan ideal_closure_vecs(const std::vector<std::vector<int>>& gens, int n) {
  std::vector<std::vector<int>> rows;
  rows.reserve(gens.size() * 2 * n);
  for (const auto& g : gens) {
    std::vector<int> e = g;
    for (int i = 0; i < n; ++i) {
      rows.push_back(e);
      rows.push_back(vec_u_times(e, n));
      e = vec_x_times(e, n);
    }
  }
  return make_span(n, rows);
}

IdealSpan ideal_closure(const std::vector<Residue>& gens) {
  if (gens.empty()) throw MixedLengths("closure needs at least one generator");
  const int n = gens[0].n;
  std::vector<std::vector<int>> vecs;
  vecs.reserve(gens.size());
  for (const auto& g : gens) {
    if (g.n != n) throw MixedLengths("closure generators have different lengths");
    vecs.push_back(residue_to_vec(g));
  }
  return ideal_closure_vecs(vecs, n);
}

IdealSpan span_sum(const IdealSpan& a, const IdealSpan& b) {
  if (a.n != b.n) throw MixedLengths("span sum of different lengths");
  std::vector<std::vector<int>> rows = a.rows;
  rows.insert(rows.end(), b.rows.begin(), b.rows.end());
  return make_span(a.n, rows);
}

unsigned long long span_size(const IdealSpan& s) { return span_size_rows(s.rows); }

bool member(const std::vector<int>& v, const IdealSpan& s) { return member_rows(v, s.rows); }

bool member(const Residue& f, const IdealSpan& s) {
  return member_rows(residue_to_vec(f), s.rows);
}

bool is_subspan(const IdealSpan& a, const IdealSpan& b) {
  for (const auto& r : a.rows)
    if (!member_rows(r, b.rows)) return false;
  return true;
}

std::vector<std::vector<int>> span_elements(const IdealSpan& s) {
  const int width = 2 * s.n;
  std::vector<std::vector<int>> out;
  out.push_back(std::vector<int>(width, 0));
  for (const auto& r : s.rows) {
    const int reps = (r[lead(r)] == 1) ? 4 : 2;
    std::vector<std::vector<int>> next;
    next.reserve(out.size() * reps);
    for (const auto& base : out)
      for (int c = 0; c < reps; ++c) {
        std::vector<int> v = base;
        for (int k = 0; k < width; ++k) v[k] = mod4(v[k] + c * r[k]);
        next.push_back(std::move(v));
      }
    out = std::move(next);
  }
  return out;
}

IdealSpan ann_oracle(const IdealSpan& s) {
  const int m = 2 * s.n;
  if (s.rows.empty()) return ideal_closure_vecs({unit_vec(m, 0)}, s.n);
  std::vector<std::vector<int>> images;
  images.reserve(m);
  for (int i = 0; i < m; ++i) {
    std::vector<int> row;
    row.reserve(s.rows.size() * m);
    const std::vector<int> e = unit_vec(m, i);
    for (const auto& b : s.rows) {
      const auto prod = vec_ring_mul(e, b, s.n);
      row.insert(row.end(), prod.begin(), prod.end());
    }
    images.push_back(std::move(row));
  }
  // the annihilator of an ideal is itself an ideal; close anyway for safety
  return ideal_closure_vecs(kernel_rows(images, m), s.n);
}

IdealSpan dual_oracle(const IdealSpan& s) {
  const int m = 2 * s.n;
  if (s.rows.empty()) {
    std::vector<std::vector<int>> all;
    for (int i = 0; i < m; ++i) all.push_back(unit_vec(m, i));
    return make_span(s.n, all);
  }
  std::vector<std::vector<int>> conds;
  for (const auto& b : s.rows) {
    std::vector<int> e = b;
    for (int i = 0; i < s.n; ++i) {
      conds.push_back(e);
      conds.push_back(vec_u_times(e, s.n));
      e = vec_x_times(e, s.n);
    }
  }
  std::vector<std::vector<int>> images;
  images.reserve(m);
  for (int i = 0; i < m; ++i) {
    std::vector<int> row;
    row.reserve(conds.size() * 2);
    const std::vector<int> e = unit_vec(m, i);
    for (const auto& c : conds) {
      const auto [p0, p1] = vec_pairing(e, c, s.n);
      row.push_back(p0);
      row.push_back(p1);
    }
    images.push_back(std::move(row));
  }
  return make_span(s.n, kernel_rows(images, m));
}

IdealSpan reciprocal_image(const IdealSpan& s) {
  const int n = s.n;
  std::vector<std::vector<int>> mapped;
  mapped.reserve(s.rows.size());
  for (const auto& r : s.rows) {
    // x^{-i} = -x^{n-i} for 1 <= i < n; the map is a ring automorphism,
    // so the image of a basis spans the image ideal.
    std::vector<int> v(2 * n, 0);
    v[0] = r[0];
    v[n] = r[n];
    for (int i = 1; i < n; ++i) {
      v[n - i] = mod4(-r[i]);
      v[2 * n - i] = mod4(-r[n + i]);
    }
    mapped.push_back(std::move(v));
  }
  return make_span(n, mapped);
}

std::vector<IdealSpan> enumerate_ideals_oracle(int n) {
  if (n < 1 || n > 4)
    throw TooLarge("exhaustive ideal enumeration supports lengths 1..4");
  const int m = 2 * n;
  std::set<IdealSpan> seen;
  unsigned long long total = 1;
  for (int i = 0; i < m; ++i) total *= 4;
  for (unsigned long long idx = 0; idx < total; ++idx) {
    std::vector<int> seed(m);
    unsigned long long t = idx;
    for (int i = 0; i < m; ++i) {
      seed[i] = static_cast<int>(t % 4);
      t /= 4;
    }
    seen.insert(ideal_closure_vecs({std::move(seed)}, n));
  }
  while (true) {
    const std::vector<IdealSpan> items(seen.begin(), seen.end());
    size_t added = 0;
    for (size_t i = 0; i < items.size(); ++i)
      for (size_t j = i + 1; j < items.size(); ++j)
        if (seen.insert(span_sum(items[i], items[j])).second) ++added;
    if (added == 0) break;
  }
  std::vector<IdealSpan> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](const IdealSpan& a, const IdealSpan& b) {
    const auto sa = span_size(a), sb = span_size(b);
    if (sa != sb) return sa < sb;
    return a.rows < b.rows;
  });
  return out;
}

// ---- Z4-side helpers ----

std::vector<int> z4_x_times(const std::vector<int>& v) {
  std::vector<int> out(v.size());
  out[0] = mod4(-v.back());
  for (size_t i = 1; i < v.size(); ++i) out[i] = v[i - 1];
  return out;
}

Z4Span z4_closure(const std::vector<std::vector<int>>& gens, int n) {
  std::vector<std::vector<int>> rows;
  for (const auto& g : gens) {
    std::vector<int> v = g;
    v.resize(n, 0);
    for (int i = 0; i < n; ++i) {
      rows.push_back(v);
      v = z4_x_times(v);
    }
  }
  return Z4Span{n, howell_form(rows, n)};
}

namespace {

Z4Span make_z4_span(int n, const std::vector<std::vector<int>>& rows) {
  Z4Span s{n, howell_form(rows, n)};
  for (const auto& r : s.rows)
    if (!member_rows(z4_x_times(r), s.rows))
      throw Error("internal: Z4 span is not closed under the negacyclic shift");
  return s;
}

}  // namespace

Z4Span res_span(const IdealSpan& s) {
  std::vector<std::vector<int>> rows;
  for (const auto& r : s.rows) rows.emplace_back(r.begin(), r.begin() + s.n);
  return make_z4_span(s.n, rows);
}

Z4Span tor_span(const IdealSpan& s) {
  std::vector<std::vector<int>> rows;
  for (const auto& r : s.rows) {
    bool front_zero = true;
    for (int i = 0; i < s.n; ++i)
      if (r[i]) {
        front_zero = false;
        break;
      }
    if (front_zero) rows.emplace_back(r.begin() + s.n, r.end());
  }
  return make_z4_span(s.n, rows);
}

unsigned long long span_size(const Z4Span& s) { return span_size_rows(s.rows); }

bool member(const std::vector<int>& v, const Z4Span& s) { return member_rows(v, s.rows); }

std::string format_span(const IdealSpan& s) {
  if (s.rows.empty()) return "<0>";
  std::string out;
  for (size_t i = 0; i < s.rows.size(); ++i) {
    if (i) out += "; ";
    for (int x : s.rows[i]) out += static_cast<char>('0' + x);
  }
  return out;
}

}  // namespace negacode
