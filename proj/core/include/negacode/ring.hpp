#pragma once

#include <string>

#include "negacode/errors.hpp"

namespace negacode {

// Element a0 + u*a1 of R = Z4 + uZ4 with u^2 = 0; both parts canonical mod 4.
struct RElem {
  int a0 = 0;
  int a1 = 0;

  constexpr RElem() = default;
  constexpr RElem(int a, int b) : a0(((a % 4) + 4) % 4), a1(((b % 4) + 4) % 4) {}

  constexpr bool operator==(const RElem&) const = default;
  constexpr bool is_zero() const { return a0 == 0 && a1 == 0; }
};

constexpr RElem r_add(RElem x, RElem y) { return RElem(x.a0 + y.a0, x.a1 + y.a1); }
constexpr RElem r_sub(RElem x, RElem y) { return RElem(x.a0 - y.a0, x.a1 - y.a1); }
constexpr RElem r_neg(RElem x) { return RElem(-x.a0, -x.a1); }

// (a+ub)(c+ud) = ac + u(ad+bc), since u^2 = 0.
constexpr RElem r_mul(RElem x, RElem y) {
  return RElem(x.a0 * y.a0, x.a0 * y.a1 + x.a1 * y.a0);
}

constexpr RElem operator+(RElem x, RElem y) { return r_add(x, y); }
constexpr RElem operator-(RElem x, RElem y) { return r_sub(x, y); }
constexpr RElem operator-(RElem x) { return r_neg(x); }
constexpr RElem operator*(RElem x, RElem y) { return r_mul(x, y); }

constexpr bool is_unit(RElem x) { return x.a0 % 2 == 1; }

// Closed-form inverse: (a+ub)^-1 = a^-1 - u b a^-2; mod 4 every unit is
// self-inverse, so a^-1 = a and a^-2 = 1.
inline RElem inverse(RElem x) {
  if (!is_unit(x)) throw NonUnit("inverse of non-unit element of Z4+uZ4");
  return RElem(x.a0, -x.a1);
}

constexpr int project_z4(RElem x) { return x.a0; }
constexpr int project_f2(RElem x) { return x.a0 % 2; }

// Rendering "a0+a1u" with zero terms elided: "2+3u", "u", "3u", "0".
std::string to_string(RElem x);

}  // namespace negacode
