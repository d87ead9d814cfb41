#include "negacode/ring.hpp"

namespace negacode {

std::string to_string(RElem x) {
  if (x.is_zero()) return "0";
  std::string out;
  if (x.a0 != 0) out += std::to_string(x.a0);
  if (x.a1 != 0) {
    if (!out.empty()) out += "+";
    if (x.a1 != 1) out += std::to_string(x.a1);
    out += "u";
  }
  return out;
}

}  // namespace negacode
