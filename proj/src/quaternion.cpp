#include "q8/quaternion.hpp"

namespace q8 {

std::string quaternion_str(const Quaternion& q) {
  auto term = [](const Rational& v, const char* unit, bool& first) -> std::string {
    if (v == 0) return "";
    std::string s;
    if (!first && v > 0) s += "+";
    if (v == -1 && unit[0]) s += "-";
    else if (v != 1 || !unit[0]) s += rational_str(v);
    s += unit;
    first = false;
    return s;
  };
  bool first = true;
  std::string s;
  s += term(q.t, "", first);
  s += term(q.x, "i", first);
  s += term(q.y, "j", first);
  s += term(q.z, "k", first);
  return s.empty() ? "0" : s;
}

}  // namespace q8
