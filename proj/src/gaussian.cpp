#include "q8/gaussian.hpp"

namespace q8 {

std::string gaussian_str(const GaussianRational& z) {
  if (z.im == 0) return rational_str(z.re);
  std::string im = rational_str(z.im) + "i";
  if (z.im == 1) im = "i";
  if (z.im == -1) im = "-i";
  if (z.re == 0) return im;
  if (z.im > 0) return rational_str(z.re) + "+" + im;
  return rational_str(z.re) + im;  // im part carries its own minus sign
}

// Accepts "a", "bi", "a+bi", "a-bi" with rational a, b ("i" and "-i" allowed).
GaussianRational parse_gaussian(const std::string& s) {
  if (s.empty()) fail(Err::UsageError, "empty Q(i) literal");
  auto parse_im = [](std::string t) {
    if (t == "i" || t == "+i") return Rational(1);
    if (t == "-i") return Rational(-1);
    return parse_rational(t.substr(0, t.size() - 1));
  };
  if (s.back() == 'i') {
    // search for a split point after the leading sign
    for (size_t k = s.size() - 1; k > 0; --k) {
      if ((s[k] == '+' || s[k] == '-') && s[k - 1] != '/') {
        return {parse_rational(s.substr(0, k)), parse_im(s.substr(k))};
      }
    }
    return {Rational(0), parse_im(s)};
  }
  return {parse_rational(s), Rational(0)};
}

}  // namespace q8
