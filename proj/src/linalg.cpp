#include "dfm/linalg.hpp"

namespace dfm {

ExtGcd<RatFunc> polyf_ext_gcd(const PolyF& a, const PolyF& b) { return ext_gcd(a, b); }

std::string polyf_to_string(const PolyF& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const RatFunc& c = p.coeffs()[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    if (!out.empty()) out += '+';
    std::string mono;
    if (k > 0) mono = var + (k > 1 ? "^" + std::to_string(k) : "");
    std::string cs = c.str();
    if (cs.find_first_of("+-/") != std::string::npos) cs = "(" + cs + ")";
    if (k == 0) {
      out += cs;
    } else if (c == RatFunc(1)) {
      out += mono;
    } else {
      out += cs + "*" + mono;
    }
  }
  return out;
}

MatF to_matf(const MatK& m) {
  return m.map([](const Rational& x) { return RatFunc(x); });
}

MatK to_matk(const MatF& m) {
  return m.map([](const RatFunc& x) { return x.constant_value(); });
}

}  // namespace dfm
