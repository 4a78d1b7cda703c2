#include "legendrian/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace legendrian {

LaurentPoly LaurentPoly::monomial(int exponent, long long c, int modulus) {
  LaurentPoly p(modulus);
  p.add(exponent, c);
  return p;
}

int LaurentPoly::reduce(int e) const {
  if (modulus_ <= 0) return e;
  return ((e % modulus_) + modulus_) % modulus_;
}

long long LaurentPoly::coefficient(int exponent) const {
  const auto it = c_.find(reduce(exponent));
  return it == c_.end() ? 0 : it->second;
}

long long LaurentPoly::at_one() const {
  long long s = 0;
  for (const auto& [e, c] : c_) s += c;
  return s;
}

void LaurentPoly::add(int exponent, long long c) {
  if (c == 0) return;
  const int e = reduce(exponent);
  const long long v = (c_[e] += c);
  if (v == 0) c_.erase(e);
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out(modulus_);
  for (const auto& [e, c] : c_) out.add(e + k, c);
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (modulus_ != o.modulus_) throw std::invalid_argument("Laurent polynomials with different moduli");
  for (const auto& [e, c] : o.c_) add(e, c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.modulus_ != b.modulus_) throw std::invalid_argument("Laurent polynomials with different moduli");
  LaurentPoly out(a.modulus_);
  for (const auto& [ea, ca] : a.c_)
    for (const auto& [eb, cb] : b.c_) out.add(ea + eb, ca * cb);
  return out;
}

std::string to_string(const LaurentPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = p.coefficients().rbegin(); it != p.coefficients().rend(); ++it) {
    const auto [e, c] = *it;
    const long long mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag;
    out << var;
    if (e != 1) out << "^" << e;
  }
  return out.str();
}

}  // namespace legendrian
