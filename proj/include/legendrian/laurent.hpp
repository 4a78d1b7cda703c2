#pragma once

#include <map>
#include <string>

namespace legendrian {

// Integer Laurent polynomial in one variable. With modulus m > 0 exponents
// live in Z/m and are stored as residues 0..m-1.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(int modulus) : modulus_(modulus) {}
  static LaurentPoly monomial(int exponent, long long c = 1, int modulus = 0);

  int modulus() const { return modulus_; }
  const std::map<int, long long>& coefficients() const { return c_; }
  long long coefficient(int exponent) const;
  bool is_zero() const { return c_.empty(); }
  // Sum of coefficients, i.e. the value at 1.
  long long at_one() const;

  void add(int exponent, long long c);
  LaurentPoly shifted(int k) const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  bool operator==(const LaurentPoly&) const = default;
  auto operator<=>(const LaurentPoly&) const = default;

 private:
  int reduce(int e) const;
  int modulus_ = 0;
  std::map<int, long long> c_;
};

// Descending exponents, e.g. "λ^2 + 3λ - 1 + 2λ^-1"; `var` replaces λ.
std::string to_string(const LaurentPoly& p, const std::string& var = "λ");

}  // namespace legendrian
