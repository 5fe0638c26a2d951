#pragma once

#include "codimkit/rational.hpp"

#include <string>
#include <vector>

namespace codimkit {

// Dense univariate polynomial over the rationals, coefficients low to high.
// Normal form has no trailing zero; the zero polynomial stores no
// coefficients and has degree -1.
struct Polynomial {
  std::vector<Rat> coeffs;

  long degree() const { return static_cast<long>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
  Rat coeff(long i) const {
    return (i >= 0 && i < static_cast<long>(coeffs.size()))
               ? coeffs[static_cast<size_t>(i)]
               : Rat(0);
  }
  Rat eval(const Rat& x) const;
};

// Trims trailing zeros into normal form.
Polynomial poly_from(std::vector<Rat> coeffs);
Polynomial poly_constant(const Rat& c);
// t^k
Polynomial poly_monomial(long k, const Rat& c = Rat(1));

Polynomial add(const Polynomial& a, const Polynomial& b);
Polynomial sub(const Polynomial& a, const Polynomial& b);
Polynomial mul(const Polynomial& a, const Polynomial& b);
Polynomial scale(const Rat& c, const Polynomial& p);
Polynomial derivative(const Polynomial& p);
// Quotient and remainder with deg(rem) < deg(divisor); divisor nonzero.
std::pair<Polynomial, Polynomial> divrem(const Polynomial& a,
                                         const Polynomial& b);
// Monic greatest common divisor (1 for coprime inputs, 0 only if both zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);
// p(c*t)
Polynomial scale_variable(const Polynomial& p, const Rat& c);
// p(t)^k for k >= 0.
Polynomial pow(const Polynomial& p, long k);

inline Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  return add(a, b);
}
inline Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  return sub(a, b);
}
inline Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  return mul(a, b);
}
bool operator==(const Polynomial& a, const Polynomial& b);

std::string poly_to_string(const Polynomial& p, const std::string& var = "t");

}  // namespace codimkit
