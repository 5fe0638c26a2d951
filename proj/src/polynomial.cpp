#include "codimkit/polynomial.hpp"

#include <stdexcept>

namespace codimkit {

Rat Polynomial::eval(const Rat& x) const {
  Rat acc(0);
  for (size_t i = coeffs.size(); i-- > 0;) {
    acc = acc * x + coeffs[i];
  }
  return acc;
}

Polynomial poly_from(std::vector<Rat> coeffs) {
  while (!coeffs.empty() && coeffs.back() == 0) {
    coeffs.pop_back();
  }
  return Polynomial{std::move(coeffs)};
}

Polynomial poly_constant(const Rat& c) {
  return poly_from({c});
}

Polynomial poly_monomial(long k, const Rat& c) {
  if (k < 0) {
    throw std::invalid_argument("monomial degree must be non-negative");
  }
  std::vector<Rat> coeffs(static_cast<size_t>(k) + 1);
  coeffs.back() = c;
  return poly_from(std::move(coeffs));
}

Polynomial add(const Polynomial& a, const Polynomial& b) {
  std::vector<Rat> coeffs(std::max(a.coeffs.size(), b.coeffs.size()));
  for (size_t i = 0; i < coeffs.size(); ++i) {
    coeffs[i] = a.coeff(static_cast<long>(i)) + b.coeff(static_cast<long>(i));
  }
  return poly_from(std::move(coeffs));
}

Polynomial sub(const Polynomial& a, const Polynomial& b) {
  return add(a, scale(Rat(-1), b));
}

Polynomial mul(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) {
    return Polynomial{};
  }
  std::vector<Rat> coeffs(a.coeffs.size() + b.coeffs.size() - 1);
  for (size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i] == 0) {
      continue;
    }
    for (size_t j = 0; j < b.coeffs.size(); ++j) {
      coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    }
  }
  return poly_from(std::move(coeffs));
}

Polynomial scale(const Rat& c, const Polynomial& p) {
  if (c == 0) {
    return Polynomial{};
  }
  Polynomial out = p;
  for (Rat& x : out.coeffs) {
    x *= c;
  }
  return out;
}

Polynomial derivative(const Polynomial& p) {
  if (p.coeffs.size() <= 1) {
    return Polynomial{};
  }
  std::vector<Rat> coeffs(p.coeffs.size() - 1);
  for (size_t i = 1; i < p.coeffs.size(); ++i) {
    coeffs[i - 1] = p.coeffs[i] * Rat(static_cast<unsigned long>(i));
  }
  return poly_from(std::move(coeffs));
}

std::pair<Polynomial, Polynomial> divrem(const Polynomial& a,
                                         const Polynomial& b) {
  if (b.is_zero()) {
    throw std::domain_error("polynomial division by zero");
  }
  Polynomial rem = a;
  std::vector<Rat> quot;
  long db = b.degree();
  if (rem.degree() >= db) {
    quot.assign(static_cast<size_t>(rem.degree() - db) + 1, Rat(0));
  }
  const Rat& lead = b.coeffs.back();
  while (!rem.is_zero() && rem.degree() >= db) {
    long shift = rem.degree() - db;
    Rat factor = rem.coeffs.back() / lead;
    quot[static_cast<size_t>(shift)] = factor;
    rem = sub(rem, mul(poly_monomial(shift, factor), b));
  }
  return {poly_from(std::move(quot)), rem};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a;
  Polynomial y = b;
  while (!y.is_zero()) {
    Polynomial r = divrem(x, y).second;
    x = y;
    y = r;
  }
  if (x.is_zero()) {
    return x;
  }
  return scale(1 / x.coeffs.back(), x);
}

Polynomial scale_variable(const Polynomial& p, const Rat& c) {
  Polynomial out = p;
  Rat power(1);
  for (size_t i = 0; i < out.coeffs.size(); ++i) {
    out.coeffs[i] *= power;
    power *= c;
  }
  return poly_from(std::move(out.coeffs));
}

Polynomial pow(const Polynomial& p, long k) {
  if (k < 0) {
    throw std::invalid_argument("polynomial power must be non-negative");
  }
  Polynomial result = poly_constant(Rat(1));
  for (long i = 0; i < k; ++i) {
    result = mul(result, p);
  }
  return result;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.coeffs == b.coeffs;
}

std::string poly_to_string(const Polynomial& p, const std::string& var) {
  if (p.is_zero()) {
    return "0";
  }
  std::string out;
  for (size_t i = 0; i < p.coeffs.size(); ++i) {
    const Rat& c = p.coeffs[i];
    if (c == 0) {
      continue;
    }
    std::string term;
    Rat abs_c = c < 0 ? Rat(-c) : c;
    if (i == 0) {
      term = rat_to_string(abs_c);
    } else {
      std::string power = (i == 1) ? var : var + "^" + std::to_string(i);
      term = (abs_c == 1) ? power : rat_to_string(abs_c) + "*" + power;
    }
    if (out.empty()) {
      out = (c < 0 ? "-" : "") + term;
    } else {
      out += (c < 0 ? " - " : " + ") + term;
    }
  }
  return out;
}

}  // namespace codimkit
