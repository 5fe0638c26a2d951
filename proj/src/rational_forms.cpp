#include "codimkit/rational_forms.hpp"

#include "codimkit/linalg.hpp"

#include <algorithm>
#include <map>

namespace codimkit {

RationalFunction make_rational(Polynomial num, Polynomial den) {
  if (den.is_zero()) {
    throw std::domain_error("rational function with zero denominator");
  }
  if (num.is_zero()) {
    return RationalFunction{Polynomial{}, poly_constant(Rat(1))};
  }
  Polynomial g = gcd(num, den);
  if (g.degree() > 0) {
    num = divrem(num, g).first;
    den = divrem(den, g).first;
  }
  Rat d0 = den.coeff(0);
  if (d0 == 0) {
    throw std::domain_error(
        "rational function has a pole at 0 and no power-series expansion");
  }
  Rat inv = 1 / d0;
  return RationalFunction{scale(inv, num), scale(inv, den)};
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  return a.num == b.num && a.den == b.den;
}

RationalFunction add(const RationalFunction& a, const RationalFunction& b) {
  return make_rational(a.num * b.den + b.num * a.den, a.den * b.den);
}

RationalFunction sub(const RationalFunction& a, const RationalFunction& b) {
  return make_rational(a.num * b.den - b.num * a.den, a.den * b.den);
}

RationalFunction mul(const RationalFunction& a, const RationalFunction& b) {
  return make_rational(a.num * b.num, a.den * b.den);
}

Sequence expand_rational(const RationalFunction& r, long N) {
  if (N < 1) {
    throw std::invalid_argument("expansion order must be at least 1");
  }
  Rat d0 = r.den.coeff(0);
  if (d0 == 0) {
    throw std::domain_error(
        "rational function has a pole at 0 and no power-series expansion");
  }
  std::vector<Rat> terms(static_cast<size_t>(N));
  for (long n = 0; n < N; ++n) {
    Rat acc = r.num.coeff(n);
    for (long k = 1; k <= std::min(n, r.den.degree()); ++k) {
      acc -= r.den.coeff(k) * terms[static_cast<size_t>(n - k)];
    }
    terms[static_cast<size_t>(n)] = acc / d0;
  }
  return make_sequence(std::move(terms));
}

Sequence expand_recurrence(const LinearRecurrence& rec, long N) {
  long k = static_cast<long>(rec.coeffs.size());
  if (rec.start < 0 ||
      static_cast<long>(rec.initial.size()) != rec.start + k) {
    throw std::invalid_argument(
        "recurrence initial terms must cover indices 0 .. start+order-1");
  }
  if (N < 1) {
    throw std::invalid_argument("expansion order must be at least 1");
  }
  std::vector<Rat> terms(static_cast<size_t>(N));
  for (long n = 0; n < N; ++n) {
    if (n < static_cast<long>(rec.initial.size())) {
      terms[static_cast<size_t>(n)] = rec.initial[static_cast<size_t>(n)];
    } else {
      Rat acc(0);
      for (long i = 1; i <= k; ++i) {
        acc += rec.coeffs[static_cast<size_t>(i - 1)] *
               terms[static_cast<size_t>(n - i)];
      }
      terms[static_cast<size_t>(n)] = acc;
    }
  }
  return make_sequence(std::move(terms));
}

RationalFunction recurrence_to_rational(const LinearRecurrence& rec) {
  long k = static_cast<long>(rec.coeffs.size());
  if (rec.start < 0 ||
      static_cast<long>(rec.initial.size()) != rec.start + k) {
    throw std::invalid_argument(
        "recurrence initial terms must cover indices 0 .. start+order-1");
  }
  std::vector<Rat> den_coeffs(static_cast<size_t>(k) + 1);
  den_coeffs[0] = 1;
  for (long i = 1; i <= k; ++i) {
    den_coeffs[static_cast<size_t>(i)] = -rec.coeffs[static_cast<size_t>(i - 1)];
  }
  Polynomial den = poly_from(std::move(den_coeffs));
  // a(t)*den(t) is a polynomial of degree < start+k because the recurrence
  // kills every later coefficient; the first start+k terms suffice to read
  // it off.
  Polynomial prefix = poly_from(rec.initial);
  Polynomial product = prefix * den;
  std::vector<Rat> num_coeffs;
  for (long i = 0; i < rec.start + k; ++i) {
    num_coeffs.push_back(product.coeff(i));
  }
  return make_rational(poly_from(std::move(num_coeffs)), den);
}

namespace {

// All positive divisors of |v| (v nonzero), by trial division. Guarded so a
// pathological constant term fails loudly instead of spinning.
std::vector<Int> divisors_of(const Int& v) {
  Int a = abs(v);
  if (a == 0 || a > Int("1000000000000")) {
    throw std::domain_error(
        "root search infeasible: coefficient too large to enumerate divisors");
  }
  std::vector<Int> small, large;
  for (Int d(1); d * d <= a; ++d) {
    if (a % d == 0) {
      small.push_back(d);
      if (d * d != a) {
        large.push_back(a / d);
      }
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

QuasiPolynomial rational_to_quasipolynomial(const RationalFunction& raw) {
  RationalFunction r = make_rational(raw.num, raw.den);
  QuasiPolynomial out;
  if (r.num.is_zero()) {
    return out;
  }
  out.threshold = std::max<long>(0, r.num.degree() - r.den.degree() + 1);
  if (r.den.degree() == 0) {
    // Pure polynomial: the empty sum is valid from threshold on.
    return out;
  }
  auto [quot, rem] = divrem(r.num, r.den);
  (void)quot;

  // Split the denominator into linear factors 1 - alpha t via the rational
  // root theorem on an integer multiple.
  Int common_den(1);
  for (const Rat& c : r.den.coeffs) {
    common_den = lcm(common_den, c.get_den());
  }
  std::vector<Int> int_coeffs;
  for (const Rat& c : r.den.coeffs) {
    Rat scaled = c * Rat(common_den);
    int_coeffs.push_back(scaled.get_num());
  }
  std::vector<std::pair<Rat, long>> roots;  // (alpha = 1/root, multiplicity)
  Polynomial remaining = r.den;
  std::vector<Int> p_divs = divisors_of(int_coeffs.front());
  std::vector<Int> q_divs = divisors_of(int_coeffs.back());
  for (const Int& p : p_divs) {
    for (const Int& q : q_divs) {
      if (gcd(p, q) != 1) {
        continue;
      }
      for (int sign : {1, -1}) {
        Rat root = Rat(sign * p) / Rat(q);
        long mult = 0;
        while (remaining.degree() >= 1 && remaining.eval(root) == 0) {
          // Divide by (1 - t/root), the linear factor normalized at t=0.
          Polynomial factor =
              poly_from({Rat(1), Rat(-1) / root});
          remaining = divrem(remaining, factor).first;
          ++mult;
        }
        if (mult > 0) {
          roots.emplace_back(1 / root, mult);
        }
      }
    }
  }
  if (remaining.degree() >= 1) {
    Rat c0 = remaining.coeff(0);
    if (c0 != 0) {
      remaining = scale(1 / c0, remaining);
    }
    throw nonsplit_error(remaining);
  }

  // Partial fractions: rem/den = sum_{i,j} A_{ij}/(1-alpha_i t)^j, solved as
  // an exact linear system after multiplying through by den.
  long dim = r.den.degree();
  std::vector<std::pair<Rat, long>> unknowns;  // (alpha_i, j)
  for (const auto& [alpha, mult] : roots) {
    for (long j = 1; j <= mult; ++j) {
      unknowns.emplace_back(alpha, j);
    }
  }
  Mat system(static_cast<size_t>(dim),
             Vec(static_cast<size_t>(dim), Rat(0)));
  for (size_t u = 0; u < unknowns.size(); ++u) {
    const auto& [alpha, j] = unknowns[u];
    Polynomial basis = poly_constant(Rat(1));
    for (const auto& [alpha2, mult2] : roots) {
      long power = (alpha2 == alpha) ? mult2 - j : mult2;
      Polynomial lin = poly_from({Rat(1), -alpha2});
      basis = basis * pow(lin, power);
    }
    for (long row = 0; row < dim; ++row) {
      system[static_cast<size_t>(row)][u] = basis.coeff(row);
    }
  }
  Vec rhs(static_cast<size_t>(dim), Rat(0));
  for (long row = 0; row < dim; ++row) {
    rhs[static_cast<size_t>(row)] = rem.coeff(row);
  }
  auto solution = solve(system, rhs);
  if (!solution) {
    throw std::logic_error("partial fraction system unexpectedly singular");
  }

  // 1/(1-alpha t)^j expands with coefficients binom(n+j-1, j-1) alpha^n, a
  // polynomial in n of degree j-1; collect one polynomial per alpha.
  std::map<Rat, Polynomial> per_alpha;
  for (size_t u = 0; u < unknowns.size(); ++u) {
    const auto& [alpha, j] = unknowns[u];
    const Rat& A = (*solution)[u];
    if (A == 0) {
      continue;
    }
    Polynomial binom_poly = poly_constant(Rat(1));
    for (long l = 1; l <= j - 1; ++l) {
      binom_poly = binom_poly * poly_from({Rat(l), Rat(1)});
    }
    binom_poly = scale(A / Rat(factorial(static_cast<unsigned long>(j - 1))),
                       binom_poly);
    auto [it, inserted] = per_alpha.try_emplace(alpha, binom_poly);
    if (!inserted) {
      it->second = it->second + binom_poly;
    }
  }
  for (auto& [alpha, p] : per_alpha) {
    if (!p.is_zero()) {
      out.parts.emplace_back(alpha, p);
    }
  }
  return out;
}

Rat quasipolynomial_eval(const QuasiPolynomial& q, long n) {
  Rat acc(0);
  for (const auto& [alpha, p] : q.parts) {
    Rat power(1);
    if (n >= 0) {
      for (long i = 0; i < n; ++i) {
        power *= alpha;
      }
    } else {
      throw std::invalid_argument("sequence index must be non-negative");
    }
    acc += p.eval(Rat(n)) * power;
  }
  return acc;
}

namespace {

void merge_part(std::vector<std::pair<Rat, Polynomial>>& parts, const Rat& beta,
                const Polynomial& f) {
  if (f.is_zero()) {
    return;
  }
  for (auto& [b, g] : parts) {
    if (b == beta) {
      g = g + f;
      return;
    }
  }
  parts.emplace_back(beta, f);
}

void normalize_parts(std::vector<std::pair<Rat, Polynomial>>& parts) {
  parts.erase(std::remove_if(parts.begin(), parts.end(),
                             [](const auto& p) { return p.second.is_zero(); }),
              parts.end());
  std::sort(parts.begin(), parts.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
}

}  // namespace

ExpPolySum quasipolynomial_to_exppoly(const QuasiPolynomial& q,
                                      const std::vector<Rat>& early_terms) {
  ExpPolySum out;
  for (const auto& [alpha, p] : q.parts) {
    // Newton's forward differences give p(n) = sum_k s_k n(n-1)...(n-k+1)
    // with s_k = (Delta^k p)(0)/k!, and each falling factorial contributes
    // alpha^k t^k e^{alpha t} on the exponential side.
    long d = p.degree();
    std::vector<Rat> table;
    for (long i = 0; i <= d; ++i) {
      table.push_back(p.eval(Rat(i)));
    }
    std::vector<Rat> f_coeffs(static_cast<size_t>(d) + 1);
    Rat alpha_pow(1);
    for (long k = 0; k <= d; ++k) {
      f_coeffs[static_cast<size_t>(k)] =
          table.front() * alpha_pow /
          Rat(factorial(static_cast<unsigned long>(k)));
      alpha_pow *= alpha;
      for (size_t i = 0; i + 1 < table.size(); ++i) {
        table[i] = table[i + 1] - table[i];
      }
      if (!table.empty()) {
        table.pop_back();
      }
    }
    merge_part(out.parts, alpha, poly_from(std::move(f_coeffs)));
  }
  // Fold exact early values in as corrections on the beta = 0 part: a
  // deviation delta at index n adds delta t^n/n! to the exponential series.
  std::vector<Rat> correction;
  for (size_t n = 0; n < early_terms.size(); ++n) {
    Rat delta = early_terms[n] -
                quasipolynomial_eval(q, static_cast<long>(n));
    correction.push_back(delta /
                         Rat(factorial(static_cast<unsigned long>(n))));
  }
  merge_part(out.parts, Rat(0), poly_from(std::move(correction)));
  normalize_parts(out.parts);
  return out;
}

ExpPolySum rational_to_exppoly(const RationalFunction& r) {
  QuasiPolynomial q = rational_to_quasipolynomial(r);
  std::vector<Rat> early;
  if (q.threshold > 0) {
    early = prefix_terms(expand_rational(r, q.threshold), q.threshold);
  }
  return quasipolynomial_to_exppoly(q, early);
}

TruncatedSeries exppoly_expand(const ExpPolySum& e, long N) {
  if (N < 1) {
    throw std::invalid_argument("expansion order must be at least 1");
  }
  TruncatedSeries acc = zero_series(N, SeriesKind::exponential);
  for (const auto& [beta, f] : e.parts) {
    TruncatedSeries fs = zero_series(N, SeriesKind::exponential);
    for (long i = 0; i <= std::min<long>(f.degree(), N - 1); ++i) {
      fs.coeffs[static_cast<size_t>(i)] = f.coeff(i);
    }
    acc = add(acc, cauchy_product(fs, exp_series(beta, N)));
  }
  return acc;
}

ExpPolySum exppoly_add(const ExpPolySum& a, const ExpPolySum& b) {
  ExpPolySum out = a;
  for (const auto& [beta, f] : b.parts) {
    merge_part(out.parts, beta, f);
  }
  normalize_parts(out.parts);
  return out;
}

ExpPolySum exppoly_mul(const ExpPolySum& a, const ExpPolySum& b) {
  ExpPolySum out;
  for (const auto& [b1, f1] : a.parts) {
    for (const auto& [b2, f2] : b.parts) {
      merge_part(out.parts, b1 + b2, f1 * f2);
    }
  }
  normalize_parts(out.parts);
  return out;
}

ExpPolySum exppoly_scale(const Rat& c, const ExpPolySum& e) {
  ExpPolySum out;
  for (const auto& [beta, f] : e.parts) {
    merge_part(out.parts, beta, scale(c, f));
  }
  normalize_parts(out.parts);
  return out;
}

std::optional<RationalFunction> reconstruct_rational(
    const std::vector<Rat>& terms, long D) {
  long L = static_cast<long>(terms.size());
  if (D < 0 || L < D + 2) {
    return std::nullopt;
  }
  // Unknown denominator d_0..d_D; every coefficient of t^n, n > D, of
  // (series * den) must vanish.
  Mat system;
  for (long n = D + 1; n < L; ++n) {
    Vec row(static_cast<size_t>(D) + 1, Rat(0));
    for (long j = 0; j <= D; ++j) {
      if (n - j >= 0 && n - j < L) {
        row[static_cast<size_t>(j)] = terms[static_cast<size_t>(n - j)];
      }
    }
    system.push_back(std::move(row));
  }
  std::vector<Vec> candidates = kernel_basis(system, D + 1);
  for (const Vec& cand : candidates) {
    Polynomial den = poly_from(cand);
    if (den.is_zero()) {
      continue;
    }
    std::vector<Rat> num_coeffs(static_cast<size_t>(D) + 1, Rat(0));
    for (long n = 0; n <= D; ++n) {
      Rat acc(0);
      for (long j = 0; j <= std::min(n, den.degree()); ++j) {
        acc += den.coeff(j) * terms[static_cast<size_t>(n - j)];
      }
      num_coeffs[static_cast<size_t>(n)] = acc;
    }
    RationalFunction result;
    try {
      result = make_rational(poly_from(std::move(num_coeffs)), den);
    } catch (const std::domain_error&) {
      continue;
    }
    Sequence check = expand_rational(result, L);
    bool ok = true;
    for (long n = 0; n < L; ++n) {
      if (check.at(n) != terms[static_cast<size_t>(n)]) {
        ok = false;
        break;
      }
    }
    if (ok) {
      return result;
    }
  }
  return std::nullopt;
}

RationalFunction lr_product_rational(const RationalFunction& a,
                                     const RationalFunction& b) {
  if (a.num.is_zero() || b.num.is_zero()) {
    return make_rational(Polynomial{}, poly_constant(Rat(1)));
  }
  long da = a.den.degree();
  long db = b.den.degree();
  long D = 2 * da * db + da + db + std::max<long>(a.num.degree(), 0) +
           std::max<long>(b.num.degree(), 0);
  long M = 2 * D + 2;
  Sequence sa = expand_rational(a, M);
  Sequence sb = expand_rational(b, M);
  Sequence conv = lr_product_seq(sa, sb, M);
  auto result = reconstruct_rational(prefix_terms(conv, M), D);
  if (!result) {
    throw std::logic_error(
        "certified reconstruction failed below its proved degree bound");
  }
  return *result;
}

TruncatedSeries lr_fraction(const Rat& alpha, const TruncatedSeries& b) {
  if (alpha == 0) {
    throw std::invalid_argument("fraction parameter must be nonzero");
  }
  if (b.kind != SeriesKind::ordinary) {
    throw std::invalid_argument("expected an ordinary-kind series");
  }
  long N = b.order();
  return cauchy_product(geometric_series(alpha, N),
                        compose_mobius(b, alpha, N));
}

TruncatedSeries lr_monomial(long p, const TruncatedSeries& b) {
  if (p < 1) {
    throw std::invalid_argument("monomial degree must be positive");
  }
  if (p >= b.order()) {
    throw std::invalid_argument("monomial degree must be below series order");
  }
  if (b.kind != SeriesKind::ordinary) {
    throw std::invalid_argument("expected an ordinary-kind series");
  }
  long N = b.order();
  TruncatedSeries out = zero_series(N, SeriesKind::ordinary);
  for (long n = p; n < N; ++n) {
    out.coeffs[static_cast<size_t>(n)] =
        Rat(binomial(static_cast<unsigned long>(n), p)) *
        b.coeffs[static_cast<size_t>(n - p)];
  }
  return out;
}

std::vector<std::pair<long, Rat>> fraction_power_as_lr_combination(
    const Rat& beta, long p) {
  if (beta == 0) {
    throw std::invalid_argument("fraction parameter must be nonzero");
  }
  if (p < 1) {
    throw std::invalid_argument("power must be a positive integer");
  }
  // In u = 1 - beta t: the combination B_q = beta^q t^q/(1-beta t)^{q+1}
  // expands as sum_{j=0}^{q} binom(q,j)(-1)^j u^{j-q-1}, triangular with a
  // unit coefficient on u^{-(q+1)}. Back-substitute to hit u^{-p}.
  std::vector<Rat> residual(static_cast<size_t>(p) + 1, Rat(0));
  residual[static_cast<size_t>(p)] = 1;  // target coefficient of u^{-p}
  std::vector<Rat> lambda(static_cast<size_t>(p), Rat(0));
  for (long q = p - 1; q >= 0; --q) {
    Rat lq = residual[static_cast<size_t>(q + 1)];
    lambda[static_cast<size_t>(q)] = lq;
    if (lq != 0) {
      for (long j = 0; j <= q; ++j) {
        long m = q + 1 - j;
        Rat term = Rat(binomial(static_cast<unsigned long>(q), j));
        if (j % 2 != 0) {
          term = -term;
        }
        residual[static_cast<size_t>(m)] -= lq * term;
      }
    }
  }
  // B_q = beta^q ((1/(1-beta t)) conv t^q), so the basis coefficient picks up
  // beta^q.
  std::vector<std::pair<long, Rat>> out;
  Rat beta_pow(1);
  for (long q = 0; q < p; ++q) {
    Rat c = lambda[static_cast<size_t>(q)] * beta_pow;
    if (c != 0) {
      out.emplace_back(q, c);
    }
    beta_pow *= beta;
  }
  return out;
}

RationalFunction hadamard_rational(const RationalFunction& a,
                                   const RationalFunction& b) {
  if (a.num.is_zero() || b.num.is_zero()) {
    return make_rational(Polynomial{}, poly_constant(Rat(1)));
  }
  long da = a.den.degree();
  long db = b.den.degree();
  long D = da * db + std::max<long>(a.num.degree(), 0) +
           std::max<long>(b.num.degree(), 0) + 2;
  long M = 2 * D + 2;
  Sequence sa = expand_rational(a, M);
  Sequence sb = expand_rational(b, M);
  Sequence prod = hadamard_series(sa, sb);
  auto result = reconstruct_rational(prefix_terms(prod, M), D);
  if (!result) {
    throw std::logic_error(
        "certified reconstruction failed below its proved degree bound");
  }
  return *result;
}

bool verify_ode(const TruncatedSeries& s, const std::vector<Rat>& op_coeffs,
                long N) {
  if (op_coeffs.empty()) {
    throw std::invalid_argument("differential operator must have coefficients");
  }
  if (N <= static_cast<long>(op_coeffs.size())) {
    throw std::invalid_argument(
        "verification order must exceed the operator length");
  }
  long W = std::min<long>(N, s.order());
  long deg = static_cast<long>(op_coeffs.size()) - 1;
  if (W <= deg) {
    throw std::invalid_argument("series too short for the operator");
  }
  TruncatedSeries acc = scale(op_coeffs[0], truncate(s, W - deg));
  TruncatedSeries cur = s;
  for (long j = 1; j <= deg; ++j) {
    cur = derivative(cur, 1);
    acc = add(acc, scale(op_coeffs[static_cast<size_t>(j)],
                         truncate(cur, W - deg)));
  }
  for (const Rat& c : acc.coeffs) {
    if (c != 0) {
      return false;
    }
  }
  return true;
}

bool verify_ode(const ExpPolySum& e, const std::vector<Rat>& op_coeffs,
                long N) {
  return verify_ode(exppoly_expand(e, N), op_coeffs, N);
}

}  // namespace codimkit
