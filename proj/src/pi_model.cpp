#include "codimkit/pi_model.hpp"

#include <cmath>
#include <stdexcept>

#include "codimkit/polynomial.hpp"

namespace codimkit {

namespace {

Rat binom_rat(long n, long k) {
  if (n < 0) {
    throw std::invalid_argument("binomial with negative upper index");
  }
  return Rat(binomial(static_cast<unsigned long>(n), k));
}

Rat catalan(long n) {
  return binom_rat(2 * n, n) / Rat(n + 1);
}

Rat pow2(long n) {
  if (n < 0) {
    throw std::invalid_argument("negative power of two");
  }
  Int v(1);
  mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(n));
  return Rat(v);
}

Sequence grassmann_terms(long N) {
  std::vector<Rat> terms;
  for (long n = 0; n < N; ++n) {
    terms.push_back(n == 0 ? Rat(1) : pow2(n - 1));
  }
  return make_sequence(std::move(terms));
}

Sequence matrix2_terms(long N) {
  std::vector<Rat> terms;
  for (long n = 0; n < N; ++n) {
    terms.push_back(catalan(n + 1) - binom_rat(n, 3) + Rat(1) - pow2(n));
  }
  return make_sequence(std::move(terms));
}

Sequence grassmann_square_terms(long N) {
  std::vector<Rat> terms;
  for (long n = 0; n < N; ++n) {
    if (n == 0) {
      terms.push_back(Rat(1));
    } else {
      terms.push_back(binom_rat(2 * n, n) / 2 + Rat(n + 1) - pow2(n));
    }
  }
  return make_sequence(std::move(terms));
}

Sequence f5_terms(long N) {
  // Exponential-side closed form: the three exponential frequencies 0, 1, 2
  // with polynomial coefficients 1/2, t - t^3/6 + t^5/24 + t^6/144, and
  // 1/2 - t + t^2.
  ExpPolySum e;
  e.parts.emplace_back(Rat(0), poly_constant(Rat(1) / 2));
  e.parts.emplace_back(
      Rat(1), poly_from({Rat(0), Rat(1), Rat(0), Rat(-1) / 6, Rat(0),
                         Rat(1) / 24, Rat(1) / 144}));
  e.parts.emplace_back(Rat(2), poly_from({Rat(1) / 2, Rat(-1), Rat(1)}));
  return to_ordinary(exppoly_expand(e, N));
}

}  // namespace

std::vector<std::string> catalog_names() {
  return {"K",   "E",   "M2",  "EtensorE", "U2",   "U3",
          "f4T", "f5T", "s4T", "cbmT",     "hallT"};
}

Sequence catalog_terms(const std::string& name, long N) {
  if (N < 1) {
    throw std::invalid_argument("term count must be at least 1");
  }
  if (name == "K") {
    return make_sequence(std::vector<Rat>(static_cast<size_t>(N), Rat(1)));
  }
  if (name == "E") {
    return grassmann_terms(N);
  }
  if (name == "M2") {
    return matrix2_terms(N);
  }
  if (name == "EtensorE") {
    return grassmann_square_terms(N);
  }
  if (name == "U2") {
    Sequence ones = catalog_terms("K", N);
    return tideal_product(ones, ones, N);
  }
  if (name == "U3") {
    return tideal_product(catalog_terms("U2", N), catalog_terms("K", N), N);
  }
  if (name == "f4T") {
    Sequence base = grassmann_terms(N);
    std::vector<Rat> terms;
    for (long n = 0; n < N; ++n) {
      terms.push_back(base.at(n) + 2 * binom_rat(n, 4));
    }
    return make_sequence(std::move(terms));
  }
  if (name == "f5T") {
    return f5_terms(N);
  }
  if (name == "s4T") {
    Sequence base = matrix2_terms(N);
    std::vector<Rat> terms;
    for (long n = 0; n < N; ++n) {
      terms.push_back(base.at(n) + 5 * binom_rat(n, 5) + 5 * binom_rat(n, 6));
    }
    return make_sequence(std::move(terms));
  }
  if (name == "cbmT") {
    Sequence base = grassmann_square_terms(N);
    std::vector<Rat> terms;
    for (long n = 0; n < N; ++n) {
      terms.push_back(base.at(n) + 5 * binom_rat(n, 5) + 5 * binom_rat(n, 6));
    }
    return make_sequence(std::move(terms));
  }
  if (name == "hallT") {
    Sequence base = matrix2_terms(N);
    std::vector<Rat> terms;
    for (long n = 0; n < N; ++n) {
      if (n == 0) {
        terms.push_back(Rat(1));
      } else {
        terms.push_back(base.at(n) + pow2(n - 1) - Rat(1) - binom_rat(n, 2) +
                        14 * binom_rat(n, 5) + 33 * binom_rat(n, 6) +
                        14 * binom_rat(n, 7));
      }
    }
    return make_sequence(std::move(terms));
  }
  throw std::invalid_argument("unknown catalog name: " + name);
}

Sequence tideal_product(const Sequence& c1, const Sequence& c2, long N,
                        TidealVariant variant) {
  if (N < 1) {
    throw std::invalid_argument("term count must be at least 1");
  }
  TruncatedSeries e1 = to_exponential(c1, N);
  TruncatedSeries e2 = to_exponential(c2, N);
  TruncatedSeries x =
      variant == TidealVariant::affine
          ? pad_to(series_from({Rat(-1), Rat(1)}, SeriesKind::exponential), N)
          : sub(exp_series(Rat(1), N),
                constant_series(Rat(1), N, SeriesKind::exponential));
  TruncatedSeries total =
      add(add(e1, e2), cauchy_product(x, cauchy_product(e1, e2)));
  return to_ordinary(total);
}

CharacterSum tideal_product_cocharacter(const std::vector<CharacterSum>& chi1,
                                        const std::vector<CharacterSum>& chi2,
                                        long n) {
  if (n < 0) {
    throw std::invalid_argument("degree must be non-negative");
  }
  if (static_cast<long>(chi1.size()) < n + 1 ||
      static_cast<long>(chi2.size()) < n + 1) {
    throw std::invalid_argument(
        "need factor cocharacters at every degree 0..n");
  }
  for (long j = 0; j <= n; ++j) {
    if (chi1[static_cast<size_t>(j)].n != j ||
        chi2[static_cast<size_t>(j)].n != j) {
      throw std::invalid_argument(
          "factor cocharacter at index j must have degree j");
    }
  }
  std::map<Partition, long> acc;
  auto accumulate = [&acc](const CharacterSum& sum, long sign) {
    for (const auto& [shape, mult] : sum.terms) {
      acc[shape] += sign * mult;
    }
  };
  accumulate(chi1[static_cast<size_t>(n)], 1);
  accumulate(chi2[static_cast<size_t>(n)], 1);
  if (n >= 1) {
    CharacterSum mid;
    mid.n = n - 1;
    for (long j = 0; j <= n - 1; ++j) {
      mid = character_add(mid,
                          outer_product(chi1[static_cast<size_t>(j)],
                                        chi2[static_cast<size_t>(n - 1 - j)]));
    }
    CharacterSum one = make_character_sum(1, {{make_partition({1}), 1}});
    accumulate(outer_product(one, mid), 1);
  }
  for (long j = 0; j <= n; ++j) {
    accumulate(outer_product(chi1[static_cast<size_t>(j)],
                             chi2[static_cast<size_t>(n - j)]),
               -1);
  }
  std::map<Partition, long> terms;
  for (const auto& [shape, mult] : acc) {
    if (mult < 0) {
      throw std::domain_error(
          "product formula produced a negative multiplicity; the inputs are "
          "not cocharacters of algebras");
    }
    if (mult > 0) {
      terms.emplace(shape, mult);
    }
  }
  return make_character_sum(n, std::move(terms));
}

Sequence proper_to_codim(const Sequence& gamma, long N) {
  Sequence ones =
      make_sequence(std::vector<Rat>(static_cast<size_t>(N), Rat(1)));
  return lr_product_seq(ones, gamma, N);
}

Sequence codim_to_proper(const Sequence& c, long N) {
  std::vector<Rat> alt;
  for (long n = 0; n < N; ++n) {
    alt.push_back(n % 2 == 0 ? Rat(1) : Rat(-1));
  }
  return lr_product_seq(make_sequence(std::move(alt)), c, N);
}

std::vector<CharacterSum> f5_proper_cocharacters(long n_max) {
  if (n_max < 0) {
    throw std::invalid_argument("degree bound must be non-negative");
  }
  std::vector<CharacterSum> out;
  auto shapes_sum = [](long n, std::vector<std::vector<long>> shapes) {
    std::map<Partition, long> terms;
    for (auto& s : shapes) {
      terms[make_partition(std::move(s))] += 1;
    }
    return make_character_sum(n, std::move(terms));
  };
  auto column = [](long head, long ones) {
    std::vector<long> parts{head};
    parts.insert(parts.end(), static_cast<size_t>(ones), 1L);
    return parts;
  };
  for (long n = 0; n <= n_max; ++n) {
    if (n == 0) {
      out.push_back(make_character_sum(0, {{Partition{}, 1}}));
    } else if (n == 1) {
      out.push_back(CharacterSum{1, {}});
    } else if (n == 2 || n == 3) {
      out.push_back(shapes_sum(n, {{n - 1, 1}}));
    } else if (n == 5) {
      out.push_back(shapes_sum(5, {{3, 2}, {3, 1, 1}, {2, 2, 1}, {2, 1, 1, 1}}));
    } else if (n == 6) {
      out.push_back(shapes_sum(6, {{3, 3},
                                   {3, 1, 1, 1},
                                   {2, 2, 1, 1},
                                   {2, 1, 1, 1, 1},
                                   {1, 1, 1, 1, 1, 1}}));
    } else {
      // n = 4 or n >= 7: the stable pattern, with the full column only in
      // even degree.
      std::vector<std::vector<long>> shapes;
      shapes.push_back(column(3, n - 3));
      std::vector<long> two_two{2, 2};
      two_two.insert(two_two.end(), static_cast<size_t>(n - 4), 1L);
      shapes.push_back(std::move(two_two));
      shapes.push_back(column(2, n - 2));
      if (n % 2 == 0) {
        shapes.push_back(std::vector<long>(static_cast<size_t>(n), 1L));
      }
      out.push_back(shapes_sum(n, std::move(shapes)));
    }
  }
  return out;
}

RationalFunction polynomial_growth_series(const std::vector<Rat>& gamma) {
  if (gamma.empty()) {
    return make_rational(Polynomial{}, poly_constant(Rat(1)));
  }
  long K = static_cast<long>(gamma.size());
  Polynomial one_minus_t = poly_from({Rat(1), Rat(-1)});
  Polynomial num;
  for (long k = 0; k < K; ++k) {
    Polynomial term = poly_monomial(k, gamma[static_cast<size_t>(k)]);
    num = num + term * pow(one_minus_t, K - 1 - k);
  }
  return make_rational(num, pow(one_minus_t, K));
}

TruncatedSeries bessel_series(int nu, long N) {
  if (nu < 0 || nu > 2) {
    throw std::invalid_argument("only orders 0, 1, 2 are provided");
  }
  if (N < 1) {
    throw std::invalid_argument("expansion order must be at least 1");
  }
  TruncatedSeries out = zero_series(N, SeriesKind::ordinary);
  for (long k = 0; 2 * k + nu < N; ++k) {
    Int den = factorial(static_cast<unsigned long>(k)) *
              factorial(static_cast<unsigned long>(k + nu));
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(),
                 static_cast<mp_bitcnt_t>(2 * k + nu));
    out.coeffs[static_cast<size_t>(2 * k + nu)] = Rat(1) / Rat(den);
  }
  return out;
}

TruncatedSeries chebyshev_operator_apply(long n, const TruncatedSeries& s) {
  if (n < 0) {
    throw std::invalid_argument("operator degree must be non-negative");
  }
  if (s.order() <= n) {
    throw std::invalid_argument("series too short for the operator degree");
  }
  Polynomial t_prev = poly_constant(Rat(1));  // T_0
  Polynomial t_cur = poly_from({Rat(0), Rat(1)});  // T_1
  Polynomial cheb = n == 0 ? t_prev : t_cur;
  for (long i = 2; i <= n; ++i) {
    Polynomial next =
        scale(Rat(2), poly_from({Rat(0), Rat(1)}) * t_cur) - t_prev;
    t_prev = t_cur;
    t_cur = next;
    cheb = t_cur;
  }
  long W = s.order() - n;
  TruncatedSeries acc = scale(cheb.coeff(0), truncate(s, W));
  TruncatedSeries cur = s;
  for (long j = 1; j <= cheb.degree(); ++j) {
    cur = derivative(cur, 1);
    acc = add(acc, scale(cheb.coeff(j), truncate(cur, W)));
  }
  return acc;
}

bool verify_exp_closed_form(const std::string& name, long N) {
  if (N < 8) {
    throw std::invalid_argument("need at least 8 terms for a meaningful check");
  }
  Sequence terms = catalog_terms(name, N);
  TruncatedSeries target = zero_series(N, SeriesKind::ordinary);
  for (long n = 0; n < N; ++n) {
    target.coeffs[static_cast<size_t>(n)] =
        terms.at(n) / Rat(factorial(static_cast<unsigned long>(n)));
  }
  long M = N + 4;
  TruncatedSeries one = constant_series(Rat(1), M);
  TruncatedSeries e1 = exp_series(Rat(1), M, SeriesKind::ordinary);
  TruncatedSeries e2 = exp_series(Rat(2), M, SeriesKind::ordinary);
  if (name == "M2") {
    TruncatedSeries i1 = scale_variable(bessel_series(1, M + 1), Rat(2));
    TruncatedSeries a = truncate(shift_down(i1, 1), M);
    TruncatedSeries p =
        pad_to(series_from({Rat(1), Rat(0), Rat(0), Rat(-1) / 6}), M);
    TruncatedSeries total =
        add(cauchy_product(e2, sub(a, one)), cauchy_product(e1, p));
    return truncate(total, N) == target;
  }
  if (name == "EtensorE") {
    TruncatedSeries i0 = scale_variable(bessel_series(0, M), Rat(2));
    TruncatedSeries i1 = scale_variable(bessel_series(1, M), Rat(2));
    TruncatedSeries i2 = scale_variable(bessel_series(2, M), Rat(2));
    TruncatedSeries one_plus_t = pad_to(series_from({Rat(1), Rat(1)}), M);
    TruncatedSeries inner = sub(
        sub(cauchy_product(one_plus_t, i0), i1),
        shift_up(truncate(i2, M - 1), 1));
    TruncatedSeries total = add(
        add(scale(Rat(1) / 2, cauchy_product(e2, inner)),
            constant_series(Rat(1) / 2, M)),
        sub(cauchy_product(one_plus_t, e1), e2));
    return truncate(total, N) == target;
  }
  throw std::invalid_argument("no exponential closed form stored for " + name);
}

namespace {

double log_rat(const Rat& r) {
  if (r <= 0) {
    throw std::domain_error("logarithm of a non-positive value");
  }
  signed long exp_num = 0, exp_den = 0;
  double d_num = mpz_get_d_2exp(&exp_num, r.get_num().get_mpz_t());
  double d_den = mpz_get_d_2exp(&exp_den, r.get_den().get_mpz_t());
  const double ln2 = 0.693147180559945309417232121458;
  return std::log(d_num) - std::log(d_den) +
         (static_cast<double>(exp_num) - static_cast<double>(exp_den)) * ln2;
}

}  // namespace

ExponentEstimate estimate_exponent(const Sequence& s) {
  long L = s.end();
  if (L < 20) {
    throw std::domain_error("need at least 20 terms to estimate the growth");
  }
  for (long n = 1; n < L; ++n) {
    if (s.at(n) <= 0) {
      throw std::domain_error("growth estimates need positive terms");
    }
  }
  long N = L - 1;
  double l_last = log_rat(s.at(N));
  double l_prev = log_rat(s.at(N - 1));
  ExponentEstimate est;
  est.root_n = std::exp(l_last / static_cast<double>(N));
  est.ratio = std::exp(l_last - l_prev);
  est.nearest = std::lround(est.ratio);
  return est;
}

std::pair<double, double> asymptotic_profile_m2(long N) {
  if (N < 500) {
    throw std::invalid_argument(
        "need N >= 500 for a stable asymptotic fit window");
  }
  Sequence terms = catalog_terms("M2", N + 1);
  std::vector<double> logs(static_cast<size_t>(N) + 1, 0.0);
  for (long n = 1; n <= N; ++n) {
    logs[static_cast<size_t>(n)] = log_rat(terms.at(n));
  }
  double rate = std::exp(logs[static_cast<size_t>(N)] -
                         logs[static_cast<size_t>(N - 1)]);
  const double ln4 = 2.0 * 0.693147180559945309417232121458;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  long m = 0;
  for (long n = N / 2; n <= N; ++n) {
    double x = std::log(static_cast<double>(n));
    double y = logs[static_cast<size_t>(n)] - static_cast<double>(n) * ln4;
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++m;
  }
  double slope = (sxy - sx * sy / static_cast<double>(m)) /
                 (sxx - sx * sx / static_cast<double>(m));
  return {rate, slope};
}

}  // namespace codimkit
