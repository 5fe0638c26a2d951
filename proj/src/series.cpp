#include "codimkit/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace codimkit {

TruncatedSeries series_from(std::vector<Rat> coeffs, SeriesKind kind) {
  return TruncatedSeries{kind, std::move(coeffs)};
}

TruncatedSeries zero_series(long N, SeriesKind kind) {
  return TruncatedSeries{kind, std::vector<Rat>(static_cast<size_t>(N))};
}

TruncatedSeries constant_series(const Rat& c, long N, SeriesKind kind) {
  TruncatedSeries s = zero_series(N, kind);
  if (N >= 1) {
    s.coeffs[0] = c;
  }
  return s;
}

TruncatedSeries geometric_series(const Rat& alpha, long N) {
  TruncatedSeries s = zero_series(N, SeriesKind::ordinary);
  Rat power(1);
  for (long n = 0; n < N; ++n) {
    s.coeffs[static_cast<size_t>(n)] = power;
    power *= alpha;
  }
  return s;
}

TruncatedSeries exp_series(const Rat& beta, long N, SeriesKind kind) {
  TruncatedSeries s = zero_series(N, kind);
  Rat c(1);
  for (long n = 0; n < N; ++n) {
    s.coeffs[static_cast<size_t>(n)] = c;
    c *= beta;
    c /= static_cast<unsigned long>(n + 1);
  }
  return s;
}

TruncatedSeries to_exponential(const Sequence& s, long N) {
  if (N < 1) {
    throw std::invalid_argument("series order must be at least 1");
  }
  TruncatedSeries out = zero_series(N, SeriesKind::exponential);
  for (long n = 0; n < N; ++n) {
    out.coeffs[static_cast<size_t>(n)] = s.at(n) / Rat(factorial(
        static_cast<unsigned long>(n)));
  }
  return out;
}

Sequence to_ordinary(const TruncatedSeries& s) {
  std::vector<Rat> terms;
  terms.reserve(s.coeffs.size());
  for (size_t n = 0; n < s.coeffs.size(); ++n) {
    if (s.kind == SeriesKind::exponential) {
      terms.push_back(s.coeffs[n] * Rat(factorial(static_cast<unsigned long>(n))));
    } else {
      terms.push_back(s.coeffs[n]);
    }
  }
  return make_sequence(std::move(terms));
}

TruncatedSeries cauchy_product(const TruncatedSeries& a,
                               const TruncatedSeries& b) {
  if (a.kind != b.kind) {
    throw std::invalid_argument(
        "cauchy product requires factors of the same kind");
  }
  long N = std::min(a.order(), b.order());
  TruncatedSeries out = zero_series(N, a.kind);
  for (long i = 0; i < N; ++i) {
    const Rat& ai = a.coeffs[static_cast<size_t>(i)];
    if (ai == 0) {
      continue;
    }
    for (long j = 0; i + j < N; ++j) {
      out.coeffs[static_cast<size_t>(i + j)] +=
          ai * b.coeffs[static_cast<size_t>(j)];
    }
  }
  return out;
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.kind != b.kind) {
    throw std::invalid_argument("series sum requires matching kinds");
  }
  long N = std::min(a.order(), b.order());
  TruncatedSeries out = zero_series(N, a.kind);
  for (long n = 0; n < N; ++n) {
    out.coeffs[static_cast<size_t>(n)] =
        a.coeffs[static_cast<size_t>(n)] + b.coeffs[static_cast<size_t>(n)];
  }
  return out;
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
  return add(a, scale(Rat(-1), b));
}

TruncatedSeries scale(const Rat& c, const TruncatedSeries& s) {
  TruncatedSeries out = s;
  for (Rat& x : out.coeffs) {
    x *= c;
  }
  return out;
}

TruncatedSeries shift_up(const TruncatedSeries& s, long k) {
  if (k < 0) {
    throw std::invalid_argument("shift amount must be non-negative");
  }
  TruncatedSeries out = zero_series(s.order() + k, s.kind);
  for (long n = 0; n < s.order(); ++n) {
    out.coeffs[static_cast<size_t>(n + k)] = s.coeffs[static_cast<size_t>(n)];
  }
  return out;
}

TruncatedSeries shift_down(const TruncatedSeries& s, long k) {
  if (k < 0 || k > s.order()) {
    throw std::invalid_argument("shift amount out of range");
  }
  for (long n = 0; n < k; ++n) {
    if (s.coeffs[static_cast<size_t>(n)] != 0) {
      throw std::domain_error("series is not divisible by t^" +
                              std::to_string(k));
    }
  }
  TruncatedSeries out = zero_series(s.order() - k, s.kind);
  for (long n = k; n < s.order(); ++n) {
    out.coeffs[static_cast<size_t>(n - k)] = s.coeffs[static_cast<size_t>(n)];
  }
  return out;
}

TruncatedSeries truncate(const TruncatedSeries& s, long N) {
  if (N < 0 || N > s.order()) {
    throw std::invalid_argument("truncation order out of range");
  }
  TruncatedSeries out = s;
  out.coeffs.resize(static_cast<size_t>(N));
  return out;
}

TruncatedSeries pad_to(const TruncatedSeries& s, long N) {
  if (N < s.order()) {
    return truncate(s, N);
  }
  TruncatedSeries out = s;
  out.coeffs.resize(static_cast<size_t>(N));
  return out;
}

TruncatedSeries scale_variable(const TruncatedSeries& s, const Rat& c) {
  TruncatedSeries out = s;
  Rat power(1);
  for (size_t n = 0; n < out.coeffs.size(); ++n) {
    out.coeffs[n] *= power;
    power *= c;
  }
  return out;
}

TruncatedSeries series_inverse(const TruncatedSeries& s) {
  if (s.order() < 1 || s.coeffs[0] == 0) {
    throw std::domain_error("series inverse requires a nonzero constant term");
  }
  long N = s.order();
  TruncatedSeries out = zero_series(N, s.kind);
  Rat inv0 = 1 / s.coeffs[0];
  out.coeffs[0] = inv0;
  for (long n = 1; n < N; ++n) {
    Rat acc(0);
    for (long k = 1; k <= n; ++k) {
      acc += s.coeff(k) * out.coeffs[static_cast<size_t>(n - k)];
    }
    out.coeffs[static_cast<size_t>(n)] = -inv0 * acc;
  }
  return out;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a.kind == b.kind && a.coeffs == b.coeffs;
}

Sequence lr_product_seq(const Sequence& a, const Sequence& b, long N) {
  if (N < 1) {
    throw std::invalid_argument("series order must be at least 1");
  }
  std::vector<Rat> terms(static_cast<size_t>(N));
  for (long n = 0; n < N; ++n) {
    Rat c(0);
    for (long k = 0; k <= n; ++k) {
      Rat ak = a.at(k);
      if (ak == 0) {
        continue;
      }
      Rat bk = b.at(n - k);
      if (bk == 0) {
        continue;
      }
      c += Rat(binomial(static_cast<unsigned long>(n), k)) * ak * bk;
    }
    terms[static_cast<size_t>(n)] = c;
  }
  return make_sequence(std::move(terms));
}

Sequence hadamard_series(const Sequence& a, const Sequence& b) {
  long offset = std::max(a.offset, b.offset);
  long stop = std::min(a.end(), b.end());
  if (stop <= offset) {
    throw std::invalid_argument(
        "termwise product has no computable terms: the known windows of the "
        "two sequences do not overlap");
  }
  std::vector<Rat> terms;
  terms.reserve(static_cast<size_t>(stop - offset));
  for (long n = offset; n < stop; ++n) {
    terms.push_back(a.at(n) * b.at(n));
  }
  return make_sequence(std::move(terms), offset);
}

TruncatedSeries derivative(const TruncatedSeries& s, long p) {
  if (p < 1) {
    throw std::invalid_argument("derivative order must be positive");
  }
  if (p >= s.order()) {
    throw std::invalid_argument("derivative order exceeds series order");
  }
  long N = s.order() - p;
  TruncatedSeries out = zero_series(N, s.kind);
  for (long n = 0; n < N; ++n) {
    // Coefficient (n+p)(n+p-1)...(n+1) from differentiating t^{n+p} p times.
    Rat factor(1);
    for (long j = 1; j <= p; ++j) {
      factor *= static_cast<unsigned long>(n + j);
    }
    out.coeffs[static_cast<size_t>(n)] =
        factor * s.coeffs[static_cast<size_t>(n + p)];
  }
  return out;
}

TruncatedSeries binomial_pow_series(const Rat& alpha, const TruncatedSeries& u,
                                    long N) {
  if (N < 1) {
    throw std::invalid_argument("series order must be at least 1");
  }
  if (u.order() >= 1 && u.coeffs[0] != 0) {
    throw std::domain_error(
        "binomial series requires an argument with zero constant term");
  }
  TruncatedSeries base = pad_to(u, N);
  TruncatedSeries result = constant_series(Rat(1), N, u.kind);
  TruncatedSeries upow = constant_series(Rat(1), N, u.kind);
  Rat coeff(1);  // binom(alpha, k)
  for (long k = 1; k < N; ++k) {
    upow = cauchy_product(upow, base);
    coeff *= (alpha - Rat(static_cast<long>(k - 1)));
    coeff /= static_cast<unsigned long>(k);
    result = add(result, scale(coeff, upow));
  }
  return result;
}

TruncatedSeries compose_mobius(const TruncatedSeries& b, const Rat& alpha,
                               long N) {
  if (N < 1) {
    throw std::invalid_argument("series order must be at least 1");
  }
  if (b.kind != SeriesKind::ordinary) {
    throw std::invalid_argument("substitution expects an ordinary-kind series");
  }
  if (alpha == 0) {
    return b;
  }
  // s(t) = t/(1-alpha t) = sum_{j>=1} alpha^{j-1} t^j; since s has valuation
  // one, b(s) needs only b_0..b_{N-1}.
  TruncatedSeries s = shift_up(geometric_series(alpha, N - 1), 1);
  TruncatedSeries result = constant_series(b.coeff(0), N, SeriesKind::ordinary);
  TruncatedSeries spow = constant_series(Rat(1), N, SeriesKind::ordinary);
  for (long k = 1; k < N; ++k) {
    spow = cauchy_product(spow, s);
    Rat bk = b.coeff(k);
    if (bk != 0) {
      result = add(result, scale(bk, spow));
    }
  }
  return result;
}

}  // namespace codimkit
