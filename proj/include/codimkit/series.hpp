#pragma once

#include "codimkit/rational.hpp"
#include "codimkit/sequence.hpp"

#include <vector>

namespace codimkit {

enum class SeriesKind { ordinary, exponential };

// A formal power series known modulo t^order. coeffs[n] is the literal
// coefficient of t^n: a_n for ordinary kind, a_n/n! for exponential kind.
struct TruncatedSeries {
  SeriesKind kind = SeriesKind::ordinary;
  std::vector<Rat> coeffs;

  long order() const { return static_cast<long>(coeffs.size()); }
  Rat coeff(long n) const {
    return (n >= 0 && n < order()) ? coeffs[static_cast<size_t>(n)] : Rat(0);
  }
};

// --- construction ---------------------------------------------------------

TruncatedSeries series_from(std::vector<Rat> coeffs,
                            SeriesKind kind = SeriesKind::ordinary);
TruncatedSeries zero_series(long N, SeriesKind kind = SeriesKind::ordinary);
// Constant c + 0t + ... to order N.
TruncatedSeries constant_series(const Rat& c, long N,
                                SeriesKind kind = SeriesKind::ordinary);
// 1/(1-alpha t) as a literal (ordinary-kind) expansion.
TruncatedSeries geometric_series(const Rat& alpha, long N);
// e^{beta t} as literal coefficients beta^n/n!.
TruncatedSeries exp_series(const Rat& beta, long N,
                           SeriesKind kind = SeriesKind::exponential);

// --- the sequence <-> series isomorphisms ---------------------------------

// The map sending {a_n} to sum a_n t^n / n!, truncated at order N.
TruncatedSeries to_exponential(const Sequence& s, long N);
// Recovers {a_n} exactly: multiplies exponential coefficients by n!
// (plain copy for ordinary kind).
Sequence to_ordinary(const TruncatedSeries& s);

// --- arithmetic -----------------------------------------------------------

// Convolution of literal coefficients; both factors must share a kind and the
// result order is the smaller of the two.
TruncatedSeries cauchy_product(const TruncatedSeries& a,
                               const TruncatedSeries& b);

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries scale(const Rat& c, const TruncatedSeries& s);
// Multiplies by t^k (order grows by k so no information is lost).
TruncatedSeries shift_up(const TruncatedSeries& s, long k);
// Divides by t^k; the first k coefficients must vanish.
TruncatedSeries shift_down(const TruncatedSeries& s, long k);
// Keeps the first N coefficients (N <= order).
TruncatedSeries truncate(const TruncatedSeries& s, long N);
// Zero-pads up to order N, asserting the series is exact beyond its stored
// coefficients (used for series that are really polynomials).
TruncatedSeries pad_to(const TruncatedSeries& s, long N);
// Substitution t -> c*t: coefficient n picks up a factor c^n.
TruncatedSeries scale_variable(const TruncatedSeries& s, const Rat& c);
// Multiplicative inverse; requires a nonzero constant term.
TruncatedSeries series_inverse(const TruncatedSeries& s);

inline TruncatedSeries operator+(const TruncatedSeries& a,
                                 const TruncatedSeries& b) {
  return add(a, b);
}
inline TruncatedSeries operator-(const TruncatedSeries& a,
                                 const TruncatedSeries& b) {
  return sub(a, b);
}
inline TruncatedSeries operator*(const TruncatedSeries& a,
                                 const TruncatedSeries& b) {
  return cauchy_product(a, b);
}
bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

// --- the binomial-convolution (LR-derived) product ------------------------

// c_n = sum_k binom(n,k) a_k b_{n-k} for n < N: the ordinary-sequence image
// of multiplying the exponential generating functions.
Sequence lr_product_seq(const Sequence& a, const Sequence& b, long N);

// Termwise product a_n * b_n. Result offset is the larger input offset and
// the result covers the overlap of the known windows; an empty overlap is
// rejected because no term of the result would be computable.
Sequence hadamard_series(const Sequence& a, const Sequence& b);

// --- calculus and composition ---------------------------------------------

// p-th formal derivative of the literal series (p >= 1); order drops by p.
TruncatedSeries derivative(const TruncatedSeries& s, long p);

// (1+u)^alpha = sum binom(alpha,k) u^k for a series u with u(0) = 0.
// Coefficients of u beyond its stored order are taken as zero, so a
// polynomial u may be passed at any order.
TruncatedSeries binomial_pow_series(const Rat& alpha, const TruncatedSeries& u,
                                    long N);

// b(t/(1-alpha t)) to order N for ordinary b. alpha = 0 is the degenerate
// substitution t -> t and returns b unchanged. Coefficients of b beyond its
// stored order are taken as zero.
TruncatedSeries compose_mobius(const TruncatedSeries& b, const Rat& alpha,
                               long N);

}  // namespace codimkit
