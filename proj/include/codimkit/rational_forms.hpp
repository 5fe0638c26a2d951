#pragma once

#include "codimkit/polynomial.hpp"
#include "codimkit/sequence.hpp"
#include "codimkit/series.hpp"

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace codimkit {

// num/den with den(0) = 1 after normalization (so the function expands as a
// power series at 0 and displayed forms like (1-t)/(1-2t) survive verbatim)
// and gcd(num, den) = 1.
struct RationalFunction {
  Polynomial num;
  Polynomial den;
};

// Reduces to lowest terms and normalizes den(0) to 1.
// Throws std::domain_error if the reduced denominator vanishes at 0.
RationalFunction make_rational(Polynomial num, Polynomial den);

bool operator==(const RationalFunction& a, const RationalFunction& b);

RationalFunction add(const RationalFunction& a, const RationalFunction& b);
RationalFunction sub(const RationalFunction& a, const RationalFunction& b);
RationalFunction mul(const RationalFunction& a, const RationalFunction& b);

// a_n = coeffs[0] a_{n-1} + ... + coeffs[k-1] a_{n-k} for n >= start + k,
// with initial covering indices 0 .. start+k-1. k = 0 describes a sequence
// that is zero from index `start` on.
struct LinearRecurrence {
  std::vector<Rat> coeffs;
  std::vector<Rat> initial;
  long start = 0;
};

// a_n = sum_i p_i(n) * alpha_i^n for n >= threshold; the alpha_i are
// pairwise distinct and nonzero, the p_i nonzero.
struct QuasiPolynomial {
  std::vector<std::pair<Rat, Polynomial>> parts;  // (alpha_i, p_i in n)
  long threshold = 0;
};

// sum_i f_i(t) e^{beta_i t} with pairwise distinct beta_i (beta = 0 allowed:
// that part is a plain polynomial added to the exponential series).
struct ExpPolySum {
  std::vector<std::pair<Rat, Polynomial>> parts;  // (beta_i, f_i in t)
};

// Raised when a conversion needs the denominator to split into linear
// factors over the rationals but an irreducible non-linear factor remains.
struct nonsplit_error : std::domain_error {
  Polynomial factor;
  explicit nonsplit_error(Polynomial f)
      : std::domain_error("denominator factor " + poly_to_string(f) +
                          " has no rational root"),
        factor(std::move(f)) {}
};

// --- expansion and conversions --------------------------------------------

// First N Taylor coefficients of num/den at 0.
Sequence expand_rational(const RationalFunction& r, long N);

// Generates a_0 .. a_{N-1} from the recurrence data.
Sequence expand_recurrence(const LinearRecurrence& rec, long N);

// The rational function whose expansion reproduces the recurrence's sequence
// for all n: denominator 1 - c_1 t - ... - c_k t^k, numerator folding in the
// exceptional first terms.
RationalFunction recurrence_to_rational(const LinearRecurrence& rec);

// Partial-fraction closed form; requires every denominator root to be
// rational (throws nonsplit_error carrying the offending factor otherwise).
// threshold = max(0, deg num - deg den + 1).
QuasiPolynomial rational_to_quasipolynomial(const RationalFunction& r);

Rat quasipolynomial_eval(const QuasiPolynomial& q, long n);

// Exponential-side closed form with ordinary coefficients matching the
// quasi-polynomial formula at every index n >= 0. If early_terms are given,
// the first early_terms.size() indices are overridden to those exact values
// by folding the deviations into the beta = 0 polynomial part.
ExpPolySum quasipolynomial_to_exppoly(const QuasiPolynomial& q,
                                      const std::vector<Rat>& early_terms = {});

// Full pipeline: partial fractions plus the exact early terms of r, so the
// result's ordinary coefficients equal expand_rational(r, .) at every index.
ExpPolySum rational_to_exppoly(const RationalFunction& r);

// sum f_i(t) e^{beta_i t} to order N, exponential kind.
TruncatedSeries exppoly_expand(const ExpPolySum& e, long N);

ExpPolySum exppoly_add(const ExpPolySum& a, const ExpPolySum& b);
ExpPolySum exppoly_mul(const ExpPolySum& a, const ExpPolySum& b);
ExpPolySum exppoly_scale(const Rat& c, const ExpPolySum& e);

// --- the binomial-convolution product in closed form ----------------------

// Exact rational function of the binomial convolution of the two expansions.
// Constructive and certified: both factors are expanded to M = 2D+2 terms
// where D bounds the result's numerator and denominator degrees, a rational
// function is reconstructed from the convolution, and agreement through
// t^{2D+1} pins it uniquely.
RationalFunction lr_product_rational(const RationalFunction& a,
                                     const RationalFunction& b);

// 1/(1-alpha t) convolved with b via the substitution identity
// (1/(1-alpha t)) * b(t/(1-alpha t)); order of b preserved.
TruncatedSeries lr_fraction(const Rat& alpha, const TruncatedSeries& b);

// t^p convolved with b: coefficients binom(n,p) b_{n-p}; order preserved.
TruncatedSeries lr_monomial(long p, const TruncatedSeries& b);

// Coefficients lambda_q with sum_q lambda_q ((1/(1-beta t)) conv t^q) equal
// to 1/(1-beta t)^p, from the triangular expansion of t^q in powers of
// (1 - beta t).
std::vector<std::pair<long, Rat>> fraction_power_as_lr_combination(
    const Rat& beta, long p);

// Exact rational function of the termwise product of the two expansions,
// by certified reconstruction at the product degree bound.
RationalFunction hadamard_rational(const RationalFunction& a,
                                   const RationalFunction& b);

// --- the differential-operator form ---------------------------------------

// True iff sum_j op_coeffs[j] D^j annihilates the series through the
// verifiable window (orders 0 .. N - 1 - deg of the result after applying
// the operator). Requires N > op_coeffs.size().
bool verify_ode(const TruncatedSeries& s, const std::vector<Rat>& op_coeffs,
                long N);
bool verify_ode(const ExpPolySum& e, const std::vector<Rat>& op_coeffs,
                long N);

// --- shared reconstruction helper -----------------------------------------

// Rational function with num and den degrees <= D whose expansion matches
// every given coefficient, or nullopt. Certified only when
// terms.size() >= 2D+2 and the data really comes from such a function.
std::optional<RationalFunction> reconstruct_rational(
    const std::vector<Rat>& terms, long D);

}  // namespace codimkit
