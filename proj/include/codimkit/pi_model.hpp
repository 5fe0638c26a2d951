#pragma once

#include <string>
#include <utility>
#include <vector>

#include "codimkit/characters.hpp"
#include "codimkit/rational_forms.hpp"
#include "codimkit/sequence.hpp"
#include "codimkit/series.hpp"

namespace codimkit {

// --- the model catalog ----------------------------------------------------

// Names of the built-in codimension sequences.
std::vector<std::string> catalog_names();

// First N terms of the named sequence, by its exact closed form (or, for the
// triangular models, by the product construction). Unknown names throw
// std::invalid_argument.
Sequence catalog_terms(const std::string& name, long N);

// --- products of T-ideals -------------------------------------------------

// The correction factor applied to the exponential generating functions when
// two ideals are multiplied: `shifted_exp` uses e^t - 1, `affine` uses t - 1.
// The affine variant is the default; the numeric cross-check below is the
// adjudicator between the two (see the oracle module and tests).
enum class TidealVariant { shifted_exp, affine };

// Codimension sequence of an algebra whose identities form the product of
// the two given T-ideals: on the exponential side
//   p = p1 + p2 + X * p1 * p2,
// with X the variant's correction factor.
Sequence tideal_product(const Sequence& c1, const Sequence& c2, long N,
                        TidealVariant variant = TidealVariant::affine);

// Cocharacter of the product ideal at degree n from the cocharacters of the
// factors at degrees 0..n (chi1[j], chi2[j] are the degree-j cocharacters):
//   chi_n = chi_n(1) + chi_n(2)
//         + chi_(1) x sum_{j<n} chi_j(1) x chi_{n-1-j}(2)
//         - sum_{j<=n} chi_j(1) x chi_{n-j}(2),
// where x is the induced outer product. A negative multiplicity in the
// result means the inputs were not cocharacters of actual algebras; that is
// reported as std::domain_error rather than clamped.
CharacterSum tideal_product_cocharacter(const std::vector<CharacterSum>& chi1,
                                        const std::vector<CharacterSum>& chi2,
                                        long n);

// --- proper (commutator-generated) counterparts ---------------------------

// c_n = sum_k binom(n,k) gamma_k: the full sequence from its proper part.
Sequence proper_to_codim(const Sequence& gamma, long N);

// Inverse transform gamma_n = sum_k binom(n,k) (-1)^{n-k} c_k.
Sequence codim_to_proper(const Sequence& c, long N);

// Proper cocharacters of the degree-5 standard-commutator model, n = 0..n_max
// (closed table; n_max arbitrary).
std::vector<CharacterSum> f5_proper_cocharacters(long n_max);

// Generating function of c_n = sum_k binom(n,k) gamma_k for a finitely
// supported gamma (gamma[k] is the k-th value): always rational with all
// poles at t = 1.
RationalFunction polynomial_growth_series(const std::vector<Rat>& gamma);

// --- special-function side of the exact forms -----------------------------

// Modified Bessel function I_nu (nu = 0, 1, 2) as an ordinary-kind literal
// series in its argument, to the given order.
TruncatedSeries bessel_series(int nu, long N);

// Applies T_n(D) to a series, with T_n the degree-n Chebyshev polynomial of
// the first kind and D = d/dt; the order drops by n.
TruncatedSeries chebyshev_operator_apply(long n, const TruncatedSeries& s);

// Checks a catalog sequence against its exponential-side closed form built
// from Bessel series ("M2" and "EtensorE" are supported), comparing literal
// coefficients through order N.
bool verify_exp_closed_form(const std::string& name, long N);

// --- growth ---------------------------------------------------------------

struct ExponentEstimate {
  double root_n = 0.0;  // c_N^(1/N)
  double ratio = 0.0;   // c_N / c_{N-1}
  long nearest = 0;     // nearest integer to the ratio estimate
};

// Log-space estimates from the tail of a positive sequence; needs at least
// 20 known terms and positivity from index 1 on.
ExponentEstimate estimate_exponent(const Sequence& s);

// Growth profile of the 2x2-matrix model: (rate, poly_order) where rate is
// the last-ratio estimate of the exponential and poly_order the least-squares
// slope of log(c_n / rate_limit^n) against log n over n in [N/2, N], using
// the known limit 4. Requires N >= 500 for the fit window to be meaningful.
std::pair<double, double> asymptotic_profile_m2(long N);

}  // namespace codimkit
