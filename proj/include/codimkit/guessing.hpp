#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "codimkit/polynomial.hpp"
#include "codimkit/rational.hpp"
#include "codimkit/rational_forms.hpp"
#include "codimkit/sequence.hpp"
#include "codimkit/series.hpp"

namespace codimkit {

// A polynomial equation f(t, y) = 0 satisfied by an ordinary generating
// function y(t).  coeffs[j] is the polynomial in t multiplying y^j; trailing
// zero polynomials are trimmed, so coeffs.size()-1 is the true y-degree.
//
// Normal form: all coefficients are integers with no common factor, and the
// first nonzero coefficient when scanning y-powers downward (and t-powers
// downward within each) is positive.
struct AlgebraicEquation {
  std::vector<Polynomial> coeffs;

  long y_degree() const { return static_cast<long>(coeffs.size()) - 1; }
  long t_degree() const;
};

bool operator==(const AlgebraicEquation& a, const AlgebraicEquation& b);

// Scale into the integer-primitive sign-fixed normal form described above.
AlgebraicEquation normalize_algebraic(AlgebraicEquation eq);

// Evaluate f(t, y(t)) as a truncated series at the order of y.
TruncatedSeries bivariate_eval_series(const AlgebraicEquation& f,
                                      const TruncatedSeries& y);

// True iff f(t, y(t)) vanishes through the order of y.
bool verify_algebraic(const AlgebraicEquation& f, const TruncatedSeries& y);

// Partial derivatives (df/dt, df/dy) as equations in the same encoding.
// Throws std::domain_error when df/dy is identically zero, since then the
// equation cannot pin down y'.
std::pair<AlgebraicEquation, AlgebraicEquation> algebraic_derivative_equation(
    const AlgebraicEquation& f);

enum class GuessKind { recurrence, rational, algebraic };

// Result of a fit-and-verify search.  `used` counts the prefix terms the
// model was fitted on, `verified` the held-out terms it then predicted
// correctly.  Exactly one model field is engaged when found is true.
struct GuessReport {
  bool found = false;
  GuessKind kind = GuessKind::recurrence;
  std::optional<LinearRecurrence> recurrence;
  std::optional<RationalFunction> rational;
  std::optional<AlgebraicEquation> algebraic;
  long used = 0;
  long verified = 0;
};

// Search for the lowest-order linear recurrence with constant coefficients,
// valid from the smallest possible starting index, that fits the prefix and
// survives `holdout` held-back terms.  Candidates are tried with order k
// ascending (0..k_max), then starting slack ascending (0..n0_max).
// Requires at least 2*k_max + n0_max + holdout known terms.
GuessReport guess_recurrence(const Sequence& s, long k_max, long n0_max,
                             long holdout);

// Same search, reported as a rational generating function.
GuessReport guess_rational(const Sequence& s, long k_max, long n0_max,
                           long holdout);

// Search for a polynomial equation f(t, y) = 0 for the ordinary generating
// function of s, with y-degree m ascending (1..m_max) and t-degree d
// ascending (0..d_max).  A candidate shape (m, d) is only attempted when its
// (m+1)(d+1) unknowns fit the available equations, i.e. (m+1)(d+1) <=
// known_terms - holdout; if no shape qualifies an invalid_argument is
// thrown.  The fitted equation must also annihilate the held-out terms.
GuessReport guess_algebraic(const Sequence& s, long m_max, long d_max,
                            long holdout);

}  // namespace codimkit
