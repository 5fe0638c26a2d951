#include "codimkit/guessing.hpp"

#include <algorithm>

#include "codimkit/linalg.hpp"

namespace codimkit {

long AlgebraicEquation::t_degree() const {
  long d = -1;
  for (const Polynomial& p : coeffs) {
    d = std::max(d, p.degree());
  }
  return d;
}

bool operator==(const AlgebraicEquation& a, const AlgebraicEquation& b) {
  return a.coeffs == b.coeffs;
}

AlgebraicEquation normalize_algebraic(AlgebraicEquation eq) {
  while (!eq.coeffs.empty() && eq.coeffs.back().is_zero()) {
    eq.coeffs.pop_back();
  }
  if (eq.coeffs.empty()) {
    return eq;
  }
  Int den_lcm(1);
  for (const Polynomial& p : eq.coeffs) {
    for (const Rat& c : p.coeffs) {
      den_lcm = lcm(den_lcm, c.get_den());
    }
  }
  Int num_gcd(0);
  for (const Polynomial& p : eq.coeffs) {
    for (const Rat& c : p.coeffs) {
      Rat scaled = c * Rat(den_lcm);
      num_gcd = gcd(num_gcd, scaled.get_num());
    }
  }
  Rat factor = Rat(den_lcm) / Rat(num_gcd == 0 ? Int(1) : num_gcd);
  // Sign: first nonzero coefficient scanning y-powers downward, t-powers
  // downward, must be positive.
  for (auto it = eq.coeffs.rbegin(); it != eq.coeffs.rend(); ++it) {
    if (!it->is_zero()) {
      if (it->coeffs.back() < 0) {
        factor = -factor;
      }
      break;
    }
  }
  for (Polynomial& p : eq.coeffs) {
    p = scale(factor, p);
  }
  return eq;
}

TruncatedSeries bivariate_eval_series(const AlgebraicEquation& f,
                                      const TruncatedSeries& y) {
  long N = y.order();
  TruncatedSeries acc = zero_series(N, y.kind);
  TruncatedSeries y_pow = constant_series(Rat(1), N, y.kind);
  for (size_t j = 0; j < f.coeffs.size(); ++j) {
    const Polynomial& p = f.coeffs[j];
    if (!p.is_zero()) {
      TruncatedSeries ps = zero_series(N, y.kind);
      for (long i = 0; i <= std::min<long>(p.degree(), N - 1); ++i) {
        ps.coeffs[static_cast<size_t>(i)] = p.coeff(i);
      }
      acc = add(acc, cauchy_product(ps, y_pow));
    }
    if (j + 1 < f.coeffs.size()) {
      y_pow = cauchy_product(y_pow, y);
    }
  }
  return acc;
}

bool verify_algebraic(const AlgebraicEquation& f, const TruncatedSeries& y) {
  TruncatedSeries r = bivariate_eval_series(f, y);
  return std::all_of(r.coeffs.begin(), r.coeffs.end(),
                     [](const Rat& c) { return c == 0; });
}

std::pair<AlgebraicEquation, AlgebraicEquation> algebraic_derivative_equation(
    const AlgebraicEquation& f) {
  AlgebraicEquation dt, dy;
  for (const Polynomial& p : f.coeffs) {
    dt.coeffs.push_back(derivative(p));
  }
  for (size_t j = 1; j < f.coeffs.size(); ++j) {
    dy.coeffs.push_back(scale(Rat(static_cast<long>(j)), f.coeffs[j]));
  }
  while (!dt.coeffs.empty() && dt.coeffs.back().is_zero()) {
    dt.coeffs.pop_back();
  }
  while (!dy.coeffs.empty() && dy.coeffs.back().is_zero()) {
    dy.coeffs.pop_back();
  }
  if (dy.coeffs.empty()) {
    throw std::domain_error(
        "equation is independent of y; no derivative relation");
  }
  return {dt, dy};
}

namespace {

// Strip trailing zero recurrence coefficients: order k with c_k = 0 is the
// same recurrence at order k-1 starting one index later.
LinearRecurrence tidy_recurrence(std::vector<Rat> coeffs, long n0,
                                 const Sequence& s) {
  while (!coeffs.empty() && coeffs.back() == 0) {
    coeffs.pop_back();
    ++n0;
  }
  long k = static_cast<long>(coeffs.size());
  LinearRecurrence rec;
  rec.coeffs = std::move(coeffs);
  rec.start = n0;
  for (long n = 0; n < n0 + k; ++n) {
    rec.initial.push_back(s.at(n));
  }
  return rec;
}

}  // namespace

GuessReport guess_recurrence(const Sequence& s, long k_max, long n0_max,
                             long holdout) {
  if (k_max < 0 || n0_max < 0 || holdout < 1) {
    throw std::invalid_argument(
        "search bounds must be non-negative and holdout positive");
  }
  long L = s.end();
  if (L < 2 * k_max + n0_max + holdout) {
    throw std::invalid_argument(
        "not enough terms: need at least 2*k_max + n0_max + holdout");
  }
  GuessReport report;
  report.kind = GuessKind::recurrence;
  report.used = L - holdout;
  long fit_end = L - holdout;  // rows use indices below this
  for (long k = 0; k <= k_max; ++k) {
    for (long n0 = 0; n0 <= n0_max; ++n0) {
      std::vector<Rat> coeffs;
      bool fits = true;
      if (k == 0) {
        for (long n = n0; n < fit_end && fits; ++n) {
          fits = (s.at(n) == 0);
        }
      } else {
        Mat system;
        Vec rhs;
        for (long n = n0 + k; n < fit_end; ++n) {
          Vec row;
          for (long i = 1; i <= k; ++i) {
            row.push_back(s.at(n - i));
          }
          system.push_back(std::move(row));
          rhs.push_back(s.at(n));
        }
        auto sol = solve(system, rhs);
        if (!sol) {
          fits = false;
        } else {
          coeffs = *sol;
        }
      }
      if (!fits) {
        continue;
      }
      bool holds = true;
      for (long n = L - holdout; n < L && holds; ++n) {
        Rat predicted(0);
        for (long i = 1; i <= k; ++i) {
          predicted += coeffs[static_cast<size_t>(i - 1)] * s.at(n - i);
        }
        holds = (s.at(n) == predicted);
      }
      if (!holds) {
        continue;
      }
      report.found = true;
      report.recurrence = tidy_recurrence(std::move(coeffs), n0, s);
      report.verified = holdout;
      return report;
    }
  }
  return report;
}

GuessReport guess_rational(const Sequence& s, long k_max, long n0_max,
                           long holdout) {
  GuessReport report = guess_recurrence(s, k_max, n0_max, holdout);
  report.kind = GuessKind::rational;
  if (report.found) {
    report.rational = recurrence_to_rational(*report.recurrence);
    report.recurrence.reset();
  }
  return report;
}

GuessReport guess_algebraic(const Sequence& s, long m_max, long d_max,
                            long holdout) {
  if (m_max < 1 || d_max < 0 || holdout < 1) {
    throw std::invalid_argument(
        "need m_max >= 1, d_max >= 0 and a positive holdout");
  }
  long L = s.end();
  long fit_rows = L - holdout;
  // Shapes are skipped individually when their unknown count exceeds the fit
  // rows; reject outright only when even the smallest shape (m=1, d=0) is
  // over budget.
  if (fit_rows < 2) {
    throw std::invalid_argument(
        "not enough terms: no candidate degree shape fits the prefix");
  }
  GuessReport report;
  report.kind = GuessKind::algebraic;
  report.used = fit_rows;

  // Powers of the generating function mod t^L.
  TruncatedSeries y = zero_series(L, SeriesKind::ordinary);
  for (long n = 0; n < L; ++n) {
    y.coeffs[static_cast<size_t>(n)] = s.at(n);
  }
  std::vector<TruncatedSeries> y_pows;
  y_pows.push_back(constant_series(Rat(1), L, SeriesKind::ordinary));
  for (long j = 1; j <= m_max; ++j) {
    y_pows.push_back(cauchy_product(y_pows.back(), y));
  }

  for (long m = 1; m <= m_max; ++m) {
    for (long d = 0; d <= d_max; ++d) {
      long unknowns = (m + 1) * (d + 1);
      if (unknowns > fit_rows) {
        continue;
      }
      // Unknown x_{j,i} multiplies t^i y^j; row n demands the t^n
      // coefficient of sum x_{j,i} t^i y^j to vanish.  Fit rows only; the
      // holdout rows act as the verification.
      Mat system;
      for (long n = 0; n < fit_rows; ++n) {
        Vec row(static_cast<size_t>(unknowns), Rat(0));
        for (long j = 0; j <= m; ++j) {
          for (long i = 0; i <= d; ++i) {
            if (n - i >= 0) {
              row[static_cast<size_t>(j * (d + 1) + i)] =
                  y_pows[static_cast<size_t>(j)].coeff(n - i);
            }
          }
        }
        system.push_back(std::move(row));
      }
      std::vector<Vec> kernel = kernel_basis(system, unknowns);
      for (const Vec& v : kernel) {
        AlgebraicEquation eq;
        for (long j = 0; j <= m; ++j) {
          std::vector<Rat> cs;
          for (long i = 0; i <= d; ++i) {
            cs.push_back(v[static_cast<size_t>(j * (d + 1) + i)]);
          }
          eq.coeffs.push_back(poly_from(std::move(cs)));
        }
        eq = normalize_algebraic(eq);
        if (eq.coeffs.empty()) {
          continue;
        }
        if (!verify_algebraic(eq, y)) {
          continue;  // fails on the held-out terms
        }
        report.found = true;
        report.algebraic = std::move(eq);
        report.verified = holdout;
        return report;
      }
    }
  }
  return report;
}

}  // namespace codimkit
