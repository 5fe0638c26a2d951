#include <random>
#include <vector>

#include "doctest.h"

#include "codimkit/rational_forms.hpp"
#include "codimkit/series.hpp"

using namespace codimkit;

namespace {

Polynomial poly_l(std::vector<long> coeffs) {
  std::vector<Rat> c;
  for (long v : coeffs) {
    c.emplace_back(v);
  }
  return poly_from(std::move(c));
}

RationalFunction rf(std::vector<long> num, std::vector<long> den) {
  return make_rational(poly_l(std::move(num)), poly_l(std::move(den)));
}

Rat pow_rat(const Rat& base, long e) {
  Rat out(1);
  for (long i = 0; i < e; ++i) {
    out *= base;
  }
  return out;
}

}  // namespace

TEST_CASE("make_rational reduces and pins the constant term of the bottom") {
  RationalFunction r = make_rational(poly_l({2, 2}), poly_l({2}));
  CHECK(r.num == poly_l({1, 1}));
  CHECK(r.den == poly_l({1}));

  // Common factor t-1 cancels.
  RationalFunction s =
      make_rational(poly_l({-1, 0, 1}), poly_l({-1, 1}));  // (t^2-1)/(t-1)
  CHECK(s.num == poly_l({1, 1}));
  CHECK(s.den == poly_l({1}));

  // Denominator is rescaled so den(0) = 1 (2-2t becomes 1-t).
  RationalFunction g = make_rational(poly_l({1}), poly_l({2, -2}));
  CHECK(g.den == poly_from({Rat(1), Rat(-1)}));
  CHECK(g.num == poly_from({Rat(1, 2)}));

  // A pole at the origin is not expandable.
  CHECK_THROWS_AS(make_rational(poly_l({1}), poly_l({0, 1})),
                  std::domain_error);
  // ... unless it cancels.
  RationalFunction ok = make_rational(poly_l({0, 1}), poly_l({0, 1}));
  CHECK(ok.num == poly_l({1}));
}

TEST_CASE("rational arithmetic keeps normal form") {
  RationalFunction a = rf({1}, {1, -1});
  RationalFunction b = rf({1}, {1, -2});
  RationalFunction sum = add(a, b);  // (2-3t)/((1-t)(1-2t))
  CHECK(sum == rf({2, -3}, {1, -3, 2}));
  CHECK(sub(sum, b) == a);
  CHECK(mul(a, b) == rf({1}, {1, -3, 2}));
}

TEST_CASE("expansions of simple closed forms") {
  Sequence g = expand_rational(rf({1}, {1, -2}), 10);
  for (long n = 0; n < 10; ++n) {
    CHECK(g.at(n) == pow_rat(Rat(2), n));
  }
  // (1-t)/(1-2t): 1 then doubling.
  Sequence e = expand_rational(rf({1, -1}, {1, -2}), 10);
  CHECK(e.at(0) == 1);
  for (long n = 1; n < 10; ++n) {
    CHECK(e.at(n) == pow_rat(Rat(2), n - 1));
  }
}

TEST_CASE("recurrence expansion and its rational form: Fibonacci") {
  LinearRecurrence fib{{Rat(1), Rat(1)}, {Rat(0), Rat(1)}, 0};
  Sequence s = expand_recurrence(fib, 10);
  std::vector<long> expect = {0, 1, 1, 2, 3, 5, 8, 13, 21, 34};
  for (size_t n = 0; n < expect.size(); ++n) {
    CHECK(s.at(static_cast<long>(n)) == Rat(expect[n]));
  }
  CHECK(recurrence_to_rational(fib) == rf({0, 1}, {1, -1, -1}));
}

TEST_CASE("zero-order recurrence describes an eventually-zero sequence") {
  LinearRecurrence rec{{}, {Rat(1), Rat(2)}, 2};
  Sequence s = expand_recurrence(rec, 8);
  CHECK(s.at(0) == 1);
  CHECK(s.at(1) == 2);
  for (long n = 2; n < 8; ++n) {
    CHECK(s.at(n) == 0);
  }
  CHECK(recurrence_to_rational(rec) == rf({1, 2}, {1}));
  CHECK_THROWS_AS(
      expand_recurrence(LinearRecurrence{{Rat(1)}, {Rat(1), Rat(1)}, 0}, 5),
      std::invalid_argument);
}

TEST_CASE("recurrence -> rational -> expansion roundtrip on random data") {
  std::mt19937_64 rng(20260821);
  std::uniform_int_distribution<long> small(-3, 3);
  std::uniform_int_distribution<long> order_dist(1, 3);
  std::uniform_int_distribution<long> start_dist(0, 2);
  for (int trial = 0; trial < 25; ++trial) {
    long k = order_dist(rng);
    long start = start_dist(rng);
    LinearRecurrence rec;
    rec.start = start;
    for (long i = 0; i < k; ++i) {
      rec.coeffs.emplace_back(small(rng));
    }
    for (long i = 0; i < start + k; ++i) {
      rec.initial.emplace_back(small(rng));
    }
    Sequence direct = expand_recurrence(rec, 30);
    Sequence via_rational = expand_rational(recurrence_to_rational(rec), 30);
    for (long n = 0; n < 30; ++n) {
      CHECK(direct.at(n) == via_rational.at(n));
    }
  }
}

TEST_CASE("partial fractions: (1+t)/(1-t)^3 has coefficients (n+1)^2") {
  RationalFunction r = rf({1, 1}, {1, -3, 3, -1});
  QuasiPolynomial q = rational_to_quasipolynomial(r);
  CHECK(q.threshold == 0);
  REQUIRE(q.parts.size() == 1);
  CHECK(q.parts[0].first == 1);
  CHECK(q.parts[0].second.degree() == 2);
  for (long n = 0; n < 20; ++n) {
    CHECK(quasipolynomial_eval(q, n) == Rat((n + 1) * (n + 1)));
  }
}

TEST_CASE("partial fractions with a sign-alternating pole") {
  // 1/(1-t^2) = 1, 0, 1, 0, ...
  QuasiPolynomial q = rational_to_quasipolynomial(rf({1}, {1, 0, -1}));
  CHECK(q.parts.size() == 2);
  for (long n = 0; n < 12; ++n) {
    CHECK(quasipolynomial_eval(q, n) == Rat(n % 2 == 0 ? 1 : 0));
  }
}

TEST_CASE("numerator overhang goes into the threshold") {
  RationalFunction r = rf({1, 0, 0, 0, 0, 1}, {1, -1});  // (1+t^5)/(1-t)
  QuasiPolynomial q = rational_to_quasipolynomial(r);
  CHECK(q.threshold == 5);
  Sequence expanded = expand_rational(r, 20);
  for (long n = q.threshold; n < 20; ++n) {
    CHECK(quasipolynomial_eval(q, n) == expanded.at(n));
  }
  CHECK(quasipolynomial_eval(q, 10) == 2);
}

TEST_CASE("an irrational pole pair is reported with its factor") {
  try {
    rational_to_quasipolynomial(rf({1}, {1, -1, -1}));
    FAIL("expected nonsplit_error");
  } catch (const nonsplit_error& e) {
    CHECK(e.factor == poly_l({1, -1, -1}));
  }
}

TEST_CASE("quasi-polynomial eval agrees with expansion on random split forms") {
  // Build denominators as products of (1 - alpha t) with alpha from a fixed
  // pool, so every pole is rational by construction.
  std::mt19937_64 rng(41);
  std::vector<Rat> pool = {Rat(1), Rat(-1), Rat(2), Rat(-2), Rat(3),
                           Rat(1, 2)};
  std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<long> nfac(1, 3);
  std::uniform_int_distribution<long> coef(-4, 4);
  std::uniform_int_distribution<long> ndeg(0, 4);
  for (int trial = 0; trial < 20; ++trial) {
    Polynomial den = poly_constant(Rat(1));
    long f = nfac(rng);
    for (long i = 0; i < f; ++i) {
      den = mul(den, poly_from({Rat(1), -pool[pick(rng)]}));
    }
    std::vector<Rat> num_c;
    long nd = ndeg(rng);
    for (long i = 0; i <= nd; ++i) {
      num_c.emplace_back(coef(rng));
    }
    Polynomial num = poly_from(num_c);
    if (num.is_zero()) {
      num = poly_constant(Rat(1));
    }
    RationalFunction r = make_rational(num, den);
    QuasiPolynomial q = rational_to_quasipolynomial(r);
    Sequence expanded = expand_rational(r, 25);
    for (long n = q.threshold; n < 25; ++n) {
      CHECK(quasipolynomial_eval(q, n) == expanded.at(n));
    }
  }
}

TEST_CASE("exponential-side closed form of the doubling sequence") {
  // (1-t)/(1-2t) expands to 1, 1, 2, 4, ... whose exponential form is
  // 1/2 + (1/2) e^{2t}.
  ExpPolySum e = rational_to_exppoly(rf({1, -1}, {1, -2}));
  REQUIRE(e.parts.size() == 2);
  CHECK(e.parts[0].first == 0);
  CHECK(e.parts[0].second == poly_from({Rat(1, 2)}));
  CHECK(e.parts[1].first == 2);
  CHECK(e.parts[1].second == poly_from({Rat(1, 2)}));
}

TEST_CASE("expanding a polynomial-times-exponential sum") {
  // (t-1)e^{2t} + 2e^t has ordinary coefficients n 2^{n-1} - 2^n + 2,
  // which start 1, 1, 2, 6, 18, 50.
  ExpPolySum e;
  e.parts.push_back({Rat(1), poly_from({Rat(2)})});
  e.parts.push_back({Rat(2), poly_from({Rat(-1), Rat(1)})});
  Sequence s = to_ordinary(exppoly_expand(e, 10));
  std::vector<long> expect = {1, 1, 2, 6, 18, 50};
  for (size_t n = 0; n < expect.size(); ++n) {
    CHECK(s.at(static_cast<long>(n)) == Rat(expect[n]));
  }
}

TEST_CASE("full rational -> exponential-form pipeline on random split forms") {
  std::mt19937_64 rng(43);
  std::vector<Rat> pool = {Rat(1), Rat(-1), Rat(2), Rat(3)};
  std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<long> coef(-3, 3);
  for (int trial = 0; trial < 15; ++trial) {
    Polynomial den = mul(poly_from({Rat(1), -pool[pick(rng)]}),
                         poly_from({Rat(1), -pool[pick(rng)]}));
    std::vector<Rat> num_c;
    for (long i = 0; i <= 3; ++i) {
      num_c.emplace_back(coef(rng));
    }
    Polynomial num = poly_from(num_c);
    if (num.is_zero()) {
      num = poly_constant(Rat(1));
    }
    RationalFunction r = make_rational(num, den);
    Sequence expanded = expand_rational(r, 18);
    Sequence via_exp = to_ordinary(exppoly_expand(rational_to_exppoly(r), 18));
    for (long n = 0; n < 18; ++n) {
      CHECK(via_exp.at(n) == expanded.at(n));
    }
  }
}

TEST_CASE("exponential-form algebra matches series arithmetic") {
  ExpPolySum a;
  a.parts.push_back({Rat(1), poly_from({Rat(1)})});  // e^t
  ExpPolySum square = exppoly_mul(a, a);
  REQUIRE(square.parts.size() == 1);
  CHECK(square.parts[0].first == 2);  // e^t * e^t = e^{2t}

  ExpPolySum b;
  b.parts.push_back({Rat(1), poly_from({Rat(2)})});
  b.parts.push_back({Rat(2), poly_from({Rat(-1), Rat(1)})});
  ExpPolySum bb = exppoly_mul(b, b);
  TruncatedSeries direct = cauchy_product(exppoly_expand(b, 14),
                                          exppoly_expand(b, 14));
  CHECK(exppoly_expand(bb, 14) == direct);
  CHECK(exppoly_expand(exppoly_add(b, b), 14) ==
        exppoly_expand(exppoly_scale(Rat(2), b), 14));
}

TEST_CASE("binomial-convolution product of rational forms, exact") {
  // Geometric ratios add under binomial convolution:
  // 1/(1-t) conv 1/(1-2t) = 1/(1-3t).
  CHECK(lr_product_rational(rf({1}, {1, -1}), rf({1}, {1, -2})) ==
        rf({1}, {1, -3}));

  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> coef(-3, 3);
  auto random_rf = [&]() {
    while (true) {
      std::vector<Rat> num_c, den_c;
      den_c.emplace_back(1);
      for (long i = 0; i < 2; ++i) {
        num_c.emplace_back(coef(rng));
        den_c.emplace_back(coef(rng));
      }
      Polynomial num = poly_from(num_c);
      if (!num.is_zero()) {
        return make_rational(num, poly_from(den_c));
      }
    }
  };
  for (int trial = 0; trial < 10; ++trial) {
    RationalFunction a = random_rf();
    RationalFunction b = random_rf();
    RationalFunction c = lr_product_rational(a, b);
    Sequence direct = lr_product_seq(expand_rational(a, 30),
                                     expand_rational(b, 30), 30);
    Sequence closed = expand_rational(c, 30);
    for (long n = 0; n < 30; ++n) {
      CHECK(closed.at(n) == direct.at(n));
    }
  }
}

TEST_CASE("convolving with a single geometric fraction via substitution") {
  // 1^n conv 2^n = 3^n.
  TruncatedSeries b = geometric_series(Rat(2), 15);
  TruncatedSeries c = lr_fraction(Rat(1), b);
  CHECK(c == geometric_series(Rat(3), 15));

  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> coef(-5, 5);
  for (const Rat& alpha : {Rat(2), Rat(-1), Rat(1, 2)}) {
    std::vector<Rat> terms;
    for (int i = 0; i < 15; ++i) {
      terms.emplace_back(coef(rng));
    }
    Sequence bs = make_sequence(terms);
    TruncatedSeries via_sub = lr_fraction(alpha, series_from(terms));
    Sequence direct = lr_product_seq(
        to_ordinary(geometric_series(alpha, 15)), bs, 15);
    for (long n = 0; n < 15; ++n) {
      CHECK(via_sub.coeff(n) == direct.at(n));
    }
  }
}

TEST_CASE("convolving with a monomial inserts a binomial factor") {
  TruncatedSeries ones = geometric_series(Rat(1), 12);
  TruncatedSeries c = lr_monomial(2, ones);
  for (long n = 0; n < 12; ++n) {
    CHECK(c.coeff(n) == Rat(binomial(static_cast<unsigned long>(n), 2)));
  }
  CHECK_THROWS_AS(lr_monomial(0, ones), std::invalid_argument);
}

TEST_CASE("fraction powers as combinations of monomial convolutions") {
  // 1/(1-beta t)^p = sum_q lambda_q ( (1/(1-beta t)) conv t^q ).
  for (long p = 1; p <= 4; ++p) {
    for (const Rat& beta : {Rat(2), Rat(-1), Rat(1, 2)}) {
      auto combo = fraction_power_as_lr_combination(beta, p);
      CHECK(static_cast<long>(combo.size()) <= p);
      Sequence geo = to_ordinary(geometric_series(beta, 20));
      std::vector<Rat> acc(20, Rat(0));
      for (const auto& [q, lambda] : combo) {
        CHECK(q < p);
        std::vector<Rat> mono(static_cast<size_t>(q) + 1, Rat(0));
        mono.back() = 1;
        Sequence part = lr_product_seq(geo, make_sequence(mono), 20);
        for (long n = 0; n < 20; ++n) {
          acc[static_cast<size_t>(n)] += lambda * part.at(n);
        }
      }
      // Direct expansion of 1/(1-beta t)^p.
      RationalFunction target =
          make_rational(poly_constant(Rat(1)),
                        pow(poly_from({Rat(1), -beta}), p));
      Sequence expect = expand_rational(target, 20);
      for (long n = 0; n < 20; ++n) {
        CHECK(acc[static_cast<size_t>(n)] == expect.at(n));
      }
    }
  }
}

TEST_CASE("termwise product of rational forms, exact") {
  // (n+1) termwise (n+1) = (n+1)^2 whose rational form is (1+t)/(1-t)^3.
  RationalFunction nat = rf({1}, {1, -2, 1});
  CHECK(hadamard_rational(nat, nat) == rf({1, 1}, {1, -3, 3, -1}));
  // 2^n termwise 3^n = 6^n.
  CHECK(hadamard_rational(rf({1}, {1, -2}), rf({1}, {1, -3})) ==
        rf({1}, {1, -6}));
}

TEST_CASE("constant-coefficient operator verification") {
  // y = e^{2t} satisfies y' - 2y = 0.
  TruncatedSeries y = exp_series(Rat(2), 16);
  CHECK(verify_ode(y, {Rat(-2), Rat(1)}, 16));
  CHECK(!verify_ode(y, {Rat(0), Rat(1)}, 16));

  // 1/2 + (1/2)e^{2t} satisfies y'' - 2y' = 0.
  ExpPolySum e;
  e.parts.push_back({Rat(0), poly_from({Rat(1, 2)})});
  e.parts.push_back({Rat(2), poly_from({Rat(1, 2)})});
  CHECK(verify_ode(e, {Rat(0), Rat(-2), Rat(1)}, 16));
  CHECK(!verify_ode(e, {Rat(0), Rat(-1), Rat(1)}, 16));
}

TEST_CASE("certified reconstruction recovers a rational function") {
  RationalFunction r = rf({3, 1}, {1, 1, -2});
  Sequence s = expand_rational(r, 12);
  auto rec = reconstruct_rational(prefix_terms(s, 12), 2);
  REQUIRE(rec.has_value());
  CHECK(*rec == r);

  // Factorial reciprocals admit no small rational form.
  std::vector<Rat> fact_inv;
  Rat f(1);
  for (long n = 0; n < 12; ++n) {
    fact_inv.push_back(1 / f);
    f *= (n + 1);
  }
  CHECK(!reconstruct_rational(fact_inv, 2).has_value());
}
