#include <random>
#include <vector>

#include "doctest.h"

#include "codimkit/linalg.hpp"
#include "codimkit/polynomial.hpp"
#include "codimkit/sequence.hpp"
#include "codimkit/series.hpp"

using namespace codimkit;

namespace {

Sequence seq_of(std::vector<long> values, long offset = 0) {
  std::vector<Rat> terms;
  for (long v : values) {
    terms.emplace_back(v);
  }
  return make_sequence(std::move(terms), offset);
}

// Small random rationals with denominators 1..3, reproducible by seed.
std::vector<Rat> random_terms(std::mt19937_64& rng, long n) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 3);
  std::vector<Rat> out;
  for (long i = 0; i < n; ++i) {
    out.push_back(Rat(num(rng), den(rng)));
  }
  return out;
}

Rat pow_rat(const Rat& base, long e) {
  Rat out(1);
  for (long i = 0; i < e; ++i) {
    out *= base;
  }
  return out;
}

}  // namespace

TEST_CASE("sequence access: zeros below the offset, throws past the prefix") {
  Sequence s = seq_of({5, 7, 11}, 2);
  CHECK(s.at(0) == 0);
  CHECK(s.at(1) == 0);
  CHECK(s.at(2) == 5);
  CHECK(s.at(4) == 11);
  CHECK(s.end() == 5);
  CHECK(s.knows(4));
  CHECK(!s.knows(5));
  CHECK_THROWS_AS(s.at(5), std::out_of_range);
  CHECK_THROWS_AS(make_sequence({}, 0), std::invalid_argument);
  CHECK_THROWS_AS(make_sequence({Rat(1)}, -1), std::invalid_argument);
}

TEST_CASE("binomial convolution of two all-ones sequences gives 2^n") {
  // c_n = sum_k binom(n,k) * 1 * 1 = 2^n.
  Sequence ones = seq_of({1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1});
  Sequence c = lr_product_seq(ones, ones, 16);
  Rat expect(1);
  for (long n = 0; n < 16; ++n) {
    CHECK(c.at(n) == expect);
    expect *= 2;
  }
}

TEST_CASE("binomial convolution of geometric sequences adds the ratios") {
  // sum_k binom(n,k) 2^k 3^(n-k) = (2+3)^n by the binomial theorem.
  std::vector<Rat> a, b;
  for (long n = 0; n < 12; ++n) {
    a.push_back(pow_rat(Rat(2), n));
    b.push_back(pow_rat(Rat(3), n));
  }
  Sequence c = lr_product_seq(make_sequence(a), make_sequence(b), 12);
  for (long n = 0; n < 12; ++n) {
    CHECK(c.at(n) == pow_rat(Rat(5), n));
  }
}

TEST_CASE("binomial convolution: unit element, commutativity, associativity") {
  std::mt19937_64 rng(20260821);
  Sequence unit = seq_of({1, 0, 0, 0, 0, 0, 0, 0, 0, 0});
  for (int trial = 0; trial < 20; ++trial) {
    Sequence a = make_sequence(random_terms(rng, 10));
    Sequence b = make_sequence(random_terms(rng, 10));
    Sequence c = make_sequence(random_terms(rng, 10));
    Sequence au = lr_product_seq(a, unit, 10);
    Sequence ab = lr_product_seq(a, b, 10);
    Sequence ba = lr_product_seq(b, a, 10);
    Sequence ab_c = lr_product_seq(ab, c, 10);
    Sequence a_bc = lr_product_seq(a, lr_product_seq(b, c, 10), 10);
    for (long n = 0; n < 10; ++n) {
      CHECK(au.at(n) == a.at(n));
      CHECK(ab.at(n) == ba.at(n));
      CHECK(ab_c.at(n) == a_bc.at(n));
    }
  }
}

TEST_CASE("binomial convolution matches exponential-series multiplication") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    Sequence a = make_sequence(random_terms(rng, 12));
    Sequence b = make_sequence(random_terms(rng, 12));
    Sequence via_seq = lr_product_seq(a, b, 12);
    TruncatedSeries via_series =
        cauchy_product(to_exponential(a, 12), to_exponential(b, 12));
    Sequence back = to_ordinary(via_series);
    for (long n = 0; n < 12; ++n) {
      CHECK(via_seq.at(n) == back.at(n));
    }
  }
}

TEST_CASE("square-root series of 1-4t: known prefix and exact square") {
  TruncatedSeries u = series_from({Rat(0), Rat(-4)});
  TruncatedSeries root = binomial_pow_series(Rat(1, 2), u, 12);
  std::vector<long> expect = {1, -2, -2, -4, -10, -28};
  for (size_t n = 0; n < expect.size(); ++n) {
    CHECK(root.coeff(static_cast<long>(n)) == Rat(expect[n]));
  }
  TruncatedSeries square = cauchy_product(root, root);
  CHECK(square.coeff(0) == 1);
  CHECK(square.coeff(1) == -4);
  for (long n = 2; n < square.order(); ++n) {
    CHECK(square.coeff(n) == 0);
  }
}

TEST_CASE("binomial series with integer exponent is the plain power") {
  TruncatedSeries t = series_from({Rat(0), Rat(1)});
  TruncatedSeries cube = binomial_pow_series(Rat(3), t, 8);
  CHECK(cube.coeff(0) == 1);
  CHECK(cube.coeff(1) == 3);
  CHECK(cube.coeff(2) == 3);
  CHECK(cube.coeff(3) == 1);
  CHECK(cube.coeff(4) == 0);
  TruncatedSeries inv = binomial_pow_series(Rat(-1), t, 8);
  for (long n = 0; n < 8; ++n) {
    CHECK(inv.coeff(n) == (n % 2 == 0 ? Rat(1) : Rat(-1)));
  }
  CHECK_THROWS_AS(binomial_pow_series(Rat(1, 2), series_from({Rat(1)}), 4),
                  std::domain_error);
}

TEST_CASE("mobius substitution turns 1/(1-t) into (1-t)/(1-2t)") {
  // b(u) = 1/(1-u) at u = t/(1-t) collapses to (1-t)/(1-2t), whose
  // coefficients are 1, 1, 2, 4, 8, ...
  TruncatedSeries b = geometric_series(Rat(1), 12);
  TruncatedSeries sub = compose_mobius(b, Rat(1), 12);
  CHECK(sub.coeff(0) == 1);
  for (long n = 1; n < 12; ++n) {
    CHECK(sub.coeff(n) == pow_rat(Rat(2), n - 1));
  }
  TruncatedSeries same = compose_mobius(b, Rat(0), 12);
  for (long n = 0; n < 12; ++n) {
    CHECK(same.coeff(n) == b.coeff(n));
  }
}

TEST_CASE("exponential and geometric constructors expand as advertised") {
  TruncatedSeries e2 = exp_series(Rat(2), 10);
  Rat num(1);
  Rat fact(1);
  for (long n = 0; n < 10; ++n) {
    CHECK(e2.coeff(n) == num / fact);
    num *= 2;
    fact *= (n + 1);
  }
  TruncatedSeries g3 = geometric_series(Rat(3), 10);
  for (long n = 0; n < 10; ++n) {
    CHECK(g3.coeff(n) == pow_rat(Rat(3), n));
  }
  // e^t * e^{-t} = 1 as literal series.
  TruncatedSeries prod = cauchy_product(exp_series(Rat(1), 10),
                                        exp_series(Rat(-1), 10));
  CHECK(prod.coeff(0) == 1);
  for (long n = 1; n < 10; ++n) {
    CHECK(prod.coeff(n) == 0);
  }
}

TEST_CASE("ordinary/exponential views are inverse, including offsets") {
  std::mt19937_64 rng(99);
  Sequence s = make_sequence(random_terms(rng, 8), 3);
  TruncatedSeries exp_view = to_exponential(s, 11);
  Sequence back = to_ordinary(exp_view);
  for (long n = 0; n < 11; ++n) {
    CHECK(back.at(n) == s.at(n));
  }
  CHECK(exp_view.coeff(0) == 0);
  CHECK(exp_view.coeff(2) == 0);
}

TEST_CASE("shift, truncate, pad") {
  TruncatedSeries s = series_from({Rat(1), Rat(2), Rat(3)});
  TruncatedSeries up = shift_up(s, 2);
  CHECK(up.order() == 5);
  CHECK(up.coeff(0) == 0);
  CHECK(up.coeff(2) == 1);
  CHECK(up.coeff(4) == 3);
  TruncatedSeries down = shift_down(up, 2);
  CHECK(down == s);
  CHECK_THROWS_AS(shift_down(s, 1), std::domain_error);
  CHECK(truncate(up, 3).order() == 3);
  CHECK(pad_to(s, 6).order() == 6);
  CHECK(pad_to(s, 6).coeff(5) == 0);
}

TEST_CASE("derivative of the geometric series") {
  // (1/(1-t))' = 1/(1-t)^2, whose n-th coefficient is n+1.
  TruncatedSeries g = geometric_series(Rat(1), 12);
  TruncatedSeries d = derivative(g, 1);
  CHECK(d.order() == 11);
  for (long n = 0; n < 11; ++n) {
    CHECK(d.coeff(n) == Rat(n + 1));
  }
  CHECK(derivative(g, 2) == derivative(derivative(g, 1), 1));
}

TEST_CASE("series inverse") {
  TruncatedSeries s = series_from({Rat(1), Rat(-1)});
  TruncatedSeries inv = series_inverse(pad_to(s, 10));
  for (long n = 0; n < 10; ++n) {
    CHECK(inv.coeff(n) == 1);
  }
  TruncatedSeries prod = cauchy_product(pad_to(s, 10), inv);
  CHECK(prod.coeff(0) == 1);
  for (long n = 1; n < 10; ++n) {
    CHECK(prod.coeff(n) == 0);
  }
  CHECK_THROWS_AS(series_inverse(series_from({Rat(0), Rat(1)})),
                  std::domain_error);
}

TEST_CASE("scale_variable rescales the ratio of a geometric series") {
  CHECK(scale_variable(geometric_series(Rat(1), 10), Rat(2)) ==
        geometric_series(Rat(2), 10));
}

TEST_CASE("termwise product windows: offsets and empty overlap") {
  Sequence a = seq_of({1, 2, 3, 4, 5, 6});
  Sequence b = seq_of({10, 20, 30, 40}, 2);
  Sequence h = hadamard_series(a, b);
  CHECK(h.offset == 2);
  CHECK(h.end() == 6);
  CHECK(h.at(2) == 30);
  CHECK(h.at(5) == 240);
  Sequence far = seq_of({1, 2}, 10);
  CHECK_THROWS_AS(hadamard_series(a, far), std::invalid_argument);
}

TEST_CASE("polynomial division, gcd, powers") {
  Polynomial t3m1 = poly_from({Rat(-1), Rat(0), Rat(0), Rat(1)});
  Polynomial tm1 = poly_from({Rat(-1), Rat(1)});
  auto [q, r] = divrem(t3m1, tm1);
  CHECK(q == poly_from({Rat(1), Rat(1), Rat(1)}));
  CHECK(r.is_zero());

  Polynomial a = poly_from({Rat(-1), Rat(0), Rat(1)});   // t^2 - 1
  Polynomial b = poly_from({Rat(1), Rat(-2), Rat(1)});   // (t-1)^2
  CHECK(gcd(a, b) == poly_from({Rat(-1), Rat(1)}));      // monic t - 1

  Polynomial onept = poly_from({Rat(1), Rat(1)});
  Polynomial p4 = pow(onept, 4);
  CHECK(p4 == poly_from({Rat(1), Rat(4), Rat(6), Rat(4), Rat(1)}));
  CHECK(pow(onept, 0) == poly_constant(Rat(1)));
  CHECK(p4.eval(Rat(1)) == 16);
  CHECK(poly_from({Rat(0), Rat(0)}).is_zero());
  CHECK(poly_from({Rat(0)}).degree() == -1);
}

TEST_CASE("linear solve and kernel") {
  // x + y = 3, x - y = 1 has the unique solution (2, 1).
  Mat A = {{Rat(1), Rat(1)}, {Rat(1), Rat(-1)}};
  Vec rhs = {Rat(3), Rat(1)};
  auto x = solve(A, rhs);
  REQUIRE(x.has_value());
  CHECK((*x)[0] == 2);
  CHECK((*x)[1] == 1);

  Mat bad = {{Rat(1), Rat(1)}, {Rat(2), Rat(2)}};
  CHECK(!solve(bad, {Rat(1), Rat(3)}).has_value());

  Mat wide = {{Rat(1), Rat(1), Rat(1)}};
  auto basis = kernel_basis(wide, 3);
  CHECK(basis.size() == 2);
  for (const Vec& v : basis) {
    Rat dot(0);
    for (size_t j = 0; j < 3; ++j) {
      dot += wide[0][j] * v[j];
    }
    CHECK(dot == 0);
  }

  // Random matrices: every kernel vector annihilates, and
  // rank + kernel dimension = number of columns.
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> entry(-4, 4);
  for (int trial = 0; trial < 10; ++trial) {
    Mat m(4, Vec(6));
    for (auto& row : m) {
      for (auto& e : row) {
        e = Rat(entry(rng));
      }
    }
    long rk = rank(m);
    auto kb = kernel_basis(m, 6);
    CHECK(rk + static_cast<long>(kb.size()) == 6);
    for (const Vec& v : kb) {
      for (const Vec& row : m) {
        Rat dot(0);
        for (size_t j = 0; j < 6; ++j) {
          dot += row[j] * v[j];
        }
        CHECK(dot == 0);
      }
    }
  }
}
