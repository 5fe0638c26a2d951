#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "codimkit/rational.hpp"

namespace codimkit {

// Noncommutative polynomial with rational coefficients: each monomial is the
// sequence of (1-based) variable indices it multiplies together.
struct NCPoly {
  std::map<std::vector<int>, Rat> terms;
};

NCPoly nc_add(const NCPoly& a, const NCPoly& b);
NCPoly nc_scale(const Rat& c, const NCPoly& a);
NCPoly nc_mul(const NCPoly& a, const NCPoly& b);
NCPoly nc_commutator(const NCPoly& a, const NCPoly& b);

// Parse a generator. Accepts the built-in names
//   comm2, comm4, comm5, s4, cbm, hall
// or an expression over variables x1, x2, ... with '+', '-', integer
// coefficients, juxtaposition products, parentheses, commutator brackets
// [f,g], and small integer powers f^k.
NCPoly parse_generator(const std::string& text);

// Per-variable degrees (index i holds the degree of x_{i+1}); throws
// std::invalid_argument unless every monomial has the same content and the
// variables used are exactly x1..xv for some v.
std::vector<long> variable_degrees(const NCPoly& f);

// Full linearization: every occurrence list of a repeated variable is
// replaced by distinct fresh variables in all possible orders, so the result
// is multilinear in x1..xd with d the total degree. In characteristic zero
// the T-ideal is unchanged.
NCPoly multilinearize(const NCPoly& f);

// A multilinear element of degree n as a sparse vector over the n! monomials
// x_{w(1)}...x_{w(n)}: (monomial rank, coefficient), sorted by rank, leading
// coefficient normalized to 1.
using SparseRow = std::vector<std::pair<long, Rat>>;

// Rank of a word (a permutation of 1..n) in lexicographic order, 0-based.
long permutation_index(const std::vector<int>& word);

// Spanning rows of the degree-n multilinear part of the T-ideal generated by
// g: all substitution instances a * g(m_1,...,m_d) * b where the m_j are
// words on disjoint nonempty variable sets, a and b are words on the
// remaining variables, and every variable 1..n appears exactly once.
// Duplicate rows are removed. Capped at n <= 6.
std::vector<SparseRow> tideal_multilinear_span(const NCPoly& g, long n);

// Spanning rows of the degree-n multilinear part of the product of the two
// T-ideals: instances a * F * b * G * c with F an instance of g1 and G an
// instance of g2 (inner factors of the product fold into the sandwich
// words). Capped at n <= 5.
std::vector<SparseRow> product_ideal_multilinear_span(const NCPoly& g1,
                                                      const NCPoly& g2,
                                                      long n);

// Numeric rank certificate for a span inside the n!-dimensional multilinear
// layer.  rank is computed modulo two independent pseudorandom 62-bit primes
// drawn from the seed; disagreement raises std::runtime_error. codim is
// n! - rank. With exact = true the rank is recomputed in exact rational
// arithmetic instead (allowed for n <= 4) and the primes are reported as 0.
struct OracleResult {
  long n = 0;
  long rank = 0;
  long codim = 0;
  unsigned long long prime1 = 0;
  unsigned long long prime2 = 0;
  unsigned long long seed = 0;
};

OracleResult codimension_from_rows(const std::vector<SparseRow>& rows, long n,
                                   unsigned long long seed,
                                   bool exact = false);

OracleResult oracle_tideal(const NCPoly& g, long n, unsigned long long seed,
                           bool exact = false);

OracleResult oracle_product(const NCPoly& g1, const NCPoly& g2, long n,
                            unsigned long long seed, bool exact = false);

}  // namespace codimkit
