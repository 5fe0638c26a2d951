#pragma once

#include <map>
#include <string>
#include <vector>

#include "codimkit/rational.hpp"

namespace codimkit {

// Integer partition with parts weakly decreasing and positive; the empty
// partition is allowed and has weight 0.
struct Partition {
  std::vector<long> parts;

  long weight() const;
  long length() const { return static_cast<long>(parts.size()); }
};

bool operator==(const Partition& a, const Partition& b);
bool operator!=(const Partition& a, const Partition& b);
bool operator<(const Partition& a, const Partition& b);  // lex on parts

// Validating constructor: parts must be weakly decreasing and positive.
Partition make_partition(std::vector<long> parts);

Partition conjugate(const Partition& p);

// Text form: comma-separated parts with repeats compressed as "part^count";
// "3,1^2" means (3,1,1).  The empty partition reads/prints as "0" (an empty
// string also parses as empty).
Partition partition_from_string(const std::string& text);
std::string partition_to_string(const Partition& p);

// All partitions of n, in decreasing lexicographic order.
std::vector<Partition> partitions_of(long n);

// Dimension of the irreducible character indexed by p, via the hook length
// formula.
Int hook_degree(const Partition& p);

// The same dimension counted directly as standard tableaux by peeling
// removable corners; exponential in the weight, so capped at weight 12
// (throws std::domain_error beyond).  Serves as an independent check of
// hook_degree.
Int count_syt(const Partition& p);

// Littlewood–Richardson coefficients c^nu_{lambda,mu} for all nu, computed
// by direct enumeration of lattice skew tableaux.  Capped at
// |lambda|+|mu| <= 14 (throws std::domain_error beyond).
std::map<Partition, long> lr_coefficients(const Partition& lambda,
                                          const Partition& mu);

// Non-negative integer combination of irreducible characters of degree n.
struct CharacterSum {
  long n = 0;
  std::map<Partition, long> terms;
};

bool operator==(const CharacterSum& a, const CharacterSum& b);

// Validating constructor: every shape must have weight n and positive
// multiplicity (zero multiplicities are dropped).
CharacterSum make_character_sum(long n,
                                std::map<Partition, long> terms);

CharacterSum character_add(const CharacterSum& a, const CharacterSum& b);

// Total degree: sum of mult * hook_degree over the terms.
Int degree_of(const CharacterSum& sum);

// Induced (outer) product lifted bilinearly through the
// Littlewood–Richardson expansion; degrees add.
CharacterSum outer_product(const CharacterSum& a, const CharacterSum& b);

// Degree of the outer product of single characters of degrees d_xi (on k
// letters) and d_eta (on n-k letters): binom(n,k) * d_xi * d_eta.
Int outer_degree(const Int& d_xi, const Int& d_eta, long k, long n);

}  // namespace codimkit
