#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace codimkit {

// Exact arithmetic types. Int is an arbitrary-precision integer; Rat is an
// arbitrary-precision rational kept in canonical form (lowest terms, positive
// denominator) by the backing library.
using Int = mpz_class;
using Rat = mpq_class;

// Parses "p", "-p", or "p/q" into a canonical rational.
// Throws std::invalid_argument on malformed input or zero denominator.
Rat rat_from_string(const std::string& text);

// Renders a canonical rational as "p" (denominator 1) or "p/q".
std::string rat_to_string(const Rat& value);

bool is_integer(const Rat& value);

// n! with an internal, thread-safe incremental cache.
Int factorial(unsigned long n);

// binom(n, k); zero when k < 0 or k > n.
Int binomial(unsigned long n, long k);

}  // namespace codimkit
