#pragma once

#include "codimkit/rational.hpp"

#include <stdexcept>
#include <vector>

namespace codimkit {

// A finite prefix of an infinite sequence a_0, a_1, ... of rationals.
// terms[i] stores a_{offset+i}; indices below offset are implicitly zero.
struct Sequence {
  long offset = 0;
  std::vector<Rat> terms;

  // One past the last index whose value is known.
  long end() const { return offset + static_cast<long>(terms.size()); }

  bool knows(long n) const { return n < end(); }

  // a_n: implicit zero below the offset; throws past the stored prefix.
  Rat at(long n) const {
    if (n < offset) {
      return Rat(0);
    }
    if (n >= end()) {
      throw std::out_of_range("sequence term index " + std::to_string(n) +
                              " beyond known prefix (end " +
                              std::to_string(end()) + ")");
    }
    return terms[static_cast<size_t>(n - offset)];
  }
};

inline Sequence make_sequence(std::vector<Rat> terms, long offset = 0) {
  if (terms.empty()) {
    throw std::invalid_argument("sequence needs at least one term");
  }
  if (offset < 0) {
    throw std::invalid_argument("sequence offset must be non-negative");
  }
  return Sequence{offset, std::move(terms)};
}

// a_0 ... a_{N-1} as a plain vector; requires the prefix to be known.
inline std::vector<Rat> prefix_terms(const Sequence& s, long N) {
  std::vector<Rat> out;
  out.reserve(static_cast<size_t>(N));
  for (long n = 0; n < N; ++n) {
    out.push_back(s.at(n));
  }
  return out;
}

}  // namespace codimkit
