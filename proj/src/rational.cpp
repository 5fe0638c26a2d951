#include "codimkit/rational.hpp"

#include <mutex>
#include <stdexcept>

namespace codimkit {

Rat rat_from_string(const std::string& text) {
  if (text.empty()) {
    throw std::invalid_argument("empty rational literal");
  }
  // Validate shape before handing to the bignum parser: an optional sign,
  // digits, then optionally '/' followed by digits (no sign after '/').
  auto is_digits = [](const std::string& s, size_t from, size_t to) {
    if (from >= to) return false;
    for (size_t i = from; i < to; ++i) {
      if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
  };
  size_t slash = text.find('/');
  size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  bool ok;
  if (slash == std::string::npos) {
    ok = is_digits(text, start, text.size());
  } else {
    ok = is_digits(text, start, slash) &&
         is_digits(text, slash + 1, text.size());
  }
  if (!ok) {
    throw std::invalid_argument("malformed rational literal: " + text);
  }
  Rat value;
  if (value.set_str(text, 10) != 0) {
    throw std::invalid_argument("malformed rational literal: " + text);
  }
  if (value.get_den() == 0) {
    throw std::invalid_argument("zero denominator in rational literal: " +
                                text);
  }
  value.canonicalize();
  return value;
}

std::string rat_to_string(const Rat& value) {
  return value.get_str();
}

bool is_integer(const Rat& value) {
  return value.get_den() == 1;
}

Int factorial(unsigned long n) {
  static std::mutex mutex;
  static std::vector<Int> cache{1_mpz};
  std::lock_guard<std::mutex> lock(mutex);
  while (cache.size() <= n) {
    cache.push_back(cache.back() * static_cast<unsigned long>(cache.size()));
  }
  return cache[n];
}

Int binomial(unsigned long n, long k) {
  if (k < 0 || static_cast<unsigned long>(k) > n) {
    return 0;
  }
  Int result;
  mpz_bin_uiui(result.get_mpz_t(), n, static_cast<unsigned long>(k));
  return result;
}

}  // namespace codimkit
