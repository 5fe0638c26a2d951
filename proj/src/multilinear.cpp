#include "codimkit/multilinear.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

namespace codimkit {

NCPoly nc_add(const NCPoly& a, const NCPoly& b) {
  NCPoly out = a;
  for (const auto& [mono, c] : b.terms) {
    Rat& slot = out.terms[mono];
    slot += c;
    if (slot == 0) {
      out.terms.erase(mono);
    }
  }
  return out;
}

NCPoly nc_scale(const Rat& c, const NCPoly& a) {
  NCPoly out;
  if (c == 0) {
    return out;
  }
  for (const auto& [mono, k] : a.terms) {
    out.terms.emplace(mono, c * k);
  }
  return out;
}

NCPoly nc_mul(const NCPoly& a, const NCPoly& b) {
  NCPoly out;
  for (const auto& [ma, ca] : a.terms) {
    for (const auto& [mb, cb] : b.terms) {
      std::vector<int> mono = ma;
      mono.insert(mono.end(), mb.begin(), mb.end());
      Rat& slot = out.terms[mono];
      slot += ca * cb;
      if (slot == 0) {
        out.terms.erase(mono);
      }
    }
  }
  return out;
}

NCPoly nc_commutator(const NCPoly& a, const NCPoly& b) {
  return nc_add(nc_mul(a, b), nc_scale(Rat(-1), nc_mul(b, a)));
}

// --- generator parsing ----------------------------------------------------

namespace {

struct Parser {
  const std::string& text;
  size_t pos = 0;

  explicit Parser(const std::string& t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  }

  bool peek_is(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }

  void expect(char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c) {
      throw std::invalid_argument("expected '" + std::string(1, c) +
                                  "' at position " + std::to_string(pos) +
                                  " of generator expression");
    }
    ++pos;
  }

  long read_integer() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    if (pos == start) {
      throw std::invalid_argument("expected a number at position " +
                                  std::to_string(start) +
                                  " of generator expression");
    }
    return std::stol(text.substr(start, pos - start));
  }

  NCPoly parse_expr() {
    skip_ws();
    long sign = 1;
    if (peek_is('-')) {
      ++pos;
      sign = -1;
    } else if (peek_is('+')) {
      ++pos;
    }
    NCPoly acc = nc_scale(Rat(sign), parse_term());
    while (true) {
      skip_ws();
      if (peek_is('+')) {
        ++pos;
        acc = nc_add(acc, parse_term());
      } else if (peek_is('-')) {
        ++pos;
        acc = nc_add(acc, nc_scale(Rat(-1), parse_term()));
      } else {
        break;
      }
    }
    return acc;
  }

  NCPoly parse_term() {
    skip_ws();
    Rat coeff(1);
    bool have_factor = false;
    NCPoly acc;
    acc.terms.emplace(std::vector<int>{}, Rat(1));  // empty product
    if (pos < text.size() &&
        std::isdigit(static_cast<unsigned char>(text[pos]))) {
      coeff = Rat(read_integer());
    }
    while (true) {
      skip_ws();
      if (pos >= text.size()) {
        break;
      }
      char c = text[pos];
      if (c == 'x' || c == '[' || c == '(') {
        acc = nc_mul(acc, parse_factor());
        have_factor = true;
      } else {
        break;
      }
    }
    if (!have_factor && coeff == 1) {
      throw std::invalid_argument("expected a factor at position " +
                                  std::to_string(pos) +
                                  " of generator expression");
    }
    return nc_scale(coeff, acc);
  }

  NCPoly parse_factor() {
    NCPoly base = parse_atom();
    skip_ws();
    if (peek_is('^')) {
      ++pos;
      long e = read_integer();
      if (e < 1 || e > 8) {
        throw std::invalid_argument("power out of range in generator");
      }
      NCPoly acc = base;
      for (long i = 1; i < e; ++i) {
        acc = nc_mul(acc, base);
      }
      return acc;
    }
    return base;
  }

  NCPoly parse_atom() {
    skip_ws();
    if (pos >= text.size()) {
      throw std::invalid_argument("unexpected end of generator expression");
    }
    char c = text[pos];
    if (c == 'x') {
      ++pos;
      long v = read_integer();
      if (v < 1 || v > 32) {
        throw std::invalid_argument("variable index out of range");
      }
      NCPoly out;
      out.terms.emplace(std::vector<int>{static_cast<int>(v)}, Rat(1));
      return out;
    }
    if (c == '[') {
      ++pos;
      NCPoly lhs = parse_expr();
      expect(',');
      NCPoly rhs = parse_expr();
      expect(']');
      return nc_commutator(lhs, rhs);
    }
    if (c == '(') {
      ++pos;
      NCPoly inner = parse_expr();
      expect(')');
      return inner;
    }
    throw std::invalid_argument("unexpected character '" + std::string(1, c) +
                                "' at position " + std::to_string(pos) +
                                " of generator expression");
  }
};

NCPoly standard_polynomial_s4() {
  NCPoly out;
  std::vector<int> perm{1, 2, 3, 4};
  do {
    long inversions = 0;
    for (size_t i = 0; i < perm.size(); ++i) {
      for (size_t j = i + 1; j < perm.size(); ++j) {
        if (perm[i] > perm[j]) {
          ++inversions;
        }
      }
    }
    out.terms.emplace(perm, inversions % 2 == 0 ? Rat(1) : Rat(-1));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

NCPoly parse_generator(const std::string& text) {
  if (text == "comm2") {
    return parse_generator("[x1,x2]");
  }
  if (text == "comm4") {
    return parse_generator("[[[x1,x2],x3],x4]");
  }
  if (text == "comm5") {
    return parse_generator("[[[[x1,x2],x3],x4],x5]");
  }
  if (text == "s4") {
    return standard_polynomial_s4();
  }
  if (text == "cbm") {
    return parse_generator("[[[x1,x2],[x3,x4]],x5]");
  }
  if (text == "hall") {
    return parse_generator("[[x1,x2]^2,x3]");
  }
  Parser p(text);
  NCPoly out = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) {
    throw std::invalid_argument("trailing input at position " +
                                std::to_string(p.pos) +
                                " of generator expression");
  }
  if (out.terms.empty()) {
    throw std::invalid_argument("generator is identically zero");
  }
  return out;
}

std::vector<long> variable_degrees(const NCPoly& f) {
  if (f.terms.empty()) {
    throw std::invalid_argument("generator is identically zero");
  }
  std::vector<long> reference;
  bool first = true;
  for (const auto& [mono, c] : f.terms) {
    (void)c;
    int max_var = 0;
    for (int v : mono) {
      max_var = std::max(max_var, v);
    }
    std::vector<long> degs(static_cast<size_t>(max_var), 0);
    for (int v : mono) {
      ++degs[static_cast<size_t>(v - 1)];
    }
    if (first) {
      reference = degs;
      first = false;
    } else if (degs != reference) {
      throw std::invalid_argument(
          "generator is not multihomogeneous: monomials differ in content");
    }
  }
  for (long d : reference) {
    if (d == 0) {
      throw std::invalid_argument(
          "generator variables must be exactly x1..xv with every one used");
    }
  }
  return reference;
}

NCPoly multilinearize(const NCPoly& f) {
  std::vector<long> degs = variable_degrees(f);
  std::vector<long> offset(degs.size() + 1, 0);
  for (size_t i = 0; i < degs.size(); ++i) {
    offset[i + 1] = offset[i] + degs[i];
  }
  NCPoly out;
  for (const auto& [mono, coeff] : f.terms) {
    // Fresh labels for each variable’s occurrences, over every order.
    std::vector<std::vector<int>> labelings(degs.size());
    for (size_t i = 0; i < degs.size(); ++i) {
      for (long k = 0; k < degs[i]; ++k) {
        labelings[i].push_back(static_cast<int>(offset[i] + k + 1));
      }
    }
    auto emit = [&](auto&& self, size_t var) -> void {
      if (var == labelings.size()) {
        std::vector<int> relabeled;
        std::vector<long> used(degs.size(), 0);
        for (int v : mono) {
          size_t i = static_cast<size_t>(v - 1);
          relabeled.push_back(
              labelings[i][static_cast<size_t>(used[i]++)]);
        }
        Rat& slot = out.terms[relabeled];
        slot += coeff;
        if (slot == 0) {
          out.terms.erase(relabeled);
        }
        return;
      }
      std::sort(labelings[var].begin(), labelings[var].end());
      do {
        self(self, var + 1);
      } while (std::next_permutation(labelings[var].begin(),
                                     labelings[var].end()));
    };
    emit(emit, 0);
  }
  return out;
}

// --- spanning rows --------------------------------------------------------

namespace {

unsigned long long factorial_u64(long n) {
  unsigned long long f = 1;
  for (long i = 2; i <= n; ++i) {
    f *= static_cast<unsigned long long>(i);
  }
  return f;
}

std::vector<int> unrank_permutation(unsigned long long rank, long n) {
  std::vector<int> pool;
  for (long i = 1; i <= n; ++i) {
    pool.push_back(static_cast<int>(i));
  }
  std::vector<int> out;
  unsigned long long f = factorial_u64(n);
  for (long i = n; i >= 1; --i) {
    f /= static_cast<unsigned long long>(i);
    size_t d = static_cast<size_t>(rank / f);
    rank %= f;
    out.push_back(pool[d]);
    pool.erase(pool.begin() + static_cast<long>(d));
  }
  return out;
}

// Segment layout of one substitution instance: alternating free "gap" words
// and the argument blocks of each factor.
struct SpanLayout {
  // Minimum length per segment, in order: gap, factor-0 blocks, gap,
  // factor-1 blocks, ..., gap.
  std::vector<long> min_len;
  // For segment s: -1 for a gap, otherwise the factor it belongs to.
  std::vector<long> factor_of;
  // For each factor: indices of its block segments, in argument order.
  std::vector<std::vector<long>> blocks_of;
};

SpanLayout make_layout(const std::vector<long>& degrees) {
  SpanLayout layout;
  layout.blocks_of.resize(degrees.size());
  auto push_gap = [&layout]() {
    layout.min_len.push_back(0);
    layout.factor_of.push_back(-1);
  };
  push_gap();
  for (size_t f = 0; f < degrees.size(); ++f) {
    for (long b = 0; b < degrees[f]; ++b) {
      layout.blocks_of[f].push_back(static_cast<long>(layout.min_len.size()));
      layout.min_len.push_back(1);
      layout.factor_of.push_back(static_cast<long>(f));
    }
    push_gap();
  }
  return layout;
}

void compositions_rec(const std::vector<long>& min_len, size_t idx, long left,
                      std::vector<long>& cur,
                      std::vector<std::vector<long>>& out) {
  if (idx == min_len.size()) {
    if (left == 0) {
      out.push_back(cur);
    }
    return;
  }
  long remaining_min = 0;
  for (size_t j = idx + 1; j < min_len.size(); ++j) {
    remaining_min += min_len[j];
  }
  for (long len = min_len[idx]; len <= left - remaining_min; ++len) {
    cur.push_back(len);
    compositions_rec(min_len, idx + 1, left - len, cur, out);
    cur.pop_back();
  }
}

using MonomialList = std::vector<std::pair<std::vector<int>, Rat>>;

// All rows arising from one arrangement of the variables and one cut into
// segments, summed over the factors' monomials.
void rows_for_cut(const SpanLayout& layout,
                  const std::vector<MonomialList>& monomials,
                  const std::vector<std::vector<int>>& segments, long n,
                  std::vector<SparseRow>& out) {
  std::map<long, Rat> row;
  std::vector<int> word;
  word.reserve(static_cast<size_t>(n));
  auto walk = [&](auto&& self, size_t seg, Rat coeff) -> void {
    if (seg == layout.min_len.size()) {
      row[permutation_index(word)] += coeff;
      return;
    }
    long f = layout.factor_of[seg];
    if (f < 0) {
      size_t before = word.size();
      word.insert(word.end(), segments[seg].begin(), segments[seg].end());
      self(self, seg + 1, coeff);
      word.resize(before);
      return;
    }
    // A factor's block region is contiguous; expand all its monomials here
    // and jump past the whole region.
    size_t region_end = seg + layout.blocks_of[static_cast<size_t>(f)].size();
    for (const auto& [mono, c] : monomials[static_cast<size_t>(f)]) {
      size_t before = word.size();
      for (int placeholder : mono) {
        long block_seg =
            layout.blocks_of[static_cast<size_t>(f)]
                            [static_cast<size_t>(placeholder - 1)];
        word.insert(word.end(), segments[static_cast<size_t>(block_seg)].begin(),
                    segments[static_cast<size_t>(block_seg)].end());
      }
      self(self, region_end, coeff * c);
      word.resize(before);
    }
  };
  walk(walk, 0, Rat(1));
  SparseRow sparse;
  for (const auto& [idx, c] : row) {
    if (c != 0) {
      sparse.emplace_back(idx, c);
    }
  }
  if (sparse.empty()) {
    return;
  }
  Rat lead = sparse.front().second;
  for (auto& [idx, c] : sparse) {
    c /= lead;
  }
  out.push_back(std::move(sparse));
}

long thread_budget() {
  long hw = static_cast<long>(std::thread::hardware_concurrency());
  if (hw < 1) {
    hw = 1;
  }
  long cap = std::min<long>(hw, 8);
  if (const char* env = std::getenv("CODIMKIT_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) {
      cap = std::min<long>(v, 32);
    }
  }
  return std::max<long>(1, cap);
}

std::vector<SparseRow> span_rows(const std::vector<NCPoly>& generators,
                                 long n) {
  std::vector<MonomialList> monomials;
  std::vector<long> degrees;
  for (const NCPoly& g : generators) {
    NCPoly lin = multilinearize(g);
    MonomialList list(lin.terms.begin(), lin.terms.end());
    monomials.push_back(std::move(list));
    degrees.push_back(
        static_cast<long>(variable_degrees(lin).size()));
  }
  long total_degree = 0;
  for (long d : degrees) {
    total_degree += d;
  }
  if (total_degree > n) {
    return {};
  }
  SpanLayout layout = make_layout(degrees);
  std::vector<std::vector<long>> comps;
  {
    std::vector<long> cur;
    compositions_rec(layout.min_len, 0, n, cur, comps);
  }
  unsigned long long nfact = factorial_u64(n);
  long threads = std::min<long>(thread_budget(),
                                static_cast<long>(nfact));
  std::vector<std::vector<SparseRow>> chunks(static_cast<size_t>(threads));
  auto worker = [&](long t) {
    unsigned long long lo = nfact * static_cast<unsigned long long>(t) /
                            static_cast<unsigned long long>(threads);
    unsigned long long hi = nfact * static_cast<unsigned long long>(t + 1) /
                            static_cast<unsigned long long>(threads);
    std::vector<std::vector<int>> segments(layout.min_len.size());
    for (unsigned long long r = lo; r < hi; ++r) {
      std::vector<int> w = unrank_permutation(r, n);
      for (const std::vector<long>& comp : comps) {
        long at = 0;
        for (size_t s = 0; s < comp.size(); ++s) {
          segments[s].assign(w.begin() + at, w.begin() + at + comp[s]);
          at += comp[s];
        }
        rows_for_cut(layout, monomials, segments, n,
                     chunks[static_cast<size_t>(t)]);
      }
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (long t = 0; t < threads; ++t) {
      pool.emplace_back(worker, t);
    }
    for (std::thread& th : pool) {
      th.join();
    }
  }
  // Merge in chunk order so the result is independent of the thread count.
  std::vector<SparseRow> out;
  std::set<SparseRow> seen;
  for (const auto& chunk : chunks) {
    for (const SparseRow& row : chunk) {
      if (seen.insert(row).second) {
        out.push_back(row);
      }
    }
  }
  return out;
}

}  // namespace

long permutation_index(const std::vector<int>& word) {
  long n = static_cast<long>(word.size());
  long index = 0;
  unsigned long long f = factorial_u64(n);
  for (long i = 0; i < n; ++i) {
    f /= static_cast<unsigned long long>(n - i);
    long smaller_later = 0;
    for (long j = i + 1; j < n; ++j) {
      if (word[static_cast<size_t>(j)] < word[static_cast<size_t>(i)]) {
        ++smaller_later;
      }
    }
    index += smaller_later * static_cast<long>(f);
  }
  return index;
}

std::vector<SparseRow> tideal_multilinear_span(const NCPoly& g, long n) {
  if (n < 1 || n > 6) {
    throw std::domain_error(
        "ideal span is computed only for degrees 1..6 (cost grows as n!^2)");
  }
  return span_rows({g}, n);
}

std::vector<SparseRow> product_ideal_multilinear_span(const NCPoly& g1,
                                                      const NCPoly& g2,
                                                      long n) {
  if (n < 1 || n > 5) {
    throw std::domain_error(
        "product span is computed only for degrees 1..5 (cost grows as n!^2)");
  }
  return span_rows({g1, g2}, n);
}

// --- numeric rank certificate ---------------------------------------------

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
  return static_cast<uint64_t>(
      static_cast<unsigned __int128>(a) * b % p);
}

uint64_t powmod(uint64_t base, uint64_t exp, uint64_t p) {
  uint64_t acc = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) {
      acc = mulmod(acc, base, p);
    }
    base = mulmod(base, base, p);
    exp >>= 1;
  }
  return acc;
}

bool is_prime_u64(uint64_t x) {
  if (x < 2) {
    return false;
  }
  for (uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                         23ULL, 29ULL, 31ULL, 37ULL}) {
    if (x % small == 0) {
      return x == small;
    }
  }
  uint64_t d = x - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (uint64_t base : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                        23ULL, 29ULL, 31ULL, 37ULL}) {
    uint64_t v = powmod(base, d, x);
    if (v == 1 || v == x - 1) {
      continue;
    }
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      v = mulmod(v, v, x);
      if (v == x - 1) {
        witness = false;
        break;
      }
    }
    if (witness) {
      return false;
    }
  }
  return true;
}

std::pair<uint64_t, uint64_t> primes_from_seed(unsigned long long seed) {
  std::mt19937_64 rng(seed);
  auto next_prime = [&rng]() {
    while (true) {
      uint64_t x = rng();
      x = (x % (1ULL << 61)) | (1ULL << 61) | 1ULL;  // odd, 62 bits
      if (is_prime_u64(x)) {
        return x;
      }
    }
  };
  uint64_t p1 = next_prime();
  uint64_t p2 = next_prime();
  while (p2 == p1) {
    p2 = next_prime();
  }
  return {p1, p2};
}

uint64_t rat_mod(const Rat& r, uint64_t p) {
  uint64_t num = mpz_fdiv_ui(r.get_num().get_mpz_t(), p);
  uint64_t den = mpz_fdiv_ui(r.get_den().get_mpz_t(), p);
  if (den == 0) {
    throw std::runtime_error("denominator divisible by the working prime");
  }
  return mulmod(num, powmod(den, p - 2, p), p);
}

long rank_mod_p(const std::vector<SparseRow>& rows, long dim, uint64_t p) {
  std::map<long, std::vector<uint64_t>> pivots;
  std::vector<uint64_t> v;
  for (const SparseRow& row : rows) {
    v.assign(static_cast<size_t>(dim), 0);
    for (const auto& [idx, c] : row) {
      v[static_cast<size_t>(idx)] = rat_mod(c, p);
    }
    for (const auto& [col, prow] : pivots) {
      uint64_t factor = v[static_cast<size_t>(col)];
      if (factor == 0) {
        continue;
      }
      uint64_t neg = p - factor;
      for (long j = col; j < dim; ++j) {
        v[static_cast<size_t>(j)] =
            (v[static_cast<size_t>(j)] +
             mulmod(neg, prow[static_cast<size_t>(j)], p)) %
            p;
      }
    }
    long lead = -1;
    for (long j = 0; j < dim; ++j) {
      if (v[static_cast<size_t>(j)] != 0) {
        lead = j;
        break;
      }
    }
    if (lead < 0) {
      continue;
    }
    uint64_t inv = powmod(v[static_cast<size_t>(lead)], p - 2, p);
    for (long j = lead; j < dim; ++j) {
      v[static_cast<size_t>(j)] = mulmod(v[static_cast<size_t>(j)], inv, p);
    }
    pivots.emplace(lead, v);
    if (static_cast<long>(pivots.size()) == dim) {
      break;
    }
  }
  return static_cast<long>(pivots.size());
}

long rank_exact(const std::vector<SparseRow>& rows, long dim) {
  std::map<long, std::vector<Rat>> pivots;
  for (const SparseRow& row : rows) {
    std::vector<Rat> v(static_cast<size_t>(dim), Rat(0));
    for (const auto& [idx, c] : row) {
      v[static_cast<size_t>(idx)] = c;
    }
    for (const auto& [col, prow] : pivots) {
      Rat factor = v[static_cast<size_t>(col)];
      if (factor == 0) {
        continue;
      }
      for (long j = col; j < dim; ++j) {
        v[static_cast<size_t>(j)] -= factor * prow[static_cast<size_t>(j)];
      }
    }
    long lead = -1;
    for (long j = 0; j < dim; ++j) {
      if (v[static_cast<size_t>(j)] != 0) {
        lead = j;
        break;
      }
    }
    if (lead < 0) {
      continue;
    }
    Rat inv = 1 / v[static_cast<size_t>(lead)];
    for (long j = lead; j < dim; ++j) {
      v[static_cast<size_t>(j)] *= inv;
    }
    pivots.emplace(lead, std::move(v));
    if (static_cast<long>(pivots.size()) == dim) {
      break;
    }
  }
  return static_cast<long>(pivots.size());
}

}  // namespace

OracleResult codimension_from_rows(const std::vector<SparseRow>& rows, long n,
                                   unsigned long long seed, bool exact) {
  if (n < 1 || n > 6) {
    throw std::domain_error("layer degree must be between 1 and 6");
  }
  long dim = static_cast<long>(factorial_u64(n));
  OracleResult result;
  result.n = n;
  result.seed = seed;
  if (exact) {
    if (n > 4) {
      throw std::domain_error(
          "exact elimination is limited to layers of dimension <= 24");
    }
    result.rank = rank_exact(rows, dim);
  } else {
    auto [p1, p2] = primes_from_seed(seed);
    long r1 = rank_mod_p(rows, dim, p1);
    long r2 = rank_mod_p(rows, dim, p2);
    if (r1 != r2) {
      throw std::runtime_error(
          "rank certificates disagree between the two working primes");
    }
    result.rank = r1;
    result.prime1 = p1;
    result.prime2 = p2;
  }
  result.codim = dim - result.rank;
  return result;
}

OracleResult oracle_tideal(const NCPoly& g, long n, unsigned long long seed,
                           bool exact) {
  return codimension_from_rows(tideal_multilinear_span(g, n), n, seed, exact);
}

OracleResult oracle_product(const NCPoly& g1, const NCPoly& g2, long n,
                            unsigned long long seed, bool exact) {
  return codimension_from_rows(product_ideal_multilinear_span(g1, g2, n), n,
                               seed, exact);
}

}  // namespace codimkit
