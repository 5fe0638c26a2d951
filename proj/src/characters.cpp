#include "codimkit/characters.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace codimkit {

long Partition::weight() const {
  return std::accumulate(parts.begin(), parts.end(), 0L);
}

bool operator==(const Partition& a, const Partition& b) {
  return a.parts == b.parts;
}

bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }

bool operator<(const Partition& a, const Partition& b) {
  return a.parts < b.parts;
}

Partition make_partition(std::vector<long> parts) {
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) {
      throw std::invalid_argument("partition parts must be positive");
    }
    if (i > 0 && parts[i] > parts[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
  return Partition{std::move(parts)};
}

Partition conjugate(const Partition& p) {
  std::vector<long> out;
  if (p.parts.empty()) {
    return Partition{};
  }
  for (long c = 0; c < p.parts.front(); ++c) {
    long count = 0;
    for (long part : p.parts) {
      if (part > c) {
        ++count;
      }
    }
    out.push_back(count);
  }
  return Partition{std::move(out)};
}

Partition partition_from_string(const std::string& text) {
  std::vector<long> parts;
  std::string trimmed;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      trimmed.push_back(c);
    }
  }
  if (trimmed.empty() || trimmed == "0") {
    return Partition{};
  }
  std::stringstream ss(trimmed);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) {
      throw std::invalid_argument("empty entry in partition text");
    }
    long part = 0;
    long count = 1;
    size_t caret = token.find('^');
    try {
      if (caret == std::string::npos) {
        part = std::stol(token);
      } else {
        part = std::stol(token.substr(0, caret));
        count = std::stol(token.substr(caret + 1));
      }
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed partition entry: " + token);
    }
    if (count < 1) {
      throw std::invalid_argument("repeat count must be positive: " + token);
    }
    for (long i = 0; i < count; ++i) {
      parts.push_back(part);
    }
  }
  return make_partition(std::move(parts));
}

std::string partition_to_string(const Partition& p) {
  if (p.parts.empty()) {
    return "0";
  }
  std::string out;
  size_t i = 0;
  while (i < p.parts.size()) {
    size_t j = i;
    while (j < p.parts.size() && p.parts[j] == p.parts[i]) {
      ++j;
    }
    if (!out.empty()) {
      out += ',';
    }
    out += std::to_string(p.parts[i]);
    if (j - i > 1) {
      out += '^' + std::to_string(j - i);
    }
    i = j;
  }
  return out;
}

namespace {

void partitions_rec(long n, long max_part, std::vector<long>& cur,
                    std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(Partition{cur});
    return;
  }
  for (long part = std::min(n, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions_rec(n - part, part, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(long n) {
  if (n < 0) {
    throw std::invalid_argument("cannot partition a negative integer");
  }
  std::vector<Partition> out;
  std::vector<long> cur;
  partitions_rec(n, n, cur, out);
  if (n == 0) {
    out.clear();
    out.push_back(Partition{});
  }
  return out;
}

Int hook_degree(const Partition& p) {
  long n = p.weight();
  if (n == 0) {
    return 1;
  }
  Partition conj = conjugate(p);
  Int product(1);
  for (size_t i = 0; i < p.parts.size(); ++i) {
    for (long j = 0; j < p.parts[i]; ++j) {
      long hook = (p.parts[i] - j) +
                  (conj.parts[static_cast<size_t>(j)] - static_cast<long>(i)) -
                  1;
      product *= hook;
    }
  }
  return factorial(static_cast<unsigned long>(n)) / product;
}

namespace {

Int count_syt_rec(std::vector<long>& parts) {
  if (parts.empty()) {
    return 1;
  }
  Int total(0);
  for (size_t i = 0; i < parts.size(); ++i) {
    bool corner =
        (i + 1 == parts.size()) || (parts[i] > parts[i + 1]);
    if (!corner) {
      continue;
    }
    if (parts[i] == 1) {
      parts.pop_back();  // only the last row can have size 1 and be a corner
      total += count_syt_rec(parts);
      parts.push_back(1);
    } else {
      --parts[i];
      total += count_syt_rec(parts);
      ++parts[i];
    }
  }
  return total;
}

}  // namespace

Int count_syt(const Partition& p) {
  if (p.weight() > 12) {
    throw std::domain_error(
        "direct tableau count capped at weight 12; use hook_degree");
  }
  std::vector<long> parts = p.parts;
  return count_syt_rec(parts);
}

namespace {

struct SkewCell {
  long row;
  long col;
  long right_index;  // index in fill order of the right neighbor, -1 if none
  long above_index;  // index in fill order of the neighbor above, -1 if none
};

// Count lattice skew tableaux of shape nu/lambda with content mu, filling
// cells in reverse reading order (top row first, right to left) so the
// lattice property is a prefix condition on the counts.
long count_lattice_fillings(const Partition& nu, const Partition& lambda,
                            const Partition& mu) {
  long m = mu.length();
  std::vector<SkewCell> cells;
  std::vector<std::vector<long>> index_at(nu.parts.size());
  for (size_t r = 0; r < nu.parts.size(); ++r) {
    long lam_r = r < lambda.parts.size() ? lambda.parts[r] : 0;
    index_at[r].assign(static_cast<size_t>(nu.parts[r]), -1);
    for (long c = nu.parts[r] - 1; c >= lam_r; --c) {
      SkewCell cell{static_cast<long>(r), c, -1, -1};
      if (c + 1 < nu.parts[r]) {
        cell.right_index = index_at[r][static_cast<size_t>(c + 1)];
      }
      if (r > 0 && c < nu.parts[r - 1]) {
        long lam_above = r - 1 < lambda.parts.size()
                             ? lambda.parts[r - 1]
                             : 0;
        if (c >= lam_above) {
          cell.above_index = index_at[r - 1][static_cast<size_t>(c)];
        }
      }
      index_at[r][static_cast<size_t>(c)] =
          static_cast<long>(cells.size());
      cells.push_back(cell);
    }
  }

  std::vector<long> entry(cells.size(), 0);
  std::vector<long> counts(static_cast<size_t>(m) + 1, 0);
  long total = 0;
  auto rec = [&](auto&& self, size_t idx) -> void {
    if (idx == cells.size()) {
      ++total;
      return;
    }
    const SkewCell& cell = cells[idx];
    for (long e = 1; e <= m; ++e) {
      if (counts[static_cast<size_t>(e)] >= mu.parts[static_cast<size_t>(e - 1)]) {
        continue;  // content budget for this entry is used up
      }
      if (e > 1 && counts[static_cast<size_t>(e)] + 1 >
                       counts[static_cast<size_t>(e - 1)]) {
        continue;  // would break the lattice prefix property
      }
      if (cell.right_index >= 0 &&
          e > entry[static_cast<size_t>(cell.right_index)]) {
        continue;  // rows weakly increase left to right
      }
      if (cell.above_index >= 0 &&
          e <= entry[static_cast<size_t>(cell.above_index)]) {
        continue;  // columns strictly increase downward
      }
      entry[idx] = e;
      ++counts[static_cast<size_t>(e)];
      self(self, idx + 1);
      --counts[static_cast<size_t>(e)];
    }
  };
  rec(rec, 0);
  return total;
}

bool contains(const Partition& nu, const Partition& lambda) {
  if (lambda.parts.size() > nu.parts.size()) {
    return false;
  }
  for (size_t i = 0; i < lambda.parts.size(); ++i) {
    if (nu.parts[i] < lambda.parts[i]) {
      return false;
    }
  }
  return true;
}

}  // namespace

std::map<Partition, long> lr_coefficients(const Partition& lambda,
                                          const Partition& mu) {
  if (lambda.weight() + mu.weight() > 14) {
    throw std::domain_error(
        "product expansion capped at combined weight 14");
  }
  std::map<Partition, long> out;
  for (const Partition& nu : partitions_of(lambda.weight() + mu.weight())) {
    if (!contains(nu, lambda)) {
      continue;
    }
    long c = count_lattice_fillings(nu, lambda, mu);
    if (c > 0) {
      out.emplace(nu, c);
    }
  }
  return out;
}

bool operator==(const CharacterSum& a, const CharacterSum& b) {
  return a.n == b.n && a.terms == b.terms;
}

CharacterSum make_character_sum(long n, std::map<Partition, long> terms) {
  if (n < 0) {
    throw std::invalid_argument("character degree must be non-negative");
  }
  for (auto it = terms.begin(); it != terms.end();) {
    if (it->first.weight() != n) {
      throw std::invalid_argument("shape weight does not match the degree");
    }
    if (it->second < 0) {
      throw std::invalid_argument("multiplicities must be non-negative");
    }
    if (it->second == 0) {
      it = terms.erase(it);
    } else {
      ++it;
    }
  }
  return CharacterSum{n, std::move(terms)};
}

CharacterSum character_add(const CharacterSum& a, const CharacterSum& b) {
  if (a.n != b.n) {
    throw std::invalid_argument("cannot add characters of different degrees");
  }
  CharacterSum out = a;
  for (const auto& [shape, mult] : b.terms) {
    out.terms[shape] += mult;
  }
  return out;
}

Int degree_of(const CharacterSum& sum) {
  Int total(0);
  for (const auto& [shape, mult] : sum.terms) {
    total += Int(mult) * hook_degree(shape);
  }
  return total;
}

CharacterSum outer_product(const CharacterSum& a, const CharacterSum& b) {
  CharacterSum out;
  out.n = a.n + b.n;
  for (const auto& [lambda, am] : a.terms) {
    for (const auto& [mu, bm] : b.terms) {
      for (const auto& [nu, c] : lr_coefficients(lambda, mu)) {
        out.terms[nu] += am * bm * c;
      }
    }
  }
  return out;
}

Int outer_degree(const Int& d_xi, const Int& d_eta, long k, long n) {
  if (k < 0 || k > n) {
    throw std::invalid_argument("split point must lie between 0 and n");
  }
  return Int(binomial(static_cast<unsigned long>(n), k)) * d_xi * d_eta;
}

}  // namespace codimkit
