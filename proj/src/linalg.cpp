#include "codimkit/linalg.hpp"

#include <stdexcept>

namespace codimkit {

std::vector<long> rref(Mat& m) {
  std::vector<long> pivots;
  if (m.empty()) {
    return pivots;
  }
  size_t cols = m[0].size();
  size_t row = 0;
  for (size_t col = 0; col < cols && row < m.size(); ++col) {
    size_t pivot = row;
    while (pivot < m.size() && m[pivot][col] == 0) {
      ++pivot;
    }
    if (pivot == m.size()) {
      continue;
    }
    std::swap(m[row], m[pivot]);
    Rat inv = 1 / m[row][col];
    for (size_t j = col; j < cols; ++j) {
      m[row][j] *= inv;
    }
    for (size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col] == 0) {
        continue;
      }
      Rat factor = m[i][col];
      for (size_t j = col; j < cols; ++j) {
        m[i][j] -= factor * m[row][j];
      }
    }
    pivots.push_back(static_cast<long>(col));
    ++row;
  }
  return pivots;
}

long rank(Mat m) {
  return static_cast<long>(rref(m).size());
}

std::optional<Vec> solve(const Mat& A, const Vec& b) {
  if (A.size() != b.size()) {
    throw std::invalid_argument("system matrix and right-hand side disagree");
  }
  if (A.empty()) {
    return Vec{};
  }
  size_t cols = A[0].size();
  Mat aug = A;
  for (size_t i = 0; i < aug.size(); ++i) {
    aug[i].push_back(b[i]);
  }
  std::vector<long> pivots = rref(aug);
  // A pivot in the appended column marks an inconsistent system.
  if (!pivots.empty() && pivots.back() == static_cast<long>(cols)) {
    return std::nullopt;
  }
  Vec x(cols, Rat(0));
  for (size_t r = 0; r < pivots.size(); ++r) {
    x[static_cast<size_t>(pivots[r])] = aug[r][cols];
  }
  return x;
}

std::vector<Vec> kernel_basis(const Mat& A, long cols) {
  Mat m = A;
  for (const Vec& row : m) {
    if (static_cast<long>(row.size()) != cols) {
      throw std::invalid_argument("matrix row length disagrees with cols");
    }
  }
  std::vector<long> pivots = rref(m);
  std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
  for (long p : pivots) {
    is_pivot[static_cast<size_t>(p)] = true;
  }
  std::vector<Vec> basis;
  for (long free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[static_cast<size_t>(free_col)]) {
      continue;
    }
    Vec v(static_cast<size_t>(cols), Rat(0));
    v[static_cast<size_t>(free_col)] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) {
      v[static_cast<size_t>(pivots[r])] = -m[r][static_cast<size_t>(free_col)];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace codimkit
