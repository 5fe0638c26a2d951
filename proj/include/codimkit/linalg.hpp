#pragma once

#include "codimkit/rational.hpp"

#include <optional>
#include <vector>

namespace codimkit {

using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;  // row-major; all rows the same length

// Reduced row echelon form in place; returns the pivot column of each
// nonzero row (so the rank is the size of the returned list).
std::vector<long> rref(Mat& m);

long rank(Mat m);

// One exact solution of A x = b with free variables set to zero, or nullopt
// when the system is inconsistent.
std::optional<Vec> solve(const Mat& A, const Vec& b);

// Canonical basis of the null space of A (from the reduced echelon form,
// one vector per free column, that column's entry set to 1).
std::vector<Vec> kernel_basis(const Mat& A, long cols);

}  // namespace codimkit
