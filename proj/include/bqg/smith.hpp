#pragma once

#include <bqg/integer_matrix.hpp>

#include <vector>

namespace bqg {

/// D = U * M * V with U, V unimodular and D diagonal, d1 | d2 | ..., d_i >= 0.
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  std::vector<Integer> diagonal;  // min(rows, cols) entries
};

/// Dense algorithm with transforms; meant for small matrices.
SmithForm smith_normal_form(const IntMatrix& m);

/// Nonzero invariant factors d1 | d2 | ... of M (length = rank). Uses
/// sparse unit-pivot elimination first, then dense reduction of what is left.
std::vector<Integer> invariant_factors(const IntMatrix& m);

std::size_t matrix_rank(const IntMatrix& m);

/// Nonzero diagonal of the Smith form of a dense matrix, no transforms.
std::vector<Integer> dense_invariant_factors(std::vector<std::vector<Integer>> a);

}  // namespace bqg
