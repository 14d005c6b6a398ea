#pragma once

#include <optional>
#include <utility>

#include "classgen/matrix.hpp"

namespace classgen {

enum class FormKind { Symplectic, Unitary };

struct GramForm {
  FormKind kind;
  int dim;
  Mat j;
};

/// Symplectic: antidiagonal, +1 in the top half and -1 in the bottom half.
/// Unitary: antidiagonal of ones.
GramForm gram(const FieldPtr& field, FormKind kind, int dim);

/// X^t J X = J (symplectic) or bar(X)^t J X = J (unitary).
bool preserves(const Mat& x, const GramForm& form);

/// First (row, col), 0-based, where the preservation identity fails.
std::optional<std::pair<Eigen::Index, Eigen::Index>> first_violation(const Mat& x, const GramForm& form);

/// Trace-zero scalar of GF(q^2): xi^((q+1)/2) for odd q, 1 for even q.
FieldElem special_scalar_eta(const Field& field, std::uint32_t q);

/// beta = -(1 + bar(xi)/xi)^{-1}, which satisfies beta + bar(beta) = -1.
FieldElem special_scalar_beta(const Field& field, std::uint32_t q);

/// det(x) = 1.
bool is_special(const Mat& x);

}  // namespace classgen
