#pragma once

#include <span>

#include "classgen/matrix.hpp"

// Elementary matrices from which every generator is assembled. All indices in
// this header are 1-based, matching the usual row/column numbering of the
// tables; `n` is always the half-degree parameter.
//
// Monomial matrices use the column convention: the permutation sigma places
// its nonzero entry of column j in row sigma(j).

namespace classgen {

enum class DualKind {
  Sp,     // i' = 2n + 1 - i on 1..2n
  UEven,  // i' = 2n + 1 - i on 1..2n
  UOdd,   // i' = 2n + 2 - i on 1..2n+1, with n+1 fixed
};

/// Matrix degree on which the dual-index involution of `kind` acts.
int dual_degree(DualKind kind, int n) noexcept;

/// The paired index i'.
int dual_index(int i, DualKind kind, int n);

/// I + alpha E_ij.
Mat elem_x(const FieldPtr& field, int i, int j, FieldElem alpha, int deg);

/// Identity with alpha at (i, i).
Mat elem_h(const FieldPtr& field, int i, FieldElem alpha, int deg);

/// w_i: permutation matrix of (i, i+1) with -1 at (i+1, i).
Mat transposition_w(const FieldPtr& field, int i, int deg);

/// w = w_1 w_2 ... w_{deg-1}: 1 at (1, deg), -1 at (i+1, i).
Mat cycle_w(const FieldPtr& field, int deg);

/// Monomial matrix with entry (sigma(j), j) set to `entries[j-1]`.
/// `sigma` is 1-based: sigma[j-1] is the image of j.
Mat monomial(const FieldPtr& field, std::span<const int> sigma, std::span<const FieldElem> entries);

// Symplectic atoms, degree 2n.
Mat hat_h(const FieldPtr& field, int i, FieldElem alpha, int n);
Mat hat_x(const FieldPtr& field, int i, int j, FieldElem alpha, int n);
/// Long root transvection x_{i i'}(alpha).
Mat hat_z(const FieldPtr& field, int i, FieldElem alpha, int n);
/// Signed 2n-cycle (1, 2, ..., n, 1', 2', ..., n') with -1 at (2n, n).
Mat hat_w(const FieldPtr& field, int n);

// Unitary atoms. The field must be GF(q^2); bars are x -> x^q.
Mat tilde_h(const FieldPtr& field, int i, FieldElem alpha, int deg, DualKind kind);
Mat tilde_x(const FieldPtr& field, int i, int j, FieldElem alpha, int deg, DualKind kind);
/// hat_w's shape with eta at (1, n+1) and -eta^{-1} at (2n, n); needs
/// eta + bar(eta) = 0.
Mat tilde_w(const FieldPtr& field, int n, FieldElem eta);
/// Identity with the central 3x3 block [1, a, b; 0, 1, -bar(a); 0, 0, 1]
/// on rows n..n+2 of a degree-(2n+1) matrix. Requires a bar(a) + b + bar(b) = 0.
Mat q_block(const FieldPtr& field, FieldElem alpha, FieldElem beta, int deg);
/// Signed 2n-cycle (n', ..., 2', 1', n, ..., 2, 1) on degree 2n+1 with -1 at
/// the fixed point (n+1, n+1).
Mat w_prime(const FieldPtr& field, int n);

}  // namespace classgen
