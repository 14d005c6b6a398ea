#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "classgen/gf.hpp"

namespace classgen {

/// Element codes laid out row-major; see `FieldElem`.
using CodeMatrix = Eigen::Matrix<std::uint32_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Dense square matrix over a finite field. Indices are 0-based.
class Mat {
 public:
  Mat() = default;
  /// n x n zero matrix.
  Mat(FieldPtr field, Eigen::Index n);
  Mat(FieldPtr field, CodeMatrix codes);

  static Mat identity(FieldPtr field, Eigen::Index n);
  static Mat from_rows(FieldPtr field, const std::vector<std::vector<FieldElem>>& rows);

  Eigen::Index n() const noexcept { return codes_.rows(); }
  const FieldPtr& field() const noexcept { return field_; }
  const CodeMatrix& codes() const noexcept { return codes_; }

  FieldElem operator()(Eigen::Index i, Eigen::Index j) const { return {codes_(i, j)}; }
  void set(Eigen::Index i, Eigen::Index j, FieldElem v);

  friend bool operator==(const Mat& a, const Mat& b) {
    return same_field(a.field_, b.field_) && a.codes_.rows() == b.codes_.rows() && a.codes_ == b.codes_;
  }

 private:
  FieldPtr field_;
  CodeMatrix codes_;
};

/// Ring product; MixedFields / DegreeMismatch on incompatible operands.
Mat operator*(const Mat& a, const Mat& b);

/// Product into a preallocated result, no checks. Hot path of the closure.
void multiply_into(const Field& field, const CodeMatrix& a, const CodeMatrix& b, CodeMatrix& out);

Mat transpose(const Mat& a);

/// Determinant by Gaussian elimination, pivoting on the first nonzero entry
/// of each column.
FieldElem det(const Mat& a);

/// Gauss-Jordan inverse; throws Singular when det(a) = 0.
Mat inverse(const Mat& a);

/// Entrywise x -> x^q0 followed by transposition. The field must have
/// cardinality q0^2.
Mat conj_transpose(const Mat& a, std::uint32_t q0);

/// Entrywise x -> x^q0 without transposition.
Mat conjugate(const Mat& a, std::uint32_t q0);

/// Canonical byte layout: one byte holding the degree, then every entry in
/// row-major order as k base-p digits, constant term first. Each digit takes
/// `digit_width(p)` bytes, little-endian (one byte whenever p <= 256).
std::string encode_canonical(const Mat& a);
void encode_canonical_into(const Field& field, const CodeMatrix& codes, std::string& out);
Mat decode_canonical(FieldPtr field, std::string_view bytes);
std::size_t digit_width(std::uint32_t p) noexcept;

}  // namespace classgen
