#include "classgen/matrix.hpp"

#include <utility>

namespace classgen {

namespace {

void require_same(const Mat& a, const Mat& b) {
  if (!same_field(a.field(), b.field())) throw Error(Errc::MixedFields, "operands live over different fields");
  if (a.n() != b.n())
    throw Error(Errc::DegreeMismatch, "degrees " + std::to_string(a.n()) + " and " + std::to_string(b.n()));
}

}  // namespace

Mat::Mat(FieldPtr field, Eigen::Index n) : field_(std::move(field)) {
  if (n < 1 || n > 255) throw Error(Errc::DegreeOutOfRange, "matrix degree " + std::to_string(n));
  codes_ = CodeMatrix::Zero(n, n);
}

Mat::Mat(FieldPtr field, CodeMatrix codes) : field_(std::move(field)), codes_(std::move(codes)) {
  if (codes_.rows() != codes_.cols()) throw Error(Errc::DegreeMismatch, "matrix is not square");
  if (codes_.rows() < 1 || codes_.rows() > 255)
    throw Error(Errc::DegreeOutOfRange, "matrix degree " + std::to_string(codes_.rows()));
  if (codes_.size() > 0 && codes_.maxCoeff() >= field_->q())
    throw Error(Errc::MixedFields, "matrix entry outside GF(" + std::to_string(field_->q()) + ")");
}

Mat Mat::identity(FieldPtr field, Eigen::Index n) {
  Mat m(std::move(field), n);
  m.codes_.setIdentity();
  return m;
}

Mat Mat::from_rows(FieldPtr field, const std::vector<std::vector<FieldElem>>& rows) {
  Mat m(std::move(field), static_cast<Eigen::Index>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw Error(Errc::DegreeMismatch, "row " + std::to_string(i) + " has wrong length");
    for (std::size_t j = 0; j < rows.size(); ++j)
      m.set(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j), rows[i][j]);
  }
  return m;
}

void Mat::set(Eigen::Index i, Eigen::Index j, FieldElem v) {
  if (!field_->contains(v)) throw Error(Errc::MixedFields, "entry outside GF(" + std::to_string(field_->q()) + ")");
  codes_(i, j) = v.code;
}

void multiply_into(const Field& field, const CodeMatrix& a, const CodeMatrix& b, CodeMatrix& out) {
  const Eigen::Index n = a.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      std::uint32_t acc = 0;
      for (Eigen::Index l = 0; l < n; ++l) {
        const std::uint32_t x = a(i, l);
        if (x == 0) continue;
        acc = field.raw_add(acc, field.raw_mul(x, b(l, j)));
      }
      out(i, j) = acc;
    }
  }
}

Mat operator*(const Mat& a, const Mat& b) {
  require_same(a, b);
  CodeMatrix out(a.n(), a.n());
  multiply_into(*a.field(), a.codes(), b.codes(), out);
  return Mat(a.field(), std::move(out));
}

Mat transpose(const Mat& a) { return Mat(a.field(), CodeMatrix(a.codes().transpose())); }

FieldElem det(const Mat& a) {
  const Field& f = *a.field();
  CodeMatrix m = a.codes();
  const Eigen::Index n = m.rows();
  std::uint32_t result = 1;
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && m(pivot, col) == 0) ++pivot;
    if (pivot == n) return f.zero();
    if (pivot != col) {
      m.row(pivot).swap(m.row(col));
      result = f.raw_neg(result);
    }
    const std::uint32_t pv = m(col, col);
    result = f.raw_mul(result, pv);
    const std::uint32_t pinv = f.raw_inv(pv);
    for (Eigen::Index r = col + 1; r < n; ++r) {
      if (m(r, col) == 0) continue;
      const std::uint32_t factor = f.raw_neg(f.raw_mul(m(r, col), pinv));
      for (Eigen::Index c = col; c < n; ++c) m(r, c) = f.raw_add(m(r, c), f.raw_mul(factor, m(col, c)));
    }
  }
  return {result};
}

Mat inverse(const Mat& a) {
  const Field& f = *a.field();
  const Eigen::Index n = a.n();
  CodeMatrix m = a.codes();
  CodeMatrix inv = CodeMatrix::Identity(n, n);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && m(pivot, col) == 0) ++pivot;
    if (pivot == n) throw Error(Errc::Singular, "matrix is not invertible");
    if (pivot != col) {
      m.row(pivot).swap(m.row(col));
      inv.row(pivot).swap(inv.row(col));
    }
    const std::uint32_t pinv = f.raw_inv(m(col, col));
    for (Eigen::Index c = 0; c < n; ++c) {
      m(col, c) = f.raw_mul(m(col, c), pinv);
      inv(col, c) = f.raw_mul(inv(col, c), pinv);
    }
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == col || m(r, col) == 0) continue;
      const std::uint32_t factor = f.raw_neg(m(r, col));
      for (Eigen::Index c = 0; c < n; ++c) {
        m(r, c) = f.raw_add(m(r, c), f.raw_mul(factor, m(col, c)));
        inv(r, c) = f.raw_add(inv(r, c), f.raw_mul(factor, inv(col, c)));
      }
    }
  }
  return Mat(a.field(), std::move(inv));
}

Mat conjugate(const Mat& a, std::uint32_t q0) {
  const Field& f = *a.field();
  // Validates q0 once; the entrywise map then cannot fail.
  f.frobenius(f.one(), q0);
  CodeMatrix out = a.codes().unaryExpr([&](std::uint32_t c) { return f.frobenius({c}, q0).code; });
  return Mat(a.field(), std::move(out));
}

Mat conj_transpose(const Mat& a, std::uint32_t q0) { return transpose(conjugate(a, q0)); }

std::size_t digit_width(std::uint32_t p) noexcept {
  std::size_t w = 1;
  for (std::uint64_t limit = 256; limit < p; limit <<= 8) ++w;
  return w;
}

void encode_canonical_into(const Field& field, const CodeMatrix& codes, std::string& out) {
  const std::uint32_t p = field.p();
  const std::uint32_t k = field.k();
  const std::size_t width = digit_width(p);
  out.clear();
  out.reserve(1 + static_cast<std::size_t>(codes.size()) * k * width);
  out.push_back(static_cast<char>(codes.rows()));
  for (Eigen::Index i = 0; i < codes.size(); ++i) {
    std::uint32_t rest = codes.data()[i];
    if (p == 2 && k == 1) {
      out.push_back(static_cast<char>(rest));
      continue;
    }
    for (std::uint32_t d = 0; d < k; ++d) {
      std::uint32_t digit = rest % p;
      rest /= p;
      for (std::size_t b = 0; b < width; ++b) {
        out.push_back(static_cast<char>(digit & 0xffu));
        digit >>= 8;
      }
    }
  }
}

std::string encode_canonical(const Mat& a) {
  std::string out;
  encode_canonical_into(*a.field(), a.codes(), out);
  return out;
}

Mat decode_canonical(FieldPtr field, std::string_view bytes) {
  if (bytes.empty()) throw Error(Errc::MalformedInput, "empty encoding");
  const auto n = static_cast<Eigen::Index>(static_cast<unsigned char>(bytes[0]));
  const std::uint32_t p = field->p();
  const std::uint32_t k = field->k();
  const std::size_t width = digit_width(p);
  if (bytes.size() != 1 + static_cast<std::size_t>(n * n) * k * width)
    throw Error(Errc::MalformedInput, "encoding length does not match degree " + std::to_string(n));
  CodeMatrix codes(n, n);
  std::size_t pos = 1;
  for (Eigen::Index i = 0; i < n * n; ++i) {
    std::uint64_t code = 0, scale = 1;
    for (std::uint32_t d = 0; d < k; ++d) {
      std::uint32_t digit = 0;
      for (std::size_t b = 0; b < width; ++b)
        digit |= std::uint32_t{static_cast<unsigned char>(bytes[pos++])} << (8 * b);
      if (digit >= p) throw Error(Errc::MalformedInput, "digit out of range");
      code += digit * scale;
      scale *= p;
    }
    codes.data()[i] = static_cast<std::uint32_t>(code);
  }
  return Mat(std::move(field), std::move(codes));
}

}  // namespace classgen
