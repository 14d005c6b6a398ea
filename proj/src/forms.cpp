#include "classgen/forms.hpp"

#include <string>

namespace classgen {

namespace {

void require_quadratic(const Field& field, std::uint32_t q) {
  if (std::uint64_t{q} * q != field.q())
    throw Error(Errc::NotAQuadraticExtension,
                "GF(" + std::to_string(field.q()) + ") is not GF(" + std::to_string(q) + "^2)");
}

Mat form_image(const Mat& x, const GramForm& form) {
  if (x.n() != form.dim)
    throw Error(Errc::DegreeMismatch, "matrix degree " + std::to_string(x.n()) + ", form dimension " + std::to_string(form.dim));
  if (form.kind == FormKind::Symplectic) return transpose(x) * form.j * x;
  return conj_transpose(x, x.field()->quadratic_subfield_order()) * form.j * x;
}

}  // namespace

GramForm gram(const FieldPtr& field, FormKind kind, int dim) {
  if (kind == FormKind::Symplectic && dim % 2 != 0)
    throw Error(Errc::OddSymplecticDimension, "symplectic forms need even dimension, got " + std::to_string(dim));
  if (kind == FormKind::Unitary) field->quadratic_subfield_order();
  Mat j(field, dim);
  for (int i = 0; i < dim; ++i) {
    const bool lower = kind == FormKind::Symplectic && i >= dim / 2;
    j.set(i, dim - 1 - i, lower ? field->neg(field->one()) : field->one());
  }
  return {kind, dim, std::move(j)};
}

bool preserves(const Mat& x, const GramForm& form) { return form_image(x, form) == form.j; }

std::optional<std::pair<Eigen::Index, Eigen::Index>> first_violation(const Mat& x, const GramForm& form) {
  const Mat image = form_image(x, form);
  for (Eigen::Index r = 0; r < image.n(); ++r)
    for (Eigen::Index c = 0; c < image.n(); ++c)
      if (image(r, c) != form.j(r, c)) return std::pair{r, c};
  return std::nullopt;
}

FieldElem special_scalar_eta(const Field& field, std::uint32_t q) {
  require_quadratic(field, q);
  if (q % 2 == 0) return field.one();
  return field.pow(field.xi(), (q + 1) / 2);
}

FieldElem special_scalar_beta(const Field& field, std::uint32_t q) {
  require_quadratic(field, q);
  // bar(xi)/xi = xi^(q-1).
  const FieldElem ratio = field.pow(field.xi(), q - 1);
  return field.neg(field.inv(field.add(field.one(), ratio)));
}

bool is_special(const Mat& x) { return det(x) == x.field()->one(); }

}  // namespace classgen
