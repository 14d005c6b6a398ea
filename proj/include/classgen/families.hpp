#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "classgen/matrix.hpp"

namespace classgen {

enum class Family { GL, SL, SP, GU, SU };

/// Short name: gl, sl, sp, gu, su.
std::string_view short_name(Family family) noexcept;
/// Long name: "general linear", "special linear", "symplectic",
/// "general unitary", "special unitary".
std::string_view long_name(Family family) noexcept;
/// Accepts short names and long names with spaces or underscores, any case.
std::optional<Family> parse_family(std::string_view text);

/// One classical group. `degree` is the matrix dimension (Sp degree 4 is
/// Sp(4, q)); `q` is the defining field size, so unitary matrices live over
/// GF(q^2).
struct GroupSpec {
  Family family;
  int degree;
  std::uint64_t q;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

std::string to_string(const GroupSpec& spec);

struct GeneratorPair {
  Mat a;
  Mat b;
  GroupSpec spec;
  FieldPtr field;
  std::string case_label;
};

/// The field the generators of `spec` live over: GF(q), or GF(q^2) for the
/// unitary families. Throws UnsupportedParameters for non-prime-power q.
FieldPtr field_for(const GroupSpec& spec, std::uint64_t cap = kDefaultFieldCap);

/// Throws UnsupportedParameters (naming the nearest covered case) when the
/// tables have no pair for `spec`.
void check_covered(const GroupSpec& spec);

GeneratorPair generator_pair(const GroupSpec& spec, std::uint64_t cap = kDefaultFieldCap);

/// Membership predicate of the family: invertible; det 1 for SL, SP, SU;
/// symplectic form for SP; unitary form for GU, SU.
bool is_member(const Mat& x, Family family);

}  // namespace classgen
