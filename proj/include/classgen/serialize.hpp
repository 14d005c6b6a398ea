#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "classgen/families.hpp"
#include "classgen/forms.hpp"

namespace classgen {

enum class OutputFormat { Json, Text, Gap };

std::optional<OutputFormat> parse_format(std::string_view text);

/// Gram form of the family, if it has one (Sp and the unitary families).
std::optional<GramForm> family_form(const GeneratorPair& pair);

/// {"family","degree","q","case_label","field":{...},"generators":[{"rows":...},{"rows":...}]}
/// with an extra "form" block when `emit_form` is set and the family has one.
/// Keys keep this order; output ends with a newline.
std::string to_json(const GeneratorPair& pair, bool emit_form = false);

/// One row per line; bare integers when k = 1, coefficient tuples otherwise.
std::string to_text(const GeneratorPair& pair, bool emit_form = false);

/// GAP-ready `gens := [...]` with entries written as powers of `xi`, preceded
/// by the definition of `xi` through the field's modulus.
std::string to_gap(const GeneratorPair& pair, bool emit_form = false);

std::string render(const GeneratorPair& pair, OutputFormat format, bool emit_form = false);

/// Inverse of `to_json`. Rebuilds the field and checks that its modulus and
/// primitive element match the document.
GeneratorPair pair_from_json(std::string_view json);

}  // namespace classgen
