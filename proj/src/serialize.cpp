#include "classgen/serialize.hpp"

#include <map>
#include <sstream>

#include "json.hpp"

namespace classgen {

using ordered_json = nlohmann::ordered_json;

std::optional<OutputFormat> parse_format(std::string_view text) {
  if (text == "json") return OutputFormat::Json;
  if (text == "text") return OutputFormat::Text;
  if (text == "gap" || text == "gap-style") return OutputFormat::Gap;
  return std::nullopt;
}

std::optional<GramForm> family_form(const GeneratorPair& pair) {
  const int n = static_cast<int>(pair.a.n());
  switch (pair.spec.family) {
    case Family::SP: return gram(pair.field, FormKind::Symplectic, n);
    case Family::GU:
    case Family::SU: return gram(pair.field, FormKind::Unitary, n);
    default: return std::nullopt;
  }
}

namespace {

ordered_json coeff_list(std::span<const std::uint32_t> c) {
  ordered_json out = ordered_json::array();
  for (auto v : c) out.push_back(v);
  return out;
}

ordered_json matrix_json(const Mat& m) {
  const Field& f = *m.field();
  ordered_json rows = ordered_json::array();
  for (Eigen::Index i = 0; i < m.n(); ++i) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index j = 0; j < m.n(); ++j) row.push_back(coeff_list(f.coeffs(m(i, j))));
    rows.push_back(std::move(row));
  }
  return ordered_json{{"rows", std::move(rows)}};
}

std::string coeff_string(const std::vector<std::uint32_t>& c) {
  std::string s = "[";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + "]";
}

std::string field_summary(const Field& f) {
  return "GF(" + std::to_string(f.q()) + "): p=" + std::to_string(f.p()) + " k=" + std::to_string(f.k()) +
         " modulus=" + coeff_string(f.modulus()) + " xi=" + coeff_string(f.coeffs(f.xi()));
}

std::string text_entry(const Field& f, FieldElem e) {
  const auto c = f.coeffs(e);
  if (c.size() == 1) return std::to_string(c[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + ")";
}

void text_matrix(std::ostringstream& os, const Mat& m) {
  const Field& f = *m.field();
  for (Eigen::Index i = 0; i < m.n(); ++i) {
    for (Eigen::Index j = 0; j < m.n(); ++j) os << (j ? " " : "") << text_entry(f, m(i, j));
    os << '\n';
  }
}

std::string gap_entry(const Field& f, FieldElem e) {
  if (e == f.zero()) return "0*xi";
  return "xi^" + std::to_string(f.log(e));
}

void gap_matrix(std::ostringstream& os, const Mat& m, std::size_t indent, std::map<std::uint32_t, FieldElem>& used) {
  const Field& f = *m.field();
  os << "[ ";
  for (Eigen::Index i = 0; i < m.n(); ++i) {
    os << (i ? ",\n" + std::string(indent + 2, ' ') : std::string()) << "[ ";
    for (Eigen::Index j = 0; j < m.n(); ++j) {
      if (m(i, j) != f.zero()) used.emplace(f.log(m(i, j)), m(i, j));
      os << (j ? ", " : "") << gap_entry(f, m(i, j));
    }
    os << " ]";
  }
  os << " ]";
}

}  // namespace

std::string to_json(const GeneratorPair& pair, bool emit_form) {
  const Field& f = *pair.field;
  ordered_json doc;
  doc["family"] = std::string(short_name(pair.spec.family));
  doc["degree"] = pair.spec.degree;
  doc["q"] = pair.spec.q;
  doc["case_label"] = pair.case_label;
  doc["field"] = ordered_json{{"p", f.p()},
                              {"k", f.k()},
                              {"modulus", coeff_list(f.modulus())},
                              {"xi", coeff_list(f.coeffs(f.xi()))}};
  doc["generators"] = ordered_json::array({matrix_json(pair.a), matrix_json(pair.b)});
  if (emit_form) {
    if (auto form = family_form(pair)) {
      ordered_json block = matrix_json(form->j);
      block["kind"] = form->kind == FormKind::Symplectic ? "symplectic" : "unitary";
      doc["form"] = std::move(block);
    }
  }
  return doc.dump() + "\n";
}

std::string to_text(const GeneratorPair& pair, bool emit_form) {
  std::ostringstream os;
  os << to_string(pair.spec) << "  case: " << pair.case_label << '\n';
  os << "field " << field_summary(*pair.field) << '\n';
  os << "\ngenerator a:\n";
  text_matrix(os, pair.a);
  os << "\ngenerator b:\n";
  text_matrix(os, pair.b);
  if (emit_form) {
    if (auto form = family_form(pair)) {
      os << "\nform J (" << (form->kind == FormKind::Symplectic ? "symplectic" : "unitary") << "):\n";
      text_matrix(os, form->j);
    }
  }
  return os.str();
}

std::string to_gap(const GeneratorPair& pair, bool emit_form) {
  const Field& f = *pair.field;
  const std::string prime_field = "GF(" + std::to_string(f.p()) + ")";
  const std::string field = "GF(" + std::to_string(f.q()) + ")";
  std::ostringstream os;
  os << "# " << to_string(pair.spec) << "  case: " << pair.case_label << '\n';
  os << "# field " << field_summary(f) << '\n';
  os << "# coefficient lists are constant term first; entries are powers of xi, 0*xi is zero\n";
  os << "t := RootsOfUPol(" << field << ", UnivariatePolynomial(" << prime_field << ", "
     << coeff_string(f.modulus()) << "*One(" << prime_field << ")))[1];;\n";
  os << "xi := ValuePol(" << coeff_string(f.coeffs(f.xi())) << "*One(" << prime_field << "), t);;\n";
  std::map<std::uint32_t, FieldElem> used;
  std::ostringstream body;
  body << "gens := [\n  ";
  gap_matrix(body, pair.a, 2, used);
  body << ",\n  ";
  gap_matrix(body, pair.b, 2, used);
  body << "\n];;\n";
  if (emit_form) {
    if (auto form = family_form(pair)) {
      body << "J := ";
      gap_matrix(body, form->j, 5, used);
      body << ";;\n";
    }
  }
  for (const auto& [e, elem] : used) os << "# xi^" << e << " = " << coeff_string(f.coeffs(elem)) << '\n';
  os << body.str();
  return os.str();
}

std::string render(const GeneratorPair& pair, OutputFormat format, bool emit_form) {
  switch (format) {
    case OutputFormat::Json: return to_json(pair, emit_form);
    case OutputFormat::Text: return to_text(pair, emit_form);
    case OutputFormat::Gap: return to_gap(pair, emit_form);
  }
  return {};
}

namespace {

Mat matrix_from_json(const FieldPtr& f, const ordered_json& block) {
  const auto& rows = block.at("rows");
  std::vector<std::vector<FieldElem>> out;
  for (const auto& row : rows) {
    auto& r = out.emplace_back();
    for (const auto& entry : row) r.push_back(f->from_coeffs(entry.get<std::vector<std::uint32_t>>()));
  }
  return Mat::from_rows(f, out);
}

}  // namespace

GeneratorPair pair_from_json(std::string_view text) {
  try {
    const ordered_json doc = ordered_json::parse(text);
    const auto family = parse_family(doc.at("family").get<std::string>());
    if (!family) throw Error(Errc::MalformedInput, "unknown family");
    GroupSpec spec{*family, doc.at("degree").get<int>(), doc.at("q").get<std::uint64_t>()};
    const auto& fb = doc.at("field");
    FieldPtr f = Field::create(fb.at("p").get<std::uint32_t>(), fb.at("k").get<std::uint32_t>());
    if (fb.at("modulus").get<std::vector<std::uint32_t>>() != f->modulus() ||
        f->from_coeffs(fb.at("xi").get<std::vector<std::uint32_t>>()) != f->xi())
      throw Error(Errc::MalformedInput, "field block does not match the canonical field");
    const auto& gens = doc.at("generators");
    if (gens.size() != 2) throw Error(Errc::MalformedInput, "expected two generators");
    return {matrix_from_json(f, gens[0]), matrix_from_json(f, gens[1]), spec, f,
            doc.at("case_label").get<std::string>()};
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::MalformedInput, e.what());
  }
}

}  // namespace classgen
