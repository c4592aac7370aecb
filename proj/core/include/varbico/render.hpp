#pragma once

#include "varbico/descent.hpp"

#include "json.hpp"

#include <string>

namespace varbico {

enum class Format { text, latex, json };

/// Canonical renderings. The text form is the DSL expression syntax and
/// round-trips through parse_expression.
std::string render_poly(const JetPoly& p, const Signature& sig, Format format);
std::string render_biform(const BiForm& a, const Signature& sig, Format format);

/// Independent-variable list of a multi-index, e.g. "t,t,x"; empty for |J| = 0.
std::string render_multi_index(const MultiIndex& J, const Signature& sig);

/// Value object of the stable JSON schema:
/// {kind, grading, terms:[{coeff, hgen, vgen}]}.
nlohmann::ordered_json biform_json(const BiForm& a, const Signature& sig,
                                   const std::string& kind);

} // namespace varbico
