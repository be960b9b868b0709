#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "klyachko/segments/speh.hpp"

namespace klyachko {

/// Grammar (whitespace between tokens is ignored):
///   param := block ( "x" block )*
///   block := "U(" name ":" degree "," d "," t ")" [ "@" rational ]
///          | "P(" "U(" name ":" degree "," d "," t ")" "," rational ")"
/// A trailing '~' on the name marks the dual label. Throws ParseError with
/// the byte offset, or DegreeMismatch when one name carries two degrees.
TadicParameter parse_parameter(std::string_view text);

/// Canonical text, e.g. "U(rho:1,1,3)@0 x P(U(rho:1,2,2),1/4)". Re-parses to
/// an equal parameter.
std::string to_string(const TadicParameter& param);

/// Plain-block form "U(rho:1,1,3)@-1/2".
std::string to_string(const SpehBlock& block);

nlohmann::json block_to_json(const SpehBlock& block, BlockKind kind);

/// {n, blocks, kappa: {r, k}, model, dual_model, unitary_valid}
nlohmann::json parameter_to_json(const TadicParameter& param);

}  // namespace klyachko
