#pragma once

#include "polyhankel/hankel.hpp"
#include "polyhankel/symbols.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace polyhankel::io {

using Record = nlohmann::ordered_json;

/// Symbol as a list of {"exponents": [...], "re": x, "im": y} in graded order.
[[nodiscard]] Record symbol_to_json(const Symbol& f);
/// Inverse of symbol_to_json; throws std::invalid_argument on malformed input.
[[nodiscard]] Symbol symbol_from_json(const nlohmann::json& j);

/// Doubles with 17 significant digits; non-finite values become "inf", "-inf", "nan".
[[nodiscard]] std::string format_double(double x);
/// One-line serialization of a record using format_double for every float.
[[nodiscard]] std::string dump(const Record& r);

/// "re+imi" / "re-imi" with 17 significant digits.
[[nodiscard]] std::string format_complex(complex z);
/// Accepts "re", "re+imi", "re-imi", "imi", "i", "-i"; throws std::invalid_argument.
[[nodiscard]] complex parse_complex(std::string_view s);
/// Comma-separated list of parse_complex tokens.
[[nodiscard]] std::vector<complex> parse_complex_list(std::string_view s);

/// Row per line, entries separated by commas.
void write_matrix_csv(std::ostream& os, const ComplexMatrix& m);
[[nodiscard]] ComplexMatrix read_matrix_csv(std::istream& is);
/// Line i: "i,label,exponents" with the integer label left empty on overflow
/// and exponents space separated.
void write_labels(std::ostream& os, const std::vector<MultiIndex>& labels);

} // namespace polyhankel::io
