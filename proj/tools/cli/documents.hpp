#pragma once

// JSON documents for algebras, representations, operators, tensors and
// extensions. Indices are 1-based on disk and 0-based in memory; every scalar
// is a string "p" or "p/q".

#include <filesystem>
#include <string>

#include "json.hpp"
#include "mdlie/algebra.hpp"
#include "mdlie/cohomology.hpp"
#include "mdlie/extension.hpp"
#include "mdlie/matrix.hpp"
#include "mdlie/multilinear.hpp"
#include "mdlie/report.hpp"
#include "mdlie/representation.hpp"

namespace mdlie::cli {

using Json = nlohmann::ordered_json;

/// Reads and parses a JSON file. Throws ParseError naming the path.
Json read_json_file(const std::filesystem::path& path);

// Parsers. `where` prefixes error locations, e.g. "algebra.json:/bracket/2/args".
// All of them throw ParseError on malformed input and never verify axioms.
Scalar parse_scalar_json(const Json& j, const std::string& where);
Matrix parse_matrix_rows(const Json& j, std::size_t rows, std::size_t cols, const std::string& where);
/// {"matrix": [[...], ...]} of any shape.
Matrix parse_matrix_document(const Json& j, const std::string& where);
MD3LieAlgebra parse_algebra(const Json& j, const std::string& where);
/// The weight is taken from `md`.
Representation parse_representation(const Json& j, const MD3LieAlgebra& md, const std::string& where);
/// {"dim_in", "dim_out", "entries": [{"args": [i,j,k], "value": {...}}]}.
SkewTernaryTensor parse_tensor(const Json& j, const std::string& where);
AbelianExtension parse_extension(const Json& j, const std::string& where);

// Serializers. Output is canonical: sorted triples and pairs, zero entries
// omitted, reduced scalars.
Json to_json(const Scalar& s);
Json to_json(const Vector& v);
Json matrix_rows(const Matrix& m);
Json matrix_document(const Matrix& m);
Json algebra_document(const MD3LieAlgebra& md);
Json representation_document(const Representation& rep);
Json tensor_document(const SkewTernaryTensor& t);
Json extension_document(const AbelianExtension& ext);
Json cochain_document(const TotalCochain& c);

/// Per-law counts and the recorded witnesses with 1-based arguments.
void append_report(Json& out, const VerificationReport& report);

}  // namespace mdlie::cli
