#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "manin/dualnum.hpp"
#include "manin/reductive.hpp"
#include "manin/rmatrix.hpp"
#include "manin/tensor.hpp"

namespace manin::io {

using Json = nlohmann::ordered_json;

/// Parses JSON text; ParseError carries line and column.
Json parse_json(std::string_view text);
/// Reads a whole file and parses it; ParseError names the file.
Json read_json_file(const std::string& path);
/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

// Every reader throws ParseError naming the offending JSON path, e.g. "/entries/3/2".

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j, const std::string& path = "");

Json to_json(const LieElement& x);
LieElement element_from_json(const LieAlgebra& g, const Json& j, const std::string& path = "");

/// {"algebra": id} plus "form_scale" when it is not 1.
Json algebra_header(const LieAlgebra& g);
Algebra algebra_from_json(const Json& j, const std::string& path = "");

/// Roots in simple-root coordinates.
Json root_to_json(const LieAlgebra& g, std::size_t ordinal);
std::size_t root_from_json(const LieAlgebra& g, const Json& j, const std::string& path = "");
Json to_json(const RootSubset& s);
RootSubset subset_from_json(const Algebra& g, const Json& j, const std::string& path = "");
/// Like subset_from_json, but closes the list under negation.
RootSubset symmetric_subset_from_json(const Algebra& g, const Json& j, const std::string& path = "");

Json to_json(const Tensor2& t);
Json to_json(const Tensor3& t);
Tensor2 tensor2_from_json(const Json& j, const std::string& path = "");
Tensor3 tensor3_from_json(const Json& j, const std::string& path = "");

/// Row-major RREF matrix of rational strings.
Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, std::size_t cols, const std::string& path = "");
Json to_json(const Subspace& s);
Subspace subspace_from_json(const Json& j, const std::string& path = "");

/// RREF over the columns (g part, eps part) with a header recording the split.
Json to_json(const DualSubspace& l);
DualSubspace dual_subspace_from_json(const Json& j, const std::string& path = "");

Json to_json(const SubalgebraPair& p);
/// PreconditionError from the pair constructor is passed through unchanged.
SubalgebraPair pair_from_json(const Json& j, const std::string& path = "");

Json to_json(const RMatrixCandidate& c);
RMatrixCandidate candidate_from_json(const Json& j, const std::string& path = "");

}  // namespace manin::io
