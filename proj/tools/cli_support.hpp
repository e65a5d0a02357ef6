#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "wordmap/endomorphism.hpp"
#include "wordmap/group.hpp"
#include "wordmap/matrix.hpp"

namespace wordmap::cli {

using Json = nlohmann::ordered_json;
using NamedSigma = std::pair<std::string, Endomorphism>;

/// Enumeration cap: flag > WORDMAP_CAP > kDefaultEnumerationCap.
std::size_t resolve_enumeration_cap(std::size_t flag_value, bool flag_given);

/// Matrix from a JSON value: either dim rows of dim entries or dim*dim flat entries.
Matrix parse_matrix(const Group& group, const Json& value);
/// Tuple from a JSON array of matrices.
Tuple parse_tuple(const Group& group, std::string_view text);

/// "all", "trivial", "center", "gen:<matrix or list>", "elements:<list>".
Subgroup parse_subgroup(const Group& group, std::string_view text);

/**
 * Resolves --sigma. Accepts a path to an endomorphism JSON file, inline
 * JSON, bracket text "[w1, ..., wn]", or a builtin for rank n:
 * nielsen, braid, all, conj, theta:S, transvection:I,J, or a single
 * generator name (inversion, swap, cycle, braidK).
 */
std::vector<NamedSigma> resolve_sigma(std::string_view text, int n);

Json matrix_json(const Matrix& m);
Json tuple_json(std::span<const Matrix> x);
Json endomorphism_json(const Endomorphism& sigma);

}  // namespace wordmap::cli
