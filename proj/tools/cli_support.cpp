#include "cli_support.hpp"

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "wordmap/error.hpp"
#include "wordmap/kernel_lab.hpp"
#include "wordmap/quotient_lab.hpp"

namespace wordmap::cli {

namespace {

Json parse_json(std::string_view text, std::string_view what) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::parse_error, std::string(what) + ": " + e.what());
  }
}

bool is_number_array(const Json& v) {
  if (!v.is_array() || v.empty())
    return false;
  for (const auto& x : v)
    if (!x.is_number_integer())
      return false;
  return true;
}

bool looks_like_matrix(const Group& group, const Json& v) {
  const auto dim = static_cast<std::size_t>(group.dim());
  if (is_number_array(v))
    return v.size() == dim * dim;
  if (!v.is_array() || v.size() != dim)
    return false;
  for (const auto& row : v)
    if (!is_number_array(row) || row.size() != dim)
      return false;
  return true;
}

std::vector<Matrix> parse_matrix_list(const Group& group, const Json& v) {
  if (looks_like_matrix(group, v))
    return {parse_matrix(group, v)};
  if (!v.is_array())
    throw Error(ErrorKind::parse_error, "expected a matrix or a list of matrices");
  std::vector<Matrix> out;
  for (const auto& m : v)
    out.push_back(parse_matrix(group, m));
  return out;
}

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw Error(ErrorKind::parse_error, "bad integer in " + std::string(what));
  return value;
}

}  // namespace

std::size_t resolve_enumeration_cap(std::size_t flag_value, bool flag_given) {
  if (flag_given)
    return flag_value;
  if (const char* env = std::getenv("WORDMAP_CAP"); env && *env) {
    std::size_t value = 0;
    std::string_view text(env);
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
      throw Error(ErrorKind::invalid_argument, "WORDMAP_CAP is not a nonnegative integer");
    return value;
  }
  return kDefaultEnumerationCap;
}

Matrix parse_matrix(const Group& group, const Json& value) {
  if (!looks_like_matrix(group, value))
    throw Error(ErrorKind::parse_error, "matrix must have " + std::to_string(group.dim()) +
                                            " rows of " + std::to_string(group.dim()) +
                                            " entries: " + value.dump());
  std::vector<std::int64_t> flat;
  if (is_number_array(value)) {
    for (const auto& x : value)
      flat.push_back(x.get<std::int64_t>());
  } else {
    for (const auto& row : value)
      for (const auto& x : row)
        flat.push_back(x.get<std::int64_t>());
  }
  return group.element(flat);
}

Tuple parse_tuple(const Group& group, std::string_view text) {
  const auto v = parse_json(text, "tuple");
  if (!v.is_array())
    throw Error(ErrorKind::parse_error, "tuple must be a JSON array of matrices");
  Tuple out;
  for (const auto& m : v)
    out.push_back(parse_matrix(group, m));
  return out;
}

Subgroup parse_subgroup(const Group& group, std::string_view text) {
  if (text == "all")
    return Subgroup(group.elements());
  if (text == "trivial")
    return Subgroup({group.identity()});
  if (text == "center")
    return Subgroup(group.center());
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw Error(ErrorKind::parse_error, "unknown subgroup descriptor '" + std::string(text) + "'");
  const auto kind = text.substr(0, colon);
  const auto body = parse_json(text.substr(colon + 1), "subgroup");
  if (kind == "gen")
    return subgroup_from_generators(group, parse_matrix_list(group, body));
  if (kind == "elements")
    return subgroup_from_elements(group, parse_matrix_list(group, body));
  throw Error(ErrorKind::parse_error, "unknown subgroup kind '" + std::string(kind) + "'");
}

std::vector<NamedSigma> resolve_sigma(std::string_view text, int n) {
  if (text.empty())
    throw Error(ErrorKind::invalid_argument, "--sigma is empty");
  if (text.front() == '{')
    return {{"inline", Endomorphism::from_json(text)}};
  if (text.front() == '[')
    return {{"inline", Endomorphism::parse(text)}};
  if (std::filesystem::is_regular_file(std::filesystem::path(text))) {
    std::ifstream in{std::filesystem::path(text)};
    std::stringstream buf;
    buf << in.rdbuf();
    return {{std::string(text), Endomorphism::from_json(buf.str())}};
  }

  if (text == "nielsen")
    return named_nielsen_generators(n);
  if (text == "braid")
    return named_braid_generators(n);
  if (text == "conj")
    return {{"conj", conjugation_pair(n).first}};
  if (text == "all") {
    auto out = named_nielsen_generators(n);
    for (auto& b : named_braid_generators(n))
      out.push_back(std::move(b));
    if (n >= 3)
      for (int s = 1; s <= 2; ++s)
        out.emplace_back("theta:" + std::to_string(s), theta_kernel_pair(n, s).first);
    return out;
  }
  if (text.starts_with("theta:")) {
    const int s = parse_int(text.substr(6), "theta:S");
    return {{std::string(text), theta_kernel_pair(n, s).first}};
  }
  if (text.starts_with("transvection:")) {
    const auto args = text.substr(13);
    const auto comma = args.find(',');
    if (comma == std::string_view::npos)
      throw Error(ErrorKind::parse_error, "transvection needs I,J");
    const int i = parse_int(args.substr(0, comma), "transvection:I,J");
    const int j = parse_int(args.substr(comma + 1), "transvection:I,J");
    return {{std::string(text), transvection(n, i, j)}};
  }
  for (auto& named : named_nielsen_generators(n))
    if (named.first == text)
      return {std::move(named)};
  for (auto& named : named_braid_generators(n))
    if (named.first == text)
      return {std::move(named)};
  throw Error(ErrorKind::parse_error, "unknown sigma '" + std::string(text) + "'");
}

Json matrix_json(const Matrix& m) { return Json(m.rows()); }

Json tuple_json(std::span<const Matrix> x) {
  auto arr = Json::array();
  for (const auto& m : x)
    arr.push_back(matrix_json(m));
  return arr;
}

Json endomorphism_json(const Endomorphism& sigma) {
  Json j;
  j["text"] = sigma.to_string();
  j["automorphism_witness"] = sigma.has_inverse();
  j["json"] = Json::parse(sigma.to_json());
  return j;
}

}  // namespace wordmap::cli
