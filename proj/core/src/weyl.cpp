#include "wordmap/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <set>

#include "wordmap/error.hpp"

namespace wordmap::weyl {

CartanType CartanType::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.size() < 2)
    throw Error(ErrorKind::parse_error, "bad Cartan type '" + std::string(text) + "'");
  CartanType t;
  t.series = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  auto digits = text.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), t.rank);
  if (ec != std::errc() || ptr != digits.data() + digits.size())
    throw Error(ErrorKind::parse_error, "bad Cartan type '" + std::string(text) + "'");
  if (!t.valid())
    throw Error(ErrorKind::invalid_argument, "invalid irreducible type " + t.to_string());
  return t;
}

std::string CartanType::to_string() const { return std::string(1, series) + std::to_string(rank); }

bool CartanType::valid() const noexcept {
  switch (series) {
    case 'A': return rank >= 1;
    case 'B': return rank >= 2;
    case 'C': return rank >= 3;
    case 'D': return rank >= 4;
    case 'E': return rank >= 6 && rank <= 8;
    case 'F': return rank == 4;
    case 'G': return rank == 2;
    default: return false;
  }
}

std::vector<CartanType> irreducible_types(int max_rank) {
  std::vector<CartanType> out;
  for (char series : std::string_view("ABCDEFG"))
    for (int r = 1; r <= max_rank; ++r) {
      CartanType t{series, r};
      if (t.valid())
        out.push_back(t);
    }
  return out;
}

namespace {

IntVector unit(int dim, int i, int scale) {
  IntVector v(dim, 0);
  v[i] = scale;
  return v;
}

IntVector diff(int dim, int i, int j) {
  // doubled e_i - e_j
  IntVector v(dim, 0);
  v[i] = 2;
  v[j] = -2;
  return v;
}

int dot(const IntVector& a, const IntVector& b) {
  int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += a[i] * b[i];
  return s;
}

std::vector<IntVector> simple_roots_for(CartanType t, int& dim) {
  const int l = t.rank;
  std::vector<IntVector> roots;
  switch (t.series) {
    case 'A':
      dim = l + 1;
      for (int i = 0; i < l; ++i)
        roots.push_back(diff(dim, i, i + 1));
      break;
    case 'B':
    case 'C':
    case 'D':
      dim = l;
      for (int i = 0; i + 1 < l; ++i)
        roots.push_back(diff(dim, i, i + 1));
      if (t.series == 'B') {
        roots.push_back(unit(dim, l - 1, 2));
      } else if (t.series == 'C') {
        roots.push_back(unit(dim, l - 1, 4));
      } else {
        IntVector v(dim, 0);
        v[l - 2] = 2;
        v[l - 1] = 2;
        roots.push_back(v);
      }
      break;
    case 'G':
      dim = 3;
      roots.push_back({2, -2, 0});
      roots.push_back({-4, 2, 2});
      break;
    case 'F':
      dim = 4;
      roots.push_back({0, 2, -2, 0});
      roots.push_back({0, 0, 2, -2});
      roots.push_back({0, 0, 0, 2});
      roots.push_back({1, -1, -1, -1});
      break;
    case 'E': {
      dim = 8;
      const std::vector<IntVector> e8 = {
          {1, -1, -1, -1, -1, -1, -1, 1},
          {2, 2, 0, 0, 0, 0, 0, 0},
          {-2, 2, 0, 0, 0, 0, 0, 0},
          {0, -2, 2, 0, 0, 0, 0, 0},
          {0, 0, -2, 2, 0, 0, 0, 0},
          {0, 0, 0, -2, 2, 0, 0, 0},
          {0, 0, 0, 0, -2, 2, 0, 0},
          {0, 0, 0, 0, 0, -2, 2, 0},
      };
      roots.assign(e8.begin(), e8.begin() + l);
      break;
    }
  }
  return roots;
}

}  // namespace

bool is_positive(const IntVector& c) {
  bool nonzero = false;
  for (int x : c) {
    if (x < 0)
      return false;
    nonzero = nonzero || x != 0;
  }
  return nonzero;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), k = b.size();
  IntMatrix c(n, IntVector(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t)
      if (a[i][t])
        for (std::size_t j = 0; j < m; ++j)
          c[i][j] += a[i][t] * b[t][j];
  return c;
}

IntVector apply(const IntMatrix& m, const IntVector& v) {
  IntVector out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      out[i] += m[i][j] * v[j];
  return out;
}

IntMatrix simple_reflection(const RootSystem& rs, int i) {
  const int l = rs.rank();
  IntMatrix m(l, IntVector(l, 0));
  for (int j = 0; j < l; ++j)
    m[j][j] = 1;
  // s_i(alpha_j) = alpha_j - <alpha_j, alpha_i^vee> alpha_i
  for (int j = 0; j < l; ++j)
    m[i][j] -= rs.cartan[j][i];
  return m;
}

RootSystem build_root_system(CartanType type) {
  if (!type.valid())
    throw Error(ErrorKind::invalid_argument, "invalid irreducible type " + type.to_string());
  RootSystem rs;
  rs.type = type;
  rs.simple_roots = simple_roots_for(type, rs.ambient_dim);
  const int l = type.rank;
  rs.cartan.assign(l, IntVector(l, 0));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      const int num = 2 * dot(rs.simple_roots[i], rs.simple_roots[j]);
      const int den = dot(rs.simple_roots[j], rs.simple_roots[j]);
      if (num % den != 0)
        throw Error(ErrorKind::invalid_argument, "non-integral Cartan entry for " + type.to_string());
      rs.cartan[i][j] = num / den;
    }

  std::vector<IntMatrix> refl;
  for (int i = 0; i < l; ++i)
    refl.push_back(simple_reflection(rs, i));

  // orbit of the simple roots under the simple reflections
  std::set<IntVector> seen;
  std::deque<IntVector> queue;
  for (int i = 0; i < l; ++i) {
    auto e = IntVector(l, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    for (const auto& r : refl) {
      auto w = weyl::apply(r, v);
      if (seen.insert(w).second)
        queue.push_back(std::move(w));
    }
  }
  for (const auto& v : seen)
    if (is_positive(v)) {
      rs.positive_roots.push_back(v);
      IntVector amb(rs.ambient_dim, 0);
      for (int j = 0; j < l; ++j)
        for (int k = 0; k < rs.ambient_dim; ++k)
          amb[k] += v[j] * rs.simple_roots[j][k];
      rs.positive_ambient.push_back(std::move(amb));
    }
  return rs;
}

bool WeylElement::is_minus_identity() const {
  for (std::size_t i = 0; i < matrix.size(); ++i)
    for (std::size_t j = 0; j < matrix.size(); ++j)
      if (matrix[i][j] != (i == j ? -1 : 0))
        return false;
  return true;
}

WeylElement longest_element(const RootSystem& rs, TieBreak tie) {
  const int l = rs.rank();
  WeylElement w;
  w.matrix.assign(l, IntVector(l, 0));
  for (int i = 0; i < l; ++i)
    w.matrix[i][i] = 1;
  std::vector<IntMatrix> refl;
  for (int i = 0; i < l; ++i)
    refl.push_back(simple_reflection(rs, i));

  auto column = [&](int j) {
    IntVector c(l);
    for (int i = 0; i < l; ++i)
      c[i] = w.matrix[i][j];
    return c;
  };
  while (true) {
    int pick = -1;
    for (int k = 0; k < l; ++k) {
      const int i = tie == TieBreak::lowest_index ? k : l - 1 - k;
      if (is_positive(column(i))) {
        pick = i;
        break;
      }
    }
    if (pick < 0)
      break;
    w.matrix = multiply(w.matrix, refl[pick]);
    w.word.push_back(pick);
    if (w.word.size() > rs.positive_roots.size())
      throw Error(ErrorKind::invalid_argument, "longest element search did not terminate");
  }
  return w;
}

bool minus_one_in_weyl(CartanType type) {
  return longest_element(build_root_system(type)).is_minus_identity();
}

ClassificationResult classify_factors(const std::vector<CartanType>& factors) {
  if (factors.empty())
    throw Error(ErrorKind::invalid_argument, "factor list is empty");
  for (const auto& f : factors)
    if (!f.valid())
      throw Error(ErrorKind::invalid_argument, "invalid irreducible type " + f.to_string());
  ClassificationResult result;
  for (const auto& f : factors)
    if (!minus_one_in_weyl(f)) {
      result.embedding_for_n1 = true;
      result.witnessing_factor = f;
      break;
    }
  return result;
}

}  // namespace wordmap::weyl
