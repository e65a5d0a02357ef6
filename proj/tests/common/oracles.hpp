#pragma once

// Independent reference implementations used to cross-check the library.
// They favour obviousness over speed and share no code with core/src.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "wordmap/free_group.hpp"
#include "wordmap/matrix.hpp"

namespace oracle {

using Letters = std::vector<int>;  // +g or -g per letter

inline Letters expand(std::span<const wordmap::Syllable> syllables) {
  Letters out;
  for (const auto& s : syllables) {
    const int sign = s.exponent > 0 ? 1 : -1;
    for (std::int64_t k = 0; k < (s.exponent > 0 ? s.exponent : -s.exponent); ++k)
      out.push_back(sign * s.generator);
  }
  return out;
}

inline Letters letters_of(const wordmap::Word& w) { return expand(w.syllables()); }

/// Letter-by-letter free reduction with a stack.
inline Letters naive_reduce(const Letters& in) {
  Letters stack;
  for (int l : in) {
    if (!stack.empty() && stack.back() == -l)
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return stack;
}

inline Letters invert(const Letters& w) {
  Letters out(w.rbegin(), w.rend());
  for (auto& l : out)
    l = -l;
  return out;
}

inline Letters concat(Letters a, const Letters& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

inline Letters commutator(const Letters& a, const Letters& b) {
  return naive_reduce(concat(concat(concat(a, b), invert(a)), invert(b)));
}

inline std::vector<wordmap::Syllable> random_raw(std::mt19937_64& rng, int rank, int max_letters) {
  std::uniform_int_distribution<int> gen(1, rank);
  std::uniform_int_distribution<int> mag(1, 3);
  std::uniform_int_distribution<int> sign(0, 1);
  std::uniform_int_distribution<int> budget_dist(0, max_letters);
  int budget = budget_dist(rng);
  std::vector<wordmap::Syllable> raw;
  while (budget > 0) {
    const int m = std::min(budget, mag(rng));
    raw.push_back({gen(rng), sign(rng) ? m : -m});
    budget -= m;
  }
  return raw;
}

// ---- plain integer matrices ---------------------------------------------

using Mat = std::vector<std::vector<std::int64_t>>;

inline Mat to_mat(const wordmap::Matrix& m) { return m.rows(); }

inline Mat mul(const Mat& a, const Mat& b, std::int64_t p) {
  const std::size_t d = a.size();
  Mat c(d, std::vector<std::int64_t>(d, 0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      std::int64_t s = 0;
      for (std::size_t k = 0; k < d; ++k)
        s += a[i][k] * b[k][j];
      c[i][j] = ((s % p) + p) % p;
    }
  return c;
}

/// Laplace expansion, fine for d <= 4.
inline std::int64_t det(const Mat& a, std::int64_t p) {
  const std::size_t d = a.size();
  if (d == 1)
    return ((a[0][0] % p) + p) % p;
  std::int64_t s = 0;
  for (std::size_t c = 0; c < d; ++c) {
    Mat minor;
    for (std::size_t r = 1; r < d; ++r) {
      std::vector<std::int64_t> row;
      for (std::size_t k = 0; k < d; ++k)
        if (k != c)
          row.push_back(a[r][k]);
      minor.push_back(row);
    }
    const std::int64_t term = a[0][c] * det(minor, p) % p;
    s += (c % 2 == 0 ? term : -term);
  }
  return ((s % p) + p) % p;
}

enum class Kind { gl, sl, borel, unipotent };

/// Every d x d matrix over F_p satisfying the family predicate, by brute force.
inline std::set<Mat> brute_force_group(Kind kind, int d, std::int64_t p) {
  std::set<Mat> out;
  const int cells = d * d;
  std::vector<std::int64_t> digits(cells, 0);
  while (true) {
    Mat m(d, std::vector<std::int64_t>(d));
    for (int k = 0; k < cells; ++k)
      m[k / d][k % d] = digits[k];
    const auto dt = det(m, p);
    bool ok = dt != 0;
    if (kind == Kind::sl)
      ok = dt == 1;
    if (kind == Kind::borel || kind == Kind::unipotent)
      for (int i = 0; i < d && ok; ++i)
        for (int j = 0; j < i && ok; ++j)
          ok = m[i][j] == 0;
    if (kind == Kind::unipotent)
      for (int i = 0; i < d && ok; ++i)
        ok = m[i][i] == 1;
    if (ok)
      out.insert(m);
    int k = cells - 1;
    while (k >= 0 && ++digits[k] == p)
      digits[k--] = 0;
    if (k < 0)
      break;
  }
  return out;
}

inline Mat identity(std::size_t d) {
  Mat m(d, std::vector<std::int64_t>(d, 0));
  for (std::size_t i = 0; i < d; ++i)
    m[i][i] = 1;
  return m;
}

inline Mat inverse_in(const std::set<Mat>& group, const Mat& g, std::int64_t p) {
  const auto e = identity(g.size());
  for (const auto& h : group)
    if (mul(g, h, p) == e)
      return h;
  return {};
}

/// Closure of a generating set under multiplication (finite, so this is a subgroup).
inline std::set<Mat> closure(const std::set<Mat>& gens, std::size_t d, std::int64_t p) {
  std::set<Mat> h{identity(d)};
  h.insert(gens.begin(), gens.end());
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<Mat> cur(h.begin(), h.end());
    for (const auto& a : cur)
      for (const auto& b : cur)
        if (h.insert(mul(a, b, p)).second)
          grew = true;
  }
  return h;
}

/// Subgroup generated by all commutators [a,b] with a, b in h.
inline std::set<Mat> commutator_closure(const std::set<Mat>& h, std::size_t d, std::int64_t p) {
  std::set<Mat> comms;
  std::vector<std::pair<Mat, Mat>> inv;
  for (const auto& a : h)
    inv.push_back({a, inverse_in(h, a, p)});
  for (const auto& [a, ai] : inv)
    for (const auto& [b, bi] : inv)
      comms.insert(mul(mul(mul(a, b, p), ai, p), bi, p));
  return closure(comms, d, p);
}

inline std::optional<int> derived_length(std::set<Mat> h, std::size_t d, std::int64_t p) {
  int len = 0;
  while (h.size() > 1) {
    auto next = commutator_closure(h, d, p);
    if (next.size() == h.size())
      return std::nullopt;
    h = std::move(next);
    ++len;
  }
  return len;
}

inline std::set<Mat> center(const std::set<Mat>& g, std::int64_t p) {
  std::set<Mat> z;
  for (const auto& a : g) {
    bool central = true;
    for (const auto& b : g)
      if (mul(a, b, p) != mul(b, a, p)) {
        central = false;
        break;
      }
    if (central)
      z.insert(a);
  }
  return z;
}

inline std::uint64_t order_of(const Mat& g, std::int64_t p) {
  const auto e = identity(g.size());
  Mat acc = g;
  std::uint64_t k = 1;
  while (acc != e) {
    acc = mul(acc, g, p);
    ++k;
  }
  return k;
}

/// Evaluates a letter word on plain matrices, one letter at a time.
inline Mat eval_letters(const Letters& w, const std::vector<Mat>& x, const std::vector<Mat>& x_inv,
                        std::int64_t p) {
  Mat acc = identity(x.front().size());
  for (int l : w)
    acc = mul(acc, l > 0 ? x[l - 1] : x_inv[-l - 1], p);
  return acc;
}

}  // namespace oracle
