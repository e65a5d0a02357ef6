#include "wordmap/laws.hpp"

#include <algorithm>

#include "wordmap/error.hpp"

namespace wordmap {

char to_char(Law law) noexcept { return static_cast<char>('a' + static_cast<int>(law)); }

Law parse_law(char c) {
  if (c < 'a' || c > 'h')
    throw Error(ErrorKind::invalid_argument, std::string("unknown law '") + c + "'");
  return static_cast<Law>(c - 'a');
}

Homomorphism determinant_hom() {
  return {"det", [](const Matrix& m) {
            Matrix d(1, m.modulus());
            d.set(0, 0, m.determinant());
            return d;
          }};
}

Homomorphism diagonal_hom() {
  return {"diagonal", [](const Matrix& m) {
            if (!m.is_upper_triangular())
              throw Error(ErrorKind::invalid_argument, "diagonal map needs an upper triangular matrix");
            Matrix d(m.dim(), m.modulus());
            for (int i = 0; i < m.dim(); ++i)
              d.set(i, i, m.at(i, i));
            return d;
          }};
}

Homomorphism inner_hom(const Matrix& h) {
  const Matrix hi = h.inverse();
  return {"inner", [h, hi](const Matrix& m) { return h * m * hi; }};
}

bool check_anti_homomorphism(const Endomorphism& sigma, const Endomorphism& tau,
                             std::span<const Matrix> x) {
  return wordmap::apply(compose(sigma, tau), x) == wordmap::apply(tau, wordmap::apply(sigma, x));
}

bool check_identity_law(std::span<const Matrix> x) {
  const auto out = wordmap::apply(Endomorphism::identity(static_cast<int>(x.size())), x);
  return std::equal(out.begin(), out.end(), x.begin(), x.end());
}

bool check_subgroup_preservation(const Endomorphism& sigma, std::span<const Matrix> x,
                                 const std::function<bool(const Matrix&)>& in_subgroup) {
  for (const auto& g : x)
    if (!in_subgroup(g))
      throw Error(ErrorKind::invalid_argument, "subgroup law needs a tuple inside S^n");
  const auto out = wordmap::apply(sigma, x);
  return std::all_of(out.begin(), out.end(), in_subgroup);
}

bool check_equivariance(const Endomorphism& sigma, std::span<const Matrix> x,
                        const Homomorphism& gamma) {
  Tuple gx;
  for (const auto& g : x)
    gx.push_back(gamma.map(g));
  Tuple lhs;
  for (const auto& g : wordmap::apply(sigma, x))
    lhs.push_back(gamma.map(g));
  return lhs == wordmap::apply(sigma, gx);
}

bool check_center_law(const Group& group, const Endomorphism& sigma, std::span<const Matrix> x,
                      std::span<const Matrix> z) {
  for (const auto& c : z)
    if (!group.is_central(c))
      throw Error(ErrorKind::invalid_argument, "center law needs a central tuple z");
  const auto sz = wordmap::apply(sigma, z);
  if (!std::all_of(sz.begin(), sz.end(), [&](const Matrix& c) { return group.is_central(c); }))
    return false;
  return wordmap::apply(sigma, multiply(x, z)) == multiply(wordmap::apply(sigma, x), sz);
}

bool check_conjugation_law(const Endomorphism& sigma, std::span<const Matrix> x, const Matrix& g) {
  return wordmap::apply(sigma, conjugate(g, x)) == conjugate(g, wordmap::apply(sigma, x));
}

bool check_morphism_law(const Group& group, const Endomorphism& sigma, std::span<const Matrix> x) {
  const auto out = wordmap::apply(sigma, x);
  return out.size() == x.size() &&
         std::all_of(out.begin(), out.end(), [&](const Matrix& m) { return group.contains(m); });
}

// ---------------------------------------------------------------------------

Endomorphism random_endomorphism(int rank, std::mt19937_64& rng, int max_syllables) {
  std::uniform_int_distribution<int> len(0, max_syllables);
  std::uniform_int_distribution<int> gen(1, rank);
  std::uniform_int_distribution<int> exp(-3, 3);
  std::vector<Word> images;
  for (int i = 0; i < rank; ++i) {
    std::vector<Syllable> raw;
    const int k = len(rng);
    for (int j = 0; j < k; ++j)
      raw.push_back({gen(rng), exp(rng)});
    images.push_back(Word::reduce(rank, raw));
  }
  return Endomorphism(rank, std::move(images));
}

Endomorphism random_automorphism(int rank, std::mt19937_64& rng, int length) {
  const auto gens = nielsen_generators(rank);
  std::uniform_int_distribution<std::size_t> pick(0, 2 * gens.size() - 1);
  Endomorphism result = Endomorphism::identity(rank);
  for (int i = 0; i < length; ++i) {
    const auto k = pick(rng);
    const auto& g = gens[k / 2];
    result = compose(result, k % 2 ? g.inverse() : g);
  }
  return result;
}

Tuple random_tuple(const Group& group, int n, std::mt19937_64& rng) {
  Tuple x;
  x.reserve(n);
  for (int i = 0; i < n; ++i)
    x.push_back(group.random_element(rng));
  return x;
}

FixedSetReport nielsen_fixed_set(const Group& group, int n, std::uint64_t tuple_cap,
                                 std::uint64_t samples, std::uint64_t seed) {
  constexpr std::size_t kKeep = 64;
  const auto gens = nielsen_generators(n);
  FixedSetReport report;
  report.n = n;
  report.matches = true;

  auto visit = [&](std::span<const Matrix> x) {
    ++report.examined;
    const bool fixed = std::all_of(gens.begin(), gens.end(), [&](const Endomorphism& s) {
      const auto y = wordmap::apply(s, x);
      return std::equal(y.begin(), y.end(), x.begin(), x.end());
    });
    const bool predicted =
        n == 1 ? (x[0] * x[0]).is_identity()
               : std::all_of(x.begin(), x.end(), [](const Matrix& g) { return g.is_identity(); });
    if (fixed) {
      ++report.fixed_count;
      if (report.fixed.size() < kKeep)
        report.fixed.emplace_back(x.begin(), x.end());
    }
    if (predicted)
      ++report.predicted_count;
    if (fixed != predicted)
      report.matches = false;
  };

  const bool exhaustive =
      group.enumerable() && tuple_count(group.order(), n, tuple_cap).has_value();
  if (exhaustive) {
    report.mode = SearchMode::exhaustive;
    TupleSpace space(group, n, tuple_cap);
    for (std::uint64_t k = 0; k < space.size(); ++k)
      visit(space.tuple(k));
  } else {
    report.mode = SearchMode::sampled;
    std::mt19937_64 rng(seed);
    visit(Tuple(n, group.identity()));
    for (std::uint64_t k = 1; k < samples; ++k)
      visit(random_tuple(group, n, rng));
  }
  return report;
}

namespace {

Tuple random_unipotent_tuple(const Group& group, int n, std::mt19937_64& rng) {
  Group u(GroupDescriptor{Family::unipotent, group.dim(), group.modulus()}, group.enumeration_cap());
  return random_tuple(u, n, rng);
}

}  // namespace

LawReport run_law(const Group& group, Law law, int n, std::uint64_t samples, std::uint64_t seed,
                  std::uint64_t tuple_cap) {
  LawReport report;
  report.law = law;
  report.seed = seed;

  if (law == Law::d) {
    const auto fs = nielsen_fixed_set(group, n, tuple_cap, samples, seed);
    report.mode = fs.mode;
    report.instances = fs.examined;
    report.failures = fs.matches ? 0 : 1;
    report.passed = fs.matches;
    report.detail = "fixed=" + std::to_string(fs.fixed_count) +
                    " predicted=" + std::to_string(fs.predicted_count);
    return report;
  }

  report.mode = SearchMode::sampled;
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ull + static_cast<std::uint64_t>(law));
  std::uniform_int_distribution<int> coin(0, 1);
  const bool borel = group.descriptor().family == Family::borel ||
                     group.descriptor().family == Family::unipotent;

  for (std::uint64_t k = 0; k < samples; ++k) {
    auto sigma = coin(rng) ? random_endomorphism(n, rng) : random_automorphism(n, rng);
    bool ok = true;
    switch (law) {
      case Law::a: {
        auto tau = coin(rng) ? random_endomorphism(n, rng) : random_automorphism(n, rng);
        ok = check_anti_homomorphism(sigma, tau, random_tuple(group, n, rng));
        break;
      }
      case Law::b:
        ok = check_identity_law(random_tuple(group, n, rng));
        break;
      case Law::c: {
        if (k % 2 == 0) {
          ok = check_subgroup_preservation(sigma, random_unipotent_tuple(group, n, rng),
                                           [](const Matrix& m) { return m.is_unitriangular(); });
        } else {
          const Matrix h = group.random_element(rng);
          std::vector<Matrix> powers{group.identity()};
          for (Matrix q = h; !q.is_identity(); q = q * h)
            powers.push_back(q);
          std::uniform_int_distribution<std::size_t> pick(0, powers.size() - 1);
          Tuple x;
          for (int i = 0; i < n; ++i)
            x.push_back(powers[pick(rng)]);
          ok = check_subgroup_preservation(sigma, x, [&](const Matrix& m) {
            return std::find(powers.begin(), powers.end(), m) != powers.end();
          });
        }
        break;
      }
      case Law::e: {
        const auto x = random_tuple(group, n, rng);
        const int which = static_cast<int>(k % (borel ? 3 : 2));
        const Homomorphism gamma = which == 0   ? determinant_hom()
                                   : which == 1 ? inner_hom(group.random_element(rng))
                                                : diagonal_hom();
        ok = check_equivariance(sigma, x, gamma);
        break;
      }
      case Law::f: {
        const auto& center = group.center();
        std::uniform_int_distribution<std::size_t> pick(0, center.size() - 1);
        Tuple z;
        for (int i = 0; i < n; ++i)
          z.push_back(center[pick(rng)]);
        ok = check_center_law(group, sigma, random_tuple(group, n, rng), z);
        break;
      }
      case Law::g:
        ok = check_conjugation_law(sigma, random_tuple(group, n, rng), group.random_element(rng));
        break;
      case Law::h:
        ok = check_morphism_law(group, sigma, random_tuple(group, n, rng));
        break;
      case Law::d:
        break;
    }
    ++report.instances;
    if (!ok)
      ++report.failures;
  }
  report.passed = report.failures == 0;
  return report;
}

}  // namespace wordmap
