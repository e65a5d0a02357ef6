#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "wordmap/error.hpp"
#include "wordmap/kernel_lab.hpp"
#include "wordmap/quotient_lab.hpp"

using namespace wordmap;

namespace {

Matrix mat(const Group& g, std::vector<std::int64_t> e) { return g.element(e); }

/// Burnside: orbits of S on G^n under diagonal conjugation = mean over s of |C_G(s)|^n.
std::uint64_t burnside(const Group& g, const Subgroup& s, int n) {
  std::uint64_t total = 0;
  for (const auto& x : s.elements()) {
    std::uint64_t c = 0;
    for (const auto& y : g.elements())
      c += x * y == y * x;
    std::uint64_t pw = 1;
    for (int i = 0; i < n; ++i)
      pw *= c;
    total += pw;
  }
  EXPECT_EQ(total % s.size(), 0u);
  return total / s.size();
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::invalid_argument;
}

}  // namespace

TEST(OrbitSpace, CyclicSubgroupCount) {
  const auto g = Group::parse("SL2:p=3");
  const auto s = subgroup_from_generators(g, {mat(g, {0, 1, 2, 0})});
  EXPECT_EQ(s.size(), 4u);
  const OrbitSpace space(g, 2, s);
  EXPECT_EQ(space.orbit_count(), burnside(g, s, 2));
  EXPECT_EQ(space.orbit_count(), 296u);  // frozen from the count above
}

TEST(OrbitSpace, FullGroupCountsMatchBurnside) {
  const std::pair<const char*, std::vector<std::size_t>> cases[] = {
      {"SL2:p=3", {7, 76, 1312}}, {"GL:s=2,p=2", {3, 11, 49}}};
  for (const auto& [d, frozen] : cases) {
    const auto g = Group::parse(d);
    const Subgroup all(g.elements());
    for (int n = 1; n <= 3; ++n) {
      const OrbitSpace space(g, n, all);
      EXPECT_EQ(space.orbit_count(), burnside(g, all, n)) << d << " n=" << n;
      EXPECT_EQ(space.orbit_count(), frozen[n - 1]) << d << " n=" << n;
    }
  }
}

TEST(OrbitSpace, StructuralInvariants) {
  for (const char* d : {"SL2:p=3", "Borel:s=2,p=5"}) {
    const auto g = Group::parse(d);
    for (const auto& s : {Subgroup(g.elements()), Subgroup(g.center()), subgroup_from_generators(g, {})}) {
      const OrbitSpace space(g, 2, s);
      const auto& sizes = space.orbit_sizes();
      EXPECT_EQ(std::accumulate(sizes.begin(), sizes.end(), std::uint64_t{0}), space.space().size());
      std::uint64_t prev_rep = 0;
      for (std::uint32_t o = 0; o < space.orbit_count(); ++o) {
        EXPECT_EQ(s.size() % sizes[o], 0u);
        const auto rep = space.representative(o);
        EXPECT_EQ(space.orbit_of(rep), o);
        if (o > 0)
          EXPECT_GT(rep, prev_rep);
        prev_rep = rep;
      }
      for (std::uint64_t k = 0; k < space.space().size(); k += 7) {
        const auto o = space.orbit_of(k);
        EXPECT_LE(space.representative(o), k);
        for (std::size_t j = 0; j < s.size(); ++j) {
          const auto moved = space.act(j, k);
          ASSERT_EQ(space.orbit_of(moved), o);
          const auto x = space.space().tuple(k);
          const auto& sj = s.elements()[j];
          ASSERT_EQ(space.space().tuple(moved), conjugate(sj, x));
        }
      }
    }
  }
}

TEST(OrbitSpace, TrivialSubgroupGivesSingletons) {
  const auto g = Group::parse("GL:s=2,p=2");
  const OrbitSpace space(g, 2, subgroup_from_generators(g, {}));
  EXPECT_EQ(space.orbit_count(), 36u);
}

TEST(Subgroups, Validation) {
  const auto g = Group::parse("SL2:p=3");
  EXPECT_EQ(kind_of([&] { subgroup_from_elements(g, {g.identity(), mat(g, {0, 1, 2, 0})}); }),
            ErrorKind::not_subgroup);
  const auto big = Group::parse("SL2:p=5");
  EXPECT_EQ(kind_of([&] { subgroup_from_generators(g, {mat(big, {0, 1, 4, 0})}); }), ErrorKind::not_subgroup);
  const auto z = subgroup_from_elements(g, g.center());
  EXPECT_EQ(z.size(), 2u);
}

TEST(DescendedAction, ConjugationIsTrivialForFullGroup) {
  for (const char* d : {"SL2:p=3", "GL:s=2,p=2"}) {
    const auto g = Group::parse(d);
    for (int n = 2; n <= 3; ++n) {
      const OrbitSpace space(g, n, Subgroup(g.elements()));
      const auto perm = descended_action(conjugation_pair(n).first, space);
      EXPECT_TRUE(is_identity_permutation(perm)) << d << " n=" << n;
    }
  }
}

TEST(DescendedAction, NontrivialCasesExist) {
  const auto g = Group::parse("SL2:p=3");
  const OrbitSpace space(g, 2, Subgroup(g.elements()));
  EXPECT_FALSE(is_identity_permutation(descended_action(transvection(2, 1, 2), space)));
  const OrbitSpace free_space(g, 2, subgroup_from_generators(g, {}));
  // with trivial S conjugation by x1 is visible
  EXPECT_FALSE(is_identity_permutation(descended_action(conjugation_pair(2).first, free_space)));
  const Endomorphism no_witness(2, {Word::parse("f1 f2", 2), Word::parse("f2", 2)});
  EXPECT_EQ(kind_of([&] { descended_action(no_witness, space); }), ErrorKind::not_invertible);
  EXPECT_EQ(kind_of([&] { descended_action(transvection(3, 1, 2), space); }), ErrorKind::rank_mismatch);
}

TEST(DescendedAction, IsAHomomorphismOfTheAntiAction) {
  const auto g = Group::parse("GL:s=2,p=2");
  const OrbitSpace space(g, 3, Subgroup(g.elements()));
  const auto gens = named_nielsen_generators(3);
  for (const auto& [na, a] : gens)
    for (const auto& [nb, b] : gens) {
      const auto pa = descended_action(a, space), pb = descended_action(b, space);
      const auto pab = descended_action(compose(a, b), space);
      for (std::size_t o = 0; o < pab.size(); ++o)
        ASSERT_EQ(pab[o], pb[pa[o]]) << na << " " << nb;
    }
}

TEST(KernelCriterion, ConjugationInKernel) {
  for (const char* d : {"SL2:p=3", "GL:s=2,p=2"}) {
    const auto g = Group::parse(d);
    for (int n = 2; n <= 3; ++n) {
      const OrbitSpace space(g, n, Subgroup(g.elements()));
      const auto r = lemma_kernel_criterion(conjugation_pair(n).first, space);
      EXPECT_TRUE(r.in_kernel);
      EXPECT_TRUE(r.orbit_permutation_trivial);
      EXPECT_TRUE(r.consistent);
      EXPECT_FALSE(r.uniform_witness.has_value()) << d;
      EXPECT_EQ(r.tuples_checked, space.space().size());
    }
  }
}

TEST(KernelCriterion, IdentityHasUniformWitness) {
  const auto g = Group::parse("SL2:p=3");
  const OrbitSpace space(g, 2, Subgroup(g.elements()));
  const auto r = lemma_kernel_criterion(Endomorphism::identity(2), space);
  EXPECT_TRUE(r.in_kernel);
  ASSERT_TRUE(r.uniform_witness.has_value());
  EXPECT_TRUE(g.is_central(*r.uniform_witness));
}

TEST(KernelCriterion, AgreesWithOrbitPermutation) {
  const auto g = Group::parse("SL2:p=3");
  const auto s4 = subgroup_from_generators(g, {mat(g, {0, 1, 2, 0})});
  for (const auto& s : {Subgroup(g.elements()), s4, Subgroup(g.center())}) {
    const OrbitSpace space(g, 2, s);
    auto gens = named_nielsen_generators(2);
    gens.emplace_back("conj", conjugation_pair(2).first);
    for (const auto& [name, sigma] : gens) {
      const auto r = lemma_kernel_criterion(sigma, space);
      EXPECT_TRUE(r.consistent) << name;
      EXPECT_EQ(r.in_kernel, is_identity_permutation(descended_action(sigma, space))) << name;
      const auto note = categorical_quotient_note(sigma, space);
      EXPECT_TRUE(note.agree) << name;
      EXPECT_EQ(note.orbit_form, r.in_kernel) << name;
      EXPECT_EQ(note.uniform_witness_exists, r.uniform_witness.has_value()) << name;
    }
  }
}

TEST(PowerScan, CentralAndNoncentral) {
  const auto g = Group::parse("SL2:p=3");
  for (const auto& s : g.elements()) {
    const auto powers = power_identity_scan(g, s);
    if (g.is_central(s))
      EXPECT_EQ(powers, std::vector<std::uint64_t>{1});
    else
      EXPECT_TRUE(powers.empty()) << s.to_string();
    const auto c = power_identity_cascade(g, s);
    EXPECT_TRUE(c.cascade_holds);
    EXPECT_EQ(c.exponent, 12u);
  }
  const auto big = Group::parse("SL2:p=5");
  EXPECT_THROW(power_identity_scan(g, mat(big, {0, 1, 4, 0})), Error);
}

TEST(PowerScan, AbelianGroupsAdmitInversion) {
  // on an abelian group every s acts trivially, so d = 1 always appears
  const auto g = Group::parse("GL:s=1,p=7");
  for (const auto& s : g.elements())
    EXPECT_EQ(power_identity_scan(g, s), std::vector<std::uint64_t>{1});
}

TEST(ExponentIdentity, Values) {
  const auto u = Group::parse("Unipotent:s=3,p=3");
  EXPECT_TRUE(exponent_identity_check(u, 4, 1));
  EXPECT_FALSE(exponent_identity_check(u, 2, 1));
  EXPECT_TRUE(exponent_identity_check(u, 2, 2));
  const auto g = Group::parse("SL2:p=3");
  EXPECT_TRUE(exponent_identity_check(g, 13, 1));
  EXPECT_TRUE(exponent_identity_check(g, 5, 2));
  EXPECT_FALSE(exponent_identity_check(g, 5, 1));
  EXPECT_THROW(exponent_identity_check(g, 1, 3), Error);
  EXPECT_THROW(exponent_identity_check(g, -1, 2), Error);
  EXPECT_THROW(exponent_identity_check(g, 2, 0), Error);
}
