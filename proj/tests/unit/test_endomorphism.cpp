#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "wordmap/endomorphism.hpp"
#include "wordmap/error.hpp"
#include "wordmap/laws.hpp"

using namespace wordmap;

namespace {

/// Substitution through letters: every letter of w replaced by its image.
oracle::Letters substitute_letters(const Word& w, const Endomorphism& sigma) {
  oracle::Letters out;
  for (int l : oracle::letters_of(w)) {
    auto img = oracle::letters_of(sigma.image(l > 0 ? l : -l));
    if (l < 0)
      img = oracle::invert(img);
    out.insert(out.end(), img.begin(), img.end());
  }
  return oracle::naive_reduce(out);
}

std::vector<Endomorphism> automorphism_zoo(int rank) {
  auto zoo = nielsen_generators(rank);
  if (rank >= 2) {
    for (int i = 1; i < rank; ++i)
      zoo.push_back(braid_generator(rank, i));
    zoo.push_back(conjugation_pair(rank).first);
    zoo.push_back(transvection(rank, rank, 1));
  }
  if (rank >= 3)
    for (int s = 1; s <= 3; ++s) {
      zoo.push_back(theta_kernel_pair(rank, s).first);
      zoo.push_back(derived_kernel_pair(rank, s).first);
    }
  return zoo;
}

}  // namespace

TEST(Endomorphism, IdentityAndImages) {
  const auto id = Endomorphism::identity(3);
  EXPECT_TRUE(id.is_identity());
  EXPECT_TRUE(id.has_inverse());
  EXPECT_EQ(id.image(2).to_string(), "f2");
  EXPECT_THROW(id.image(0), Error);
  EXPECT_THROW(id.image(4), Error);
}

TEST(Endomorphism, ComposeIsSubstitutionOfTauIntoSigma) {
  std::mt19937_64 rng(21);
  for (int k = 0; k < 300; ++k) {
    const int rank = 1 + k % 3;
    const auto sigma = random_endomorphism(rank, rng, 4);
    const auto tau = random_endomorphism(rank, rng, 4);
    const auto c = compose(sigma, tau);
    for (int i = 1; i <= rank; ++i)
      ASSERT_EQ(oracle::letters_of(c.image(i)), substitute_letters(tau.image(i), sigma));
  }
}

TEST(Endomorphism, CompositionIsAssociativeWithUnit) {
  std::mt19937_64 rng(22);
  for (int k = 0; k < 200; ++k) {
    const auto a = random_endomorphism(3, rng, 3);
    const auto b = random_endomorphism(3, rng, 3);
    const auto c = random_endomorphism(3, rng, 3);
    EXPECT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
    EXPECT_EQ(compose(a, Endomorphism::identity(3)), a);
    EXPECT_EQ(compose(Endomorphism::identity(3), a), a);
  }
}

TEST(Endomorphism, InverseWitnessesAreValid) {
  for (int rank = 1; rank <= 5; ++rank)
    for (const auto& sigma : automorphism_zoo(rank)) {
      ASSERT_TRUE(sigma.has_inverse()) << sigma.to_string();
      EXPECT_TRUE(compose(sigma, sigma.inverse()).is_identity()) << sigma.to_string();
      EXPECT_TRUE(compose(sigma.inverse(), sigma).is_identity()) << sigma.to_string();
    }
}

TEST(Endomorphism, ComposedWitnessIsReversedProduct) {
  std::mt19937_64 rng(23);
  for (int k = 0; k < 200; ++k) {
    const auto a = random_automorphism(3, rng);
    const auto b = random_automorphism(3, rng);
    const auto c = compose(a, b);
    ASSERT_TRUE(c.has_inverse());
    EXPECT_TRUE(compose(c, c.inverse()).is_identity());
    EXPECT_EQ(c.inverse(), compose(b.inverse(), a.inverse()));
  }
}

TEST(Endomorphism, WithInverseChecksTheWitness) {
  const Endomorphism sigma(2, {Word::parse("f1 f2", 2), Word::parse("f2", 2)});
  EXPECT_FALSE(sigma.has_inverse());
  try {
    (void)sigma.inverse();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::not_invertible);
  }
  const auto good = sigma.with_inverse({Word::parse("f1 f2^-1", 2), Word::parse("f2", 2)});
  EXPECT_TRUE(good.has_inverse());
  EXPECT_THROW(sigma.with_inverse({Word::parse("f1 f2", 2), Word::parse("f2", 2)}), Error);
}

TEST(Endomorphism, Transvection) {
  const auto t = transvection(3, 1, 2);
  EXPECT_EQ(t.to_string(), "[f1 f2, f2, f3]");
  EXPECT_EQ(t.inverse().to_string(), "[f1 f2^-1, f2, f3]");
  EXPECT_THROW(transvection(3, 2, 2), Error);
  EXPECT_THROW(transvection(3, 1, 4), Error);
  EXPECT_THROW(transvection(1, 1, 1), Error);
}

TEST(Endomorphism, NielsenGenerators) {
  EXPECT_EQ(nielsen_generators(1).size(), 1u);
  EXPECT_EQ(nielsen_generators(1)[0].to_string(), "[f1^-1]");
  for (int rank = 2; rank <= 5; ++rank) {
    const auto gens = nielsen_generators(rank);
    ASSERT_EQ(gens.size(), 4u);
    for (const auto& g : gens)
      EXPECT_FALSE(g.is_identity());
    EXPECT_EQ(gens[3], transvection(rank, 1, 2));
  }
  EXPECT_EQ(nielsen_generators(3)[2].to_string(), "[f2, f3, f1]");
}

TEST(Endomorphism, ThetaKernelPair) {
  for (int s = 1; s <= 3; ++s) {
    const auto [sigma, tau] = theta_kernel_pair(4, s);
    EXPECT_FALSE(sigma.is_identity());
    EXPECT_EQ(sigma.image(4), Word::generator(4, 4) * theta(4, s));
    EXPECT_EQ(tau.image(4), Word::generator(4, 4) * theta(4, s).inverse());
    EXPECT_TRUE(compose(sigma, tau).is_identity());
    EXPECT_TRUE(compose(tau, sigma).is_identity());
  }
  EXPECT_THROW(theta_kernel_pair(2, 1), Error);
  EXPECT_THROW(derived_kernel_pair(2, 1), Error);
  EXPECT_THROW(tail_kernel_pair(3, Word::parse("f3", 3)), Error);
  EXPECT_THROW(tail_kernel_pair(3, Word(3)), Error);
}

TEST(Endomorphism, ConjugationPair) {
  const auto [sigma, tau] = conjugation_pair(3);
  EXPECT_EQ(sigma.to_string(), "[f1, f1 f2 f1^-1, f1 f3 f1^-1]");
  EXPECT_TRUE(compose(sigma, tau).is_identity());
  EXPECT_THROW(conjugation_pair(1), Error);
}

TEST(Endomorphism, BraidGeneratorShape) {
  const auto b = braid_generator(3, 1);
  EXPECT_EQ(b.to_string(), "[f1 f2 f1^-1, f1, f3]");
  EXPECT_THROW(braid_generator(3, 3), Error);
  EXPECT_THROW(braid_generator(1, 1), Error);
}

TEST(Endomorphism, ArtinRelations) {
  for (int rank = 2; rank <= 7; ++rank)
    EXPECT_TRUE(artin_relation_failures(rank).empty()) << rank;
  // far generators commute, adjacent ones do not
  const auto b1 = braid_generator(4, 1), b2 = braid_generator(4, 2), b3 = braid_generator(4, 3);
  EXPECT_EQ(compose(b1, b3), compose(b3, b1));
  EXPECT_NE(compose(b1, b2), compose(b2, b1));
}

TEST(Endomorphism, EmbedPreservesComposition) {
  std::mt19937_64 rng(24);
  for (int k = 0; k < 300; ++k) {
    const int s = 1 + k % 3;
    const int n = s + k % 3;
    const auto a = random_automorphism(s, rng);
    const auto b = random_automorphism(s, rng);
    ASSERT_EQ(embed_aut(compose(a, b), n), compose(embed_aut(a, n), embed_aut(b, n)));
    const auto ea = embed_aut(a, n);
    EXPECT_TRUE(compose(ea, ea.inverse()).is_identity());
    for (int i = s + 1; i <= n; ++i)
      EXPECT_EQ(ea.image(i), Word::generator(n, i));
  }
  EXPECT_THROW(embed_aut(Endomorphism::identity(3), 2), Error);
}

TEST(Endomorphism, TextAndJsonRoundTrip) {
  std::mt19937_64 rng(25);
  for (int k = 0; k < 100; ++k) {
    const auto a = random_automorphism(3, rng);
    EXPECT_EQ(Endomorphism::parse(a.to_string()), a);
    const auto back = Endomorphism::from_json(a.to_json());
    EXPECT_EQ(back, a);
    ASSERT_TRUE(back.has_inverse());
    EXPECT_EQ(back.inverse(), a.inverse());
  }
  const auto s = Endomorphism::from_json(R"({"rank":2,"images":["f1 f2", [[2,1]]]})");
  EXPECT_EQ(s.to_string(), "[f1 f2, f2]");
}

TEST(Endomorphism, MalformedInputs) {
  auto kind_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::invalid_argument;
  };
  EXPECT_EQ(kind_of([] { Endomorphism::from_json("{"); }), ErrorKind::parse_error);
  EXPECT_EQ(kind_of([] { Endomorphism::from_json(R"({"rank":2})"); }), ErrorKind::parse_error);
  EXPECT_EQ(kind_of([] { Endomorphism::from_json(R"({"rank":2,"images":["f1"]})"); }),
            ErrorKind::rank_mismatch);
  EXPECT_EQ(kind_of([] { Endomorphism::parse("f1, f2"); }), ErrorKind::parse_error);
  EXPECT_EQ(kind_of([] { Endomorphism::from_json(R"({"rank":2,"images":["f1","f2"],"inverse":["f1 f2","f2"]})"); }),
            ErrorKind::not_invertible);
}
