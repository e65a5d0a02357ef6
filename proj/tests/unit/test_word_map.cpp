#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "wordmap/error.hpp"
#include "wordmap/laws.hpp"
#include "wordmap/word_map.hpp"

using namespace wordmap;

namespace {

std::vector<oracle::Mat> plain(std::span<const Matrix> x) {
  std::vector<oracle::Mat> out;
  for (const auto& m : x)
    out.push_back(oracle::to_mat(m));
  return out;
}

std::vector<oracle::Mat> plain_inverses(std::span<const Matrix> x) {
  std::vector<oracle::Mat> out;
  for (const auto& m : x)
    out.push_back(oracle::to_mat(m.inverse()));
  return out;
}

}  // namespace

TEST(Evaluate, EmptyWordIsIdentity) {
  const auto g = Group::parse("SL2:p=3");
  const std::vector<std::int64_t> s{0, 1, 2, 0};
  const Tuple x{g.element(s)};
  EXPECT_TRUE(evaluate(Word::parse("1", 1), x).is_identity());
}

TEST(Evaluate, MatchesLetterOracle) {
  std::mt19937_64 rng(41);
  for (const char* d : {"SL2:p=5", "Borel:s=3,p=3", "GL:s=3,p=2", "GL:s=4,p=5", "SL2:p=101"}) {
    const auto g = Group::parse(d);
    const auto p = g.descriptor().p;
    for (int k = 0; k < 200; ++k) {
      const int n = 1 + k % 3;
      const auto w = Word::reduce(n, oracle::random_raw(rng, n, 60));
      const auto x = random_tuple(g, n, rng);
      ASSERT_EQ(oracle::to_mat(evaluate(w, x)),
                oracle::eval_letters(oracle::letters_of(w), plain(x), plain_inverses(x), p))
          << d << " " << w.to_string();
    }
  }
}

TEST(Evaluate, LargeExponentsUseFastPower) {
  const auto g = Group::parse("SL2:p=101");
  std::mt19937_64 rng(42);
  const auto x = random_tuple(g, 2, rng);
  const auto order = static_cast<std::int64_t>(g.element_order(x[0]));
  const auto w = Word::generator(2, 1, order * 1'000'000'007LL + 1);
  EXPECT_EQ(evaluate(w, x), x[0]);
}

TEST(Evaluate, IsAHomomorphismOnWords) {
  std::mt19937_64 rng(43);
  const auto g = Group::parse("GL:s=3,p=3");
  for (int k = 0; k < 300; ++k) {
    const auto u = Word::reduce(3, oracle::random_raw(rng, 3, 30));
    const auto v = Word::reduce(3, oracle::random_raw(rng, 3, 30));
    const auto x = random_tuple(g, 3, rng);
    EXPECT_EQ(evaluate(u * v, x), evaluate(u, x) * evaluate(v, x));
    EXPECT_EQ(evaluate(u.inverse(), x), evaluate(u, x).inverse());
  }
}

TEST(Evaluate, RankMismatch) {
  const auto g = Group::parse("SL2:p=3");
  std::mt19937_64 rng(44);
  const auto x = random_tuple(g, 2, rng);
  EXPECT_THROW(evaluate(Word::parse("f1", 3), x), Error);
  EXPECT_THROW(wordmap::apply(Endomorphism::identity(3), x), Error);
}

TEST(Apply, AntiActionLaw) {
  std::mt19937_64 rng(45);
  const auto g = Group::parse("SL2:p=5");
  for (int k = 0; k < 300; ++k) {
    const auto s = random_endomorphism(3, rng);
    const auto t = random_automorphism(3, rng);
    const auto x = random_tuple(g, 3, rng);
    EXPECT_EQ(wordmap::apply(compose(s, t), x), wordmap::apply(t, wordmap::apply(s, x)));
    EXPECT_EQ(wordmap::apply(Endomorphism::identity(3), x), x);
  }
}

TEST(FixedSet, MembershipMatchesDefinition) {
  std::mt19937_64 rng(46);
  const auto g = Group::parse("SL2:p=3");
  int hits = 0;
  for (int k = 0; k < 2000; ++k) {
    const auto x = random_tuple(g, 2, rng);
    const auto a = g.random_element(rng);
    const auto w = Word::reduce(2, oracle::random_raw(rng, 2, 6));
    const int i = 1 + k % 2;
    const bool expected = evaluate(w, x) == a.inverse() * x[i - 1] * a;
    ASSERT_EQ(fixed_set_membership(w, a, i, x), expected);
    hits += expected;
  }
  EXPECT_GT(hits, 0);
  const std::vector<std::int64_t> s{0, 1, 2, 0};
  const Tuple x{g.identity(), g.identity()};
  EXPECT_THROW(fixed_set_membership(Word::parse("f1", 2), g.element(s), 3, x), Error);
}

TEST(TupleSpace, IndexingIsLexicographic) {
  const auto g = Group::parse("GL:s=2,p=2");
  const TupleSpace space(g, 3);
  EXPECT_EQ(space.size(), 216u);
  Tuple prev;
  for (std::uint64_t k = 0; k < space.size(); ++k) {
    const auto x = space.tuple(k);
    ASSERT_EQ(space.index_of(x), k);
    if (k > 0)
      ASSERT_TRUE(std::lexicographical_compare(prev.begin(), prev.end(), x.begin(), x.end()));
    prev = x;
  }
}

TEST(TupleSpace, ParallelScansMatchSerial) {
  const auto g = Group::parse("SL2:p=3");
  const TupleSpace space(g, 3);
  auto pred = [](std::span<const Matrix> x) {
    return (x[0] * x[1] * x[2]).is_identity() && !x[0].is_identity();
  };
  std::uint64_t serial = 0;
  std::optional<std::uint64_t> first;
  for (std::uint64_t k = 0; k < space.size(); ++k)
    if (pred(space.tuple(k))) {
      ++serial;
      if (!first)
        first = k;
    }
  const auto saved = worker_count();
  for (unsigned w : {1u, 2u, 5u}) {
    set_worker_count(w);
    EXPECT_EQ(space.count_if(pred), serial) << w;
    EXPECT_EQ(space.find_first(pred), first) << w;
  }
  set_worker_count(saved);
  EXPECT_FALSE(space.find_first([](std::span<const Matrix>) { return false; }).has_value());
}

TEST(TupleSpace, Caps) {
  EXPECT_EQ(tuple_count(120, 3, 10'000'000), 1'728'000u);
  EXPECT_FALSE(tuple_count(120, 4, 10'000'000).has_value());
  EXPECT_FALSE(tuple_count(1u << 31, 3, ~0ull).has_value());
  const auto g = Group::parse("SL2:p=5");
  try {
    TupleSpace(g, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::cap_exceeded);
  }
  EXPECT_THROW(TupleSpace(g, 0), Error);
}
