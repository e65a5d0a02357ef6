#include "wordmap/free_group.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "wordmap/error.hpp"

namespace wordmap {

namespace {

std::atomic<std::size_t> g_syllable_cap{kDefaultWordSyllableCap};

void check_rank(int rank) {
  if (rank < 1)
    throw Error(ErrorKind::invalid_argument, "free group rank must be positive");
}

void check_same_rank(const Word& a, const Word& b) {
  if (a.rank() != b.rank())
    throw Error(ErrorKind::rank_mismatch,
                "rank mismatch: F_" + std::to_string(a.rank()) + " vs F_" +
                    std::to_string(b.rank()));
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r))
    throw Error(ErrorKind::word_overflow, "exponent overflow while reducing word");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r))
    throw Error(ErrorKind::word_overflow, "exponent overflow in word power");
  return r;
}

}  // namespace

std::size_t word_syllable_cap() noexcept { return g_syllable_cap.load(); }
void set_word_syllable_cap(std::size_t cap) noexcept { g_syllable_cap.store(cap); }

Word::Word(int rank) : rank_(rank) { check_rank(rank); }

void Word::push(const Syllable& s) {
  if (s.exponent == 0)
    return;
  if (!syllables_.empty() && syllables_.back().generator == s.generator) {
    auto merged = checked_add(syllables_.back().exponent, s.exponent);
    if (merged == 0)
      syllables_.pop_back();
    else
      syllables_.back().exponent = merged;
    return;
  }
  if (syllables_.size() >= word_syllable_cap())
    throw Error(ErrorKind::word_overflow,
                "word exceeds syllable cap of " + std::to_string(word_syllable_cap()));
  syllables_.push_back(s);
}

Word Word::reduce(int rank, std::span<const Syllable> raw) {
  Word w(rank);
  w.syllables_.reserve(raw.size());
  for (const auto& s : raw) {
    if (s.generator < 1 || s.generator > rank)
      throw Error(ErrorKind::invalid_generator,
                  "generator f" + std::to_string(s.generator) + " outside F_" +
                      std::to_string(rank));
    w.push(s);
  }
  return w;
}

Word Word::generator(int rank, int index, std::int64_t exponent) {
  Syllable s{index, exponent};
  return reduce(rank, std::span<const Syllable>(&s, 1));
}

std::uint64_t Word::letter_length() const noexcept {
  std::uint64_t n = 0;
  for (const auto& s : syllables_)
    n += static_cast<std::uint64_t>(std::llabs(s.exponent));
  return n;
}

int Word::max_generator() const noexcept {
  int m = 0;
  for (const auto& s : syllables_)
    m = std::max(m, s.generator);
  return m;
}

Word& Word::operator*=(const Word& other) {
  check_same_rank(*this, other);
  if (&other == this) {
    const Word copy = other;
    return *this *= copy;
  }
  for (const auto& s : other.syllables_)
    push(s);
  return *this;
}

Word Word::operator*(const Word& other) const {
  Word r = *this;
  r *= other;
  return r;
}

Word Word::inverse() const {
  Word r(rank_);
  r.syllables_.reserve(syllables_.size());
  for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it)
    r.syllables_.push_back({it->generator, -it->exponent});
  return r;
}

Word Word::pow(std::int64_t exponent) const {
  if (exponent < 0)
    return inverse().pow(-exponent);
  if (syllables_.size() == 1) {
    Word r(rank_);
    if (exponent != 0)
      r.syllables_.push_back(
          {syllables_[0].generator, checked_mul(syllables_[0].exponent, exponent)});
    return r;
  }
  Word result(rank_);
  Word base = *this;
  while (exponent > 0) {
    if (exponent & 1)
      result *= base;
    exponent >>= 1;
    if (exponent > 0)
      base *= base;
  }
  return result;
}

Word Word::with_rank(int new_rank) const {
  check_rank(new_rank);
  if (max_generator() > new_rank)
    throw Error(ErrorKind::invalid_generator,
                "word uses f" + std::to_string(max_generator()) + ", cannot live in F_" +
                    std::to_string(new_rank));
  Word r(new_rank);
  r.syllables_ = syllables_;
  return r;
}

std::string Word::to_string() const {
  if (syllables_.empty())
    return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& s : syllables_) {
    if (!first)
      os << ' ';
    first = false;
    os << 'f' << s.generator;
    if (s.exponent != 1)
      os << '^' << s.exponent;
  }
  return os.str();
}

Word Word::parse(std::string_view text, int rank) {
  std::vector<Syllable> raw;
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) -> Error {
    return Error(ErrorKind::parse_error,
                 "cannot parse word '" + std::string(text) + "': " + why);
  };
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (pos < text.size()) {
    if (is_space(text[pos])) {
      ++pos;
      continue;
    }
    std::size_t end = pos;
    while (end < text.size() && !is_space(text[end]))
      ++end;
    std::string_view token = text.substr(pos, end - pos);
    pos = end;
    if (token == "1")
      continue;
    if (token.size() < 2 || token[0] != 'f')
      throw fail("bad token '" + std::string(token) + "'");
    auto caret = token.find('^');
    std::string_view index_part = token.substr(1, caret == std::string_view::npos
                                                      ? std::string_view::npos
                                                      : caret - 1);
    int index = 0;
    auto [p1, ec1] = std::from_chars(index_part.data(), index_part.data() + index_part.size(), index);
    if (ec1 != std::errc() || p1 != index_part.data() + index_part.size())
      throw fail("bad generator index in '" + std::string(token) + "'");
    std::int64_t exponent = 1;
    if (caret != std::string_view::npos) {
      std::string_view exp_part = token.substr(caret + 1);
      if (!exp_part.empty() && exp_part[0] == '+')
        exp_part.remove_prefix(1);
      auto [p2, ec2] = std::from_chars(exp_part.data(), exp_part.data() + exp_part.size(), exponent);
      if (ec2 != std::errc() || p2 != exp_part.data() + exp_part.size() || exp_part.empty())
        throw fail("bad exponent in '" + std::string(token) + "'");
      if (exponent == 0)
        throw fail("zero exponent in '" + std::string(token) + "'");
    }
    raw.push_back({index, exponent});
  }
  return reduce(rank, raw);
}

Word commutator(const Word& a, const Word& b) {
  check_same_rank(a, b);
  Word r = a;
  r *= b;
  r *= a.inverse();
  r *= b.inverse();
  return r;
}

Word theta(int rank, int i) {
  if (rank < 2)
    throw Error(ErrorKind::invalid_argument, "theta requires rank >= 2");
  if (i < 1)
    throw Error(ErrorKind::invalid_argument, "theta index must be >= 1");
  Word t = commutator(Word::generator(rank, 1), Word::generator(rank, 2));
  for (int k = 2; k <= i; ++k)
    t = commutator(t, Word::generator(rank, k % 2 == 0 ? 1 : 2));
  return t;
}

Word derived_word(int rank, int i) {
  if (rank < 2)
    throw Error(ErrorKind::invalid_argument, "derived word requires rank >= 2");
  if (i < 1)
    throw Error(ErrorKind::invalid_argument, "derived word index must be >= 1");
  Word t = commutator(Word::generator(rank, 1), Word::generator(rank, 2));
  for (int k = 2; k <= i; ++k) {
    const Word f = Word::generator(rank, k % 2 == 0 ? 1 : 2);
    t = commutator(t, f * t * f.inverse());
  }
  return t;
}

}  // namespace wordmap
