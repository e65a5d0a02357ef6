#include "wordmap/word_map.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>
#include <vector>

#include "wordmap/error.hpp"

namespace wordmap {

namespace {

std::atomic<unsigned> g_workers{0};

Matrix evaluate_with(const Word& w, std::span<const Matrix> x, std::span<const Matrix> x_inv) {
  Matrix acc = Matrix::identity(x.front().dim(), x.front().modulus());
  for (const auto& s : w.syllables()) {
    const auto& base = s.exponent > 0 ? x[s.generator - 1] : x_inv[s.generator - 1];
    const auto e = s.exponent > 0 ? s.exponent : -s.exponent;
    acc = acc * (e == 1 ? base : base.pow(e));
  }
  return acc;
}

std::vector<Matrix> inverses(std::span<const Matrix> x) {
  std::vector<Matrix> inv;
  inv.reserve(x.size());
  for (const auto& g : x)
    inv.push_back(g.inverse());
  return inv;
}

void check_tuple(int rank, std::span<const Matrix> x) {
  if (x.empty())
    throw Error(ErrorKind::rank_mismatch, "tuple must have at least one entry");
  if (static_cast<int>(x.size()) != rank)
    throw Error(ErrorKind::rank_mismatch, "word of rank " + std::to_string(rank) +
                                              " evaluated on tuple of length " +
                                              std::to_string(x.size()));
}

}  // namespace

std::string_view to_string(SearchMode m) noexcept {
  return m == SearchMode::exhaustive ? "exhaustive" : "sampled";
}

Matrix evaluate(const Word& w, std::span<const Matrix> x) {
  check_tuple(w.rank(), x);
  const auto inv = inverses(x);
  return evaluate_with(w, x, inv);
}

Tuple apply(const Endomorphism& sigma, std::span<const Matrix> x) {
  check_tuple(sigma.rank(), x);
  const auto inv = inverses(x);
  Tuple out;
  out.reserve(x.size());
  for (const auto& w : sigma.images())
    out.push_back(evaluate_with(w, x, inv));
  return out;
}

bool fixed_set_membership(const Word& w, const Matrix& a, int i, std::span<const Matrix> x) {
  check_tuple(w.rank(), x);
  if (i < 1 || i > w.rank())
    throw Error(ErrorKind::invalid_generator, "coordinate index out of range");
  const Matrix lhs = evaluate(w, x);
  return (lhs * a.inverse() * x[i - 1].inverse() * a).is_identity();
}

Tuple conjugate(const Matrix& g, std::span<const Matrix> x) {
  const Matrix gi = g.inverse();
  Tuple out;
  out.reserve(x.size());
  for (const auto& h : x)
    out.push_back(g * h * gi);
  return out;
}

Tuple multiply(std::span<const Matrix> x, std::span<const Matrix> y) {
  if (x.size() != y.size())
    throw Error(ErrorKind::rank_mismatch, "tuples of different length");
  Tuple out;
  out.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    out.push_back(x[i] * y[i]);
  return out;
}

unsigned worker_count() noexcept {
  if (auto n = g_workers.load())
    return n;
  return std::max(1u, std::thread::hardware_concurrency());
}

void set_worker_count(unsigned n) noexcept { g_workers.store(n); }

std::optional<std::uint64_t> tuple_count(std::uint64_t group_order, int n, std::uint64_t cap) {
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    if (__builtin_mul_overflow(total, group_order, &total) || total > cap)
      return std::nullopt;
  }
  return total;
}

TupleSpace::TupleSpace(const Group& group, int n, std::uint64_t tuple_cap)
    : group_(group), n_(n), base_(group.order()) {
  if (n < 1)
    throw Error(ErrorKind::invalid_argument, "tuple length must be positive");
  auto total = tuple_count(base_, n, tuple_cap);
  if (!total)
    throw Error(ErrorKind::cap_exceeded, "|G|^n for " + group.descriptor().to_string() +
                                             ", n=" + std::to_string(n) +
                                             " exceeds the tuple cap " + std::to_string(tuple_cap));
  size_ = *total;
  group_.elements();
}

void TupleSpace::decode(std::uint64_t index, std::span<std::size_t> digits) const {
  for (int j = n_ - 1; j >= 0; --j) {
    digits[j] = static_cast<std::size_t>(index % base_);
    index /= base_;
  }
}

std::uint64_t TupleSpace::encode(std::span<const std::size_t> digits) const {
  std::uint64_t index = 0;
  for (int j = 0; j < n_; ++j)
    index = index * base_ + digits[j];
  return index;
}

Tuple TupleSpace::tuple(std::uint64_t index) const {
  std::vector<std::size_t> digits(n_);
  decode(index, digits);
  const auto& el = group_.elements();
  Tuple x;
  x.reserve(n_);
  for (auto d : digits)
    x.push_back(el[d]);
  return x;
}

std::uint64_t TupleSpace::index_of(std::span<const Matrix> x) const {
  std::vector<std::size_t> digits;
  digits.reserve(x.size());
  for (const auto& g : x)
    digits.push_back(group_.index_of(g));
  return encode(digits);
}

std::optional<std::uint64_t> TupleSpace::find_first(
    const std::function<bool(std::span<const Matrix>)>& pred) const {
  const unsigned workers =
      static_cast<unsigned>(std::min<std::uint64_t>(worker_count(), std::max<std::uint64_t>(1, size_ / 4096)));
  constexpr auto kNone = std::numeric_limits<std::uint64_t>::max();
  std::atomic<std::uint64_t> best{kNone};
  const auto& el = group_.elements();

  auto scan = [&](std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::size_t> digits(n_);
    Tuple x(n_, el.front());
    for (std::uint64_t k = lo; k < hi; ++k) {
      if (k >= best.load(std::memory_order_relaxed))
        return;
      decode(k, digits);
      for (int j = 0; j < n_; ++j)
        x[j] = el[digits[j]];
      if (pred(x)) {
        auto cur = best.load();
        while (k < cur && !best.compare_exchange_weak(cur, k)) {
        }
        return;
      }
    }
  };

  if (workers <= 1) {
    scan(0, size_);
  } else {
    std::vector<std::thread> pool;
    const auto chunk = (size_ + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const auto lo = std::min(size_, w * chunk);
      const auto hi = std::min(size_, lo + chunk);
      pool.emplace_back(scan, lo, hi);
    }
    for (auto& t : pool)
      t.join();
  }
  const auto b = best.load();
  if (b == kNone)
    return std::nullopt;
  return b;
}

std::uint64_t TupleSpace::count_if(const std::function<bool(std::span<const Matrix>)>& pred) const {
  const unsigned workers =
      static_cast<unsigned>(std::min<std::uint64_t>(worker_count(), std::max<std::uint64_t>(1, size_ / 4096)));
  const auto& el = group_.elements();
  std::vector<std::uint64_t> counts(workers, 0);

  auto scan = [&](unsigned w, std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::size_t> digits(n_);
    Tuple x(n_, el.front());
    std::uint64_t c = 0;
    for (std::uint64_t k = lo; k < hi; ++k) {
      decode(k, digits);
      for (int j = 0; j < n_; ++j)
        x[j] = el[digits[j]];
      if (pred(x))
        ++c;
    }
    counts[w] = c;
  };

  if (workers <= 1) {
    scan(0, 0, size_);
  } else {
    std::vector<std::thread> pool;
    const auto chunk = (size_ + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const auto lo = std::min(size_, w * chunk);
      const auto hi = std::min(size_, lo + chunk);
      pool.emplace_back(scan, w, lo, hi);
    }
    for (auto& t : pool)
      t.join();
  }
  std::uint64_t total = 0;
  for (auto c : counts)
    total += c;
  return total;
}

}  // namespace wordmap
