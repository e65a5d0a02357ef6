#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace wordmap {

bool is_prime(std::uint64_t n) noexcept;

/// Arithmetic in F_p for a prime p < 2^31.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);
  /// Skips the primality check; for moduli already validated elsewhere.
  static PrimeField trusted(std::uint32_t p) noexcept {
    PrimeField f;
    f.p_ = p;
    return f;
  }

  std::uint32_t modulus() const noexcept { return p_; }
  std::uint32_t reduce(std::int64_t v) const noexcept;
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept { return (a + std::uint64_t{b}) % p_; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept { return (a + std::uint64_t{p_} - b) % p_; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    return static_cast<std::uint32_t>(std::uint64_t{a} * b % p_);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept;
  /// Throws on zero.
  std::uint32_t inv(std::uint32_t a) const;

 private:
  PrimeField() = default;
  std::uint32_t p_ = 2;
};

/**
 * Square matrix over F_p of dimension at most kMaxDim, stored inline.
 *
 * Ordering is lexicographic on row-major entries and is the total order
 * used for canonical orbit representatives.
 */
class Matrix {
 public:
  static constexpr int kMaxDim = 4;

  Matrix(int dim, std::uint32_t p);
  static Matrix identity(int dim, std::uint32_t p);
  /// Row-major entries, reduced mod p.
  static Matrix from_entries(int dim, std::uint32_t p, std::span<const std::int64_t> row_major);

  int dim() const noexcept { return dim_; }
  std::uint32_t modulus() const noexcept { return p_; }
  std::uint32_t at(int r, int c) const noexcept { return e_[r * kMaxDim + c]; }
  void set(int r, int c, std::int64_t v);

  Matrix operator*(const Matrix& o) const;
  std::uint32_t determinant() const;
  /// Throws Error(invalid_argument) when singular.
  Matrix inverse() const;
  Matrix pow(std::int64_t e) const;

  bool is_identity() const noexcept;
  bool is_upper_triangular() const noexcept;
  bool is_unitriangular() const noexcept;

  std::vector<std::int64_t> entries() const;
  std::vector<std::vector<std::int64_t>> rows() const;
  /// "[[a,b],[c,d]]"
  std::string to_string() const;

  std::size_t hash() const noexcept;

  friend bool operator==(const Matrix& a, const Matrix& b) noexcept {
    return a.dim_ == b.dim_ && a.p_ == b.p_ && a.e_ == b.e_;
  }
  friend std::strong_ordering operator<=>(const Matrix& a, const Matrix& b) noexcept;

 private:
  int dim_;
  std::uint32_t p_;
  std::array<std::uint32_t, kMaxDim * kMaxDim> e_{};
};

struct MatrixHash {
  std::size_t operator()(const Matrix& m) const noexcept { return m.hash(); }
};

/// Point of G^n.
using Tuple = std::vector<Matrix>;

}  // namespace wordmap
