#include "wordmap/matrix.hpp"

#include <sstream>
#include <utility>

#include "wordmap/error.hpp"

namespace wordmap {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p) || p >= (1u << 31))
    throw Error(ErrorKind::invalid_descriptor, "modulus " + std::to_string(p) + " is not a prime below 2^31");
}

std::uint32_t PrimeField::reduce(std::int64_t v) const noexcept {
  auto r = v % static_cast<std::int64_t>(p_);
  return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const noexcept {
  std::uint32_t r = 1 % p_;
  while (e) {
    if (e & 1)
      r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a % p_ == 0)
    throw Error(ErrorKind::invalid_argument, "inverse of zero in F_" + std::to_string(p_));
  return pow(a, p_ - 2);
}

Matrix::Matrix(int dim, std::uint32_t p) : dim_(dim), p_(p) {
  if (dim < 1 || dim > kMaxDim)
    throw Error(ErrorKind::invalid_descriptor,
                "matrix dimension must be in 1.." + std::to_string(kMaxDim));
  if (p < 2)
    throw Error(ErrorKind::invalid_descriptor, "modulus must be at least 2");
}

Matrix Matrix::identity(int dim, std::uint32_t p) {
  Matrix m(dim, p);
  for (int i = 0; i < dim; ++i)
    m.e_[i * kMaxDim + i] = 1;
  return m;
}

Matrix Matrix::from_entries(int dim, std::uint32_t p, std::span<const std::int64_t> row_major) {
  if (row_major.size() != static_cast<std::size_t>(dim * dim))
    throw Error(ErrorKind::parse_error, "matrix literal needs " + std::to_string(dim * dim) +
                                            " entries, got " + std::to_string(row_major.size()));
  Matrix m(dim, p);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c)
      m.set(r, c, row_major[r * dim + c]);
  return m;
}

void Matrix::set(int r, int c, std::int64_t v) {
  auto x = v % static_cast<std::int64_t>(p_);
  e_[r * kMaxDim + c] = static_cast<std::uint32_t>(x < 0 ? x + p_ : x);
}

Matrix Matrix::operator*(const Matrix& o) const {
  Matrix r(dim_, p_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      std::uint64_t acc = 0;
      for (int k = 0; k < dim_; ++k) {
        acc += std::uint64_t{e_[i * kMaxDim + k]} * o.e_[k * kMaxDim + j];
        // dim <= 4 and entries < 2^31 keep two products below 2^63
        if (k & 1)
          acc %= p_;
      }
      r.e_[i * kMaxDim + j] = static_cast<std::uint32_t>(acc % p_);
    }
  return r;
}

std::uint32_t Matrix::determinant() const {
  auto f = PrimeField::trusted(p_);
  auto a = e_;
  std::uint32_t det = 1;
  for (int col = 0; col < dim_; ++col) {
    int pivot = -1;
    for (int r = col; r < dim_; ++r)
      if (a[r * kMaxDim + col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0)
      return 0;
    if (pivot != col) {
      for (int c = 0; c < dim_; ++c)
        std::swap(a[pivot * kMaxDim + c], a[col * kMaxDim + c]);
      det = f.sub(0, det);
    }
    const auto pv = a[col * kMaxDim + col];
    det = f.mul(det, pv);
    const auto pinv = f.inv(pv);
    for (int r = col + 1; r < dim_; ++r) {
      const auto factor = f.mul(a[r * kMaxDim + col], pinv);
      if (!factor)
        continue;
      for (int c = col; c < dim_; ++c)
        a[r * kMaxDim + c] = f.sub(a[r * kMaxDim + c], f.mul(factor, a[col * kMaxDim + c]));
    }
  }
  return det;
}

Matrix Matrix::inverse() const {
  if (dim_ == 2) {
    auto f = PrimeField::trusted(p_);
    const auto a = e_[0], b = e_[1], c = e_[kMaxDim], d = e_[kMaxDim + 1];
    const auto det = f.sub(f.mul(a, d), f.mul(b, c));
    if (!det)
      throw Error(ErrorKind::invalid_argument, "matrix is singular");
    const auto di = f.inv(det);
    Matrix r(2, p_);
    r.e_[0] = f.mul(d, di);
    r.e_[1] = f.mul(f.sub(0, b), di);
    r.e_[kMaxDim] = f.mul(f.sub(0, c), di);
    r.e_[kMaxDim + 1] = f.mul(a, di);
    return r;
  }
  auto f = PrimeField::trusted(p_);
  auto a = e_;
  Matrix inv = identity(dim_, p_);
  auto& b = inv.e_;
  for (int col = 0; col < dim_; ++col) {
    int pivot = -1;
    for (int r = col; r < dim_; ++r)
      if (a[r * kMaxDim + col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0)
      throw Error(ErrorKind::invalid_argument, "matrix is singular");
    for (int c = 0; c < dim_; ++c) {
      std::swap(a[pivot * kMaxDim + c], a[col * kMaxDim + c]);
      std::swap(b[pivot * kMaxDim + c], b[col * kMaxDim + c]);
    }
    const auto pinv = f.inv(a[col * kMaxDim + col]);
    for (int c = 0; c < dim_; ++c) {
      a[col * kMaxDim + c] = f.mul(a[col * kMaxDim + c], pinv);
      b[col * kMaxDim + c] = f.mul(b[col * kMaxDim + c], pinv);
    }
    for (int r = 0; r < dim_; ++r) {
      if (r == col)
        continue;
      const auto factor = a[r * kMaxDim + col];
      if (!factor)
        continue;
      for (int c = 0; c < dim_; ++c) {
        a[r * kMaxDim + c] = f.sub(a[r * kMaxDim + c], f.mul(factor, a[col * kMaxDim + c]));
        b[r * kMaxDim + c] = f.sub(b[r * kMaxDim + c], f.mul(factor, b[col * kMaxDim + c]));
      }
    }
  }
  return inv;
}

Matrix Matrix::pow(std::int64_t e) const {
  if (e < 0)
    return inverse().pow(-e);
  Matrix result = identity(dim_, p_);
  Matrix base = *this;
  while (e > 0) {
    if (e & 1)
      result = result * base;
    e >>= 1;
    if (e)
      base = base * base;
  }
  return result;
}

bool Matrix::is_identity() const noexcept {
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      if (at(i, j) != (i == j ? 1u : 0u))
        return false;
  return true;
}

bool Matrix::is_upper_triangular() const noexcept {
  for (int i = 1; i < dim_; ++i)
    for (int j = 0; j < i; ++j)
      if (at(i, j))
        return false;
  return true;
}

bool Matrix::is_unitriangular() const noexcept {
  if (!is_upper_triangular())
    return false;
  for (int i = 0; i < dim_; ++i)
    if (at(i, i) != 1)
      return false;
  return true;
}

std::vector<std::int64_t> Matrix::entries() const {
  std::vector<std::int64_t> out;
  out.reserve(dim_ * dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      out.push_back(at(i, j));
  return out;
}

std::vector<std::vector<std::int64_t>> Matrix::rows() const {
  std::vector<std::vector<std::int64_t>> out(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      out[i].push_back(at(i, j));
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < dim_; ++i) {
    os << (i ? ",[" : "[");
    for (int j = 0; j < dim_; ++j)
      os << (j ? "," : "") << at(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

std::size_t Matrix::hash() const noexcept {
  std::uint64_t h = 1469598103934665603ull ^ (std::uint64_t{p_} << 8) ^ dim_;
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      h ^= at(i, j);
      h *= 1099511628211ull;
    }
  return static_cast<std::size_t>(h);
}

std::strong_ordering operator<=>(const Matrix& a, const Matrix& b) noexcept {
  if (auto c = a.dim_ <=> b.dim_; c != 0)
    return c;
  if (auto c = a.p_ <=> b.p_; c != 0)
    return c;
  for (int i = 0; i < a.dim_; ++i)
    for (int j = 0; j < a.dim_; ++j)
      if (auto c = a.at(i, j) <=> b.at(i, j); c != 0)
        return c;
  return std::strong_ordering::equal;
}

}  // namespace wordmap
