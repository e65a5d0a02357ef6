#include "wordmap/group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <limits>
#include <mutex>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "wordmap/error.hpp"

namespace wordmap {

std::string_view to_string(Family f) noexcept {
  switch (f) {
    case Family::gl: return "GL";
    case Family::sl2: return "SL2";
    case Family::borel: return "Borel";
    case Family::unipotent: return "Unipotent";
  }
  return "?";
}

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out)
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r))
    return std::numeric_limits<std::uint64_t>::max();
  return r;
}

std::uint64_t saturating_pow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i)
    r = saturating_mul(r, b);
  return r;
}

}  // namespace

GroupDescriptor GroupDescriptor::parse(std::string_view text) {
  auto fail = [&](const std::string& why) {
    return Error(ErrorKind::invalid_descriptor,
                 "bad group descriptor '" + std::string(text) + "': " + why);
  };
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw fail("expected FAMILY:key=value,...");
  const auto family = lower(text.substr(0, colon));
  GroupDescriptor d;
  if (family == "gl")
    d.family = Family::gl;
  else if (family == "sl2")
    d.family = Family::sl2;
  else if (family == "borel")
    d.family = Family::borel;
  else if (family == "unipotent")
    d.family = Family::unipotent;
  else
    throw fail("unknown family");

  bool have_s = false, have_p = false;
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    std::string_view kv = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    const auto eq = kv.find('=');
    if (eq == std::string_view::npos)
      throw fail("expected key=value");
    const auto key = lower(kv.substr(0, eq));
    const auto val = kv.substr(eq + 1);
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), v);
    if (ec != std::errc() || ptr != val.data() + val.size())
      throw fail("bad number '" + std::string(val) + "'");
    if (key == "s") {
      d.dim = static_cast<int>(v);
      have_s = true;
    } else if (key == "p") {
      if (v > std::numeric_limits<std::uint32_t>::max())
        throw fail("modulus too large");
      d.p = static_cast<std::uint32_t>(v);
      have_p = true;
    } else {
      throw fail("unknown key '" + key + "'");
    }
  }
  if (!have_p)
    throw fail("missing p");
  if (d.family == Family::sl2 && !have_s)
    d.dim = 2;
  else if (!have_s)
    throw fail("missing s");
  d.validate();
  return d;
}

std::string GroupDescriptor::to_string() const {
  if (family == Family::sl2)
    return "SL2:p=" + std::to_string(p);
  return std::string(wordmap::to_string(family)) + ":s=" + std::to_string(dim) +
         ",p=" + std::to_string(p);
}

void GroupDescriptor::validate() const {
  if (!is_prime(p) || p >= (1u << 31))
    throw Error(ErrorKind::invalid_descriptor, std::to_string(p) + " is not a prime below 2^31");
  if (dim < 1 || dim > Matrix::kMaxDim)
    throw Error(ErrorKind::invalid_descriptor,
                "matrix size must be in 1.." + std::to_string(Matrix::kMaxDim));
  if (family == Family::sl2 && dim != 2)
    throw Error(ErrorKind::invalid_descriptor, "SL2 forces s=2");
}

// ---------------------------------------------------------------------------

Subgroup::Subgroup(std::vector<Matrix> elements) : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

bool Subgroup::contains(const Matrix& m) const {
  return std::binary_search(elements_.begin(), elements_.end(), m);
}

Subgroup generate_subgroup(const Matrix& identity, std::span<const Matrix> gens) {
  std::unordered_set<Matrix, MatrixHash> seen{identity};
  std::vector<Matrix> out{identity};
  std::deque<Matrix> queue{identity};
  while (!queue.empty()) {
    const Matrix x = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      Matrix y = x * g;
      if (seen.insert(y).second) {
        out.push_back(y);
        queue.push_back(y);
      }
    }
  }
  return Subgroup(std::move(out));
}

bool is_closed(std::span<const Matrix> elements) {
  std::unordered_set<Matrix, MatrixHash> set(elements.begin(), elements.end());
  for (const auto& a : elements)
    for (const auto& b : elements)
      if (!set.contains(a * b))
        return false;
  return true;
}

std::vector<Matrix> generating_set(const Subgroup& h) {
  std::vector<Matrix> gens;
  if (h.elements().empty())
    return gens;
  const Matrix id = Matrix::identity(h.elements().front().dim(), h.elements().front().modulus());
  Subgroup current = generate_subgroup(id, gens);
  for (const auto& x : h.elements()) {
    if (current.size() == h.size())
      break;
    if (!current.contains(x)) {
      gens.push_back(x);
      current = generate_subgroup(id, gens);
    }
  }
  return gens;
}

Subgroup commutator_subgroup(const Subgroup& h) {
  if (h.elements().empty())
    return h;
  const Matrix id = Matrix::identity(h.elements().front().dim(), h.elements().front().modulus());
  const auto gens = generating_set(h);
  std::vector<Matrix> inv;
  for (const auto& g : gens)
    inv.push_back(g.inverse());

  std::vector<Matrix> normal_gens;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Matrix c = gens[i] * gens[j] * inv[i] * inv[j];
      if (!c.is_identity())
        normal_gens.push_back(c);
    }
  Subgroup n = generate_subgroup(id, normal_gens);
  // close under conjugation by the generators of h
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t k = 0; k < normal_gens.size() && !grew; ++k)
      for (std::size_t i = 0; i < gens.size(); ++i) {
        Matrix c = gens[i] * normal_gens[k] * inv[i];
        if (!n.contains(c)) {
          normal_gens.push_back(c);
          n = generate_subgroup(id, normal_gens);
          grew = true;
          break;
        }
      }
  }
  return n;
}

// ---------------------------------------------------------------------------

struct Group::Cache {
  std::once_flag elements_once;
  std::vector<Matrix> elements;
  std::unordered_map<Matrix, std::size_t, MatrixHash> index;

  std::once_flag center_once;
  std::vector<Matrix> center;

  std::once_flag derived_once;
  std::vector<Subgroup> derived;

  std::once_flag exponent_once;
  std::uint64_t exponent = 0;
};

Group::Group(GroupDescriptor descriptor, std::size_t enumeration_cap)
    : descriptor_(descriptor), cap_(enumeration_cap), cache_(std::make_shared<Cache>()) {
  descriptor_.validate();
}

std::uint64_t Group::order() const noexcept {
  const std::uint64_t p = descriptor_.p;
  const int s = descriptor_.dim;
  switch (descriptor_.family) {
    case Family::sl2:
      return saturating_mul(p, saturating_mul(p - 1, p + 1));
    case Family::gl: {
      std::uint64_t n = 1;
      const std::uint64_t ps = saturating_pow(p, s);
      for (int i = 0; i < s; ++i)
        n = saturating_mul(n, ps - saturating_pow(p, i));
      return n;
    }
    case Family::borel:
      return saturating_mul(saturating_pow(p - 1, s), saturating_pow(p, s * (s - 1) / 2));
    case Family::unipotent:
      return saturating_pow(p, s * (s - 1) / 2);
  }
  return 0;
}

bool Group::contains(const Matrix& m) const {
  if (m.dim() != descriptor_.dim || m.modulus() != descriptor_.p)
    return false;
  switch (descriptor_.family) {
    case Family::gl: return m.determinant() != 0;
    case Family::sl2: return m.determinant() == 1;
    case Family::borel: return m.is_upper_triangular() && m.determinant() != 0;
    case Family::unipotent: return m.is_unitriangular();
  }
  return false;
}

Matrix Group::element(std::span<const std::int64_t> row_major) const {
  Matrix m = Matrix::from_entries(descriptor_.dim, descriptor_.p, row_major);
  if (!contains(m))
    throw Error(ErrorKind::invalid_argument,
                "matrix " + m.to_string() + " is not an element of " + descriptor_.to_string());
  return m;
}

Matrix Group::random_element(std::mt19937_64& rng) const {
  const int s = descriptor_.dim;
  const auto p = descriptor_.p;
  std::uniform_int_distribution<std::uint32_t> any(0, p - 1);
  std::uniform_int_distribution<std::uint32_t> unit(1, p - 1);
  Matrix m(s, p);
  switch (descriptor_.family) {
    case Family::gl:
    case Family::sl2:
      do {
        for (int i = 0; i < s; ++i)
          for (int j = 0; j < s; ++j)
            m.set(i, j, any(rng));
      } while (m.determinant() == 0);
      if (descriptor_.family == Family::sl2) {
        // scaling one row is |F_p^*|-to-one from GL_2 onto SL_2
        auto f = PrimeField::trusted(p);
        const auto dinv = f.inv(m.determinant());
        for (int j = 0; j < s; ++j)
          m.set(0, j, f.mul(m.at(0, j), dinv));
      }
      return m;
    case Family::borel:
    case Family::unipotent:
      for (int i = 0; i < s; ++i) {
        m.set(i, i, descriptor_.family == Family::borel ? unit(rng) : 1);
        for (int j = i + 1; j < s; ++j)
          m.set(i, j, any(rng));
      }
      return m;
  }
  return m;
}

std::uint64_t Group::element_order(const Matrix& g) const {
  Matrix x = g;
  std::uint64_t k = 1;
  while (!x.is_identity()) {
    x = x * g;
    ++k;
  }
  return k;
}

void Group::require_enumerable() const {
  if (!enumerable())
    throw Error(ErrorKind::cap_exceeded,
                descriptor_.to_string() + " has " + std::to_string(order()) +
                    " elements, above the enumeration cap " + std::to_string(cap_));
}

namespace {

/// Calls visit(m) for every matrix whose free entries range over [lo, p).
template <typename Visit>
void odometer(int dim, std::uint32_t p, const std::vector<std::pair<int, int>>& free_pos,
              const std::vector<std::uint32_t>& low, Matrix start, Visit&& visit) {
  std::vector<std::uint32_t> digits(low);
  for (std::size_t k = 0; k < free_pos.size(); ++k)
    start.set(free_pos[k].first, free_pos[k].second, digits[k]);
  while (true) {
    visit(start);
    std::size_t k = free_pos.size();
    while (k > 0) {
      --k;
      if (++digits[k] < p) {
        start.set(free_pos[k].first, free_pos[k].second, digits[k]);
        break;
      }
      digits[k] = low[k];
      start.set(free_pos[k].first, free_pos[k].second, digits[k]);
      if (k == 0)
        return;
    }
    if (free_pos.empty())
      return;
  }
  (void)dim;
}

}  // namespace

const std::vector<Matrix>& Group::elements() const {
  require_enumerable();
  std::call_once(cache_->elements_once, [this] {
    const int s = descriptor_.dim;
    const auto p = descriptor_.p;
    std::vector<Matrix> out;
    out.reserve(order());
    std::vector<std::pair<int, int>> pos;
    std::vector<std::uint32_t> low;
    Matrix start(s, p);
    switch (descriptor_.family) {
      case Family::gl:
      case Family::sl2:
        for (int i = 0; i < s; ++i)
          for (int j = 0; j < s; ++j) {
            pos.emplace_back(i, j);
            low.push_back(0);
          }
        break;
      case Family::borel:
      case Family::unipotent:
        for (int i = 0; i < s; ++i)
          for (int j = i; j < s; ++j) {
            if (i == j && descriptor_.family == Family::unipotent) {
              start.set(i, i, 1);
              continue;
            }
            pos.emplace_back(i, j);
            low.push_back(i == j ? 1 : 0);
          }
        break;
    }
    odometer(s, p, pos, low, start, [&](const Matrix& m) {
      if (contains(m))
        out.push_back(m);
    });
    std::sort(out.begin(), out.end());
    cache_->index.reserve(out.size());
    for (std::size_t i = 0; i < out.size(); ++i)
      cache_->index.emplace(out[i], i);
    cache_->elements = std::move(out);
  });
  return cache_->elements;
}

std::size_t Group::index_of(const Matrix& g) const {
  elements();
  auto it = cache_->index.find(g);
  if (it == cache_->index.end())
    throw Error(ErrorKind::invalid_argument,
                g.to_string() + " is not an element of " + descriptor_.to_string());
  return it->second;
}

const std::vector<Matrix>& Group::center() const {
  require_enumerable();
  std::call_once(cache_->center_once, [this] {
    const auto gens = generating_set(Subgroup(elements()));
    for (const auto& z : elements()) {
      bool central = true;
      for (const auto& g : gens)
        if (!(z * g == g * z)) {
          central = false;
          break;
        }
      if (central)
        cache_->center.push_back(z);
    }
  });
  return cache_->center;
}

bool Group::is_central(const Matrix& g) const {
  const auto& c = center();
  return std::binary_search(c.begin(), c.end(), g);
}

const std::vector<Subgroup>& Group::derived_series() const {
  require_enumerable();
  std::call_once(cache_->derived_once, [this] {
    auto& series = cache_->derived;
    series.emplace_back(elements());
    while (!series.back().is_trivial()) {
      Subgroup next = commutator_subgroup(series.back());
      if (next.size() == series.back().size())
        break;
      series.push_back(std::move(next));
    }
  });
  return cache_->derived;
}

std::optional<int> Group::derived_length() const {
  const auto& series = derived_series();
  if (!series.back().is_trivial())
    return std::nullopt;
  return static_cast<int>(series.size()) - 1;
}

std::uint64_t Group::exponent() const {
  require_enumerable();
  std::call_once(cache_->exponent_once, [this] {
    std::uint64_t e = 1;
    for (const auto& g : elements())
      e = std::lcm(e, element_order(g));
    cache_->exponent = e;
  });
  return cache_->exponent;
}

}  // namespace wordmap
