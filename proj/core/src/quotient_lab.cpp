#include "wordmap/quotient_lab.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "wordmap/error.hpp"

namespace wordmap {

__extension__ using Wide = __int128;

Subgroup subgroup_from_elements(const Group& group, std::vector<Matrix> elements) {
  for (const auto& m : elements)
    if (!group.contains(m))
      throw Error(ErrorKind::not_subgroup,
                  m.to_string() + " is not in " + group.descriptor().to_string());
  Subgroup s(std::move(elements));
  if (s.elements().empty() || !is_closed(s.elements()))
    throw Error(ErrorKind::not_subgroup, "element list is not closed under multiplication");
  return s;
}

Subgroup subgroup_from_generators(const Group& group, const std::vector<Matrix>& gens) {
  for (const auto& m : gens)
    if (!group.contains(m))
      throw Error(ErrorKind::not_subgroup,
                  m.to_string() + " is not in " + group.descriptor().to_string());
  return generate_subgroup(group.identity(), gens);
}

OrbitSpace::OrbitSpace(const Group& group, int n, Subgroup subgroup, std::uint64_t tuple_cap)
    : space_(group, n, tuple_cap), subgroup_(std::move(subgroup)) {
  for (const auto& s : subgroup_.elements())
    if (!group.contains(s))
      throw Error(ErrorKind::not_subgroup, s.to_string() + " is not in " +
                                               group.descriptor().to_string());
  if (subgroup_.elements().empty() || !is_closed(subgroup_.elements()))
    throw Error(ErrorKind::not_subgroup, "S is not closed under multiplication");

  const auto& el = group.elements();
  conj_.reserve(subgroup_.size());
  for (const auto& s : subgroup_.elements()) {
    const Matrix si = s.inverse();
    std::vector<std::uint32_t> row(el.size());
    for (std::size_t g = 0; g < el.size(); ++g)
      row[g] = static_cast<std::uint32_t>(group.index_of(s * el[g] * si));
    conj_.push_back(std::move(row));
  }

  constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
  orbit_of_.assign(space_.size(), kUnset);
  std::vector<std::uint64_t> members;
  for (std::uint64_t k = 0; k < space_.size(); ++k) {
    if (orbit_of_[k] != kUnset)
      continue;
    // k is the least index of its orbit since all smaller ones are assigned
    const auto id = static_cast<std::uint32_t>(representatives_.size());
    members.clear();
    for (std::size_t s = 0; s < conj_.size(); ++s) {
      const auto image = act(s, k);
      if (orbit_of_[image] == kUnset) {
        orbit_of_[image] = id;
        members.push_back(image);
      }
    }
    representatives_.push_back(k);
    sizes_.push_back(members.size());
  }
}

std::uint64_t OrbitSpace::act(std::size_t k, std::uint64_t tuple_index) const {
  std::size_t digits[16];
  std::vector<std::size_t> heap;
  std::span<std::size_t> d;
  if (space_.n() <= 16) {
    d = std::span<std::size_t>(digits, space_.n());
  } else {
    heap.resize(space_.n());
    d = heap;
  }
  space_.decode(tuple_index, d);
  for (auto& x : d)
    x = conj_[k][x];
  return space_.encode(d);
}

std::vector<std::uint32_t> descended_action(const Endomorphism& sigma, const OrbitSpace& space) {
  if (!sigma.has_inverse())
    throw Error(ErrorKind::not_invertible, "descended action needs an automorphism witness");
  if (sigma.rank() != space.n())
    throw Error(ErrorKind::rank_mismatch, "sigma rank differs from tuple length");
  constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> perm(space.orbit_count(), kUnset);
  const auto& ts = space.space();
  for (std::uint64_t k = 0; k < ts.size(); ++k) {
    const auto from = space.orbit_of(k);
    const auto to = space.orbit_of(wordmap::apply(sigma, ts.tuple(k)));
    if (perm[from] == kUnset)
      perm[from] = to;
    else if (perm[from] != to)
      throw Error(ErrorKind::well_definedness,
                  "sigma_X splits orbit " + std::to_string(from) + " across orbits " +
                      std::to_string(perm[from]) + " and " + std::to_string(to));
  }
  std::vector<bool> hit(perm.size(), false);
  for (auto t : perm) {
    if (hit[t])
      throw Error(ErrorKind::well_definedness, "descended map is not a permutation");
    hit[t] = true;
  }
  return perm;
}

bool is_identity_permutation(const std::vector<std::uint32_t>& perm) noexcept {
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (perm[i] != i)
      return false;
  return true;
}

namespace {

/// w(x) a^-1 x_i^-1 a == e, with w(x) already evaluated.
bool in_fixed_set(const Matrix& wx, const Matrix& a, const Matrix& a_inv, const Matrix& xi_inv) {
  return (wx * a_inv * xi_inv * a).is_identity();
}

}  // namespace

KernelCriterionReport lemma_kernel_criterion(const Endomorphism& sigma, const OrbitSpace& space) {
  if (sigma.rank() != space.n())
    throw Error(ErrorKind::rank_mismatch, "sigma rank differs from tuple length");
  KernelCriterionReport report;
  const auto& ts = space.space();
  const auto& s_el = space.subgroup().elements();
  std::vector<Matrix> s_inv;
  for (const auto& s : s_el)
    s_inv.push_back(s.inverse());
  std::vector<bool> uniform_ok(s_el.size(), true);
  const int n = space.n();

  report.in_kernel = true;
  for (std::uint64_t k = 0; k < ts.size(); ++k) {
    const auto x = ts.tuple(k);
    const auto wx = wordmap::apply(sigma, x);
    std::vector<Matrix> x_inv;
    for (const auto& g : x)
      x_inv.push_back(g.inverse());
    bool some_s = false;
    for (std::size_t j = 0; j < s_el.size(); ++j) {
      bool all_i = true;
      for (int i = 0; i < n && all_i; ++i)
        all_i = in_fixed_set(wx[i], s_el[j], s_inv[j], x_inv[i]);
      if (!all_i)
        uniform_ok[j] = false;
      some_s = some_s || all_i;
    }
    if (!some_s)
      report.in_kernel = false;
  }
  report.tuples_checked = ts.size();
  for (std::size_t j = 0; j < s_el.size(); ++j)
    if (uniform_ok[j]) {
      report.uniform_witness = s_el[j];
      break;
    }

  if (sigma.has_inverse()) {
    report.orbit_permutation_trivial = is_identity_permutation(descended_action(sigma, space));
  } else {
    // without a witness compare orbit by orbit directly
    report.orbit_permutation_trivial = true;
    for (std::uint64_t k = 0; k < ts.size(); ++k)
      if (space.orbit_of(wordmap::apply(sigma, ts.tuple(k))) != space.orbit_of(k)) {
        report.orbit_permutation_trivial = false;
        break;
      }
  }
  report.consistent = report.orbit_permutation_trivial == report.in_kernel;
  return report;
}

std::vector<std::uint64_t> power_identity_scan(const Group& group, const Matrix& s) {
  if (!group.contains(s))
    throw Error(ErrorKind::invalid_argument, s.to_string() + " is not in G");
  const auto& el = group.elements();
  const auto exp = group.exponent();
  const Matrix s_inv = s.inverse();
  std::vector<Matrix> conj;
  conj.reserve(el.size());
  for (const auto& g : el)
    conj.push_back(s * g * s_inv);
  std::vector<std::uint64_t> found;
  for (std::uint64_t d = 0; d < exp; ++d) {
    bool ok = true;
    for (std::size_t i = 0; i < el.size() && ok; ++i)
      ok = el[i].pow(static_cast<std::int64_t>(d)) == conj[i];
    if (ok)
      found.push_back(d);
  }
  return found;
}

bool exponent_identity_check(const Group& group, std::int64_t d, int r) {
  if (r < 1)
    throw Error(ErrorKind::invalid_argument, "r must be positive");
  if (d == 1 || (d == -1 && r % 2 == 0))
    throw Error(ErrorKind::invalid_argument, "d^r - 1 = 0: identity is vacuous");
  const auto exp = static_cast<std::int64_t>(group.exponent());
  // (d^r - 1) mod exp
  std::int64_t base = ((d % exp) + exp) % exp;
  std::int64_t pw = 1 % exp;
  for (int i = 0; i < r; ++i)
    pw = static_cast<std::int64_t>((static_cast<Wide>(pw) * base) % exp);
  const std::int64_t e = ((pw - 1) % exp + exp) % exp;
  const auto& el = group.elements();
  return std::all_of(el.begin(), el.end(), [&](const Matrix& g) { return g.pow(e).is_identity(); });
}

PowerCascadeReport power_identity_cascade(const Group& group, const Matrix& s) {
  PowerCascadeReport report{s, false, 0, 0, {}, true};
  report.central = group.is_central(s);
  report.order = group.element_order(s);
  report.exponent = group.exponent();
  report.powers = power_identity_scan(group, s);
  const auto r = static_cast<int>(report.order);
  for (auto d : report.powers) {
    if (d == 1)
      continue;
    if (!exponent_identity_check(group, static_cast<std::int64_t>(d), r))
      report.cascade_holds = false;
  }
  return report;
}

QuotientNote categorical_quotient_note(const Endomorphism& sigma, const OrbitSpace& space) {
  QuotientNote note;
  note.orbit_count = space.orbit_count();

  // closed-orbit form: each orbit, traversed through its S-translates,
  // must stay inside the union of the fixed-set intersections
  const auto& ts = space.space();
  const auto& s_el = space.subgroup().elements();
  note.closed_orbit_form = true;
  for (std::uint32_t o = 0; o < space.orbit_count() && note.closed_orbit_form; ++o) {
    const auto rep = space.representative(o);
    for (std::size_t k = 0; k < s_el.size() && note.closed_orbit_form; ++k) {
      const auto x = ts.tuple(space.act(k, rep));
      bool some_s = false;
      for (const auto& s : s_el) {
        bool all_i = true;
        for (int i = 1; i <= space.n() && all_i; ++i)
          all_i = fixed_set_membership(sigma.image(i), s, i, x);
        if (all_i) {
          some_s = true;
          break;
        }
      }
      note.closed_orbit_form = some_s;
    }
  }

  const auto criterion = lemma_kernel_criterion(sigma, space);
  note.orbit_form = criterion.in_kernel;
  note.uniform_witness_exists = criterion.uniform_witness.has_value();
  note.agree = note.closed_orbit_form == note.orbit_form;
  return note;
}

}  // namespace wordmap
