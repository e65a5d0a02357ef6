#include "wordmap/endomorphism.hpp"

#include <json.hpp>

#include "wordmap/error.hpp"

namespace wordmap {

namespace {

void check_images(int rank, const std::vector<Word>& images) {
  if (rank < 1)
    throw Error(ErrorKind::invalid_argument, "endomorphism rank must be positive");
  if (static_cast<int>(images.size()) != rank)
    throw Error(ErrorKind::rank_mismatch,
                "endomorphism of F_" + std::to_string(rank) + " needs " +
                    std::to_string(rank) + " images, got " + std::to_string(images.size()));
  for (const auto& w : images)
    if (w.rank() != rank)
      throw Error(ErrorKind::rank_mismatch, "image word has rank " +
                                                std::to_string(w.rank()) + ", expected " +
                                                std::to_string(rank));
}

std::vector<Word> generator_images(int rank) {
  std::vector<Word> images;
  images.reserve(rank);
  for (int i = 1; i <= rank; ++i)
    images.push_back(Word::generator(rank, i));
  return images;
}

nlohmann::json word_to_json(const Word& w) {
  auto arr = nlohmann::json::array();
  for (const auto& s : w.syllables())
    arr.push_back({s.generator, s.exponent});
  return arr;
}

Word word_from_json(const nlohmann::json& j, int rank) {
  if (j.is_string())
    return Word::parse(j.get<std::string>(), rank);
  if (!j.is_array())
    throw Error(ErrorKind::parse_error, "word must be a syllable array or a string");
  std::vector<Syllable> raw;
  for (const auto& s : j) {
    if (!s.is_array() || s.size() != 2)
      throw Error(ErrorKind::parse_error, "syllable must be [generator, exponent]");
    raw.push_back({s[0].get<int>(), s[1].get<std::int64_t>()});
  }
  return Word::reduce(rank, raw);
}

std::vector<Word> images_from_json(const nlohmann::json& j, int rank) {
  if (!j.is_array())
    throw Error(ErrorKind::parse_error, "images must be an array");
  std::vector<Word> images;
  for (const auto& w : j)
    images.push_back(word_from_json(w, rank));
  return images;
}

}  // namespace

Endomorphism::Endomorphism(int rank, std::vector<Word> images)
    : rank_(rank), images_(std::move(images)) {
  check_images(rank_, images_);
}

Endomorphism Endomorphism::trusted(int rank, std::vector<Word> images,
                                   std::vector<Word> inverse_images) {
  Endomorphism e(rank, std::move(images));
  e.inverse_ = std::move(inverse_images);
  return e;
}

Endomorphism Endomorphism::identity(int rank) {
  auto images = generator_images(rank);
  return trusted(rank, images, images);
}

const Word& Endomorphism::image(int index) const {
  if (index < 1 || index > rank_)
    throw Error(ErrorKind::invalid_generator, "image index out of range");
  return images_[index - 1];
}

Endomorphism Endomorphism::inverse() const {
  if (!inverse_)
    throw Error(ErrorKind::not_invertible, "endomorphism carries no inverse witness");
  return trusted(rank_, *inverse_, images_);
}

Endomorphism Endomorphism::with_inverse(std::vector<Word> inverse_images) const {
  Endomorphism tau(rank_, inverse_images);
  auto id = identity(rank_);
  if (!(compose(*this, tau) == id) || !(compose(tau, *this) == id))
    throw Error(ErrorKind::not_invertible, "supplied inverse witness does not invert " +
                                               to_string());
  return trusted(rank_, images_, std::move(inverse_images));
}

bool Endomorphism::is_identity() const {
  for (int i = 0; i < rank_; ++i) {
    const auto s = images_[i].syllables();
    if (s.size() != 1 || s[0].generator != i + 1 || s[0].exponent != 1)
      return false;
  }
  return true;
}

std::string Endomorphism::to_string() const {
  std::string out = "[";
  for (int i = 0; i < rank_; ++i) {
    if (i)
      out += ", ";
    out += images_[i].to_string();
  }
  return out + "]";
}

Endomorphism Endomorphism::parse(std::string_view text) {
  auto open = text.find('[');
  auto close = text.rfind(']');
  if (open == std::string_view::npos || close == std::string_view::npos || close < open)
    throw Error(ErrorKind::parse_error, "endomorphism must be written as [w1, ..., wn]");
  std::string_view body = text.substr(open + 1, close - open - 1);
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto comma = body.find(',', start);
    parts.push_back(body.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                       : comma - start));
    if (comma == std::string_view::npos)
      break;
    start = comma + 1;
  }
  const int rank = static_cast<int>(parts.size());
  std::vector<Word> images;
  for (auto part : parts)
    images.push_back(Word::parse(part, rank));
  return Endomorphism(rank, std::move(images));
}

std::string Endomorphism::to_json() const {
  nlohmann::json j;
  j["rank"] = rank_;
  auto imgs = nlohmann::json::array();
  for (const auto& w : images_)
    imgs.push_back(word_to_json(w));
  j["images"] = imgs;
  if (inverse_) {
    auto inv = nlohmann::json::array();
    for (const auto& w : *inverse_)
      inv.push_back(word_to_json(w));
    j["inverse"] = inv;
  }
  return j.dump();
}

Endomorphism Endomorphism::from_json(std::string_view json) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::parse_error, std::string("endomorphism JSON: ") + e.what());
  }
  try {
    if (!j.is_object() || !j.contains("rank") || !j.contains("images"))
      throw Error(ErrorKind::parse_error, "endomorphism JSON needs 'rank' and 'images'");
    const int rank = j.at("rank").get<int>();
    Endomorphism e(rank, images_from_json(j.at("images"), rank));
    if (j.contains("inverse"))
      return e.with_inverse(images_from_json(j.at("inverse"), rank));
    return e;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::parse_error, std::string("endomorphism JSON: ") + e.what());
  }
}

Word substitute(const Word& w, std::span<const Word> images) {
  if (static_cast<int>(images.size()) != w.rank())
    throw Error(ErrorKind::rank_mismatch, "substitution needs one image per generator");
  if (images.empty())
    return w;
  Word result(images.front().rank());
  for (const auto& s : w.syllables())
    result *= images[s.generator - 1].pow(s.exponent);
  return result;
}

Endomorphism compose(const Endomorphism& sigma, const Endomorphism& tau) {
  if (sigma.rank() != tau.rank())
    throw Error(ErrorKind::rank_mismatch, "cannot compose endomorphisms of different rank");
  std::vector<Word> images;
  images.reserve(tau.rank());
  for (const auto& w : tau.images())
    images.push_back(substitute(w, sigma.images()));
  Endomorphism result(sigma.rank(), std::move(images));
  if (sigma.inverse_ && tau.inverse_) {
    // (sigma∘tau)^-1 = tau^-1 ∘ sigma^-1
    std::vector<Word> inv;
    inv.reserve(tau.rank());
    for (const auto& w : *sigma.inverse_)
      inv.push_back(substitute(w, *tau.inverse_));
    result.inverse_ = std::move(inv);
  }
  return result;
}

Endomorphism transvection(int rank, int i, int j) {
  if (rank < 2)
    throw Error(ErrorKind::invalid_argument, "transvection needs rank >= 2");
  if (i < 1 || i > rank || j < 1 || j > rank)
    throw Error(ErrorKind::invalid_generator, "transvection index out of range");
  if (i == j)
    throw Error(ErrorKind::invalid_argument, "transvection needs i != j");
  auto images = generator_images(rank);
  auto inverse = images;
  images[i - 1] = Word::generator(rank, i) * Word::generator(rank, j);
  inverse[i - 1] = Word::generator(rank, i) * Word::generator(rank, j, -1);
  return Endomorphism::trusted(rank, std::move(images), std::move(inverse));
}

std::pair<Endomorphism, Endomorphism> theta_kernel_pair(int rank, int s) {
  if (rank < 3)
    throw Error(ErrorKind::invalid_argument, "theta kernel pair needs rank >= 3");
  return tail_kernel_pair(rank, theta(rank, s));
}

std::pair<Endomorphism, Endomorphism> derived_kernel_pair(int rank, int s) {
  if (rank < 3)
    throw Error(ErrorKind::invalid_argument, "derived kernel pair needs rank >= 3");
  return tail_kernel_pair(rank, derived_word(rank, s));
}

std::pair<Endomorphism, Endomorphism> tail_kernel_pair(int rank, const Word& t) {
  if (rank < 3 || t.rank() != rank)
    throw Error(ErrorKind::rank_mismatch, "tail kernel pair needs rank >= 3 and a matching word");
  if (t.empty() || t.max_generator() > 2)
    throw Error(ErrorKind::invalid_argument, "tail word must be nonempty and only use f1, f2");
  auto images = generator_images(rank);
  auto inverse = images;
  images[rank - 1] = Word::generator(rank, rank) * t;
  inverse[rank - 1] = Word::generator(rank, rank) * t.inverse();
  auto sigma = Endomorphism::trusted(rank, images, inverse);
  auto tau = Endomorphism::trusted(rank, inverse, images);
  return {std::move(sigma), std::move(tau)};
}

std::pair<Endomorphism, Endomorphism> conjugation_pair(int rank) {
  if (rank < 2)
    throw Error(ErrorKind::invalid_argument, "conjugation pair needs rank >= 2");
  const Word f1 = Word::generator(rank, 1);
  const Word f1_inv = f1.inverse();
  auto images = generator_images(rank);
  auto inverse = images;
  for (int i = 2; i <= rank; ++i) {
    const Word fi = Word::generator(rank, i);
    images[i - 1] = f1 * fi * f1_inv;
    inverse[i - 1] = f1_inv * fi * f1;
  }
  auto sigma = Endomorphism::trusted(rank, images, inverse);
  auto tau = Endomorphism::trusted(rank, inverse, images);
  return {std::move(sigma), std::move(tau)};
}

std::vector<Endomorphism> nielsen_generators(int rank) {
  std::vector<Endomorphism> gens;
  auto base = generator_images(rank);

  auto inversion = base;
  inversion[0] = Word::generator(rank, 1, -1);
  gens.push_back(Endomorphism::trusted(rank, inversion, inversion));
  if (rank < 2)
    return gens;

  auto swap = base;
  std::swap(swap[0], swap[1]);
  gens.push_back(Endomorphism::trusted(rank, swap, swap));

  std::vector<Word> cycle, cycle_inv;
  for (int i = 1; i <= rank; ++i) {
    cycle.push_back(Word::generator(rank, i % rank + 1));
    cycle_inv.push_back(Word::generator(rank, (i + rank - 2) % rank + 1));
  }
  gens.push_back(Endomorphism::trusted(rank, cycle, cycle_inv));

  gens.push_back(transvection(rank, 1, 2));
  return gens;
}

Endomorphism braid_generator(int rank, int i) {
  if (rank < 2 || i < 1 || i > rank - 1)
    throw Error(ErrorKind::invalid_generator, "braid generator index out of range");
  const Word a = Word::generator(rank, i);
  const Word b = Word::generator(rank, i + 1);
  auto images = generator_images(rank);
  auto inverse = images;
  images[i - 1] = a * b * a.inverse();
  images[i] = a;
  inverse[i - 1] = b;
  inverse[i] = b.inverse() * a * b;
  return Endomorphism::trusted(rank, std::move(images), std::move(inverse));
}

Endomorphism embed_aut(const Endomorphism& sigma, int target_rank) {
  if (target_rank < sigma.rank())
    throw Error(ErrorKind::invalid_argument,
                "cannot embed Aut(F_" + std::to_string(sigma.rank()) + ") into Aut(F_" +
                    std::to_string(target_rank) + ")");
  auto lift = [&](const std::vector<Word>& src) {
    std::vector<Word> out;
    out.reserve(target_rank);
    for (const auto& w : src)
      out.push_back(w.with_rank(target_rank));
    for (int k = sigma.rank() + 1; k <= target_rank; ++k)
      out.push_back(Word::generator(target_rank, k));
    return out;
  };
  Endomorphism result(target_rank, lift(sigma.images()));
  if (sigma.inverse_)
    result.inverse_ = lift(*sigma.inverse_);
  return result;
}

std::vector<std::string> artin_relation_failures(int rank) {
  std::vector<Endomorphism> b;
  for (int i = 1; i < rank; ++i)
    b.push_back(braid_generator(rank, i));
  std::vector<std::string> failures;
  for (int i = 0; i + 1 < rank; ++i)
    for (int j = i + 1; j + 1 < rank; ++j) {
      const bool ok = j == i + 1
                          ? compose(compose(b[i], b[j]), b[i]) == compose(compose(b[j], b[i]), b[j])
                          : compose(b[i], b[j]) == compose(b[j], b[i]);
      if (!ok)
        failures.push_back(std::to_string(i + 1) + "," + std::to_string(j + 1));
    }
  return failures;
}

}  // namespace wordmap
