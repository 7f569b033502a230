#include "autqm/automorphism.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <unordered_set>

#include "autqm/errors.hpp"
#include "autqm/text.hpp"

namespace autqm {

Elementary Elementary::transvection(int index, Letter multiplier, Side side) {
  Elementary e;
  e.kind = ElementaryKind::Transvection;
  e.index = index;
  e.multiplier = multiplier;
  e.side = side;
  return e;
}

Elementary Elementary::inversion(int index) {
  Elementary e;
  e.kind = ElementaryKind::Inversion;
  e.index = index;
  return e;
}

Elementary Elementary::permutation_of(std::vector<int> images) {
  Elementary e;
  e.kind = ElementaryKind::Permutation;
  e.permutation = std::move(images);
  return e;
}

Elementary Elementary::swap(int rank, int i, int j) {
  std::vector<int> p(static_cast<std::size_t>(rank));
  std::iota(p.begin(), p.end(), 1);
  std::swap(p.at(static_cast<std::size_t>(i - 1)), p.at(static_cast<std::size_t>(j - 1)));
  return permutation_of(std::move(p));
}

Elementary Elementary::conjugation(Word c) {
  Elementary e;
  e.kind = ElementaryKind::Conjugation;
  e.conjugator = std::move(c);
  return e;
}

Elementary inverse(const Elementary& e) {
  switch (e.kind) {
    case ElementaryKind::Transvection:
      return Elementary::transvection(e.index, -e.multiplier, e.side);
    case ElementaryKind::Inversion:
      return e;
    case ElementaryKind::Permutation: {
      std::vector<int> inv(e.permutation.size());
      for (std::size_t i = 0; i < e.permutation.size(); ++i) {
        inv[static_cast<std::size_t>(e.permutation[i] - 1)] = static_cast<int>(i + 1);
      }
      return Elementary::permutation_of(std::move(inv));
    }
    case ElementaryKind::Conjugation:
      return Elementary::conjugation(invert(e.conjugator));
  }
  return e;
}

namespace {

std::vector<Word> elementary_images(const Elementary& e, int rank) {
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(rank));
  for (int i = 1; i <= rank; ++i) images.push_back(Word::generator(rank, i));
  switch (e.kind) {
    case ElementaryKind::Transvection: {
      if (e.index < 1 || e.index > rank || e.multiplier == 0 ||
          std::abs(e.multiplier) > rank) {
        throw MalformedInput("transvection parameters out of range");
      }
      if (std::abs(e.multiplier) == e.index) {
        throw MalformedInput("transvection needs distinct generators");
      }
      Word m = Word::generator(rank, e.multiplier);
      Word& x = images[static_cast<std::size_t>(e.index - 1)];
      x = e.side == Side::Left ? multiply(m, x) : multiply(x, m);
      break;
    }
    case ElementaryKind::Inversion:
      if (e.index < 1 || e.index > rank) {
        throw MalformedInput("inversion index out of range");
      }
      images[static_cast<std::size_t>(e.index - 1)] =
          Word::generator(rank, -e.index);
      break;
    case ElementaryKind::Permutation: {
      if (e.permutation.size() != static_cast<std::size_t>(rank)) {
        throw MalformedInput("permutation has wrong length");
      }
      std::vector<int> sorted = e.permutation;
      std::sort(sorted.begin(), sorted.end());
      for (int i = 0; i < rank; ++i) {
        if (sorted[static_cast<std::size_t>(i)] != i + 1) {
          throw MalformedInput("not a permutation of 1..rank");
        }
      }
      for (int i = 0; i < rank; ++i) {
        images[static_cast<std::size_t>(i)] =
            Word::generator(rank, e.permutation[static_cast<std::size_t>(i)]);
      }
      break;
    }
    case ElementaryKind::Conjugation: {
      if (e.conjugator.rank() != rank) {
        throw RankMismatch(e.conjugator.rank(), rank);
      }
      for (auto& x : images) {
        x = multiply(e.conjugator, multiply(x, invert(e.conjugator)));
      }
      break;
    }
  }
  return images;
}

Word substitute(const std::vector<Word>& images,
                const std::vector<Word>& inverted, const Word& w) {
  WordBuilder b(w.rank());
  for (Letter l : w.letters()) {
    b.append(l > 0 ? images[static_cast<std::size_t>(l - 1)]
                   : inverted[static_cast<std::size_t>(-l - 1)]);
  }
  return std::move(b).build();
}

std::vector<Word> inverted_all(const std::vector<Word>& ws) {
  std::vector<Word> out;
  out.reserve(ws.size());
  for (const auto& w : ws) out.push_back(invert(w));
  return out;
}

}  // namespace

Automorphism Automorphism::identity(int rank) {
  return from_trace({}, rank);
}

Automorphism Automorphism::from_elementary(const Elementary& e, int rank) {
  const Elementary steps[] = {e};
  return from_trace(steps, rank);
}

Automorphism Automorphism::from_trace(std::span<const Elementary> trace, int rank) {
  Automorphism out;
  out.rank_ = rank;
  for (int i = 1; i <= rank; ++i) {
    out.images_.push_back(Word::generator(rank, i));
  }
  out.inverse_images_ = out.images_;
  // phi = e1 o ... o ek, so images are built from the innermost step out
  // and inverse images from the outermost step in.
  for (auto it = trace.rbegin(); it != trace.rend(); ++it) {
    auto step = elementary_images(*it, rank);
    auto step_inv = inverted_all(step);
    for (auto& w : out.images_) w = substitute(step, step_inv, w);
  }
  for (const auto& e : trace) {
    auto step = elementary_images(inverse(e), rank);
    auto step_inv = inverted_all(step);
    for (auto& w : out.inverse_images_) w = substitute(step, step_inv, w);
  }
  out.inverted_images_ = inverted_all(out.images_);
  out.trace_.assign(trace.begin(), trace.end());
  out.check_invariant();
  return out;
}

Automorphism Automorphism::from_tables(std::vector<Word> images,
                                       std::vector<Word> inverse_images,
                                       std::vector<Elementary> trace) {
  if (images.empty() || images.size() != inverse_images.size()) {
    throw MalformedInput("image tables must be nonempty and of equal size");
  }
  Automorphism out;
  out.rank_ = static_cast<int>(images.size());
  for (const auto& w : images) {
    if (w.rank() != out.rank_) throw RankMismatch(w.rank(), out.rank_);
  }
  for (const auto& w : inverse_images) {
    if (w.rank() != out.rank_) throw RankMismatch(w.rank(), out.rank_);
  }
  out.images_ = std::move(images);
  out.inverse_images_ = std::move(inverse_images);
  out.inverted_images_ = inverted_all(out.images_);
  out.trace_ = std::move(trace);
  out.check_invariant();
  return out;
}

void Automorphism::check_invariant() const {
  auto inv_inverted = inverted_all(inverse_images_);
  for (int i = 1; i <= rank_; ++i) {
    const Word x = Word::generator(rank_, i);
    const auto idx = static_cast<std::size_t>(i - 1);
    if (substitute(inverse_images_, inv_inverted, images_[idx]) != x ||
        substitute(images_, inverted_images_, inverse_images_[idx]) != x) {
      throw MalformedInput("image tables are not mutually inverse at generator " +
                           std::to_string(i));
    }
  }
}

const Word& Automorphism::image_of(Letter l) const {
  return l > 0 ? images_[static_cast<std::size_t>(l - 1)]
               : inverted_images_[static_cast<std::size_t>(-l - 1)];
}

Word Automorphism::operator()(const Word& w) const {
  if (w.rank() != rank_) throw RankMismatch(rank_, w.rank());
  return substitute(images_, inverted_images_, w);
}

bool Automorphism::is_identity() const {
  for (int i = 1; i <= rank_; ++i) {
    if (images_[static_cast<std::size_t>(i - 1)] != Word::generator(rank_, i)) {
      return false;
    }
  }
  return true;
}

Word apply(const Automorphism& phi, const Word& w) { return phi(w); }

Automorphism compose(const Automorphism& phi, const Automorphism& psi) {
  if (phi.rank() != psi.rank()) throw RankMismatch(phi.rank(), psi.rank());
  std::vector<Word> images;
  images.reserve(psi.images().size());
  for (const auto& w : psi.images()) images.push_back(phi(w));
  // (phi o psi)^-1 = psi^-1 o phi^-1.
  const auto psi_inv = inverse(psi);
  std::vector<Word> inverse_images;
  for (const auto& w : phi.inverse_images()) inverse_images.push_back(psi_inv(w));
  std::vector<Elementary> trace = phi.trace();
  trace.insert(trace.end(), psi.trace().begin(), psi.trace().end());
  return Automorphism::from_tables(std::move(images), std::move(inverse_images),
                                   std::move(trace));
}

Automorphism compose(const Automorphism& phi, const Automorphism& psi,
                     const Automorphism& chi) {
  return compose(compose(phi, psi), chi);
}

Automorphism inverse(const Automorphism& phi) {
  Automorphism out;
  out.rank_ = phi.rank_;
  out.images_ = phi.inverse_images_;
  out.inverse_images_ = phi.images_;
  out.inverted_images_ = inverted_all(out.images_);
  for (auto it = phi.trace_.rbegin(); it != phi.trace_.rend(); ++it) {
    out.trace_.push_back(inverse(*it));
  }
  return out;
}

Automorphism ad(const Word& g) {
  if (g.empty()) return Automorphism::identity(g.rank());
  return Automorphism::from_elementary(Elementary::conjugation(g), g.rank());
}

bool equal(const Automorphism& phi, const Automorphism& psi) {
  if (phi.rank() != psi.rank()) throw RankMismatch(phi.rank(), psi.rank());
  return phi.images() == psi.images();
}

Word autocommutator(const Automorphism& phi, const Word& g) {
  return multiply(phi(g), invert(g));
}

Automorphism transvection(int rank, int index, Letter multiplier, Side side) {
  return Automorphism::from_elementary(
      Elementary::transvection(index, multiplier, side), rank);
}

Automorphism inversion(int rank, int index) {
  return Automorphism::from_elementary(Elementary::inversion(index), rank);
}

Automorphism permutation(int rank, std::vector<int> images) {
  return Automorphism::from_elementary(
      Elementary::permutation_of(std::move(images)), rank);
}

Automorphism swap(int rank, int i, int j) {
  return Automorphism::from_elementary(Elementary::swap(rank, i, j), rank);
}

std::vector<Elementary> elementary_generators(int rank) {
  std::vector<Elementary> out;
  for (int i = 1; i <= rank; ++i) {
    for (int j = i + 1; j <= rank; ++j) out.push_back(Elementary::swap(rank, i, j));
  }
  for (int i = 1; i <= rank; ++i) out.push_back(Elementary::inversion(i));
  for (int i = 1; i <= rank; ++i) {
    for (int key = 1; key <= 2 * rank; ++key) {
      Letter m = letter_from_key(key);
      if (std::abs(m) == i) continue;
      out.push_back(Elementary::transvection(i, m, Side::Left));
      out.push_back(Elementary::transvection(i, m, Side::Right));
    }
  }
  return out;
}

std::vector<Automorphism> enumerate_composites(int rank, int depth) {
  std::vector<Automorphism> out;
  if (depth < 1) return out;
  const auto gens = elementary_generators(rank);
  std::vector<Automorphism> gen_autos;
  for (const auto& e : gens) gen_autos.push_back(Automorphism::from_elementary(e, rank));

  struct ImagesHash {
    std::size_t operator()(const std::vector<Word>& ws) const noexcept {
      std::size_t h = 0;
      for (const auto& w : ws) h = h * 1000003u ^ std::hash<Word>{}(w);
      return h;
    }
  };
  std::unordered_set<std::vector<Word>, ImagesHash> seen;
  seen.insert(Automorphism::identity(rank).images());

  std::vector<Automorphism> level;
  for (const auto& g : gen_autos) {
    if (seen.insert(g.images()).second) level.push_back(g);
  }
  out.insert(out.end(), level.begin(), level.end());
  for (int d = 2; d <= depth; ++d) {
    std::vector<Automorphism> next;
    for (const auto& c : level) {
      for (const auto& g : gen_autos) {
        auto composite = compose(c, g);
        if (seen.insert(composite.images()).second) next.push_back(std::move(composite));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

Automorphism random_composite(int rank, int steps, Rng& rng) {
  const auto gens = elementary_generators(rank);
  std::vector<Elementary> trace;
  for (int i = 0; i < steps; ++i) {
    trace.push_back(gens[static_cast<std::size_t>(
        random_int(0, static_cast<int>(gens.size()) - 1, rng))]);
  }
  return Automorphism::from_trace(trace, rank);
}

std::optional<AchiralityWitness> achirality_search(const Word& g, int k_max,
                                                   int depth) {
  if (g.empty()) throw MalformedInput("achirality search needs g != 1");
  std::vector<std::pair<CyclicWord, Word>> targets;  // (class of g^-k, g^k)
  for (int k = 1; k <= k_max; ++k) {
    targets.emplace_back(conjugacy_class(power(g, -k)), power(g, k));
  }
  for (const auto& phi : enumerate_composites(g.rank(), depth)) {
    for (int k = 1; k <= k_max; ++k) {
      const auto& [cls, gk] = targets[static_cast<std::size_t>(k - 1)];
      if (conjugacy_class(phi(gk)) == cls) return AchiralityWitness{phi, k};
    }
  }
  return std::nullopt;
}

std::string describe(const Elementary& e, int rank) {
  switch (e.kind) {
    case ElementaryKind::Transvection: {
      std::string x(1, letter_char(e.index));
      std::string m(1, letter_char(e.multiplier));
      return "t:" + x + "=" + (e.side == Side::Left ? m + x : x + m);
    }
    case ElementaryKind::Inversion:
      return std::string("i:") + letter_char(e.index);
    case ElementaryKind::Permutation: {
      std::string s = "p:";
      for (int p : e.permutation) s.push_back(letter_char(p));
      return s;
    }
    case ElementaryKind::Conjugation:
      (void)rank;
      return "c:" + format_word(e.conjugator);
  }
  return "?";
}

Elementary parse_elementary(std::string_view token, int rank) {
  auto fail = [&](const std::string& why) -> Elementary {
    throw ParseError("bad automorphism token '" + std::string(token) + "': " + why, 1, 1);
  };
  if (token.size() < 3 || token[1] != ':') return fail("expected kind:payload");
  const char kind = token[0];
  std::string_view body = token.substr(2);
  auto gen_index = [&](char c) {
    if (c < 'a' || c > 'z' || c - 'a' + 1 > rank) fail("bad generator");
    return c - 'a' + 1;
  };
  switch (kind) {
    case 'i':
      if (body.size() != 1) return fail("inversion takes one generator");
      return Elementary::inversion(gen_index(body[0]));
    case 'p': {
      if (body.size() != static_cast<std::size_t>(rank)) {
        return fail("permutation needs one image per generator");
      }
      std::vector<int> images;
      for (char c : body) images.push_back(gen_index(c));
      auto e = Elementary::permutation_of(std::move(images));
      (void)elementary_images(e, rank);
      return e;
    }
    case 't': {
      // t:x=mx or t:x=xm
      if (body.size() != 4 || body[1] != '=') return fail("expected t:x=mx or t:x=xm");
      const int x = gen_index(body[0]);
      Word rhs = parse_word(body.substr(2), rank);
      (void)rhs;
      const char c0 = body[2];
      const char c1 = body[3];
      auto letter = [&](char c) -> Letter {
        return c >= 'a' && c <= 'z' ? gen_index(c) : -gen_index(static_cast<char>(c - 'A' + 'a'));
      };
      if (c1 == body[0] && c0 != body[0]) {
        return Elementary::transvection(x, letter(c0), Side::Left);
      }
      if (c0 == body[0] && c1 != body[0]) {
        return Elementary::transvection(x, letter(c1), Side::Right);
      }
      return fail("transvection must keep the generator on one side");
    }
    case 'c':
      return Elementary::conjugation(parse_word(body, rank));
    default:
      return fail("unknown kind");
  }
}

Automorphism parse_automorphism(std::string_view text, int rank) {
  std::vector<Elementary> trace;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('*', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view token = text.substr(start, end - start);
    if (token.empty()) {
      throw ParseError("empty automorphism token", 1, static_cast<int>(start + 1));
    }
    if (token != "id") {
      try {
        trace.push_back(parse_elementary(token, rank));
      } catch (const ParseError& e) {
        throw ParseError(e.what(), 1, static_cast<int>(start + 1));
      }
    }
    start = end + 1;
  }
  return Automorphism::from_trace(trace, rank);
}

std::string format_images(const Automorphism& phi) {
  std::string out;
  for (int i = 1; i <= phi.rank(); ++i) {
    if (i > 1) out += ",";
    out += format_word(Word::generator(phi.rank(), i));
    out += "->";
    out += format_word(phi.images()[static_cast<std::size_t>(i - 1)]);
  }
  return out;
}

std::string format_trace(const Automorphism& phi) {
  if (phi.trace().empty()) return "id";
  std::string out;
  for (const auto& e : phi.trace()) {
    if (!out.empty()) out += "*";
    out += describe(e, phi.rank());
  }
  return out;
}

}  // namespace autqm
