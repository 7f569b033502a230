#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "autqm/random.hpp"
#include "autqm/word.hpp"

namespace autqm {

enum class ElementaryKind { Permutation, Inversion, Transvection, Conjugation };

enum class Side { Left, Right };

/// One step of an automorphism's construction trace.
///
/// - Permutation: `permutation[i-1]` is the image index of generator i.
/// - Inversion: generator `index` is inverted.
/// - Transvection: generator `index` is multiplied by the signed letter
///   `multiplier` on `side` (x -> m x for Left, x -> x m for Right).
/// - Conjugation: x -> c x c^-1 for every generator, c = `conjugator`.
struct Elementary {
  ElementaryKind kind = ElementaryKind::Permutation;
  int index = 0;
  Letter multiplier = 0;
  Side side = Side::Left;
  std::vector<int> permutation;
  Word conjugator;

  static Elementary transvection(int index, Letter multiplier, Side side);
  static Elementary inversion(int index);
  static Elementary permutation_of(std::vector<int> images);
  static Elementary swap(int rank, int i, int j);
  static Elementary conjugation(Word c);

  bool operator==(const Elementary&) const = default;
};

/// Inverse step (its own kind, known in closed form).
Elementary inverse(const Elementary& e);

/// Token form used by the CLI and serialized traces: `p:bac`, `i:a`,
/// `t:b=ab`, `t:b=bA`, `c:abA`.
std::string describe(const Elementary& e, int rank);
Elementary parse_elementary(std::string_view token, int rank);

/// Automorphism of F_rank stored as basis images together with the images
/// under its inverse, plus the construction trace that reproduces it.
///
/// The trace reads as a composition: trace [e1, e2, ..., ek] denotes
/// e1 o e2 o ... o ek, so ek acts first. An empty trace is the identity.
/// Every constructor verifies that the two tables are mutually inverse on
/// the basis.
class Automorphism {
 public:
  static Automorphism identity(int rank);
  static Automorphism from_elementary(const Elementary& e, int rank);
  static Automorphism from_trace(std::span<const Elementary> trace, int rank);

  /// Builds from explicit tables. Throws MalformedInput if they are not
  /// mutually inverse.
  static Automorphism from_tables(std::vector<Word> images,
                                  std::vector<Word> inverse_images,
                                  std::vector<Elementary> trace);

  int rank() const noexcept { return rank_; }
  const std::vector<Word>& images() const noexcept { return images_; }
  const std::vector<Word>& inverse_images() const noexcept { return inverse_images_; }
  const std::vector<Elementary>& trace() const noexcept { return trace_; }

  /// Image of the signed letter l.
  const Word& image_of(Letter l) const;

  Word operator()(const Word& w) const;

  bool is_identity() const;

 private:
  Automorphism() = default;
  void check_invariant() const;

  friend Automorphism inverse(const Automorphism&);

  int rank_ = 1;
  std::vector<Word> images_;
  std::vector<Word> inverse_images_;
  std::vector<Word> inverted_images_;  // images_[i]^-1
  std::vector<Elementary> trace_;
};

Word apply(const Automorphism& phi, const Word& w);
/// phi o psi: psi acts first.
Automorphism compose(const Automorphism& phi, const Automorphism& psi);
Automorphism compose(const Automorphism& phi, const Automorphism& psi,
                     const Automorphism& chi);
Automorphism inverse(const Automorphism& phi);
/// Inner automorphism x -> g x g^-1.
Automorphism ad(const Word& g);
/// Extensional equality on basis images.
bool equal(const Automorphism& phi, const Automorphism& psi);
/// [phi, g] = phi(g) g^-1.
Word autocommutator(const Automorphism& phi, const Word& g);

/// Named elementary constructors.
Automorphism transvection(int rank, int index, Letter multiplier, Side side);
Automorphism inversion(int rank, int index);
Automorphism permutation(int rank, std::vector<int> images);
Automorphism swap(int rank, int i, int j);

/// Nielsen generating set in canonical search order: transpositions (i<j,
/// lexicographic), inversions (by index), then transvections (by index,
/// multiplier key, Left before Right).
std::vector<Elementary> elementary_generators(int rank);

/// Composites of 1..depth elementary generators, deduplicated by basis-image
/// table and ordered by depth then lexicographic trace. The identity is
/// excluded.
std::vector<Automorphism> enumerate_composites(int rank, int depth);

/// Composite of `steps` uniformly drawn elementary generators.
Automorphism random_composite(int rank, int steps, Rng& rng);

struct AchiralityWitness {
  Automorphism phi;
  int k = 0;
};

/// Searches composites of depth <= `depth` for phi with phi(g^k) conjugate
/// to g^-k, k <= k_max. The first hit in canonical order is returned. An
/// empty result is not a proof of chirality.
std::optional<AchiralityWitness> achirality_search(const Word& g, int k_max,
                                                   int depth);

/// Parses a `*`-separated composition chain of elementary tokens (or `id`).
Automorphism parse_automorphism(std::string_view text, int rank);

/// Images as `a->ab` fragments joined by `,`.
std::string format_images(const Automorphism& phi);
/// Trace tokens joined by `*`, or `id`.
std::string format_trace(const Automorphism& phi);

}  // namespace autqm

template <>
struct std::hash<autqm::Automorphism> {
  std::size_t operator()(const autqm::Automorphism& a) const noexcept {
    std::size_t h = 0;
    for (const auto& w : a.images()) {
      h = h * 1000003u ^ std::hash<autqm::Word>{}(w);
    }
    return h;
  }
};
