#pragma once

#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "autqm/automorphism.hpp"
#include "autqm/rational.hpp"
#include "autqm/word.hpp"

namespace autqm {

/// Homomorphism F_source -> F_target given by generator images.
struct Homomorphism {
  int source_rank = 1;
  int target_rank = 1;
  std::vector<Word> images;

  static Homomorphism from_images(int source_rank, std::vector<Word> images);
  static Homomorphism from_automorphism(const Automorphism& phi);
  Word operator()(const Word& w) const;
};

enum class QmKind { Brooks, BrooksHomogeneous, Pullback, FiniteAverage, Linear };

/// Declared defect bound for brooks(w): B(len) = 6 len.
Rational brooks_defect_bound(std::size_t pattern_length);

/// Quasimorphism on F_rank with exact rational values.
///
/// A Quasimorphism is an immutable construction tree (its provenance):
/// Brooks counting functions, their homogenisations, pullbacks, averages
/// over finite automorphism groups and linear combinations. Copies share
/// the tree.
class Quasimorphism {
 public:
  int rank() const noexcept;
  QmKind kind() const noexcept;
  /// Numeric upper bound on the defect, if one is known.
  const std::optional<Rational>& defect_bound() const noexcept;
  bool homogeneous() const noexcept;

  /// Group under which the values are exactly invariant (set by
  /// finite_average); empty otherwise.
  const std::vector<Automorphism>& invariance_group() const noexcept;

  /// Caller-asserted invariance under all of Aut(F_rank). Never set by the
  /// library itself.
  bool aut_invariant_asserted() const noexcept;

  Rational operator()(const Word& g) const;

  /// Value on an already reduced letter sequence of this rank.
  Rational evaluate_reduced(std::span<const Letter> letters) const;

  /// Brooks pattern (Brooks and BrooksHomogeneous).
  const Word& pattern() const;
  /// Inner quasimorphism (Pullback and FiniteAverage).
  const Quasimorphism& inner() const;
  /// Pullback homomorphism.
  const Homomorphism& homomorphism() const;
  /// Linear terms.
  const std::vector<std::pair<Rational, Quasimorphism>>& terms() const;

  /// Largest r such that f(xy) - f(x) - f(y) depends only on the last r
  /// letters of x and the first r letters of y for every reduced xy, when
  /// the tree is built from Brooks counting functions by linear
  /// combination; nullopt otherwise.
  std::optional<std::size_t> locality_radius() const;

  struct Node;

 private:
  explicit Quasimorphism(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;

  friend Quasimorphism brooks(const Word&, std::optional<Rational>);
  friend Quasimorphism brooks_homogeneous(const Word&, std::optional<Rational>);
  friend Quasimorphism pullback(const Quasimorphism&, const Homomorphism&);
  friend Quasimorphism finite_average(const Quasimorphism&, std::span<const Automorphism>);
  friend Quasimorphism linear_combination(int, std::vector<std::pair<Rational, Quasimorphism>>);
  friend Quasimorphism assert_aut_invariant(const Quasimorphism&);
};

/// Big (overlapping) counting quasimorphism: occurrences of w minus
/// occurrences of w^-1 as subwords of the reduced form. Throws on w = 1.
Quasimorphism brooks(const Word& w, std::optional<Rational> defect_bound = std::nullopt);

/// Exact homogenisation of brooks(w): occurrences of w minus those of w^-1
/// per period of the bi-infinite word of the cyclic reduction. Declared
/// defect bound 2 B(|w|) unless overridden.
Quasimorphism brooks_homogeneous(const Word& w,
                                 std::optional<Rational> defect_bound = std::nullopt);

/// Exact homogenisation of any tree: pushed through linear combinations,
/// pullbacks and finite averages down to the Brooks leaves.
Quasimorphism homogenise(const Quasimorphism& f);

/// g -> f(hom(g)). Throws RankMismatch unless hom lands in f's domain.
Quasimorphism pullback(const Quasimorphism& f, const Homomorphism& hom);

/// g -> (1/|A|) sum f(alpha(g)). A is deduplicated and must be closed under
/// composition and inverses; throws MalformedInput otherwise.
Quasimorphism finite_average(const Quasimorphism& f, std::span<const Automorphism> group);

Quasimorphism linear_combination(int rank,
                                 std::vector<std::pair<Rational, Quasimorphism>> terms);

inline Quasimorphism zero_quasimorphism(int rank) { return linear_combination(rank, {}); }

/// Copy of f flagged as invariant under all of Aut(F_n). The flag is the
/// caller's claim; nothing checks it.
Quasimorphism assert_aut_invariant(const Quasimorphism& f);

/// True when `group` is closed under composition and inverses.
bool is_group(std::span<const Automorphism> group);

struct HomogenisationEstimate {
  Rational estimate;
  Rational error_bound;
};

/// f(g^N)/N with error bound D/N. Throws if f has no numeric defect bound.
HomogenisationEstimate homogenise_numeric(const Quasimorphism& f, const Word& g, long n);

struct DefectCertificate {
  enum class BoundType { EnumeratedLower, DeclaredUpper };
  BoundType type = BoundType::EnumeratedLower;
  Rational value{0};
  /// Pair attaining `value` (EnumeratedLower only).
  Word g;
  Word h;
  /// Enumeration range: all reduced pairs with |g|, |h| <= range.
  int range = 0;
};

/// Largest |f(g) + f(h) - f(gh)| over reduced pairs with |g|, |h| <= L,
/// with the shortlex-least attaining pair (ordered by g, then h). Trees of
/// Brooks counting functions use their locality radius to visit one
/// representative per local configuration; everything else is brute force.
DefectCertificate defect_enumerate(const Quasimorphism& f, int max_len);

/// Plain pair-by-pair enumeration, whatever the tree.
DefectCertificate defect_enumerate_brute_force(const Quasimorphism& f, int max_len);

/// The declared bound as a certificate. Throws if f has none.
DefectCertificate declared_defect(const Quasimorphism& f);

struct InvarianceViolation {
  std::size_t automorphism = 0;
  Word g;
  Rational value{0};
  Rational image_value{0};
};

struct InvarianceReport {
  std::size_t checked = 0;
  std::vector<InvarianceViolation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

/// Compares f(alpha(g)) with f(g) exactly for every pair.
InvarianceReport check_invariance(const Quasimorphism& f,
                                  std::span<const Automorphism> autos,
                                  std::span<const Word> samples);

/// Quasimorphism on the direct product of n copies of F_rank given by
/// (h_1, ..., h_n) -> f(h_1) + ... + f(h_k).
class ProductQuasimorphism {
 public:
  ProductQuasimorphism(Quasimorphism factor, int k, int n);

  const Quasimorphism& factor() const noexcept { return factor_; }
  int k() const noexcept { return k_; }
  int n() const noexcept { return n_; }
  bool homogeneous() const noexcept { return factor_.homogeneous(); }
  /// k D(f), when f has a numeric bound.
  std::optional<Rational> defect_bound() const;

  Rational operator()(std::span<const Word> tuple) const;

 private:
  Quasimorphism factor_;
  int k_;
  int n_;
};

ProductQuasimorphism product_average(const Quasimorphism& f, int k, int n);

struct ProductDefectCertificate {
  Rational value{0};
  std::vector<Word> g;
  std::vector<Word> h;
  int range = 0;
};

/// Brute force over all pairs of tuples with every coordinate of length <= L.
ProductDefectCertificate defect_enumerate(const ProductQuasimorphism& f, int max_len);

}  // namespace autqm
