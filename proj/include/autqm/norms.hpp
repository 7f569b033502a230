#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "autqm/automorphism.hpp"
#include "autqm/quasimorphism.hpp"
#include "autqm/rational.hpp"
#include "autqm/word.hpp"

namespace autqm {

/// {alpha(s) : alpha in A, s in S}, deduplicated, in first-seen order.
std::vector<Word> orbit_closure(std::span<const Word> s, std::span<const Automorphism> a);

enum class NormStatus { Finite, GreaterThanCutoff, InfiniteFlagged };

/// One factor of a norm witness, with where it came from.
struct WitnessFactor {
  enum class Kind { Generator, Autocommutator, Commutator };
  Kind kind = Kind::Generator;
  Word value;
  /// Generator: index into the generating set.
  std::size_t generator = 0;
  /// Autocommutator [phi, first]; Commutator [first, second].
  std::optional<Automorphism> phi;
  Word first;
  Word second;

  /// Recomputes the factor from its provenance and compares with `value`.
  bool consistent(std::span<const Word> generators = {}) const;
};

struct NormResult {
  NormStatus status = NormStatus::Finite;
  long value = 0;
  /// The search bound that was exceeded (GreaterThanCutoff).
  long cutoff = 0;
  std::vector<WitnessFactor> witness;

  bool finite() const noexcept { return status == NormStatus::Finite; }

  /// Finite result whose witness has exactly `value` factors, each
  /// consistent with its provenance, multiplying out to g.
  bool replays(const Word& g, std::span<const Word> generators = {}) const;
};

/// Exact word norm of g over S (S need not be symmetric), by bidirectional
/// breadth-first search. The witness is the lexicographically least
/// sequence of generator indices of minimal length. Throws CutoffExceeded
/// when the search visits more than `node_budget` elements.
NormResult bfs_norm(const Word& g, std::span<const Word> s, long cutoff,
                    std::size_t node_budget = 20'000'000);

struct AclParams {
  int pool_depth = 1;
  int elem_len = 2;
  int k_max = 2;
  /// Bound on the number of partial products kept per search level.
  std::size_t level_cap = 200'000;
};

/// Upper bound on the autocommutator length of g by explicit search, with
/// the factorisation found. Automorphisms come from composites of at most
/// pool_depth elementary generators and ad(u) with |u| <= elem_len;
/// elements h are the words of length <= elem_len, the powers of g's root
/// and the transvection witnesses for words missing a basis letter.
NormResult acl_upper(const Word& g, const AclParams& params = {});

/// Upper bound on the commutator length of g by products of [u, v] with
/// |u|, |v| <= len_cap.
NormResult cl_upper(const Word& g, int len_cap, int k_max,
                    std::size_t level_cap = 200'000);

struct TransvectionWitness {
  Automorphism phi;
  Word x;
};

/// phi: x -> g^n x fixing the other basis letters, so [phi, x] = g^n.
/// Throws MalformedInput when g uses the basis letter x.
TransvectionWitness transvection_witness(const Word& g, int x_index, long n);

struct SaclStep {
  long n = 0;
  NormResult acl;
};

struct SaclEstimate {
  /// min acl_upper(g^n)/n over the powers whose search succeeded.
  std::optional<Rational> upper;
  /// Best |f(g)|/(2 D(f)) over quasimorphisms flagged Aut-invariant: a
  /// lower bound on sacl(g). Zero when none is supplied.
  Rational lower{0};
  /// Best |f(g)|/(2 D(f)) over quasimorphisms invariant only under a finite
  /// group: bounds the norm restricted to that group's autocommutators, not
  /// sacl itself.
  Rational restricted_lower{0};
  std::vector<SaclStep> trace;
};

SaclEstimate sacl_estimate(const Word& g, int n_max, const AclParams& params = {},
                           std::span<const Quasimorphism> family = {});

/// |f(g)| / (2 D(f)). Throws when f has no numeric positive defect bound.
Rational bavard_bound(const Quasimorphism& f, const Word& g);

/// |f(g)| / (sup_{s in S} |f(s)| + D(f)): a lower bound on the norm of g
/// over the closure of S under f's invariance group. Throws when the
/// denominator vanishes or f has no defect bound.
Rational prop32_bound(const Quasimorphism& f, std::span<const Word> s, const Word& g);

}  // namespace autqm
