#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "autqm/automorphism.hpp"
#include "autqm/word.hpp"

namespace autqm {

/// Default bound on the number of cyclic words in an orbit level.
inline constexpr std::size_t kDefaultLevelCutoff = 200000;

/// Type I (signed permutations) followed by type II (multiplier and cut set)
/// Whitehead automorphisms of F_rank, deduplicated by basis images. Type I
/// automorphisms occupy the first 2^rank * rank! slots, identity first.
std::vector<Automorphism> whitehead_autos(int rank);

/// The 2^rank * rank! signed permutations of the basis.
std::vector<Automorphism> signed_permutations(int rank);

struct WhiteheadMove {
  Automorphism phi;
  /// Cyclic words before and after the move (canonical rotations).
  Word before;
  Word after;
};

struct Minimization {
  /// Cyclically reduced, minimal length in the Aut-orbit of w's conjugacy
  /// class.
  Word min_word;
  /// Replaying phi on the conjugacy class of w, move by move, reaches
  /// min_word.
  std::vector<WhiteheadMove> trace;
};

Minimization minimize(const Word& w);

struct OrbitEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  /// Index into whitehead_autos(rank).
  std::size_t automorphism = 0;
};

/// All minimal-length cyclic words reachable from minimize(w) by
/// length-preserving Whitehead moves.
struct OrbitLevel {
  std::vector<CyclicWord> words;
  std::vector<OrbitEdge> moves;
};

/// Throws CutoffExceeded when the level would exceed `cutoff` words.
OrbitLevel min_orbit_level(const Word& w, std::size_t cutoff = kDefaultLevelCutoff);

/// True iff w lies in the Aut-orbit of a basis element. Throws on w = 1.
bool is_primitive(const Word& w);

/// True iff some conjugate of w lies in a proper free factor. Throws on
/// w = 1; propagates CutoffExceeded.
bool in_proper_free_factor(const Word& w, std::size_t cutoff = kDefaultLevelCutoff);

/// Whitehead graph of a cyclic word: one vertex per signed letter (indexed
/// by letter_key - 1) and one edge {x^-1, y} per cyclic adjacency xy.
struct WhiteheadGraph {
  int rank = 1;
  /// Edge multiset, each pair stored as (smaller key, larger key) letters.
  std::vector<std::pair<Letter, Letter>> edges;
  bool connected = false;
  bool has_cut_vertex = false;

  /// Connected with no cut vertex: certifies that the word is not in a
  /// proper free factor.
  bool diskbusting() const noexcept { return connected && !has_cut_vertex; }
};

/// Throws MalformedInput unless w is cyclically reduced and nontrivial.
WhiteheadGraph whitehead_graph(const Word& w);

}  // namespace autqm
