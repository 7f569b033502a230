#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "autqm/quasimorphism.hpp"
#include "autqm/rational.hpp"
#include "autqm/word.hpp"

namespace autqm {

/// Finite simple graph whose vertices carry cyclic groups: label m >= 2 is
/// Z/m, label 0 is Z.
class VertexGraph {
 public:
  VertexGraph() = default;
  /// n vertices, no edges, every label 0.
  explicit VertexGraph(int n);
  /// Throws MalformedInput on loops, out-of-range endpoints or a label
  /// that is neither 0 nor >= 2.
  VertexGraph(std::vector<int> labels, std::span<const std::pair<int, int>> edges);

  int size() const noexcept { return static_cast<int>(labels_.size()); }
  int label(int v) const { return labels_.at(static_cast<std::size_t>(v)); }
  const std::vector<int>& labels() const noexcept { return labels_; }
  bool adjacent(int u, int v) const;
  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;

  void set_label(int v, int m);
  void add_edge(int u, int v);

  /// Subgraph on `vertices` (ascending); local vertex i is vertices[i].
  VertexGraph induced(std::span<const int> vertices) const;
  VertexGraph complement() const;

  bool operator==(const VertexGraph&) const = default;

 private:
  void check_vertex(int v) const;
  std::vector<int> labels_;
  std::vector<std::vector<bool>> adjacency_;
};

/// Line-oriented text: `vertices n`, `label i m`, `edge i j`; blank lines
/// and `#` comments ignored. Throws ParseError with line and column.
VertexGraph parse_graph(std::string_view text);
std::string format_graph(const VertexGraph& g);

/// A finitely generated abelian vertex group: free rank plus cyclic orders.
struct AbelianLabel {
  int free_rank = 0;
  std::vector<long> torsion;
};

struct Refinement {
  VertexGraph graph;
  /// Vertices of `graph` replacing each input vertex.
  std::vector<std::vector<int>> clusters;
};

/// Replaces every vertex by a complete cluster of primary cyclic vertices
/// (prime powers in ascending order, then one Z per free rank), each
/// inheriting the external adjacencies. Trivial vertex groups disappear.
Refinement refine(std::span<const AbelianLabel> labels,
                  std::span<const std::pair<int, int>> edges);

struct Syllable {
  int vertex = 0;
  long exponent = 0;
  bool operator==(const Syllable&) const = default;
};

/// Element of a graph product in normal form: syllables fully merged, no
/// zero exponents, exponents reduced to [0, m) on Z/m vertices, and among
/// commuting syllables the lexicographically least arrangement.
class GPWord {
 public:
  const std::shared_ptr<const VertexGraph>& graph() const noexcept { return graph_; }
  const std::vector<Syllable>& syllables() const noexcept { return syllables_; }
  bool empty() const noexcept { return syllables_.empty(); }
  bool operator==(const GPWord& other) const {
    return *graph_ == *other.graph_ && syllables_ == other.syllables_;
  }

 private:
  GPWord(std::shared_ptr<const VertexGraph> graph, std::vector<Syllable> syllables)
      : graph_(std::move(graph)), syllables_(std::move(syllables)) {}
  friend GPWord normal_form(std::shared_ptr<const VertexGraph>, std::span<const Syllable>);

  std::shared_ptr<const VertexGraph> graph_;
  std::vector<Syllable> syllables_;
};

/// Throws MalformedInput on an out-of-range vertex.
GPWord normal_form(std::shared_ptr<const VertexGraph> graph, std::span<const Syllable> raw);
GPWord gp_identity(std::shared_ptr<const VertexGraph> graph);
/// Throws MalformedInput when the graphs differ.
GPWord gp_multiply(const GPWord& x, const GPWord& y);
GPWord gp_invert(const GPWord& x);

/// `v^e` tokens separated by spaces (`v` alone means exponent 1; `1` or an
/// empty string is the identity).
std::vector<Syllable> parse_syllables(std::string_view text);
std::string format_syllables(std::span<const Syllable> s);
inline std::string format_gpword(const GPWord& x) { return format_syllables(x.syllables()); }

struct JoinDecomposition {
  std::shared_ptr<const VertexGraph> graph;
  /// Vertices adjacent to every other vertex.
  std::vector<int> gamma0;
  /// Complement components with >= 2 vertices, ordered by least vertex.
  std::vector<std::vector<int>> factors;
  /// Induced labelled subgraph of each factor.
  std::vector<std::shared_ptr<const VertexGraph>> factor_graphs;
  /// Factor indices grouped by labelled-graph isomorphism, each class in
  /// ascending order, classes ordered by their first member.
  std::vector<std::vector<std::size_t>> classes;
};

JoinDecomposition join_decompose(std::shared_ptr<const VertexGraph> graph);

/// Lexicographically least label- and adjacency-preserving bijection
/// (local vertex of a -> local vertex of b), if one exists.
std::optional<std::vector<int>> labelled_isomorphism(const VertexGraph& a, const VertexGraph& b);

/// Fixed isomorphism from factor i onto factor j (local indices): the
/// canonical one from their class's first factor to j composed with the
/// inverse of the one to i. Throws when the factors are not isomorphic.
std::vector<int> compatible_isomorphism(const JoinDecomposition& d, std::size_t i,
                                        std::size_t j);

/// Graph automorphism (global vertex map) sending factor i onto factor
/// perm[i] through the compatible isomorphisms and fixing gamma0. Throws
/// unless perm is a permutation preserving isomorphism classes.
std::vector<int> factor_permutation(const JoinDecomposition& d, std::span<const std::size_t> perm);

/// Image of x under the automorphism induced by a vertex map.
GPWord apply_vertex_map(const GPWord& x, std::span<const int> map);

/// Exactly two non-adjacent vertices, both labelled 2.
bool is_dinfty(const VertexGraph& g, std::span<const int> factor);

/// True iff every join factor is a D-infinity pair. Throws MalformedInput
/// on a label that is neither 0 nor a prime power.
bool classify_virtually_abelian(const VertexGraph& g);

/// Image in the product of the join factors: gamma0 syllables dropped, the
/// rest split by factor and renumbered to local vertices.
std::vector<GPWord> project_kill_h0(const GPWord& x, const JoinDecomposition& d);

/// Free-group word of an element of an edgeless graph with all labels 0
/// (local vertex i is generator i + 1).
Word free_factor_word(const GPWord& x);

/// x -> sum over the first k factors of f(component_i(project_kill_h0(x))),
/// with factor i read in factor 0 through the compatible isomorphism.
class GPQuasimorphism {
 public:
  GPQuasimorphism(JoinDecomposition d, Quasimorphism f, int k);

  const JoinDecomposition& decomposition() const noexcept { return d_; }
  const Quasimorphism& factor_qm() const noexcept { return f_; }
  int k() const noexcept { return k_; }
  /// True when the factors are D-infinity and f is replaced by 0.
  bool vanishing_factor() const noexcept { return vanishing_; }
  bool homogeneous() const noexcept { return f_.homogeneous(); }
  std::optional<Rational> defect_bound() const;

  Rational operator()(const GPWord& x) const;

 private:
  JoinDecomposition d_;
  Quasimorphism f_;
  int k_;
  bool vanishing_ = false;
  /// Per factor: local vertex -> local vertex of factor 0.
  std::vector<std::vector<int>> to_first_;
};

/// Throws MalformedInput when the first k factors are not pairwise
/// isomorphic or are of a type without an evaluator (neither free nor
/// D-infinity), and RankMismatch when f's rank differs from the factor size.
GPQuasimorphism gp_pipeline_qm(const JoinDecomposition& d, const Quasimorphism& f, int k);

}  // namespace autqm
