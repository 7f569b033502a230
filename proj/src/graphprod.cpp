#include "autqm/graphprod.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "autqm/errors.hpp"

namespace autqm {

VertexGraph::VertexGraph(int n) {
  if (n < 0) throw MalformedInput("vertex count must be nonnegative");
  labels_.assign(static_cast<std::size_t>(n), 0);
  adjacency_.assign(static_cast<std::size_t>(n),
                    std::vector<bool>(static_cast<std::size_t>(n), false));
}

VertexGraph::VertexGraph(std::vector<int> labels, std::span<const std::pair<int, int>> edges)
    : VertexGraph(static_cast<int>(labels.size())) {
  for (int v = 0; v < size(); ++v) set_label(v, labels[static_cast<std::size_t>(v)]);
  for (auto [u, v] : edges) add_edge(u, v);
}

void VertexGraph::check_vertex(int v) const {
  if (v < 0 || v >= size()) {
    throw MalformedInput("vertex " + std::to_string(v) + " out of range");
  }
}

bool VertexGraph::adjacent(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return adjacency_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
}

std::vector<std::pair<int, int>> VertexGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < size(); ++u) {
    for (int v = u + 1; v < size(); ++v) {
      if (adjacent(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

void VertexGraph::set_label(int v, int m) {
  check_vertex(v);
  if (m != 0 && m < 2) {
    throw MalformedInput("label " + std::to_string(m) + " is neither 0 nor >= 2");
  }
  labels_[static_cast<std::size_t>(v)] = m;
}

void VertexGraph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw MalformedInput("loops are not allowed");
  adjacency_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
  adjacency_[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = true;
}

VertexGraph VertexGraph::induced(std::span<const int> vertices) const {
  VertexGraph g(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    g.set_label(static_cast<int>(i), label(vertices[i]));
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (adjacent(vertices[i], vertices[j])) {
        g.add_edge(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return g;
}

VertexGraph VertexGraph::complement() const {
  VertexGraph g(size());
  g.labels_ = labels_;
  for (int u = 0; u < size(); ++u) {
    for (int v = u + 1; v < size(); ++v) {
      if (!adjacent(u, v)) g.add_edge(u, v);
    }
  }
  return g;
}

namespace {

std::vector<std::pair<std::string_view, int>> split_fields(std::string_view line) {
  std::vector<std::pair<std::string_view, int>> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i >= line.size() || line[i] == '#') break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '#') ++i;
    out.emplace_back(line.substr(start, i - start), static_cast<int>(start + 1));
  }
  return out;
}

long parse_long(std::string_view field, int line, int column) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw ParseError("expected an integer, got '" + std::string(field) + "'", line, column);
  }
  return value;
}

}  // namespace

VertexGraph parse_graph(std::string_view text) {
  std::optional<VertexGraph> g;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    pos = end + 1;
    ++line_no;
    const auto fields = split_fields(line);
    if (fields.empty()) continue;
    const auto [keyword, kcol] = fields[0];
    auto expect = [&](std::size_t n) {
      if (fields.size() != n) {
        throw ParseError("'" + std::string(keyword) + "' takes " + std::to_string(n - 1) +
                             " arguments",
                         line_no, kcol);
      }
    };
    auto number = [&](std::size_t i) {
      return parse_long(fields[i].first, line_no, fields[i].second);
    };
    try {
      if (keyword == "vertices") {
        expect(2);
        if (g) throw ParseError("duplicate 'vertices' header", line_no, kcol);
        g.emplace(static_cast<int>(number(1)));
      } else if (keyword == "label" || keyword == "edge") {
        expect(3);
        if (!g) throw ParseError("'vertices' header must come first", line_no, kcol);
        const auto a = static_cast<int>(number(1));
        const auto b = static_cast<int>(number(2));
        if (keyword == "label") {
          g->set_label(a, b);
        } else {
          g->add_edge(a, b);
        }
      } else {
        throw ParseError("unknown keyword '" + std::string(keyword) + "'", line_no, kcol);
      }
    } catch (const MalformedInput& e) {
      throw ParseError(e.what(), line_no, kcol);
    }
  }
  if (!g) throw ParseError("missing 'vertices' header", line_no, 1);
  return *g;
}

std::string format_graph(const VertexGraph& g) {
  std::ostringstream out;
  out << "vertices " << g.size() << '\n';
  for (int v = 0; v < g.size(); ++v) out << "label " << v << ' ' << g.label(v) << '\n';
  for (auto [u, v] : g.edges()) out << "edge " << u << ' ' << v << '\n';
  return out.str();
}

namespace {

/// Prime-power factors of m in ascending order.
std::vector<long> primary_parts(long m) {
  std::vector<long> out;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    long q = 1;
    while (m % p == 0) {
      m /= p;
      q *= p;
    }
    out.push_back(q);
  }
  if (m > 1) out.push_back(m);
  return out;
}

bool is_prime_power(long m) { return primary_parts(m).size() == 1; }

long smallest_prime(long q) {
  for (long p = 2; p * p <= q; ++p) {
    if (q % p == 0) return p;
  }
  return q;
}

}  // namespace

Refinement refine(std::span<const AbelianLabel> labels,
                  std::span<const std::pair<int, int>> edges) {
  Refinement out;
  std::vector<int> new_labels;
  for (const auto& label : labels) {
    if (label.free_rank < 0) throw MalformedInput("free rank must be nonnegative");
    std::vector<long> parts;
    for (long t : label.torsion) {
      if (t < 1) throw MalformedInput("torsion orders must be positive");
      for (long q : primary_parts(t)) parts.push_back(q);
    }
    // Ascending prime, then ascending power.
    std::sort(parts.begin(), parts.end(), [](long x, long y) {
      return std::pair(smallest_prime(x), x) < std::pair(smallest_prime(y), y);
    });
    std::vector<int> cluster;
    for (long q : parts) {
      cluster.push_back(static_cast<int>(new_labels.size()));
      new_labels.push_back(static_cast<int>(q));
    }
    for (int i = 0; i < label.free_rank; ++i) {
      cluster.push_back(static_cast<int>(new_labels.size()));
      new_labels.push_back(0);
    }
    out.clusters.push_back(std::move(cluster));
  }
  std::vector<std::pair<int, int>> new_edges;
  for (const auto& cluster : out.clusters) {
    for (std::size_t i = 0; i < cluster.size(); ++i) {
      for (std::size_t j = i + 1; j < cluster.size(); ++j) {
        new_edges.emplace_back(cluster[i], cluster[j]);
      }
    }
  }
  const int n = static_cast<int>(labels.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) {
      throw MalformedInput("invalid edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    for (int a : out.clusters[static_cast<std::size_t>(u)]) {
      for (int b : out.clusters[static_cast<std::size_t>(v)]) new_edges.emplace_back(a, b);
    }
  }
  out.graph = VertexGraph(std::move(new_labels), new_edges);
  return out;
}

namespace {

long reduce_exponent(long e, int label) {
  if (label == 0) return e;
  return ((e % label) + label) % label;
}

bool commute(const VertexGraph& g, int u, int v) { return u != v && g.adjacent(u, v); }

}  // namespace

GPWord normal_form(std::shared_ptr<const VertexGraph> graph, std::span<const Syllable> raw) {
  if (!graph) throw MalformedInput("graph product element without a graph");
  const VertexGraph& g = *graph;
  // Merge pass: each syllable slides left past commuting syllables and
  // merges with the first syllable on its own vertex, if it reaches one.
  std::vector<Syllable> stack;
  for (const auto& s : raw) {
    if (s.vertex < 0 || s.vertex >= g.size()) {
      throw MalformedInput("syllable vertex " + std::to_string(s.vertex) + " out of range");
    }
    long e = reduce_exponent(s.exponent, g.label(s.vertex));
    if (e == 0) continue;
    bool merged = false;
    for (std::size_t j = stack.size(); j-- > 0;) {
      if (stack[j].vertex == s.vertex) {
        const long sum = reduce_exponent(stack[j].exponent + e, g.label(s.vertex));
        if (sum == 0) {
          stack.erase(stack.begin() + static_cast<long>(j));
        } else {
          stack[j].exponent = sum;
        }
        merged = true;
        break;
      }
      if (!commute(g, stack[j].vertex, s.vertex)) break;
    }
    if (!merged) stack.push_back({s.vertex, e});
  }

  // Lexicographically least arrangement: repeatedly take the least vertex
  // among syllables that commute with everything before them.
  std::vector<Syllable> out;
  out.reserve(stack.size());
  while (!stack.empty()) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < stack.size(); ++i) {
      bool movable = true;
      for (std::size_t j = 0; j < i && movable; ++j) {
        movable = commute(g, stack[j].vertex, stack[i].vertex);
      }
      if (movable && stack[i].vertex < stack[best].vertex) best = i;
    }
    out.push_back(stack[best]);
    stack.erase(stack.begin() + static_cast<long>(best));
  }
  return GPWord(std::move(graph), std::move(out));
}

GPWord gp_identity(std::shared_ptr<const VertexGraph> graph) {
  return normal_form(std::move(graph), {});
}

GPWord gp_multiply(const GPWord& x, const GPWord& y) {
  if (x.graph() != y.graph() && !(*x.graph() == *y.graph())) {
    throw MalformedInput("graph product elements over different graphs");
  }
  std::vector<Syllable> joined = x.syllables();
  joined.insert(joined.end(), y.syllables().begin(), y.syllables().end());
  return normal_form(x.graph(), joined);
}

GPWord gp_invert(const GPWord& x) {
  std::vector<Syllable> reversed;
  for (auto it = x.syllables().rbegin(); it != x.syllables().rend(); ++it) {
    reversed.push_back({it->vertex, -it->exponent});
  }
  return normal_form(x.graph(), reversed);
}

std::vector<Syllable> parse_syllables(std::string_view text) {
  std::vector<Syllable> out;
  const auto fields = split_fields(text);
  if (fields.size() == 1 && fields[0].first == "1") return out;
  for (const auto& [field, column] : fields) {
    const auto caret = field.find('^');
    Syllable s;
    s.vertex = static_cast<int>(parse_long(field.substr(0, caret), 1, column));
    s.exponent = caret == std::string_view::npos
                     ? 1
                     : parse_long(field.substr(caret + 1), 1,
                                  column + static_cast<int>(caret) + 1);
    out.push_back(s);
  }
  return out;
}

std::string format_syllables(std::span<const Syllable> s) {
  if (s.empty()) return "1";
  std::string out;
  for (const auto& syl : s) {
    if (!out.empty()) out += ' ';
    out += std::to_string(syl.vertex) + '^' + std::to_string(syl.exponent);
  }
  return out;
}

std::optional<std::vector<int>> labelled_isomorphism(const VertexGraph& a,
                                                     const VertexGraph& b) {
  const int n = a.size();
  if (b.size() != n) return std::nullopt;
  std::vector<int> image(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  auto extend = [&](auto&& self, int v) -> bool {
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if (used[static_cast<std::size_t>(w)] || a.label(v) != b.label(w)) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) {
        ok = a.adjacent(u, v) == b.adjacent(image[static_cast<std::size_t>(u)], w);
      }
      if (!ok) continue;
      image[static_cast<std::size_t>(v)] = w;
      used[static_cast<std::size_t>(w)] = true;
      if (self(self, v + 1)) return true;
      used[static_cast<std::size_t>(w)] = false;
    }
    return false;
  };
  if (!extend(extend, 0)) return std::nullopt;
  return image;
}

JoinDecomposition join_decompose(std::shared_ptr<const VertexGraph> graph) {
  if (!graph) throw MalformedInput("join decomposition without a graph");
  const VertexGraph& g = *graph;
  const int n = g.size();
  JoinDecomposition d;
  d.graph = graph;
  std::vector<int> component(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> components;
  for (int s = 0; s < n; ++s) {
    if (component[static_cast<std::size_t>(s)] >= 0) continue;
    const int id = static_cast<int>(components.size());
    std::vector<int> members{s};
    component[static_cast<std::size_t>(s)] = id;
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (int v = 0; v < n; ++v) {
        if (v == members[i] || component[static_cast<std::size_t>(v)] >= 0) continue;
        if (!g.adjacent(members[i], v)) {
          component[static_cast<std::size_t>(v)] = id;
          members.push_back(v);
        }
      }
    }
    std::sort(members.begin(), members.end());
    components.push_back(std::move(members));
  }
  for (auto& c : components) {
    if (c.size() == 1) {
      d.gamma0.push_back(c.front());
    } else {
      d.factors.push_back(std::move(c));
    }
  }
  std::sort(d.gamma0.begin(), d.gamma0.end());
  for (const auto& f : d.factors) {
    d.factor_graphs.push_back(std::make_shared<const VertexGraph>(g.induced(f)));
  }
  for (std::size_t i = 0; i < d.factors.size(); ++i) {
    bool placed = false;
    for (auto& cls : d.classes) {
      if (labelled_isomorphism(*d.factor_graphs[cls.front()], *d.factor_graphs[i])) {
        cls.push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) d.classes.push_back({i});
  }
  return d;
}

std::vector<int> compatible_isomorphism(const JoinDecomposition& d, std::size_t i,
                                        std::size_t j) {
  for (const auto& cls : d.classes) {
    const bool has_i = std::find(cls.begin(), cls.end(), i) != cls.end();
    const bool has_j = std::find(cls.begin(), cls.end(), j) != cls.end();
    if (!has_i && !has_j) continue;
    if (!has_i || !has_j) break;
    const auto& root = *d.factor_graphs[cls.front()];
    const auto to_i = *labelled_isomorphism(root, *d.factor_graphs[i]);
    const auto to_j = *labelled_isomorphism(root, *d.factor_graphs[j]);
    std::vector<int> map(to_i.size());
    for (std::size_t r = 0; r < to_i.size(); ++r) {
      map[static_cast<std::size_t>(to_i[r])] = to_j[r];
    }
    return map;
  }
  throw MalformedInput("factors " + std::to_string(i) + " and " + std::to_string(j) +
                       " are not isomorphic");
}

std::vector<int> factor_permutation(const JoinDecomposition& d,
                                    std::span<const std::size_t> perm) {
  const std::size_t k = d.factors.size();
  if (perm.size() != k) throw MalformedInput("permutation size differs from factor count");
  std::vector<bool> hit(k, false);
  for (std::size_t p : perm) {
    if (p >= k || hit[p]) throw MalformedInput("not a permutation of the factors");
    hit[p] = true;
  }
  std::vector<int> map(static_cast<std::size_t>(d.graph->size()));
  std::iota(map.begin(), map.end(), 0);
  for (std::size_t i = 0; i < k; ++i) {
    const auto local = compatible_isomorphism(d, i, perm[i]);
    for (std::size_t v = 0; v < local.size(); ++v) {
      map[static_cast<std::size_t>(d.factors[i][v])] =
          d.factors[perm[i]][static_cast<std::size_t>(local[v])];
    }
  }
  return map;
}

GPWord apply_vertex_map(const GPWord& x, std::span<const int> map) {
  const VertexGraph& g = *x.graph();
  if (map.size() != static_cast<std::size_t>(g.size())) {
    throw MalformedInput("vertex map size differs from the graph");
  }
  std::vector<Syllable> out;
  for (const auto& s : x.syllables()) {
    const int v = map[static_cast<std::size_t>(s.vertex)];
    if (g.label(v) != g.label(s.vertex)) throw MalformedInput("vertex map changes labels");
    out.push_back({v, s.exponent});
  }
  return normal_form(x.graph(), out);
}

bool is_dinfty(const VertexGraph& g, std::span<const int> factor) {
  return factor.size() == 2 && !g.adjacent(factor[0], factor[1]) &&
         g.label(factor[0]) == 2 && g.label(factor[1]) == 2;
}

bool classify_virtually_abelian(const VertexGraph& g) {
  for (int v = 0; v < g.size(); ++v) {
    const int m = g.label(v);
    if (m != 0 && !is_prime_power(m)) {
      throw MalformedInput("label " + std::to_string(m) + " at vertex " + std::to_string(v) +
                           " is not primary cyclic; refine first");
    }
  }
  const auto d = join_decompose(std::make_shared<const VertexGraph>(g));
  return std::all_of(d.factors.begin(), d.factors.end(),
                     [&](const std::vector<int>& f) { return is_dinfty(g, f); });
}

std::vector<GPWord> project_kill_h0(const GPWord& x, const JoinDecomposition& d) {
  if (!d.graph || (x.graph() != d.graph && !(*x.graph() == *d.graph))) {
    throw MalformedInput("decomposition belongs to a different graph");
  }
  const std::size_t n = static_cast<std::size_t>(d.graph->size());
  std::vector<int> factor_of(n, -1);
  std::vector<int> local(n, -1);
  for (std::size_t i = 0; i < d.factors.size(); ++i) {
    for (std::size_t v = 0; v < d.factors[i].size(); ++v) {
      factor_of[static_cast<std::size_t>(d.factors[i][v])] = static_cast<int>(i);
      local[static_cast<std::size_t>(d.factors[i][v])] = static_cast<int>(v);
    }
  }
  std::vector<std::vector<Syllable>> parts(d.factors.size());
  for (const auto& s : x.syllables()) {
    const int f = factor_of[static_cast<std::size_t>(s.vertex)];
    if (f < 0) continue;
    parts[static_cast<std::size_t>(f)].push_back(
        {local[static_cast<std::size_t>(s.vertex)], s.exponent});
  }
  std::vector<GPWord> out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    out.push_back(normal_form(d.factor_graphs[i], parts[i]));
  }
  return out;
}

namespace {

bool is_free_type(const VertexGraph& g) {
  return g.edges().empty() &&
         std::all_of(g.labels().begin(), g.labels().end(), [](int m) { return m == 0; });
}

}  // namespace

Word free_factor_word(const GPWord& x) {
  const VertexGraph& g = *x.graph();
  if (!is_free_type(g)) throw MalformedInput("factor is not a free group on its vertices");
  if (g.size() < 1) throw MalformedInput("empty factor");
  std::vector<Letter> letters;
  for (const auto& s : x.syllables()) {
    const Letter l = s.exponent > 0 ? s.vertex + 1 : -(s.vertex + 1);
    for (long i = 0; i < std::abs(s.exponent); ++i) letters.push_back(l);
  }
  return Word::reduce(letters, g.size());
}

GPQuasimorphism::GPQuasimorphism(JoinDecomposition d, Quasimorphism f, int k)
    : d_(std::move(d)), f_(std::move(f)), k_(k) {
  if (k < 1 || static_cast<std::size_t>(k) > d_.factors.size()) {
    throw MalformedInput("k must lie between 1 and the number of join factors");
  }
  for (int i = 0; i < k; ++i) {
    to_first_.push_back(compatible_isomorphism(d_, static_cast<std::size_t>(i), 0));
  }
  const VertexGraph& first = *d_.factor_graphs[0];
  if (is_dinfty(*d_.graph, d_.factors[0])) {
    vanishing_ = true;
  } else if (is_free_type(first)) {
    if (f_.rank() != first.size()) throw RankMismatch(f_.rank(), first.size());
  } else {
    throw MalformedInput(
        "no evaluator for this factor type: only free and D-infinity factors are supported");
  }
}

std::optional<Rational> GPQuasimorphism::defect_bound() const {
  if (vanishing_) return Rational(0);
  if (!f_.defect_bound()) return std::nullopt;
  return Rational(k_) * *f_.defect_bound();
}

Rational GPQuasimorphism::operator()(const GPWord& x) const {
  if (vanishing_) return Rational(0);
  const auto parts = project_kill_h0(x, d_);
  Rational sum(0);
  for (int i = 0; i < k_; ++i) {
    const auto& map = to_first_[static_cast<std::size_t>(i)];
    std::vector<Syllable> moved;
    for (const auto& s : parts[static_cast<std::size_t>(i)].syllables()) {
      moved.push_back({map[static_cast<std::size_t>(s.vertex)], s.exponent});
    }
    sum += f_(free_factor_word(normal_form(d_.factor_graphs[0], moved)));
  }
  return sum;
}

GPQuasimorphism gp_pipeline_qm(const JoinDecomposition& d, const Quasimorphism& f, int k) {
  return GPQuasimorphism(d, f, k);
}

}  // namespace autqm
