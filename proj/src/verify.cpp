#include "autqm/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

#include "autqm/automorphism.hpp"
#include "autqm/errors.hpp"
#include "autqm/graphprod.hpp"
#include "autqm/norms.hpp"
#include "autqm/quasimorphism.hpp"
#include "autqm/random.hpp"
#include "autqm/text.hpp"
#include "autqm/whitehead.hpp"

namespace autqm {

namespace {

/// Collects the first failure of a check; later failures only bump the count.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checked_;
    if (ok) return;
    ++failed_;
    if (first_.empty()) first_ = what;
  }
  bool ok() const { return failed_ == 0; }
  std::string summary(const std::string& on_success) const {
    if (ok()) return on_success;
    return std::to_string(failed_) + "/" + std::to_string(checked_) + " failed; first: " + first_;
  }

 private:
  long checked_ = 0;
  long failed_ = 0;
  std::string first_;
};

struct Outcome {
  bool correct = false;
  std::string detail;
};

std::string w2s(const Word& w) { return format_word(w); }

// ---------------------------------------------------------------------------
// Automorphism identities.

Outcome check_ad_formula(Rng& rng) {
  Tally t;
  for (int i = 0; i < 200; ++i) {
    const int rank = i % 2 == 0 ? 2 : 3;
    const Automorphism phi = random_composite(rank, random_int(1, 6, rng), rng);
    const Word g = random_word_upto(rank, 20, rng);
    t.expect(equal(ad(phi(g)), compose(phi, ad(g), inverse(phi))),
             "phi=" + format_trace(phi) + " g=" + w2s(g));
  }
  return {t.ok(), t.summary("200 pairs, ranks 2 and 3")};
}

Outcome check_conjugated_autocommutator(Rng& rng) {
  Tally t;
  for (int i = 0; i < 200; ++i) {
    const int rank = i % 2 == 0 ? 2 : 3;
    const Automorphism phi = random_composite(rank, random_int(1, 6, rng), rng);
    const Automorphism psi = random_composite(rank, random_int(1, 6, rng), rng);
    const Word g = random_word_upto(rank, 20, rng);
    const Word lhs = psi(autocommutator(phi, g));
    const Word rhs = autocommutator(compose(psi, phi, inverse(psi)), psi(g));
    t.expect(lhs == rhs, "phi=" + format_trace(phi) + " psi=" + format_trace(psi) +
                             " g=" + w2s(g));
  }
  return {t.ok(), t.summary("200 triples")};
}

// ---------------------------------------------------------------------------
// Brooks quasimorphisms.

Outcome check_homogenisation(Rng& rng) {
  Tally t;
  for (int i = 0; i < 50; ++i) {
    const Word w = random_word(2, random_int(1, 4, rng), rng);
    const Word g = random_word_upto(2, 10, rng);
    const Quasimorphism f = brooks(w);
    const Rational limit = brooks_homogeneous(w)(g);
    for (long n : {8L, 16L, 32L, 64L}) {
      const auto est = homogenise_numeric(f, g, n);
      t.expect(abs(est.estimate - limit) <= brooks_defect_bound(w.size()) / n,
               "w=" + w2s(w) + " g=" + w2s(g) + " N=" + std::to_string(n));
    }
  }
  // Validation gate for the declared bound.
  Rational worst(0);
  std::string worst_pattern;
  long patterns = 0;
  for (const auto& w : enumerate_words(2, 4)) {
    if (w.empty()) continue;
    ++patterns;
    const auto cert = defect_enumerate(brooks(w), 8);
    t.expect(cert.value <= brooks_defect_bound(w.size()),
             "gate w=" + w2s(w) + " defect " + to_string(cert.value));
    const Rational ratio = cert.value / static_cast<std::int64_t>(w.size());
    if (ratio > worst) {
      worst = ratio;
      worst_pattern = w2s(w);
    }
  }
  // The reduced enumeration must agree with plain pair-by-pair enumeration.
  for (const auto& w : enumerate_words(2, 4)) {
    if (w.empty()) continue;
    const auto local = defect_enumerate(brooks(w), 4);
    const auto brute = defect_enumerate_brute_force(brooks(w), 4);
    t.expect(local.value == brute.value && local.g == brute.g && local.h == brute.h,
             "enumerators disagree on w=" + w2s(w));
  }
  return {t.ok(), t.summary("200 sandwich checks; gate over " + std::to_string(patterns) +
                            " patterns at L=8, max defect/|w| = " + to_string(worst) +
                            " (" + worst_pattern + "), bound 6")};
}

Outcome check_conjugacy_invariance(Rng& rng) {
  Tally t;
  for (int i = 0; i < 200; ++i) {
    const int rank = i % 2 == 0 ? 2 : 3;
    const Word w = random_word(rank, random_int(1, 4, rng), rng);
    const Word g = random_word_upto(rank, 12, rng);
    const Word c = random_word_upto(rank, 8, rng);
    const Quasimorphism f = brooks_homogeneous(w);
    t.expect(f(g) == f(c * g * invert(c)), "w=" + w2s(w) + " g=" + w2s(g) + " c=" + w2s(c));
  }
  return {t.ok(), t.summary("200 conjugate pairs")};
}

// ---------------------------------------------------------------------------
// Autocommutator lengths.

Outcome check_transvection_acl() {
  Tally t;
  const Word a = parse_word("a", 2);
  const NormResult r = acl_upper(a);
  t.expect(r.finite() && r.value == 1, "acl_upper(a) is not 1");
  t.expect(r.replays(a), "witness does not replay");
  if (r.finite() && r.witness.size() == 1 && r.witness[0].phi) {
    const auto& f = r.witness[0];
    t.expect(f.phi->images() == std::vector<Word>{a, parse_word("ab", 2)},
             "witness automorphism is " + format_images(*f.phi));
    t.expect(f.first == parse_word("b", 2), "witness element is " + w2s(f.first));
  } else {
    t.expect(false, "no single autocommutator witness");
  }
  return {t.ok(), t.summary("acl(a) = 1 via [b->ab, b] = a")};
}

Outcome check_swap_witness() {
  Tally t;
  const Word c = parse_word("abAB", 2);
  const Automorphism s = swap(2, 1, 2);
  for (long n = 1; n <= 8; ++n) {
    t.expect(autocommutator(s, power(c, -n)) == power(c, 2 * n), "n=" + std::to_string(n));
  }
  const SaclEstimate est = sacl_estimate(c, 16);
  t.expect(est.upper && *est.upper <= Rational(1, 16),
           "upper = " + (est.upper ? to_string(*est.upper) : std::string("none")));
  for (const auto& step : est.trace) {
    if (step.acl.finite()) {
      t.expect(step.acl.replays(power(c, step.n)), "witness n=" + std::to_string(step.n));
    }
  }
  return {t.ok(), t.summary("[swap, [a,b]^-n] = [a,b]^2n for n <= 8; sacl upper " +
                            (est.upper ? to_string(*est.upper) : std::string("none")))};
}

Outcome check_free_factor_witness() {
  Tally t;
  const Word a = parse_word("a", 2);
  const Word b = parse_word("b", 2);
  for (long n = 1; n <= 8; ++n) {
    const auto tw = transvection_witness(a, 2, n);
    t.expect(tw.x == b && autocommutator(tw.phi, tw.x) == power(a, n),
             "n=" + std::to_string(n));
    t.expect(tw.phi.images() == std::vector<Word>{a, power(a, n) * b},
             "images n=" + std::to_string(n));
  }
  const SaclEstimate est = sacl_estimate(a, 16);
  t.expect(est.upper && *est.upper <= Rational(1, 16),
           "upper = " + (est.upper ? to_string(*est.upper) : std::string("none")));
  for (const auto& step : est.trace) {
    if (step.acl.finite()) {
      t.expect(step.acl.replays(power(a, step.n)), "witness n=" + std::to_string(step.n));
    }
  }
  return {t.ok(), t.summary("[b -> a^n b, b] = a^n for n <= 8; sacl upper " +
                            (est.upper ? to_string(*est.upper) : std::string("none")))};
}

// ---------------------------------------------------------------------------
// Whitehead: an independent orbit oracle in F_2 on raw letter vectors.

using Raw = std::vector<int>;

Raw raw_reduce(const Raw& w) {
  Raw out;
  for (int l : w) {
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Raw raw_cyclic_canonical(const Raw& word) {
  Raw w = raw_reduce(word);
  std::size_t lo = 0;
  std::size_t hi = w.size();
  while (hi - lo >= 2 && w[lo] == -w[hi - 1]) {
    ++lo;
    --hi;
  }
  Raw core(w.begin() + static_cast<long>(lo), w.begin() + static_cast<long>(hi));
  auto key = [](const Raw& r) {
    Raw k;
    for (int l : r) k.push_back(l > 0 ? 2 * l - 1 : -2 * l);
    return k;
  };
  Raw best = core;
  for (std::size_t s = 1; s < core.size(); ++s) {
    Raw rot(core.begin() + static_cast<long>(s), core.end());
    rot.insert(rot.end(), core.begin(), core.begin() + static_cast<long>(s));
    if (key(rot) < key(best)) best = rot;
  }
  return best;
}

Raw raw_substitute(const Raw& w, const std::array<Raw, 2>& images) {
  Raw out;
  for (int l : w) {
    const Raw& img = images[static_cast<std::size_t>(std::abs(l) - 1)];
    if (l > 0) {
      out.insert(out.end(), img.begin(), img.end());
    } else {
      for (auto it = img.rbegin(); it != img.rend(); ++it) out.push_back(-*it);
    }
  }
  return raw_reduce(out);
}

/// Cyclic words of length <= max_len in the orbit of `a` under Nielsen moves.
std::set<Raw> primitive_classes(std::size_t max_len) {
  std::vector<std::array<Raw, 2>> moves = {
      {Raw{2}, Raw{1}}, {Raw{-1}, Raw{2}}, {Raw{1}, Raw{-2}},
  };
  for (int s : {1, -1}) {
    moves.push_back({Raw{1, 2 * s}, Raw{2}});
    moves.push_back({Raw{2 * s, 1}, Raw{2}});
    moves.push_back({Raw{1}, Raw{2, s}});
    moves.push_back({Raw{1}, Raw{s, 2}});
  }
  std::set<Raw> seen{Raw{1}};
  std::vector<Raw> queue{Raw{1}};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& m : moves) {
      Raw next = raw_cyclic_canonical(raw_substitute(queue[i], m));
      if (next.size() > max_len || !seen.insert(next).second) continue;
      queue.push_back(next);
    }
  }
  return seen;
}

Raw raw_root(const Raw& core) {
  const std::size_t n = core.size();
  for (std::size_t p = 1; p <= n; ++p) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = p; i < n && periodic; ++i) periodic = core[i] == core[i - p];
    if (periodic) return Raw(core.begin(), core.begin() + static_cast<long>(p));
  }
  return core;
}

Outcome check_whitehead() {
  Tally t;
  for (const char* s : {"a", "ab", "abb"}) {
    t.expect(is_primitive(parse_word(s, 2)), std::string(s) + " should be primitive");
  }
  for (const char* s : {"aa", "abAB", "aabb"}) {
    t.expect(!is_primitive(parse_word(s, 2)), std::string(s) + " should not be primitive");
  }
  const Word c = parse_word("abAB", 2);
  t.expect(!in_proper_free_factor(c), "[a,b] reported in a proper free factor");
  const WhiteheadGraph graph = whitehead_graph(c);
  t.expect(graph.connected && !graph.has_cut_vertex, "[a,b] graph is not diskbusting");
  t.expect(in_proper_free_factor(parse_word("b", 2)), "b not in a proper free factor");

  const auto primitive = primitive_classes(10);
  long words = 0;
  long primitive_count = 0;
  long factor_count = 0;
  for (const auto& w : enumerate_words(2, 6)) {
    if (w.empty()) continue;
    ++words;
    const Raw core = raw_cyclic_canonical(Raw(w.letters().begin(), w.letters().end()));
    const bool oracle_primitive = primitive.contains(core);
    const bool oracle_factor = primitive.contains(raw_cyclic_canonical(raw_root(core)));
    primitive_count += oracle_primitive;
    factor_count += oracle_factor;
    t.expect(is_primitive(w) == oracle_primitive, "is_primitive(" + w2s(w) + ")");
    t.expect(in_proper_free_factor(w) == oracle_factor, "in_proper_free_factor(" + w2s(w) + ")");
  }
  return {t.ok(), t.summary("oracle agrees on " + std::to_string(words) + " words (" +
                            std::to_string(primitive_count) + " primitive, " +
                            std::to_string(factor_count) + " in a proper free factor)")};
}

// ---------------------------------------------------------------------------
// The averaging operator on products.

Outcome check_product_average(Rng& rng) {
  Tally t;
  const Quasimorphism f = brooks(parse_word("ab", 2));
  const Word e(2);
  for (int k : {1, 2, 3}) {
    const auto p = product_average(f, k, 3);
    for (int i = 0; i < 100; ++i) {
      const Word h = random_word_upto(2, 12, rng);
      const std::vector<Word> tuple{h, e, e};
      t.expect(p(tuple) == f(h), "restriction k=" + std::to_string(k) + " h=" + w2s(h));
    }
  }
  const auto p = product_average(f, 3, 3);
  for (int i = 0; i < 100; ++i) {
    std::vector<Word> tuple;
    for (int c = 0; c < 3; ++c) tuple.push_back(random_word_upto(2, 10, rng));
    const Rational base = p(tuple);
    std::array<int, 3> perm{0, 1, 2};
    do {
      const std::vector<Word> permuted{tuple[static_cast<std::size_t>(perm[0])],
                                       tuple[static_cast<std::size_t>(perm[1])],
                                       tuple[static_cast<std::size_t>(perm[2])]};
      t.expect(p(permuted) == base, "permutation invariance");
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  const int range = 2;
  const auto single = defect_enumerate(f, range);
  const auto product = defect_enumerate(p, range);
  t.expect(product.value <= Rational(3) * *f.defect_bound(), "defect exceeds k D");
  t.expect(product.value == Rational(3) * single.value, "defect does not reach k times");
  // Combined witness: the single-factor pair placed in every coordinate.
  const std::vector<Word> gs(3, single.g);
  const std::vector<Word> hs(3, single.h);
  std::vector<Word> ghs;
  for (int c = 0; c < 3; ++c) ghs.push_back(single.g * single.h);
  t.expect(abs(p(gs) + p(hs) - p(ghs)) == Rational(3) * single.value,
           "combined witness does not attain k times the defect");
  return {t.ok(), t.summary("restriction 300, permutations 600; defect at L=2: f " +
                            to_string(single.value) + ", integral " +
                            to_string(product.value) + " <= " +
                            to_string(Rational(3) * *f.defect_bound()))};
}

Outcome check_finite_average(Rng& rng) {
  Tally t;
  const auto group = signed_permutations(2);
  const std::vector<Word> s{parse_word("a", 2), parse_word("b", 2)};
  const auto closure = orbit_closure(s, group);
  long nonzero = 0;
  for (const char* pattern : {"ab", "aaba"}) {
    const Quasimorphism f = finite_average(brooks_homogeneous(parse_word(pattern, 2)), group);
    const Rational d = *f.defect_bound();
    std::vector<Word> samples;
    for (int i = 0; i < 200; ++i) samples.push_back(random_word_upto(2, 14, rng));
    const auto report = check_invariance(f, group, samples);
    t.expect(report.ok(), std::string("invariance of ") + pattern);

    Rational sup(0);
    for (const auto& x : s) sup = std::max(sup, abs(f(x)));
    int tested = 0;
    while (tested < 100) {
      const Word g = random_word_upto(2, 9, rng);
      const NormResult norm = bfs_norm(g, closure, 6);
      if (!norm.finite()) continue;
      ++tested;
      t.expect(norm.replays(g, closure), "norm witness for " + w2s(g));
      t.expect(abs(f(g)) <= (sup + d) * Rational(norm.value),
               std::string("norm bound for ") + pattern + " g=" + w2s(g));
      t.expect(prop32_bound(f, s, g) <= Rational(norm.value), "prop32_bound above the norm");
    }
    for (const auto& g : samples) {
      if (f(g) != Rational(0)) ++nonzero;
      for (const auto& phi : group) {
        t.expect(abs(f(autocommutator(phi, g))) <= d,
                 std::string("autocommutator bound for ") + pattern);
      }
    }
  }
  // A long word where the averaged aaba count is visible against the norm.
  const Quasimorphism f = finite_average(brooks_homogeneous(parse_word("aaba", 2)), group);
  const Word g = parse_word("aabaBBB", 2);
  for (long m = 1; m <= 3; ++m) {
    const Word gm = power(g, m);
    const NormResult norm = bfs_norm(gm, closure, 7 * m);
    t.expect(norm.finite() && abs(f(gm)) == Rational(m, 8), "aabaBBB power value");
    t.expect(prop32_bound(f, s, gm) <= Rational(norm.value), "prop32 on powers");
  }
  return {t.ok(), t.summary("group of order " + std::to_string(group.size()) +
                            "; patterns ab and aaba; " + std::to_string(nonzero) +
                            " nonzero sample values")};
}

// ---------------------------------------------------------------------------
// Graph products.

VertexGraph random_graph(Rng& rng, int max_vertices) {
  const int n = random_int(2, max_vertices, rng);
  VertexGraph g(n);
  constexpr std::array<int, 4> labels{0, 2, 3, 4};
  for (int v = 0; v < n; ++v) g.set_label(v, labels[static_cast<std::size_t>(random_int(0, 3, rng))]);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (random_int(0, 1, rng) == 1) g.add_edge(u, v);
    }
  }
  return g;
}

std::vector<Syllable> random_syllables(const VertexGraph& g, int max_len, Rng& rng) {
  std::vector<Syllable> out;
  const int len = random_int(0, max_len, rng);
  for (int i = 0; i < len; ++i) {
    long e = 0;
    while (e == 0) e = random_int(-3, 3, rng);
    out.push_back({random_int(0, g.size() - 1, rng), e});
  }
  return out;
}

/// One defining relation applied at a random place.
std::vector<Syllable> apply_relation(const VertexGraph& g, std::vector<Syllable> s, Rng& rng) {
  const int kind = random_int(0, 4, rng);
  const auto pos = static_cast<std::size_t>(random_int(0, static_cast<int>(s.size()), rng));
  const int v = random_int(0, g.size() - 1, rng);
  const long e = random_int(1, 3, rng);
  switch (kind) {
    case 1: {
      std::vector<std::size_t> commuting;
      for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        if (s[i].vertex != s[i + 1].vertex && g.adjacent(s[i].vertex, s[i + 1].vertex)) {
          commuting.push_back(i);
        }
      }
      if (!commuting.empty()) {
        const auto i = commuting[static_cast<std::size_t>(
            random_int(0, static_cast<int>(commuting.size()) - 1, rng))];
        std::swap(s[i], s[i + 1]);
        return s;
      }
      break;
    }
    case 2:
      if (pos < s.size() && g.label(s[pos].vertex) > 0) {
        s[pos].exponent += g.label(s[pos].vertex) * random_int(-2, 2, rng);
        return s;
      }
      break;
    case 3:
      if (pos < s.size()) {
        const long first = random_int(-3, 3, rng);
        const Syllable rest{s[pos].vertex, s[pos].exponent - first};
        s[pos].exponent = first;
        s.insert(s.begin() + static_cast<long>(pos) + 1, rest);
        return s;
      }
      break;
    case 4:
      if (g.label(v) > 0) {
        s.insert(s.begin() + static_cast<long>(pos), Syllable{v, g.label(v)});
        return s;
      }
      break;
    default:
      break;
  }
  s.insert(s.begin() + static_cast<long>(pos), {Syllable{v, e}, Syllable{v, -e}});
  return s;
}

/// x -> s x + t with s = +-1: the infinite dihedral group as Z x| Z/2.
struct Affine {
  long t = 0;
  long s = 1;
  auto operator<=>(const Affine&) const = default;
};

Affine operator*(const Affine& f, const Affine& g) { return {f.s * g.t + f.t, f.s * g.s}; }

bool check_dihedral_ball(Tally& t) {
  const std::vector<std::pair<int, int>> no_edges;
  auto graph = std::make_shared<const VertexGraph>(std::vector<int>{2, 2}, no_edges);
  const std::array<Affine, 2> model_gens{Affine{0, -1}, Affine{1, -1}};
  const std::array<GPWord, 2> gp_gens{normal_form(graph, std::vector<Syllable>{{0, 1}}),
                                      normal_form(graph, std::vector<Syllable>{{1, 1}})};
  std::set<Affine> model_ball{Affine{}};
  std::vector<Affine> model_frontier{Affine{}};
  std::map<std::vector<std::pair<int, long>>, GPWord> gp_ball;
  auto key = [](const GPWord& x) {
    std::vector<std::pair<int, long>> k;
    for (const auto& s : x.syllables()) k.emplace_back(s.vertex, s.exponent);
    return k;
  };
  const GPWord id = gp_identity(graph);
  gp_ball.emplace(key(id), id);
  std::vector<GPWord> gp_frontier{id};
  for (int r = 0; r < 8; ++r) {
    std::vector<Affine> next_model;
    for (const auto& x : model_frontier) {
      for (const auto& s : model_gens) {
        if (model_ball.insert(x * s).second) next_model.push_back(x * s);
      }
    }
    model_frontier = std::move(next_model);
    std::vector<GPWord> next_gp;
    for (const auto& x : gp_frontier) {
      for (const auto& s : gp_gens) {
        GPWord y = gp_multiply(x, s);
        if (gp_ball.emplace(key(y), y).second) next_gp.push_back(y);
      }
    }
    gp_frontier = std::move(next_gp);
  }
  std::set<Affine> image;
  for (const auto& [k, x] : gp_ball) {
    Affine a;
    for (const auto& s : x.syllables()) {
      for (long i = 0; i < s.exponent; ++i) a = a * model_gens[static_cast<std::size_t>(s.vertex)];
    }
    image.insert(a);
  }
  t.expect(gp_ball.size() == model_ball.size(), "ball sizes differ");
  t.expect(image == model_ball, "normal forms do not map onto the model ball");
  t.expect(image.size() == gp_ball.size(), "two normal forms share a model element");
  // (uv)^3 (uv)^-2 = uv.
  const GPWord uv = gp_multiply(gp_gens[0], gp_gens[1]);
  const GPWord uv3 = gp_multiply(gp_multiply(uv, uv), uv);
  const GPWord inv2 = gp_invert(gp_multiply(uv, uv));
  t.expect(gp_multiply(uv3, inv2) == uv, "(uv)^3 (uv)^-2 != uv");
  return gp_ball.size() == 17;
}

/// Finest partition into pairwise fully adjacent blocks, by trying every set
/// partition.
std::pair<std::vector<int>, std::vector<std::vector<int>>> brute_force_join(const VertexGraph& g) {
  const int n = g.size();
  std::vector<int> block(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<int>> best;
  int best_count = -1;
  int ties = 0;
  auto visit = [&](auto&& self, int v, int used) -> void {
    if (v == n) {
      for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) {
          if (block[static_cast<std::size_t>(x)] != block[static_cast<std::size_t>(y)] &&
              !g.adjacent(x, y)) {
            return;
          }
        }
      }
      if (used > best_count) {
        best_count = used;
        ties = 0;
        best.assign(static_cast<std::size_t>(used), {});
        for (int x = 0; x < n; ++x) {
          best[static_cast<std::size_t>(block[static_cast<std::size_t>(x)])].push_back(x);
        }
      } else if (used == best_count) {
        ++ties;
      }
      return;
    }
    for (int b = 0; b <= used && b < n; ++b) {
      block[static_cast<std::size_t>(v)] = b;
      self(self, v + 1, std::max(used, b + 1));
    }
  };
  visit(visit, 0, 0);
  if (ties != 0) throw Error("finest join partition is not unique");
  std::vector<int> gamma0;
  std::vector<std::vector<int>> factors;
  for (auto& b : best) {
    if (b.size() == 1) {
      gamma0.push_back(b.front());
    } else {
      factors.push_back(b);
    }
  }
  std::sort(gamma0.begin(), gamma0.end());
  std::sort(factors.begin(), factors.end());
  return {gamma0, factors};
}

/// Virtually abelian or not, read off the shape of a graph with at most three
/// vertices.
bool hand_table(const VertexGraph& g) {
  switch (g.size()) {
    case 1:
      return true;
    case 2:
      return g.adjacent(0, 1) || (g.label(0) == 2 && g.label(1) == 2);
    case 3: {
      const auto edges = g.edges();
      if (edges.size() == 3) return true;
      if (edges.size() != 2) return false;
      // Path: the two ends must both be Z/2.
      std::array<int, 3> degree{};
      for (auto [u, v] : edges) {
        ++degree[static_cast<std::size_t>(u)];
        ++degree[static_cast<std::size_t>(v)];
      }
      for (int v = 0; v < 3; ++v) {
        if (degree[static_cast<std::size_t>(v)] == 1 && g.label(v) != 2) return false;
      }
      return true;
    }
    default:
      throw Error("hand table covers at most three vertices");
  }
}

Outcome check_graph_products(Rng& rng) {
  Tally t;
  long trials = 0;
  for (int gi = 0; gi < 10; ++gi) {
    auto graph = std::make_shared<const VertexGraph>(random_graph(rng, 6));
    for (int i = 0; i < 100; ++i) {
      const auto raw = random_syllables(*graph, 10, rng);
      const auto moved = apply_relation(*graph, raw, rng);
      ++trials;
      t.expect(normal_form(graph, raw) == normal_form(graph, moved),
               format_syllables(raw) + " vs " + format_syllables(moved));
    }
  }
  const bool seventeen = check_dihedral_ball(t);
  t.expect(seventeen, "dihedral ball of radius 8 should have 17 elements");

  long graphs = 0;
  for (int n = 1; n <= 5; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (int mask = 0; mask < (1 << pairs); ++mask) {
      VertexGraph g(n);
      int bit = 0;
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v, ++bit) {
          if (mask & (1 << bit)) g.add_edge(u, v);
        }
      }
      ++graphs;
      const auto d = join_decompose(std::make_shared<const VertexGraph>(g));
      auto factors = d.factors;
      std::sort(factors.begin(), factors.end());
      const auto [gamma0, brute] = brute_force_join(g);
      t.expect(d.gamma0 == gamma0 && factors == brute,
               "join decomposition of graph " + std::to_string(n) + "/" + std::to_string(mask));
    }
  }

  long labelled = 0;
  constexpr std::array<int, 3> labels{0, 2, 3};
  for (int n = 1; n <= 3; ++n) {
    const int pairs = n * (n - 1) / 2;
    int label_count = 1;
    for (int i = 0; i < n; ++i) label_count *= 3;
    for (int mask = 0; mask < (1 << pairs); ++mask) {
      for (int lc = 0; lc < label_count; ++lc) {
        VertexGraph g(n);
        int code = lc;
        for (int v = 0; v < n; ++v, code /= 3) {
          g.set_label(v, labels[static_cast<std::size_t>(code % 3)]);
        }
        int bit = 0;
        for (int u = 0; u < n; ++u) {
          for (int v = u + 1; v < n; ++v, ++bit) {
            if (mask & (1 << bit)) g.add_edge(u, v);
          }
        }
        ++labelled;
        t.expect(classify_virtually_abelian(g) == hand_table(g),
                 "classifier disagrees with the table on\n" + format_graph(g));
      }
    }
  }

  const std::vector<std::pair<int, int>> c4_edges{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  t.expect(classify_virtually_abelian(VertexGraph({2, 2, 2, 2}, c4_edges)),
           "C4 with Z/2 labels should be virtually abelian");
  const std::vector<std::pair<int, int>> none;
  t.expect(!classify_virtually_abelian(VertexGraph({0, 0}, none)),
           "free group of rank 2 classified virtually abelian");
  return {t.ok(), t.summary(std::to_string(trials) + " relation trials, D-infinity ball of " +
                            "17, " + std::to_string(graphs) + " graphs decomposed, " +
                            std::to_string(labelled) + " labelled graphs classified")};
}

Outcome check_pipeline(Rng& rng) {
  Tally t;
  // Vertex 0 is central; {1, 2} and {3, 4} are free pairs joined to each other.
  const std::vector<std::pair<int, int>> edges{{0, 1}, {0, 2}, {0, 3}, {0, 4},
                                               {1, 3}, {1, 4}, {2, 3}, {2, 4}};
  auto graph = std::make_shared<const VertexGraph>(std::vector<int>{0, 0, 0, 0, 0}, edges);
  const auto d = join_decompose(graph);
  t.expect(d.gamma0 == std::vector<int>{0} && d.factors.size() == 2, "unexpected decomposition");
  const auto q = gp_pipeline_qm(d, brooks_homogeneous(parse_word("ab", 2)), 2);
  auto random_element = [&] { return normal_form(graph, random_syllables(*graph, 12, rng)); };

  for (int i = 0; i < 100; ++i) {
    const long e = random_int(-20, 20, rng);
    const GPWord z = normal_form(graph, std::vector<Syllable>{{0, e}});
    t.expect(q(z) == Rational(0), "nonzero on the central vertex");
    const GPWord x = random_element();
    t.expect(q(gp_multiply(x, z)) == q(x), "not constant on central cosets");
  }
  const std::vector<std::size_t> swap_factors{1, 0};
  const auto sigma = factor_permutation(d, swap_factors);
  for (int i = 0; i < 100; ++i) {
    const GPWord x = random_element();
    t.expect(q(apply_vertex_map(x, sigma)) == q(x), "not invariant under swapping factors");
  }
  for (long m = -8; m <= 8; ++m) {
    std::vector<Syllable> s;
    for (long i = 0; i < std::abs(m); ++i) {
      if (m > 0) {
        s.push_back({1, 1});
        s.push_back({2, 1});
      } else {
        s.push_back({2, -1});
        s.push_back({1, -1});
      }
    }
    t.expect(q(normal_form(graph, s)) == Rational(m), "value on (ab)^" + std::to_string(m));
  }
  for (int i = 0; i < 100; ++i) {
    const GPWord x = random_element();
    const GPWord y = random_element();
    t.expect(q(gp_multiply(gp_multiply(y, x), gp_invert(y))) == q(x), "not conjugation invariant");
  }
  return {t.ok(), t.summary("H0 200, swap 100, powers -8..8, conjugation 100")};
}

Outcome check_ordering(Rng& rng) {
  Tally t;
  int compared = 0;
  int attempts = 0;
  long strict = 0;
  while (compared < 30 && attempts < 300) {
    ++attempts;
    WordBuilder b(2);
    const int count = random_int(1, 2, rng);
    for (int i = 0; i < count; ++i) {
      const Word u = random_word(2, random_int(1, 2, rng), rng);
      const Word v = random_word(2, random_int(1, 2, rng), rng);
      b.append(commutator(u, v));
    }
    const Word g = std::move(b).build();
    if (g.empty()) continue;
    const NormResult cl = cl_upper(g, 2, 2);
    const NormResult acl = acl_upper(g, AclParams{1, 2, 2});
    if (!cl.finite() || !acl.finite()) continue;
    ++compared;
    strict += acl.value < cl.value;
    t.expect(acl.value <= cl.value, "acl > cl on " + w2s(g));
    t.expect(acl.replays(g) && cl.replays(g), "witness replay on " + w2s(g));
  }
  t.expect(compared == 30, "only " + std::to_string(compared) + " products had both bounds");
  return {t.ok(), t.summary(std::to_string(compared) + " products, acl < cl on " +
                            std::to_string(strict))};
}

struct CheckSpec {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome(Rng&)> run;
};

const std::vector<CheckSpec>& checks() {
  static const std::vector<CheckSpec> all = {
      {1, "ad formula", 10, check_ad_formula},
      {2, "conjugated autocommutator", 10, check_conjugated_autocommutator},
      {3, "homogenisation sandwich and defect gate", 300, check_homogenisation},
      {4, "conjugacy invariance", 10, check_conjugacy_invariance},
      {5, "acl of a basis element", 1, [](Rng&) { return check_transvection_acl(); }},
      {6, "swap witness and sacl of [a,b]", 30, [](Rng&) { return check_swap_witness(); }},
      {7, "transvection witness and sacl of a", 10,
       [](Rng&) { return check_free_factor_witness(); }},
      {8, "Whitehead predicates", 120, [](Rng&) { return check_whitehead(); }},
      {9, "product averaging", 120, check_product_average},
      {10, "finite averaging and norm bounds", 180, check_finite_average},
      {11, "graph product normal forms and classification", 300, check_graph_products},
      {12, "graph product pipeline", 60, check_pipeline},
      {13, "acl below cl", 300, check_ordering},
  };
  return all;
}

}  // namespace

namespace {

struct Suite {
  const char* name;
  const char* alias;
  std::vector<int> checks;
};

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all = {
      {"all", nullptr, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13}},
      {"ad-formula", "lemma23", {1}},
      {"duality", "prop37", {2, 10}},
      {"homogenisation", nullptr, {3, 4}},
      {"witnesses", "lemma63", {5, 6, 7}},
      {"whitehead", nullptr, {8}},
      {"averaging", "section5", {9, 12}},
      {"normalform", nullptr, {11}},
      {"ordering", nullptr, {13}},
  };
  return all;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& s : suites()) out.emplace_back(s.name);
  for (const auto& s : suites()) {
    if (s.alias) out.emplace_back(s.alias);
  }
  return out;
}

std::vector<int> suite_checks(const std::string& suite) {
  for (const auto& s : suites()) {
    if (suite == s.name || (s.alias && suite == s.alias)) return s.checks;
  }
  throw MalformedInput("unknown suite '" + suite + "'");
}

CheckResult run_check(int id, const VerifyConfig& config) {
  const auto& all = checks();
  auto it = std::find_if(all.begin(), all.end(), [&](const CheckSpec& c) { return c.id == id; });
  if (it == all.end()) throw MalformedInput("unknown check " + std::to_string(id));
  // Each check draws from its own stream so results do not depend on which
  // other checks ran.
  Rng rng(config.seed + static_cast<std::uint64_t>(id) * 0x9e3779b97f4a7c15ull);
  CheckResult result;
  result.id = id;
  result.name = it->name;
  result.limit_seconds = it->limit_seconds;
  const auto start = std::chrono::steady_clock::now();
  try {
    const Outcome o = it->run(rng);
    result.correct = o.correct;
    result.detail = o.detail;
  } catch (const std::exception& e) {
    result.correct = false;
    result.detail = std::string("exception: ") + e.what();
  }
  result.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  result.passed = result.correct && result.seconds < result.limit_seconds;
  return result;
}

std::vector<CheckResult> run_suite(const std::string& suite, const VerifyConfig& config) {
  std::vector<CheckResult> out;
  for (int id : suite_checks(suite)) out.push_back(run_check(id, config));
  return out;
}

}  // namespace autqm
