#include <doctest.h>

#include <map>

#include "autqm/errors.hpp"
#include "autqm/graphprod.hpp"
#include "autqm/quasimorphism.hpp"
#include "autqm/random.hpp"
#include "autqm/text.hpp"

using namespace autqm;

namespace {

using GraphPtr = std::shared_ptr<const VertexGraph>;

GraphPtr make(std::vector<int> labels, std::vector<std::pair<int, int>> edges) {
  return std::make_shared<const VertexGraph>(std::move(labels), edges);
}

GPWord nf(const GraphPtr& g, const char* text) { return normal_form(g, parse_syllables(text)); }

std::vector<Syllable> random_raw(int n, int len, Rng& rng) {
  std::vector<Syllable> out;
  for (int i = 0; i < len; ++i) {
    long e = 0;
    while (e == 0) e = random_int(-2, 2, rng);
    out.push_back({random_int(0, n - 1, rng), e});
  }
  return out;
}

}  // namespace

TEST_CASE("graph text format") {
  const auto g = parse_graph("# a path\nvertices 3\nlabel 0 2\nlabel 1 0\nlabel 2 3\nedge 0 1\nedge 1 2\n");
  CHECK(g.size() == 3);
  CHECK(g.label(2) == 3);
  CHECK(g.adjacent(1, 0));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK(parse_graph(format_graph(g)) == g);
  try {
    parse_graph("vertices 2\nedge 0 x\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 8);
  }
  CHECK_THROWS_AS(parse_graph("edge 0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("vertices 2\nedge 0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("vertices 2\nlabel 0 1\n"), ParseError);
}

TEST_CASE("refinement into primary cyclic vertices") {
  const std::vector<AbelianLabel> z6{{0, {6}}};
  const auto r = refine(z6, {});
  CHECK(r.graph.labels() == std::vector<int>{2, 3});
  CHECK(r.graph.adjacent(0, 1));
  const std::vector<AbelianLabel> z{{1, {}}};
  CHECK(refine(z, {}).graph.labels() == std::vector<int>{0});
  const std::vector<AbelianLabel> z2{{2, {}}};
  const auto r2 = refine(z2, {});
  CHECK(r2.graph.labels() == std::vector<int>{0, 0});
  CHECK(r2.graph.adjacent(0, 1));
  // External edges are inherited by every cluster vertex.
  const std::vector<AbelianLabel> two{{0, {6}}, {1, {}}};
  const std::vector<std::pair<int, int>> e{{0, 1}};
  const auto r3 = refine(two, e);
  CHECK(r3.graph.size() == 3);
  for (int v : r3.clusters[0]) CHECK(r3.graph.adjacent(v, r3.clusters[1][0]));
}

TEST_CASE("normal forms") {
  const auto edge = make({0, 0}, {{0, 1}});
  CHECK(nf(edge, "0 0^-1").empty());
  CHECK(format_gpword(nf(edge, "1 0")) == "0^1 1^1");
  const auto path = make({0, 0, 0}, {{0, 1}, {1, 2}});
  // 0 and 2 are the non-adjacent ends.
  CHECK(format_gpword(nf(path, "0 2 0")) == "0^1 2^1 0^1");
  CHECK(format_gpword(nf(path, "0 1 0")) == "0^2 1^1");
  CHECK(format_gpword(nf(path, "0 2 2^-1 0")) == "0^2");
  const auto finite = make({3}, {});
  CHECK(format_gpword(nf(finite, "0^5")) == "0^2");
  CHECK(nf(finite, "0^3").empty());
  CHECK(format_gpword(nf(finite, "0^-1")) == "0^2");
}

TEST_CASE("free and abelian extremes") {
  Rng rng(41);
  // Edgeless with Z labels: normal forms are freely reduced words.
  const auto free3 = make({0, 0, 0}, {});
  // Complete with Z labels: normal forms are exponent-sum vectors.
  const auto abelian = make({0, 0, 0}, {{0, 1}, {0, 2}, {1, 2}});
  for (int i = 0; i < 200; ++i) {
    const auto raw = random_raw(3, random_int(0, 12, rng), rng);
    std::vector<int> letters;
    std::map<int, long> sums;
    for (const auto& s : raw) {
      for (long k = 0; k < std::abs(s.exponent); ++k) {
        letters.push_back(s.exponent > 0 ? s.vertex + 1 : -(s.vertex + 1));
      }
      sums[s.vertex] += s.exponent;
    }
    CHECK(free_factor_word(normal_form(free3, raw)) == Word::reduce(letters, 3));
    std::vector<Syllable> expected;
    for (auto [v, e] : sums) {
      if (e != 0) expected.push_back({v, e});
    }
    CHECK(normal_form(abelian, raw).syllables() == expected);
  }
}

TEST_CASE("group laws") {
  Rng rng(42);
  const auto g = make({0, 2, 3, 0, 4}, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 3}});
  for (int i = 0; i < 200; ++i) {
    const GPWord x = normal_form(g, random_raw(5, 8, rng));
    const GPWord y = normal_form(g, random_raw(5, 8, rng));
    const GPWord z = normal_form(g, random_raw(5, 8, rng));
    CHECK(gp_multiply(gp_multiply(x, y), z) == gp_multiply(x, gp_multiply(y, z)));
    CHECK(gp_multiply(x, gp_invert(x)).empty());
    CHECK(normal_form(g, x.syllables()) == x);
    CHECK(gp_multiply(x, gp_identity(g)) == x);
  }
}

TEST_CASE("join decomposition") {
  const auto complete = make({0, 0, 0}, {{0, 1}, {0, 2}, {1, 2}});
  auto d = join_decompose(complete);
  CHECK(d.gamma0 == std::vector<int>{0, 1, 2});
  CHECK(d.factors.empty());
  d = join_decompose(make({0, 0}, {}));
  CHECK(d.gamma0.empty());
  CHECK(d.factors == std::vector<std::vector<int>>{{0, 1}});
  const auto c4 = make({2, 2, 2, 2}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  d = join_decompose(c4);
  CHECK(d.gamma0.empty());
  CHECK(d.factors == std::vector<std::vector<int>>{{0, 2}, {1, 3}});
  CHECK(d.classes.size() == 1);
  const auto map = compatible_isomorphism(d, 0, 1);
  CHECK(map.size() == 2);
}

TEST_CASE("labelled isomorphism") {
  const VertexGraph a({0, 2, 0}, std::vector<std::pair<int, int>>{{0, 1}});
  const VertexGraph b({2, 0, 0}, std::vector<std::pair<int, int>>{{1, 0}});
  const auto iso = labelled_isomorphism(a, b);
  REQUIRE(iso);
  for (int v = 0; v < 3; ++v) CHECK(a.label(v) == b.label((*iso)[static_cast<std::size_t>(v)]));
  const VertexGraph c({2, 2, 0}, std::vector<std::pair<int, int>>{{0, 1}});
  CHECK_FALSE(labelled_isomorphism(a, c));
}

TEST_CASE("infinite dihedral factors and classification") {
  const VertexGraph pair2({2, 2}, std::vector<std::pair<int, int>>{});
  CHECK(is_dinfty(pair2, std::vector<int>{0, 1}));
  const VertexGraph pair0({0, 0}, std::vector<std::pair<int, int>>{});
  CHECK_FALSE(is_dinfty(pair0, std::vector<int>{0, 1}));
  const VertexGraph three({2, 2, 2}, std::vector<std::pair<int, int>>{});
  CHECK_FALSE(is_dinfty(three, std::vector<int>{0, 1, 2}));

  CHECK(classify_virtually_abelian(*make({2, 2, 2, 2}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})));
  CHECK_FALSE(classify_virtually_abelian(pair0));
  CHECK(classify_virtually_abelian(*make({0, 3, 5}, {{0, 1}, {0, 2}, {1, 2}})));
  CHECK_THROWS_AS(classify_virtually_abelian(VertexGraph({6}, std::vector<std::pair<int, int>>{})),
                  MalformedInput);
}

TEST_CASE("killing the central part") {
  const auto g = make({0, 0, 0, 0, 0},
                      {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
  const auto d = join_decompose(g);
  const auto parts = project_kill_h0(nf(g, "0^3"), d);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].empty());
  CHECK(parts[1].empty());
  const auto p = project_kill_h0(nf(g, "1 0 3^2 2^-1"), d);
  CHECK(format_gpword(p[0]) == "0^1 1^-1");
  CHECK(format_gpword(p[1]) == "0^2");

  const auto q = gp_pipeline_qm(d, brooks_homogeneous(parse_word("ab", 2)), 2);
  CHECK(q(nf(g, "0^5")) == Rational(0));
  CHECK(q(nf(g, "1 2 1 2")) == Rational(2));
  CHECK(q(nf(g, "3 4")) == Rational(1));
  CHECK(q(nf(g, "1 2 3 4")) == Rational(2));
  CHECK(*q.defect_bound() == Rational(2) * *brooks_homogeneous(parse_word("ab", 2)).defect_bound());

  // Two Z/2 pairs: the factor group is infinite dihedral, so f vanishes.
  const auto dd = make({0, 2, 2, 2, 2}, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
  const auto qd = gp_pipeline_qm(join_decompose(dd), brooks_homogeneous(parse_word("ab", 2)), 2);
  CHECK(qd.vanishing_factor());
  CHECK(qd(nf(dd, "1 2 1 2")) == Rational(0));
}
