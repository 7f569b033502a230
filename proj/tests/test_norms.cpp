#include <doctest.h>

#include <map>
#include <set>

#include "autqm/automorphism.hpp"
#include "autqm/errors.hpp"
#include "autqm/norms.hpp"
#include "autqm/quasimorphism.hpp"
#include "autqm/random.hpp"
#include "autqm/text.hpp"
#include "autqm/whitehead.hpp"

using namespace autqm;

namespace {

Word w2(const char* s) { return parse_word(s, 2); }

// Distances from the identity by one-sided breadth-first search.
std::map<Word, long> ball(std::span<const Word> s, long radius) {
  std::map<Word, long> dist{{Word(s.front().rank()), 0}};
  std::vector<Word> frontier{Word(s.front().rank())};
  for (long r = 1; r <= radius; ++r) {
    std::vector<Word> next;
    for (const auto& x : frontier) {
      for (const auto& g : s) {
        const Word y = x * g;
        if (dist.emplace(y, r).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return dist;
}

}  // namespace

TEST_CASE("orbit closure") {
  const std::vector<Word> s{w2("a")};
  const auto closed = orbit_closure(s, signed_permutations(2));
  CHECK(std::set<Word>(closed.begin(), closed.end()) ==
        std::set<Word>{w2("a"), w2("A"), w2("b"), w2("B")});
  const std::vector<Automorphism> id{Automorphism::identity(2)};
  CHECK(orbit_closure(s, id) == s);
}

TEST_CASE("bfs norm against one-sided search") {
  const std::vector<Word> s{w2("a"), w2("b")};
  const auto closure = orbit_closure(s, signed_permutations(2));
  const auto r = bfs_norm(w2("abAB"), closure, 10);
  CHECK(r.finite());
  CHECK(r.value == 4);
  CHECK(r.replays(w2("abAB"), closure));

  const std::vector<Word> odd{w2("ab"), w2("aB"), w2("bb"), w2("A")};
  const auto dist = ball(odd, 5);
  for (const auto& [g, d] : dist) {
    const auto n = bfs_norm(g, odd, 5);
    REQUIRE(n.finite());
    CHECK(n.value == d);
    CHECK(n.replays(g, odd));
  }
  // Something just outside the ball.
  Rng rng(31);
  for (int i = 0; i < 50; ++i) {
    const Word g = random_word_upto(2, 8, rng);
    const auto n = bfs_norm(g, odd, 5);
    CHECK(n.finite() == dist.contains(g));
    if (!n.finite()) CHECK(n.status == NormStatus::GreaterThanCutoff);
  }
  // Only a's: b is unreachable, and the search says so.
  const std::vector<Word> only_a{w2("a"), w2("A")};
  CHECK(bfs_norm(w2("b"), only_a, 6).status != NormStatus::Finite);
  CHECK_THROWS_AS(bfs_norm(w2("abababab"), closure, 100, 50), CutoffExceeded);
}

TEST_CASE("autocommutator length witnesses") {
  const auto r = acl_upper(w2("a"));
  REQUIRE(r.finite());
  CHECK(r.value == 1);
  CHECK(r.replays(w2("a")));
  CHECK(acl_upper(Word(2)).value == 0);
  const Word c = w2("abAB");
  for (long n = 1; n <= 8; ++n) {
    const auto e = acl_upper(power(c, 2 * n));
    REQUIRE(e.finite());
    CHECK(e.value == 1);
    CHECK(e.replays(power(c, 2 * n)));
  }
}

TEST_CASE("transvection witness") {
  const auto t = transvection_witness(w2("a"), 2, 3);
  CHECK(t.phi(w2("b")) == w2("aaab"));
  CHECK(autocommutator(t.phi, t.x) == w2("aaa"));
  const auto z = transvection_witness(w2("a"), 2, 0);
  CHECK(z.phi.is_identity());
  const Word ab = parse_word("ab", 3);
  const auto t3 = transvection_witness(ab, 3, 2);
  CHECK(autocommutator(t3.phi, t3.x) == power(ab, 2));
  CHECK_THROWS_AS(transvection_witness(w2("ab"), 2, 1), MalformedInput);
}

TEST_CASE("stable estimates") {
  const auto c = sacl_estimate(w2("abAB"), 8);
  REQUIRE(c.upper);
  CHECK(*c.upper <= Rational(1, 8));
  const auto a = sacl_estimate(w2("a"), 8);
  REQUIRE(a.upper);
  CHECK(*a.upper <= Rational(1, 8));
  const auto e = sacl_estimate(Word(2), 4);
  REQUIRE(e.upper);
  CHECK(*e.upper == Rational(0));
  CHECK(e.lower == Rational(0));

  // A finite-group average only bounds the restricted norm.
  const std::vector<Quasimorphism> family{
      finite_average(brooks_homogeneous(w2("aaba")), signed_permutations(2))};
  const auto r = sacl_estimate(w2("aabaBBB"), 2, {}, family);
  CHECK(r.lower == Rational(0));
  CHECK(r.restricted_lower > Rational(0));
}

TEST_CASE("commutator length") {
  const auto r = cl_upper(w2("abAB"), 1, 1);
  REQUIRE(r.finite());
  CHECK(r.value == 1);
  CHECK(r.replays(w2("abAB")));
  const Word two = w2("abAB") * w2("aabAAB");
  const auto q = cl_upper(two, 2, 2);
  REQUIRE(q.finite());
  CHECK(q.value <= 2);
  CHECK(q.replays(two));
  CHECK(cl_upper(w2("a"), 2, 2).status != NormStatus::Finite);
}

TEST_CASE("lower bounds") {
  const auto f = brooks_homogeneous(w2("ab"));
  const Word c = w2("abAB");
  CHECK(bavard_bound(f, c) == Rational(1) / (Rational(2) * *f.defect_bound()));
  const std::vector<Word> s{w2("a"), w2("b")};
  CHECK(prop32_bound(f, s, w2("aa")) == Rational(0));
  // f vanishes on both generators, so the denominator is D alone.
  CHECK(prop32_bound(f, s, c) == Rational(1) / *f.defect_bound());
  CHECK_THROWS_AS(bavard_bound(zero_quasimorphism(2), c), Error);
}
