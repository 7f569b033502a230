#include <doctest.h>

#include <set>

#include "autqm/automorphism.hpp"
#include "autqm/errors.hpp"
#include "autqm/quasimorphism.hpp"
#include "autqm/text.hpp"
#include "autqm/whitehead.hpp"

using namespace autqm;

namespace {

Word w2(const char* s) { return parse_word(s, 2); }

// Breadth-first search over all Whitehead images, keeping cyclic words no
// longer than the start. Returns the minimal length seen.
std::size_t orbit_min_length(const Word& w) {
  const auto autos = whitehead_autos(w.rank());
  std::set<CyclicWord> seen{conjugacy_class(w)};
  std::vector<CyclicWord> queue{conjugacy_class(w)};
  std::size_t best = queue.front().size();
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& phi : autos) {
      CyclicWord next = conjugacy_class(phi(queue[i].word()));
      if (next.size() > w.size() || !seen.insert(next).second) continue;
      best = std::min(best, next.size());
      queue.push_back(next);
    }
  }
  return best;
}

}  // namespace

TEST_CASE("whitehead automorphisms") {
  CHECK(signed_permutations(2).size() == 8);
  CHECK(signed_permutations(3).size() == 48);
  CHECK(is_group(signed_permutations(2)));
}

TEST_CASE("minimize") {
  auto m = minimize(w2("abb"));
  CHECK(m.min_word.size() == 1);
  Word cur = w2("abb");
  for (const auto& step : m.trace) {
    CHECK(conjugacy_class(step.phi(step.before)) == conjugacy_class(step.after));
    cur = step.after;
  }
  CHECK(conjugacy_class(cur) == conjugacy_class(m.min_word));
  CHECK(minimize(w2("abAB")).min_word.size() == 4);
  CHECK(minimize(w2("a")).min_word == w2("a"));
  for (const auto& w : enumerate_words(2, 5)) {
    if (w.empty()) continue;
    CHECK(minimize(w).min_word.size() == orbit_min_length(w));
  }
}

TEST_CASE("minimal orbit level") {
  const auto level_a = min_orbit_level(w2("a"));
  CHECK(level_a.words.size() == 4);
  const auto level_c = min_orbit_level(w2("abAB"));
  std::set<CyclicWord> words(level_c.words.begin(), level_c.words.end());
  CHECK(words.contains(conjugacy_class(w2("abAB"))));
  CHECK(words.contains(conjugacy_class(w2("baBA"))));
  for (const auto& cw : level_c.words) CHECK(cw.size() == 4);
  for (const auto& cw : min_orbit_level(w2("aabb")).words) CHECK(cw.size() == 4);
}

TEST_CASE("primitivity and free factors") {
  CHECK(is_primitive(w2("a")));
  CHECK(is_primitive(w2("abb")));
  CHECK_FALSE(is_primitive(w2("abAB")));
  CHECK_FALSE(is_primitive(w2("aa")));
  CHECK_THROWS_AS(is_primitive(Word(2)), Error);
  CHECK(in_proper_free_factor(w2("b")));
  CHECK_FALSE(in_proper_free_factor(w2("abAB")));
  CHECK(in_proper_free_factor(parse_word("aab", 3)));
  CHECK(in_proper_free_factor(w2("aa")));
  CHECK_FALSE(in_proper_free_factor(w2("aabb")));
}

TEST_CASE("whitehead graph") {
  const auto c = whitehead_graph(w2("abAB"));
  CHECK(c.edges.size() == 4);
  CHECK(c.diskbusting());
  const auto sq = whitehead_graph(w2("aa"));
  CHECK(sq.edges.size() == 2);
  CHECK_FALSE(sq.connected);
  // Cyclic word ab: adjacencies a.b and b.a give edges {A,b} and {B,a}.
  const auto ab = whitehead_graph(w2("ab"));
  CHECK(ab.edges.size() == 2);
  CHECK_FALSE(ab.connected);
  CHECK_THROWS_AS(whitehead_graph(w2("abA")), Error);
}
