#include <doctest.h>

#include <set>

#include "autqm/automorphism.hpp"
#include "autqm/errors.hpp"
#include "autqm/random.hpp"
#include "autqm/text.hpp"

using namespace autqm;

namespace {

Word w2(const char* s) { return parse_word(s, 2); }

// Substitute images letter by letter and reduce.
Word substitute(const std::vector<Word>& images, const Word& w) {
  WordBuilder b(images.front().rank());
  for (int l : w.letters()) {
    const Word& img = images[static_cast<std::size_t>(std::abs(l) - 1)];
    if (l > 0) {
      b.append(img);
    } else {
      b.append_inverse(img);
    }
  }
  return std::move(b).build();
}

}  // namespace

TEST_CASE("apply") {
  const Automorphism s = swap(2, 1, 2);
  CHECK(s(w2("abAB")) == w2("baBA"));
  CHECK(Automorphism::identity(2)(w2("abAB")) == w2("abAB"));
  CHECK(transvection(2, 2, 1, Side::Left)(w2("b")) == w2("ab"));
  CHECK(transvection(2, 2, -1, Side::Right)(w2("b")) == w2("bA"));

  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const Automorphism phi = random_composite(3, random_int(0, 6, rng), rng);
    const Word g = random_word_upto(3, 12, rng);
    CHECK(phi(g) == substitute(phi.images(), g));
    CHECK(inverse(phi)(phi(g)) == g);
  }
}

TEST_CASE("compose, inverse and equality") {
  Rng rng(12);
  for (int i = 0; i < 200; ++i) {
    const Automorphism phi = random_composite(2, random_int(0, 5, rng), rng);
    const Automorphism psi = random_composite(2, random_int(0, 5, rng), rng);
    const Word g = random_word_upto(2, 10, rng);
    CHECK(compose(phi, psi)(g) == phi(psi(g)));
    CHECK(compose(phi, inverse(phi)).is_identity());
    // The trace alone rebuilds the same automorphism.
    CHECK(equal(Automorphism::from_trace(phi.trace(), 2), phi));
    CHECK(equal(parse_automorphism(format_trace(phi), 2), phi));
  }
  CHECK(equal(Automorphism::identity(2), Automorphism::identity(2)));
  CHECK_FALSE(equal(swap(2, 1, 2), Automorphism::identity(2)));
  CHECK_THROWS_AS(compose(swap(2, 1, 2), swap(3, 1, 2)), RankMismatch);
}

TEST_CASE("inner automorphisms and the ad formula") {
  const Word g = w2("abA");
  const Word x = w2("bbA");
  CHECK(ad(g)(x) == g * x * invert(g));
  Rng rng(13);
  for (int i = 0; i < 100; ++i) {
    const Automorphism phi = random_composite(3, random_int(1, 6, rng), rng);
    const Word h = random_word_upto(3, 10, rng);
    CHECK(equal(compose(phi, ad(h), inverse(phi)), ad(phi(h))));
  }
}

TEST_CASE("autocommutators") {
  CHECK(autocommutator(transvection(2, 2, 1, Side::Left), w2("b")) == w2("a"));
  CHECK(autocommutator(Automorphism::identity(2), w2("abbA")).empty());
  const Word c = w2("abAB");
  for (long n = 1; n <= 8; ++n) {
    CHECK(autocommutator(swap(2, 1, 2), power(c, n)) == power(c, -2 * n));
  }
  Rng rng(14);
  for (int i = 0; i < 100; ++i) {
    const Automorphism phi = random_composite(2, random_int(1, 5, rng), rng);
    const Automorphism psi = random_composite(2, random_int(1, 5, rng), rng);
    const Word g = random_word_upto(2, 10, rng);
    CHECK(autocommutator(phi, g) == phi(g) * invert(g));
    CHECK(psi(autocommutator(phi, g)) ==
          autocommutator(compose(psi, phi, inverse(psi)), psi(g)));
  }
}

TEST_CASE("achirality search") {
  auto r = achirality_search(w2("abAB"), 1, 1);
  REQUIRE(r);
  CHECK(r->k == 1);
  CHECK(r->phi(w2("abAB")) == w2("baBA"));
  r = achirality_search(w2("a"), 1, 1);
  REQUIRE(r);
  CHECK(r->phi(w2("a")) == w2("A"));
  CHECK_FALSE(achirality_search(w2("abAB"), 2, 0));
}

TEST_CASE("generators and enumeration") {
  const auto gens = elementary_generators(2);
  std::set<std::vector<Word>> tables;
  for (const auto& phi : enumerate_composites(2, 1)) tables.insert(phi.images());
  CHECK(tables.size() == enumerate_composites(2, 1).size());
  CHECK(!gens.empty());
}

TEST_CASE("token syntax") {
  CHECK(parse_automorphism("t:b=ab", 2).images() == std::vector<Word>{w2("a"), w2("ab")});
  CHECK(parse_automorphism("p:ba", 2).images() == std::vector<Word>{w2("b"), w2("a")});
  CHECK(parse_automorphism("i:a", 2).images() == std::vector<Word>{w2("A"), w2("b")});
  CHECK(parse_automorphism("c:a", 2).images() == std::vector<Word>{w2("a"), w2("abA")});
  CHECK(parse_automorphism("id", 2).is_identity());
  // Rightmost factor acts first.
  const Automorphism chain = parse_automorphism("p:ba*t:b=ab", 2);
  CHECK(chain(w2("b")) == w2("ba"));
  CHECK_THROWS_AS(parse_automorphism("t:b=bb", 2), Error);
  CHECK_THROWS_AS(parse_automorphism("q:a", 2), Error);
}
