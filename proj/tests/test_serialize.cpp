#include <doctest.h>

#include "autqm/errors.hpp"
#include "autqm/random.hpp"
#include "autqm/serialize.hpp"
#include "autqm/text.hpp"
#include "autqm/whitehead.hpp"

using namespace autqm;

namespace {

Word w2(const char* s) { return parse_word(s, 2); }

}  // namespace

TEST_CASE("rationals print in lowest terms") {
  CHECK(to_json(Rational(6, 4)).get<std::string>() == "3/2");
  CHECK(to_json(Rational(-3)).get<std::string>() == "-3");
  CHECK(rational_from_json(Json("3/2")) == Rational(3, 2));
  CHECK(rational_from_json(Json(5)) == Rational(5));
}

TEST_CASE("automorphism round trip") {
  Rng rng(51);
  for (int i = 0; i < 50; ++i) {
    const Automorphism phi = random_composite(3, random_int(0, 6, rng), rng);
    const Json j = to_json(phi);
    CHECK(equal(automorphism_from_json(j), phi));
    CHECK(automorphism_from_json(Json::parse(j.dump())).images() == phi.images());
  }
  Json bad = to_json(swap(2, 1, 2));
  bad["images"] = Json::array({"a", "b"});
  CHECK_THROWS_AS(automorphism_from_json(bad), MalformedInput);
}

TEST_CASE("quasimorphism provenance round trip") {
  const auto group = signed_permutations(2);
  const auto base = brooks_homogeneous(w2("aaba"));
  const auto avg = finite_average(base, group);
  const auto pb = pullback(brooks(w2("ab")),
                           Homomorphism::from_images(3, {w2("a"), w2("b"), Word(2)}));
  const auto lc = linear_combination(2, {{Rational(1, 2), brooks(w2("ab"))}, {Rational(3), avg}});
  const auto asserted = assert_aut_invariant(zero_quasimorphism(2));
  Rng rng(52);
  for (const auto& f : {base, avg, lc, asserted, brooks(w2("aB"))}) {
    const Json j = to_json(f);
    const auto g = quasimorphism_from_json(Json::parse(j.dump()));
    CHECK(to_json(g) == j);
    CHECK(g.defect_bound() == f.defect_bound());
    CHECK(g.homogeneous() == f.homogeneous());
    CHECK(g.aut_invariant_asserted() == f.aut_invariant_asserted());
    for (int i = 0; i < 30; ++i) {
      const Word x = random_word_upto(2, 12, rng);
      CHECK(g(x) == f(x));
    }
  }
  const auto pb2 = quasimorphism_from_json(to_json(pb));
  CHECK(pb2(parse_word("abc", 3)) == pb(parse_word("abc", 3)));

  Json tampered = to_json(base);
  tampered["defect_bound"] = "1";
  CHECK_NOTHROW(quasimorphism_from_json(tampered));
  Json wrong = to_json(avg);
  wrong["defect_bound"] = "1";
  CHECK_THROWS_AS(quasimorphism_from_json(wrong), MalformedInput);
  Json unknown = to_json(base);
  unknown["kind"] = "mystery";
  CHECK_THROWS_AS(quasimorphism_from_json(unknown), MalformedInput);
}

TEST_CASE("product average round trip") {
  const auto p = product_average(brooks_homogeneous(w2("ab")), 2, 3);
  const auto q = product_quasimorphism_from_json(to_json(p));
  const std::vector<Word> t{w2("abAB"), w2("ab"), w2("b")};
  CHECK(q(t) == p(t));
  CHECK(q.defect_bound() == p.defect_bound());
}

TEST_CASE("norm records") {
  const Json r = to_json(acl_upper(w2("a")));
  CHECK(r["value"] == 1);
  CHECK(r["witness"][0]["kind"] == "autocommutator");
  CHECK(r["witness"][0]["phi"]["trace"] == "t:b=ab");
  CHECK(r["witness"][0]["h"] == "b");
  const std::vector<Word> only_a{w2("a")};
  const Json far = to_json(bfs_norm(w2("aaaa"), only_a, 2));
  CHECK(far["value"] == "greater-than-cutoff(2)");
  const Json s = to_json(sacl_estimate(w2("abAB"), 4));
  CHECK(s["trace"].size() == 4);
  CHECK(s["upper"] == "1/4");
}
