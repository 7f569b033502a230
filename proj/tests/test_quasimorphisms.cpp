#include <doctest.h>

#include "autqm/automorphism.hpp"
#include "autqm/errors.hpp"
#include "autqm/quasimorphism.hpp"
#include "autqm/random.hpp"
#include "autqm/text.hpp"
#include "autqm/whitehead.hpp"

using namespace autqm;

namespace {

Word w2(const char* s) { return parse_word(s, 2); }

long count_in(const Word& g, const Word& w) {
  long n = 0;
  for (std::size_t i = 0; i + w.size() <= g.size(); ++i) {
    bool match = true;
    for (std::size_t j = 0; j < w.size() && match; ++j) match = g[i + j] == w[j];
    n += match;
  }
  return n;
}

// Counts over one period of the periodic word built from the cyclic core.
long periodic_count(const Word& core, const Word& w) {
  if (core.empty()) return 0;
  std::vector<int> unrolled;
  const std::size_t reps = w.size() / core.size() + 2;
  for (std::size_t r = 0; r < reps; ++r) {
    unrolled.insert(unrolled.end(), core.letters().begin(), core.letters().end());
  }
  long n = 0;
  for (std::size_t p = 0; p < core.size(); ++p) {
    bool match = true;
    for (std::size_t j = 0; j < w.size() && match; ++j) match = unrolled[p + j] == w[j];
    n += match;
  }
  return n;
}

}  // namespace

TEST_CASE("brooks counting") {
  CHECK(brooks(w2("ab"))(w2("abab")) == Rational(2));
  CHECK(brooks(w2("a"))(w2("AAA")) == Rational(-3));
  CHECK(brooks(w2("ab"))(Word(2)) == Rational(0));
  CHECK(brooks(w2("aa"))(w2("aaa")) == Rational(2));
  CHECK_THROWS_AS(brooks(Word(2)), Error);

  Rng rng(21);
  for (int i = 0; i < 200; ++i) {
    const Word w = random_word(2, random_int(1, 4, rng), rng);
    const Word g = random_word_upto(2, 14, rng);
    CHECK(brooks(w)(g) == Rational(count_in(g, w) - count_in(g, invert(w))));
    const Word core = cyclic_reduce(g).core.word();
    CHECK(brooks_homogeneous(w)(g) ==
          Rational(periodic_count(core, w) - periodic_count(core, invert(w))));
  }
}

TEST_CASE("homogeneous values") {
  const auto f = brooks_homogeneous(w2("ab"));
  CHECK(f(w2("abAB")) == Rational(1));
  CHECK(f(w2("a")) == Rational(0));
  CHECK(f(Word(2)) == Rational(0));
  CHECK(f.homogeneous());
  Rng rng(22);
  for (int i = 0; i < 100; ++i) {
    const Word g = random_word_upto(2, 10, rng);
    for (long n : {2L, 3L, -1L, -4L}) CHECK(f(power(g, n)) == Rational(n) * f(g));
  }
}

TEST_CASE("numeric homogenisation") {
  const auto f = brooks(w2("ab"));
  const Word c = w2("abAB");
  const auto est = homogenise_numeric(f, c, 64);
  CHECK(abs(est.estimate - Rational(1)) <= *f.defect_bound() / 64);
  CHECK(est.error_bound == *f.defect_bound() / 64);
  const auto e1 = homogenise_numeric(brooks(w2("a")), w2("a"), 5);
  CHECK(e1.estimate == Rational(1));
  CHECK(homogenise_numeric(f, Word(2), 8).estimate == Rational(0));
}

TEST_CASE("defect enumeration") {
  CHECK(defect_enumerate(brooks(w2("a")), 5).value == Rational(0));
  CHECK(defect_enumerate(brooks(w2("ab")), 0).value == Rational(0));
  for (const auto& w : enumerate_words(2, 3)) {
    if (w.empty()) continue;
    const auto f = brooks(w);
    for (int l : {2, 3, 4}) {
      const auto local = defect_enumerate(f, l);
      const auto brute = defect_enumerate_brute_force(f, l);
      CHECK(local.value == brute.value);
      CHECK(local.g == brute.g);
      CHECK(local.h == brute.h);
      CHECK(abs(f(local.g) + f(local.h) - f(local.g * local.h)) == local.value);
      CHECK(local.value <= *f.defect_bound());
    }
  }
  const auto h = brooks_homogeneous(w2("ab"));
  const auto hc = defect_enumerate(h, 3);
  CHECK(hc.value == defect_enumerate_brute_force(h, 3).value);
  CHECK(declared_defect(h).type == DefectCertificate::BoundType::DeclaredUpper);
}

TEST_CASE("pullback") {
  const auto f = brooks_homogeneous(w2("a"));
  const auto hom = Homomorphism::from_images(
      3, {parse_word("a", 2), parse_word("b", 2), Word(2)});
  const auto p = pullback(f, hom);
  CHECK(p.rank() == 3);
  CHECK(p(parse_word("c", 3)) == Rational(0));
  CHECK(p(parse_word("a", 3)) == Rational(1));
  CHECK(p.defect_bound() == f.defect_bound());

  Rng rng(23);
  const Automorphism phi = random_composite(2, 4, rng);
  const auto q = pullback(brooks(w2("ab")), Homomorphism::from_automorphism(phi));
  for (int i = 0; i < 50; ++i) {
    const Word g = random_word_upto(2, 10, rng);
    CHECK(q(g) == brooks(w2("ab"))(phi(g)));
  }
}

TEST_CASE("finite averaging") {
  const auto group = signed_permutations(2);
  const auto base = brooks_homogeneous(w2("aaba"));
  const std::vector<Automorphism> trivial{Automorphism::identity(2)};
  const auto same = finite_average(base, trivial);
  const auto avg = finite_average(base, group);
  Rng rng(24);
  std::vector<Word> samples;
  for (int i = 0; i < 100; ++i) samples.push_back(random_word_upto(2, 12, rng));
  for (const auto& g : samples) {
    CHECK(same(g) == base(g));
    Rational sum(0);
    for (const auto& phi : group) sum += base(phi(g));
    CHECK(avg(g) == sum / 8);
  }
  CHECK(check_invariance(avg, group, samples).ok());
  CHECK(avg(w2("aabaBBB")) == Rational(1, 8));
  // Pattern ab averages to zero: reversal flips the sign and signed
  // permutations cannot tell a short word from its reverse.
  const auto zero = finite_average(brooks_homogeneous(w2("ab")), group);
  for (const auto& g : samples) CHECK(zero(g) == Rational(0));

  const std::vector<Automorphism> not_group{swap(2, 1, 2), inversion(2, 1)};
  CHECK_THROWS_AS(finite_average(base, not_group), Error);
}

TEST_CASE("invariance report") {
  const auto f = brooks_homogeneous(w2("ab"));
  const std::vector<Automorphism> inner{ad(w2("ab")), ad(w2("B"))};
  const std::vector<Word> samples{w2("abAB"), w2("aab"), w2("bAbb")};
  CHECK(check_invariance(f, inner, samples).ok());
  const std::vector<Automorphism> sw{swap(2, 1, 2)};
  const auto report = check_invariance(f, sw, samples);
  CHECK_FALSE(report.ok());
  CHECK(report.violations.front().g == w2("abAB"));
}

TEST_CASE("linear combinations") {
  const auto f = brooks(w2("ab"));
  const auto g = brooks_homogeneous(w2("a"));
  const auto lc = linear_combination(2, {{Rational(2), f}, {Rational(-1, 3), g}});
  CHECK(lc(w2("abab")) == Rational(4) - Rational(2, 3));
  CHECK(lc(w2("aaa")) == Rational(-1));
  CHECK(*lc.defect_bound() == Rational(2) * *f.defect_bound() + *g.defect_bound() / 3);
  CHECK_FALSE(lc.homogeneous());
  CHECK(zero_quasimorphism(2)(w2("ab")) == Rational(0));
  CHECK(homogenise(f)(w2("abAB")) == Rational(1));
}

TEST_CASE("product average") {
  const auto f = brooks_homogeneous(w2("ab"));
  const auto one = product_average(f, 1, 1);
  Rng rng(25);
  for (int i = 0; i < 50; ++i) {
    const Word g = random_word_upto(2, 10, rng);
    const std::vector<Word> t{g};
    CHECK(one(t) == f(g));
  }
  const auto p = product_average(f, 2, 3);
  const std::vector<Word> t{w2("abAB"), w2("ab"), w2("abab")};
  // Sum over the first k coordinates only.
  CHECK(p(t) == Rational(2));
  const std::vector<Word> swapped{w2("ab"), w2("abAB"), w2("abab")};
  CHECK(p(swapped) == p(t));
  CHECK(*p.defect_bound() == Rational(2) * *f.defect_bound());
  CHECK_THROWS_AS(product_average(f, 3, 2), Error);
}

TEST_CASE("antisymmetry and idempotent averaging") {
  const auto group = signed_permutations(2);
  const auto avg = finite_average(brooks_homogeneous(w2("aaba")), group);
  const auto twice = finite_average(avg, group);
  Rng rng(26);
  for (int i = 0; i < 100; ++i) {
    const Word w = random_word(2, random_int(1, 4, rng), rng);
    const Word g = random_word_upto(2, 12, rng);
    CHECK(brooks_homogeneous(w)(invert(g)) == -brooks_homogeneous(w)(g));
    CHECK(avg(invert(g)) == -avg(g));
    CHECK(twice(g) == avg(g));
  }
}
