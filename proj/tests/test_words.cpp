#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "autqm/errors.hpp"
#include "autqm/random.hpp"
#include "autqm/text.hpp"
#include "autqm/word.hpp"

using namespace autqm;

namespace {

Word w2(const char* s) { return parse_word(s, 2); }

// Concatenate, then cancel adjacent inverse pairs until none remain.
std::vector<int> naive_reduce(std::vector<int> v) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
      if (v[i] == -v[i + 1]) {
        v.erase(v.begin() + static_cast<long>(i), v.begin() + static_cast<long>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  return v;
}

std::vector<int> raw(const Word& w) { return {w.letters().begin(), w.letters().end()}; }

}  // namespace

TEST_CASE("reduce") {
  CHECK(Word::reduce(std::vector<int>{1, -1}, 2).empty());
  CHECK(raw(Word::reduce(std::vector<int>{1, 2, -2, -1, 1}, 2)) == std::vector<int>{1});
  CHECK(raw(Word::reduce(std::vector<int>{1, 2, 1}, 2)) == std::vector<int>{1, 2, 1});
  CHECK_THROWS_AS(Word::reduce(std::vector<int>{3}, 2), MalformedInput);
  CHECK_THROWS_AS(Word::reduce(std::vector<int>{0}, 2), MalformedInput);
}

TEST_CASE("multiply and invert against concatenation") {
  CHECK((w2("ab") * w2("BA")).empty());
  CHECK(format_word(w2("ab") * w2("ba")) == "abba");
  CHECK((w2("abA") * w2("aBA")).empty());
  CHECK(format_word(invert(w2("ab"))) == "BA");
  CHECK(format_word(invert(w2("abAB"))) == "baBA");
  CHECK(invert(Word(2)).empty());
  CHECK_THROWS_AS(w2("a") * parse_word("a", 3), RankMismatch);

  Rng rng(7);
  for (int i = 0; i < 300; ++i) {
    const Word u = random_word_upto(3, 10, rng);
    const Word v = random_word_upto(3, 10, rng);
    auto cat = raw(u);
    auto rv = raw(v);
    cat.insert(cat.end(), rv.begin(), rv.end());
    CHECK(raw(u * v) == naive_reduce(cat));
    auto rev = raw(u);
    std::reverse(rev.begin(), rev.end());
    for (int& l : rev) l = -l;
    CHECK(raw(invert(u)) == rev);
  }
}

TEST_CASE("power") {
  CHECK(format_word(power(w2("ab"), 3)) == "ababab");
  CHECK(format_word(power(w2("abA"), 2)) == "abbA");
  CHECK(format_word(power(w2("a"), -2)) == "AA");
  CHECK(power(w2("ab"), 0).empty());
  Rng rng(8);
  for (int i = 0; i < 50; ++i) {
    const Word u = random_word_upto(2, 6, rng);
    Word acc(2);
    for (int k = 1; k <= 5; ++k) {
      acc = acc * u;
      CHECK(power(u, k) == acc);
      CHECK(power(u, -k) == invert(acc));
    }
  }
}

TEST_CASE("cyclic reduction and conjugacy") {
  auto r = cyclic_reduce(w2("abA"));
  CHECK(format_word(r.core) == "b");
  CHECK(format_word(r.conjugator) == "a");
  r = cyclic_reduce(w2("abAB"));
  CHECK(r.conjugator.empty());
  r = cyclic_reduce(w2("baaB"));
  CHECK(format_word(r.core) == "aa");
  CHECK(format_word(r.conjugator) == "b");

  CHECK(is_conjugate(w2("abA"), w2("b")));
  CHECK(is_conjugate(w2("ab"), w2("ba")));
  CHECK_FALSE(is_conjugate(w2("aa"), w2("bb")));

  Rng rng(9);
  for (int i = 0; i < 300; ++i) {
    const Word u = random_word_upto(3, 12, rng);
    const auto c = cyclic_reduce(u);
    CHECK(c.conjugator * c.core.word() * invert(c.conjugator) == u);
    CHECK(is_cyclically_reduced(c.core.word()));
    // The stored core is the least rotation of itself.
    const auto& core = c.core.word();
    for (std::size_t s = 0; s < core.size(); ++s) {
      std::vector<int> rot(core.letters().begin() + static_cast<long>(s), core.letters().end());
      rot.insert(rot.end(), core.letters().begin(), core.letters().begin() + static_cast<long>(s));
      CHECK(core <= Word::reduce(rot, 3));
    }
    const Word t = random_word_upto(3, 6, rng);
    CHECK(is_conjugate(u, t * u * invert(t)));
  }
}

TEST_CASE("root decomposition") {
  const auto r = root_decomposition(w2("bababB"));
  CHECK(r.exponent == 2);
  CHECK(r.conjugator * power(r.root, r.exponent) * invert(r.conjugator) == w2("bababB"));
}

TEST_CASE("enumeration counts") {
  CHECK(count_words(2, 0) == 1);
  CHECK(count_words(2, 3) == 4 * 3 * 3);
  const auto all = enumerate_words(2, 4);
  CHECK(all.size() == 1 + 4 + 12 + 36 + 108);
  CHECK(std::set<Word>(all.begin(), all.end()).size() == all.size());
  CHECK(std::is_sorted(all.begin(), all.end()));
}

TEST_CASE("text syntax") {
  CHECK(format_word(parse_word("1", 2)) == "1");
  CHECK(parse_word("", 2).empty());
  CHECK(format_word(parse_word("abA", 2)) == "abA");
  CHECK_THROWS_AS(parse_word("abc", 2), Error);
  CHECK_THROWS_AS(parse_word("a?", 2), Error);
}
