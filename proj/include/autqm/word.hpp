#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace autqm {

/// Signed generator index: `i` is the i-th basis element (1-based), `-i` its
/// inverse. Zero is never a valid letter.
using Letter = int;

/// Position of a letter in the total order 1 < -1 < 2 < -2 < ...
constexpr int letter_key(Letter l) noexcept {
  return l > 0 ? 2 * l - 1 : -2 * l;
}

/// Inverse of `letter_key`.
constexpr Letter letter_from_key(int key) noexcept {
  return key % 2 == 1 ? (key + 1) / 2 : -(key / 2);
}

/// Freely reduced word in the free group F_rank.
///
/// A Word is immutable once built and always freely reduced; every
/// constructor and operation that produces a Word reduces its letters.
/// The identity element is the empty word.
class Word {
 public:
  /// The identity of F_1.
  Word() = default;

  /// Identity of F_rank.
  explicit Word(int rank);

  /// Reduces `letters`; throws MalformedInput on a zero letter or a letter
  /// whose magnitude exceeds `rank`.
  Word(int rank, std::initializer_list<Letter> letters);

  static Word reduce(std::span<const Letter> letters, int rank);

  /// The basis element (or its inverse) named by a single letter.
  static Word generator(int rank, Letter l);

  int rank() const noexcept { return rank_; }
  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }

  /// True when basis letter `index` (in either sign) occurs.
  bool uses_generator(int index) const noexcept;

  bool operator==(const Word& other) const = default;

  /// Shortlex order on letters under `letter_key`, ranks compared first.
  std::strong_ordering operator<=>(const Word& other) const noexcept;

 private:
  struct Trusted {};
  Word(Trusted, int rank, std::vector<Letter> letters)
      : rank_(rank), letters_(std::move(letters)) {}

  friend Word multiply(const Word&, const Word&);
  friend Word invert(const Word&);
  friend class WordBuilder;

  int rank_ = 1;
  std::vector<Letter> letters_;
};

/// Incremental free reduction: pushes letters onto a stack, cancelling
/// against the top. Used wherever a long product is assembled.
class WordBuilder {
 public:
  explicit WordBuilder(int rank) : rank_(rank) {}

  void push(Letter l) {
    if (!letters_.empty() && letters_.back() == -l) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }

  void append(const Word& w) {
    for (Letter l : w.letters()) push(l);
  }

  void append_inverse(const Word& w) {
    auto ls = w.letters();
    for (auto it = ls.rbegin(); it != ls.rend(); ++it) push(-*it);
  }

  Word build() && { return Word(Word::Trusted{}, rank_, std::move(letters_)); }

 private:
  int rank_;
  std::vector<Letter> letters_;
};

Word multiply(const Word& u, const Word& v);
Word invert(const Word& u);
/// The k-th power; k may be negative, power(u, 0) is the identity.
Word power(const Word& u, long k);
/// u v u^-1 v^-1.
Word commutator(const Word& u, const Word& v);

inline Word operator*(const Word& u, const Word& v) { return multiply(u, v); }

/// Cyclically reduced word, stored as the least rotation under the letter
/// order 1 < -1 < 2 < -2 < .... Two conjugate words have identical
/// CyclicWords.
class CyclicWord {
 public:
  CyclicWord() = default;

  /// Canonicalises a cyclically reduced word; throws MalformedInput if `w`
  /// is not cyclically reduced.
  explicit CyclicWord(const Word& w);

  const Word& word() const noexcept { return word_; }
  int rank() const noexcept { return word_.rank(); }
  std::size_t size() const noexcept { return word_.size(); }
  bool empty() const noexcept { return word_.empty(); }

  bool operator==(const CyclicWord&) const = default;
  std::strong_ordering operator<=>(const CyclicWord& other) const noexcept {
    return word_ <=> other.word_;
  }

 private:
  Word word_;
};

struct CyclicReduction {
  CyclicWord core;
  /// u = conjugator * core * conjugator^-1.
  Word conjugator;
};

bool is_cyclically_reduced(const Word& w) noexcept;
CyclicReduction cyclic_reduce(const Word& u);
/// Conjugacy class representative of u.
inline CyclicWord conjugacy_class(const Word& u) { return cyclic_reduce(u).core; }
bool is_conjugate(const Word& u, const Word& v);

/// Index of the least rotation of `letters` under `letter_key`.
std::size_t least_rotation(std::span<const Letter> letters);

/// Shortest r and largest m >= 1 with u = t r^m t^-1 and r cyclically
/// reduced. For the identity, root is empty and m = 0.
struct RootDecomposition {
  Word conjugator;
  Word root;
  long exponent = 0;
};
RootDecomposition root_decomposition(const Word& u);

/// Every reduced word of length <= max_len in shortlex order.
std::vector<Word> enumerate_words(int rank, int max_len);

/// Number of reduced words of length exactly `len` in F_rank.
std::uint64_t count_words(int rank, int len);

}  // namespace autqm

template <>
struct std::hash<autqm::Word> {
  std::size_t operator()(const autqm::Word& w) const noexcept {
    std::uint64_t h = 1469598103934665603ull ^ static_cast<unsigned>(w.rank());
    for (autqm::Letter l : w.letters()) {
      h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(l));
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

template <>
struct std::hash<autqm::CyclicWord> {
  std::size_t operator()(const autqm::CyclicWord& c) const noexcept {
    return std::hash<autqm::Word>{}(c.word());
  }
};
