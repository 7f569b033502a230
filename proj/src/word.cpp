#include "autqm/word.hpp"

#include <algorithm>
#include <cstdlib>

#include "autqm/errors.hpp"

namespace autqm {

namespace {

void check_rank(int rank) {
  if (rank < 1) {
    throw MalformedInput("rank must be positive, got " + std::to_string(rank));
  }
}

}  // namespace

Word::Word(int rank) : rank_(rank) { check_rank(rank); }

Word::Word(int rank, std::initializer_list<Letter> letters)
    : Word(reduce(std::span<const Letter>(letters.begin(), letters.size()),
                  rank)) {}

Word Word::reduce(std::span<const Letter> letters, int rank) {
  check_rank(rank);
  WordBuilder b(rank);
  for (std::size_t i = 0; i < letters.size(); ++i) {
    Letter l = letters[i];
    if (l == 0 || std::abs(l) > rank) {
      throw MalformedInput("letter " + std::to_string(l) + " at position " +
                           std::to_string(i) + " is outside rank " +
                           std::to_string(rank));
    }
    b.push(l);
  }
  return std::move(b).build();
}

Word Word::generator(int rank, Letter l) {
  const Letter ls[] = {l};
  return reduce(ls, rank);
}

bool Word::uses_generator(int index) const noexcept {
  return std::any_of(letters_.begin(), letters_.end(),
                     [index](Letter l) { return std::abs(l) == index; });
}

std::strong_ordering Word::operator<=>(const Word& other) const noexcept {
  if (auto c = rank_ <=> other.rank_; c != 0) return c;
  if (auto c = letters_.size() <=> other.letters_.size(); c != 0) return c;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (auto c = letter_key(letters_[i]) <=> letter_key(other.letters_[i]);
        c != 0) {
      return c;
    }
  }
  return std::strong_ordering::equal;
}

Word multiply(const Word& u, const Word& v) {
  if (u.rank() != v.rank()) throw RankMismatch(u.rank(), v.rank());
  auto a = u.letters();
  auto b = v.letters();
  std::size_t cancel = 0;
  while (cancel < a.size() && cancel < b.size() &&
         a[a.size() - 1 - cancel] == -b[cancel]) {
    ++cancel;
  }
  std::vector<Letter> out;
  out.reserve(a.size() + b.size() - 2 * cancel);
  out.insert(out.end(), a.begin(), a.end() - static_cast<long>(cancel));
  out.insert(out.end(), b.begin() + static_cast<long>(cancel), b.end());
  return Word(Word::Trusted{}, u.rank(), std::move(out));
}

Word invert(const Word& u) {
  std::vector<Letter> out(u.letters().rbegin(), u.letters().rend());
  for (Letter& l : out) l = -l;
  return Word(Word::Trusted{}, u.rank(), std::move(out));
}

Word power(const Word& u, long k) {
  const Word base = k < 0 ? invert(u) : u;
  WordBuilder b(u.rank());
  for (long i = 0; i < std::labs(k); ++i) b.append(base);
  return std::move(b).build();
}

Word commutator(const Word& u, const Word& v) {
  if (u.rank() != v.rank()) throw RankMismatch(u.rank(), v.rank());
  WordBuilder b(u.rank());
  b.append(u);
  b.append(v);
  b.append_inverse(u);
  b.append_inverse(v);
  return std::move(b).build();
}

bool is_cyclically_reduced(const Word& w) noexcept {
  return w.size() < 2 || w.front() != -w.back();
}

std::size_t least_rotation(std::span<const Letter> letters) {
  const std::size_t n = letters.size();
  std::size_t best = 0;
  for (std::size_t r = 1; r < n; ++r) {
    for (std::size_t i = 0; i < n; ++i) {
      int a = letter_key(letters[(r + i) % n]);
      int b = letter_key(letters[(best + i) % n]);
      if (a != b) {
        if (a < b) best = r;
        break;
      }
    }
  }
  return best;
}

CyclicWord::CyclicWord(const Word& w) {
  if (!is_cyclically_reduced(w)) {
    throw MalformedInput("word is not cyclically reduced");
  }
  auto ls = w.letters();
  std::size_t r = least_rotation(ls);
  std::vector<Letter> rotated;
  rotated.reserve(ls.size());
  rotated.insert(rotated.end(), ls.begin() + static_cast<long>(r), ls.end());
  rotated.insert(rotated.end(), ls.begin(), ls.begin() + static_cast<long>(r));
  word_ = Word::reduce(rotated, w.rank());
}

CyclicReduction cyclic_reduce(const Word& u) {
  auto ls = u.letters();
  std::size_t strip = 0;
  while (2 * strip + 1 < ls.size() &&
         ls[strip] == -ls[ls.size() - 1 - strip]) {
    ++strip;
  }
  const int rank = u.rank();
  Word t = Word::reduce(ls.subspan(0, strip), rank);
  auto middle = ls.subspan(strip, ls.size() - 2 * strip);
  // middle = p s with core = s p, so middle = p core p^-1.
  std::size_t r = least_rotation(middle);
  Word p = Word::reduce(middle.subspan(0, r), rank);
  Word middle_word = Word::reduce(middle, rank);
  CyclicReduction out;
  out.conjugator = multiply(t, p);
  out.core = CyclicWord(multiply(invert(p), multiply(middle_word, p)));
  return out;
}

bool is_conjugate(const Word& u, const Word& v) {
  if (u.rank() != v.rank()) throw RankMismatch(u.rank(), v.rank());
  return conjugacy_class(u) == conjugacy_class(v);
}

RootDecomposition root_decomposition(const Word& u) {
  auto cr = cyclic_reduce(u);
  RootDecomposition out;
  out.conjugator = cr.conjugator;
  const auto ls = cr.core.word().letters();
  const std::size_t n = ls.size();
  if (n == 0) {
    out.root = Word(u.rank());
    return out;
  }
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) {
      periodic = ls[i] == ls[i - d];
    }
    if (periodic) {
      out.root = Word::reduce(ls.subspan(0, d), u.rank());
      out.exponent = static_cast<long>(n / d);
      break;
    }
  }
  return out;
}

std::vector<Word> enumerate_words(int rank, int max_len) {
  check_rank(rank);
  std::vector<Word> out;
  out.emplace_back(rank);
  std::size_t level_begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    const std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (int key = 1; key <= 2 * rank; ++key) {
        Letter l = letter_from_key(key);
        if (!out[i].empty() && out[i].back() == -l) continue;
        WordBuilder b(rank);
        b.append(out[i]);
        b.push(l);
        out.push_back(std::move(b).build());
      }
    }
    level_begin = level_end;
  }
  return out;
}

std::uint64_t count_words(int rank, int len) {
  if (len == 0) return 1;
  std::uint64_t n = 2ull * static_cast<std::uint64_t>(rank);
  for (int i = 1; i < len; ++i) n *= 2ull * static_cast<std::uint64_t>(rank) - 1;
  return n;
}

}  // namespace autqm
