#include "autqm/text.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <vector>

#include "autqm/errors.hpp"
#include "autqm/rational.hpp"

namespace autqm {

char letter_char(Letter l) {
  if (l == 0 || std::abs(l) > 26) {
    throw MalformedInput("letter " + std::to_string(l) + " has no ASCII form");
  }
  return static_cast<char>(l > 0 ? 'a' + l - 1 : 'A' - l - 1);
}

namespace {

Word parse_bracketed(std::string_view text, int rank) {
  std::vector<Letter> letters;
  std::size_t i = 1;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == ',')) ++i;
    if (i < text.size() && text[i] == ']') {
      if (i + 1 != text.size()) {
        throw ParseError("trailing characters after ']'", 1,
                         static_cast<int>(i + 2));
      }
      return Word::reduce(letters, rank);
    }
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc{}) {
      throw ParseError("expected an integer letter", 1, static_cast<int>(i + 1));
    }
    if (value == 0 || std::abs(value) > rank) {
      throw ParseError("letter " + std::to_string(value) + " outside rank " +
                           std::to_string(rank),
                       1, static_cast<int>(i + 1));
    }
    letters.push_back(value);
    i = static_cast<std::size_t>(ptr - text.data());
  }
  throw ParseError("missing ']'", 1, static_cast<int>(text.size() + 1));
}

}  // namespace

Word parse_word(std::string_view text, int rank) {
  if (rank < 1) throw MalformedInput("rank must be positive");
  if (text.empty() || text == "1") return Word(rank);
  if (text.front() == '[') return parse_bracketed(text, rank);
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    Letter l = 0;
    if (c >= 'a' && c <= 'z') {
      l = c - 'a' + 1;
    } else if (c >= 'A' && c <= 'Z') {
      l = -(c - 'A' + 1);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", 1,
                       static_cast<int>(i + 1));
    }
    if (std::abs(l) > rank) {
      throw ParseError(std::string("generator '") + c + "' outside rank " +
                           std::to_string(rank),
                       1, static_cast<int>(i + 1));
    }
    letters.push_back(l);
  }
  return Word::reduce(letters, rank);
}

std::string format_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  if (w.rank() <= 26) {
    for (Letter l : w.letters()) out.push_back(letter_char(l));
    return out;
  }
  out = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(w[i]);
  }
  return out + "]";
}

std::string format_word_exponents(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  auto ls = w.letters();
  std::size_t i = 0;
  while (i < ls.size()) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    const int gen = std::abs(ls[i]);
    long e = static_cast<long>(j - i) * (ls[i] > 0 ? 1 : -1);
    if (!out.empty()) out += " ";
    out += w.rank() <= 26 ? std::string(1, letter_char(gen))
                          : "x" + std::to_string(gen);
    if (e != 1) out += "^" + std::to_string(e);
    i = j;
  }
  return out;
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  auto parse_int = [&](std::string_view s, int offset) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
      throw ParseError("malformed rational '" + text + "'", 1, offset + 1);
    }
    return v;
  };
  std::string_view sv(text);
  if (slash == std::string::npos) return Rational(parse_int(sv, 0));
  auto num = parse_int(sv.substr(0, slash), 0);
  auto den = parse_int(sv.substr(slash + 1), static_cast<int>(slash + 1));
  if (den == 0) throw ParseError("zero denominator", 1, static_cast<int>(slash + 2));
  return Rational(num, den);
}

}  // namespace autqm
