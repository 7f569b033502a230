#include "autqm/random.hpp"

namespace autqm {

int random_int(int lo, int hi, Rng& rng) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Word random_word(int rank, int len, Rng& rng) {
  WordBuilder b(rank);
  Letter prev = 0;
  for (int i = 0; i < len; ++i) {
    Letter l = 0;
    do {
      l = letter_from_key(random_int(1, 2 * rank, rng));
    } while (l == -prev);
    b.push(l);
    prev = l;
  }
  return std::move(b).build();
}

Word random_word_upto(int rank, int max_len, Rng& rng) {
  return random_word(rank, random_int(0, max_len, rng), rng);
}

}  // namespace autqm
