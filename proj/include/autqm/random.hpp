#pragma once

#include <random>

#include "autqm/word.hpp"

namespace autqm {

using Rng = std::mt19937_64;

/// Uniform reduced word of exactly `len` letters.
Word random_word(int rank, int len, Rng& rng);

/// Reduced word whose length is uniform in [0, max_len].
Word random_word_upto(int rank, int max_len, Rng& rng);

/// Random element of [lo, hi].
int random_int(int lo, int hi, Rng& rng);

}  // namespace autqm
