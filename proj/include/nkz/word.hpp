#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nkz/errors.hpp"

namespace nkz {

/// A word is a finite sequence of generator indices, each in [0, n).
/// The empty word (degree 0) is allowed.
using Word = std::vector<int>;

/// n^m with an overflow/cap guard. Words of degree m over n letters are
/// enumerated by their base-n value, so n^m must fit comfortably in 64 bits.
std::uint64_t pow_checked(int n, int degree);

/// Base-n value of a word; this is also its rank in lexicographic order
/// (letters compared numerically) among all words of the same degree.
std::uint64_t encode_word(const Word& w, int n);

Word decode_word(std::uint64_t index, int degree, int n);

void validate_word(const Word& w, int n);

/// True iff all letters are equal (and the word is nonempty): w = x_i^m.
bool is_letter_power(const Word& w);

/// True iff w[i] = w[i - p] for all i >= p, i.e. w is p-periodic in the
/// "fractional power" sense w = (prefix of length p)^q * (prefix of length r).
bool has_period(const Word& w, int p);

/// First position of `factor` inside `w`, or -1.
int find_factor(const Word& w, const Word& factor);

std::string word_str(const Word& w);

} // namespace nkz
