#include "nkz/word.hpp"

#include <algorithm>

namespace nkz {

std::uint64_t pow_checked(int n, int degree) {
    if (n < 0 || degree < 0) throw InvalidInput("negative base or degree");
    std::uint64_t r = 1;
    for (int i = 0; i < degree; ++i) {
        if (n != 0 && r > (1ULL << 62) / static_cast<std::uint64_t>(n))
            throw ResourceLimit("tensor power dimension overflows: " + std::to_string(n) + "^" +
                                std::to_string(degree));
        r *= static_cast<std::uint64_t>(n);
    }
    return r;
}

std::uint64_t encode_word(const Word& w, int n) {
    std::uint64_t idx = 0;
    for (int letter : w) {
        if (letter < 0 || letter >= n)
            throw InvalidInput("generator index " + std::to_string(letter) + " >= n = " +
                               std::to_string(n));
        idx = idx * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(letter);
    }
    return idx;
}

Word decode_word(std::uint64_t index, int degree, int n) {
    Word w(static_cast<std::size_t>(degree));
    for (int i = degree - 1; i >= 0; --i) {
        w[static_cast<std::size_t>(i)] = static_cast<int>(index % static_cast<std::uint64_t>(n));
        index /= static_cast<std::uint64_t>(n);
    }
    return w;
}

void validate_word(const Word& w, int n) {
    for (int letter : w)
        if (letter < 0 || letter >= n)
            throw InvalidInput("generator index " + std::to_string(letter) + " >= n = " +
                               std::to_string(n));
}

bool is_letter_power(const Word& w) {
    if (w.empty()) return false;
    return std::all_of(w.begin(), w.end(), [&](int c) { return c == w[0]; });
}

bool has_period(const Word& w, int p) {
    if (p <= 0) return false;
    for (std::size_t i = static_cast<std::size_t>(p); i < w.size(); ++i)
        if (w[i] != w[i - static_cast<std::size_t>(p)]) return false;
    return true;
}

int find_factor(const Word& w, const Word& factor) {
    if (factor.empty() || factor.size() > w.size()) return factor.empty() ? 0 : -1;
    auto it = std::search(w.begin(), w.end(), factor.begin(), factor.end());
    return it == w.end() ? -1 : static_cast<int>(it - w.begin());
}

std::string word_str(const Word& w) {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += '.';
        s += 'x';
        s += std::to_string(w[i]);
    }
    return s;
}

} // namespace nkz
