#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "nkz/errors.hpp"
#include "nkz/rational.hpp"
#include "nkz/word.hpp"

namespace nkz {

/// Homogeneous element of V^{ \otimes degree } where dim V = n.
/// Sparse: terms are (encoded word, coefficient) pairs sorted by word index,
/// all coefficients nonzero. The encoded index order coincides with the
/// lexicographic order on words of the fixed degree.
template <class F>
struct TensorT {
    int n = 0;
    int degree = 0;
    std::vector<std::pair<std::uint64_t, F>> terms;

    bool is_zero() const { return terms.empty(); }

    /// Largest word index with nonzero coefficient; tensors are kept sorted
    /// ascending, so this is the last term.
    std::uint64_t lead_word() const {
        if (terms.empty()) throw InvalidInput("lead word of zero tensor");
        return terms.back().first;
    }
    const F& lead_coeff() const {
        if (terms.empty()) throw InvalidInput("lead coefficient of zero tensor");
        return terms.back().second;
    }

    const F* coeff(std::uint64_t word) const {
        auto it = std::lower_bound(terms.begin(), terms.end(), word,
                                   [](const auto& t, std::uint64_t w) { return t.first < w; });
        return (it != terms.end() && it->first == word) ? &it->second : nullptr;
    }

    friend bool operator==(const TensorT& a, const TensorT& b) {
        return a.n == b.n && a.degree == b.degree && a.terms == b.terms;
    }

    std::uint64_t hash() const {
        std::uint64_t h = static_cast<std::uint64_t>(degree) * 0x100000001b3ULL + static_cast<std::uint64_t>(n);
        for (const auto& [w, c] : terms) {
            h = (h ^ w) * 0x100000001b3ULL;
            h = (h ^ c.hash()) * 0x100000001b3ULL;
        }
        return h;
    }
};

using Tensor = TensorT<Rational>;

/// Builds a tensor from unsorted, possibly repeated (word, coeff) pairs.
template <class F>
TensorT<F> make_tensor(int n, int degree, std::vector<std::pair<std::uint64_t, F>> raw) {
    pow_checked(n, degree);
    TensorT<F> t;
    t.n = n;
    t.degree = degree;
    std::sort(raw.begin(), raw.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [w, c] : raw) {
        if (!t.terms.empty() && t.terms.back().first == w) {
            t.terms.back().second += c;
            if (t.terms.back().second.is_zero()) t.terms.pop_back();
        } else if (!c.is_zero()) {
            t.terms.emplace_back(w, std::move(c));
        }
    }
    return t;
}

template <class F>
TensorT<F> tensor_from_words(int n, int degree,
                             const std::vector<std::pair<Word, F>>& entries) {
    std::vector<std::pair<std::uint64_t, F>> raw;
    raw.reserve(entries.size());
    for (const auto& [w, c] : entries) {
        if (static_cast<int>(w.size()) != degree)
            throw InvalidInput("word of degree " + std::to_string(w.size()) +
                               " in tensor of degree " + std::to_string(degree));
        raw.emplace_back(encode_word(w, n), c);
    }
    return make_tensor<F>(n, degree, std::move(raw));
}

/// Single basis word with coefficient 1.
template <class F = Rational>
TensorT<F> unit_tensor(int n, const Word& w) {
    return tensor_from_words<F>(n, static_cast<int>(w.size()), {{w, F(1)}});
}

/// a += c * b, merging sorted term lists.
template <class F>
void axpy(TensorT<F>& a, const F& c, const TensorT<F>& b) {
    if (c.is_zero() || b.terms.empty()) return;
    std::vector<std::pair<std::uint64_t, F>> out;
    out.reserve(a.terms.size() + b.terms.size());
    auto ia = a.terms.begin();
    auto ib = b.terms.begin();
    while (ia != a.terms.end() || ib != b.terms.end()) {
        if (ib == b.terms.end() || (ia != a.terms.end() && ia->first < ib->first)) {
            out.push_back(std::move(*ia++));
        } else if (ia == a.terms.end() || ib->first < ia->first) {
            out.emplace_back(ib->first, c * ib->second);
            ++ib;
        } else {
            F v = ia->second + c * ib->second;
            if (!v.is_zero()) out.emplace_back(ia->first, std::move(v));
            ++ia;
            ++ib;
        }
    }
    a.terms = std::move(out);
}

template <class F>
TensorT<F> operator+(const TensorT<F>& a, const TensorT<F>& b) {
    if (a.n != b.n || a.degree != b.degree)
        throw InvalidInput("tensor degree/space mismatch in addition");
    TensorT<F> r = a;
    axpy(r, F(1), b);
    return r;
}

template <class F>
TensorT<F> operator-(const TensorT<F>& a, const TensorT<F>& b) {
    if (a.n != b.n || a.degree != b.degree)
        throw InvalidInput("tensor degree/space mismatch in subtraction");
    TensorT<F> r = a;
    axpy(r, F(-1), b);
    return r;
}

template <class F>
TensorT<F> scale(const TensorT<F>& a, const F& c) {
    TensorT<F> r;
    r.n = a.n;
    r.degree = a.degree;
    if (c.is_zero()) return r;
    r.terms.reserve(a.terms.size());
    for (const auto& [w, v] : a.terms) r.terms.emplace_back(w, c * v);
    return r;
}

/// Concatenation product V^a x V^b -> V^(a+b).
template <class F>
TensorT<F> tensor_product(const TensorT<F>& a, const TensorT<F>& b) {
    if (a.n != b.n) throw InvalidInput("tensor product over different generator counts");
    const std::uint64_t shift = pow_checked(a.n, b.degree);
    pow_checked(a.n, a.degree + b.degree);
    std::vector<std::pair<std::uint64_t, F>> raw;
    raw.reserve(a.terms.size() * b.terms.size());
    for (const auto& [wa, ca] : a.terms)
        for (const auto& [wb, cb] : b.terms) raw.emplace_back(wa * shift + wb, ca * cb);
    TensorT<F> r = make_tensor<F>(a.n, a.degree + b.degree, std::move(raw));
    return r;
}

template <class F>
std::vector<std::pair<Word, F>> tensor_words(const TensorT<F>& t) {
    std::vector<std::pair<Word, F>> out;
    out.reserve(t.terms.size());
    for (const auto& [w, c] : t.terms) out.emplace_back(decode_word(w, t.degree, t.n), c);
    return out;
}

template <class F>
std::string tensor_str(const TensorT<F>& t) {
    if (t.is_zero()) return "0";
    std::string s;
    for (const auto& [w, c] : t.terms) {
        if (!s.empty()) s += " + ";
        s += c.str() + "*" + word_str(decode_word(w, t.degree, t.n));
    }
    return s;
}

} // namespace nkz
