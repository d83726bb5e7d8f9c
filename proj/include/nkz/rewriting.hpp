#pragma once

#include <map>
#include <vector>

#include "nkz/tensor.hpp"

namespace nkz {

/// Word order used by the rewriting system: words are compared first by
/// length, then letterwise left-to-right through a permutation of the
/// generator indices (identity by default).
struct WordOrder {
    std::vector<int> rank; // rank[letter]; empty = identity

    int letter_rank(int letter) const {
        return rank.empty() ? letter : rank[static_cast<std::size_t>(letter)];
    }
    /// True iff a < b.
    bool less(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return letter_rank(a[i]) < letter_rank(b[i]);
        return false;
    }
};

WordOrder identity_order();
WordOrder permutation_order(const std::vector<int>& rank);

/// Polynomial over the free algebra: sorted ascending in the rule's order.
using Poly = std::vector<std::pair<Word, Rational>>;

/// Single reduction lead -> tail. The lead never occurs among the tail's
/// words and every tail word is strictly smaller in the order (tails of
/// lower degree are allowed, which covers filtered/inhomogeneous systems).
struct RewriteRule {
    int n = 0;
    Word lead;
    Poly tail;
    WordOrder order;
};

/// Rule from a nonzero homogeneous relation: lead is the order-largest word,
/// tail = -(rest)/(lead coefficient).
RewriteRule make_rule(const Tensor& f, const WordOrder& order = {});

/// Rule from an arbitrary polynomial (the filtered case f - v - lambda).
RewriteRule make_rule_poly(int n, const Poly& poly, const WordOrder& order = {});

Poly poly_from_tensor(const Tensor& t);

/// Fixed point of leftmost reduction of the largest reducible word; the
/// result contains no occurrence of the lead.
Poly normal_form(const RewriteRule& rule, const Poly& input);
Tensor normal_form(const RewriteRule& rule, const Tensor& t);

struct Ambiguity {
    Word word; // self-overlap of the lead, degree in [N+1, 2N-1]
    bool resolved = false;
};

struct ConfluenceReport {
    std::vector<Ambiguity> ambiguities;
    bool confluent() const {
        for (const auto& a : ambiguities)
            if (!a.resolved) return false;
        return true;
    }
};

/// Reduces every self-overlap of the lead both ways and compares normal
/// forms. For a single rule these are the only critical pairs.
ConfluenceReport confluence_check(const RewriteRule& rule);

/// Number of degree-d words over n letters containing no occurrence of the
/// lead; a dimension oracle whenever the system is confluent.
long long irreducible_count(const RewriteRule& rule, int n, int d);

} // namespace nkz
