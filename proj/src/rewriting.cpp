#include "nkz/rewriting.hpp"

#include <algorithm>

#include "nkz/monomial.hpp"

namespace nkz {

WordOrder identity_order() { return {}; }

WordOrder permutation_order(const std::vector<int>& rank) {
    std::vector<int> seen(rank.size(), 0);
    for (int r : rank) {
        if (r < 0 || r >= static_cast<int>(rank.size()) || seen[static_cast<std::size_t>(r)])
            throw InvalidInput("word order ranks must form a permutation");
        seen[static_cast<std::size_t>(r)] = 1;
    }
    return {rank};
}

Poly poly_from_tensor(const Tensor& t) {
    Poly p;
    p.reserve(t.terms.size());
    for (const auto& [w, c] : t.terms) p.emplace_back(decode_word(w, t.degree, t.n), c);
    return p;
}

namespace {

struct OrderGreater {
    const WordOrder* order;
    bool operator()(const Word& a, const Word& b) const { return order->less(b, a); }
};

using WorkMap = std::map<Word, Rational, OrderGreater>;

Poly sorted_poly(WorkMap&& work, const WordOrder& order) {
    Poly out;
    out.reserve(work.size());
    for (auto& [w, c] : work)
        if (!c.is_zero()) out.emplace_back(w, std::move(c));
    std::reverse(out.begin(), out.end());
    (void)order;
    return out;
}

} // namespace

RewriteRule make_rule_poly(int n, const Poly& poly, const WordOrder& order) {
    WorkMap work{OrderGreater{&order}};
    for (const auto& [w, c] : poly) {
        validate_word(w, n);
        auto [it, fresh] = work.emplace(w, c);
        if (!fresh) it->second += c;
    }
    for (auto it = work.begin(); it != work.end();) {
        if (it->second.is_zero())
            it = work.erase(it);
        else
            ++it;
    }
    if (work.empty()) throw InvalidInput("rewrite rule from the zero element");
    RewriteRule rule;
    rule.n = n;
    rule.order = order;
    rule.lead = work.begin()->first;
    const Rational lead_coeff = work.begin()->second;
    work.erase(work.begin());
    const Rational neg_inv = -lead_coeff.inverse();
    for (auto& [w, c] : work) rule.tail.emplace_back(w, neg_inv * c);
    std::reverse(rule.tail.begin(), rule.tail.end());
    return rule;
}

RewriteRule make_rule(const Tensor& f, const WordOrder& order) {
    if (f.is_zero()) throw InvalidInput("rewrite rule from the zero tensor");
    return make_rule_poly(f.n, poly_from_tensor(f), order);
}

Poly normal_form(const RewriteRule& rule, const Poly& input) {
    WorkMap work{OrderGreater{&rule.order}};
    for (const auto& [w, c] : input) {
        validate_word(w, rule.n);
        auto [it, fresh] = work.emplace(w, c);
        if (!fresh) it->second += c;
    }
    WorkMap done{OrderGreater{&rule.order}};
    while (!work.empty()) {
        auto top = work.begin();
        Word w = top->first;
        Rational c = std::move(top->second);
        work.erase(top);
        if (c.is_zero()) continue;
        const int pos = find_factor(w, rule.lead);
        if (pos < 0) {
            done.emplace(std::move(w), std::move(c));
            continue;
        }
        // replace the leftmost occurrence; every inserted word is strictly
        // smaller, so the sweep terminates
        for (const auto& [t, tc] : rule.tail) {
            Word repl;
            repl.reserve(w.size() - rule.lead.size() + t.size());
            repl.insert(repl.end(), w.begin(), w.begin() + pos);
            repl.insert(repl.end(), t.begin(), t.end());
            repl.insert(repl.end(), w.begin() + pos + static_cast<int>(rule.lead.size()), w.end());
            auto [it, fresh] = work.emplace(std::move(repl), c * tc);
            if (!fresh) {
                it->second += c * tc;
                if (it->second.is_zero()) work.erase(it);
            }
        }
    }
    return sorted_poly(std::move(done), rule.order);
}

Tensor normal_form(const RewriteRule& rule, const Tensor& t) {
    Poly nf = normal_form(rule, poly_from_tensor(t));
    std::vector<std::pair<Word, Rational>> entries(nf.begin(), nf.end());
    for (const auto& [w, c] : entries)
        if (static_cast<int>(w.size()) != t.degree)
            throw InvalidInput("homogeneous normal form left the degree (inhomogeneous rule?)");
    return tensor_from_words<Rational>(t.n, t.degree, entries);
}

ConfluenceReport confluence_check(const RewriteRule& rule) {
    ConfluenceReport report;
    const int N = static_cast<int>(rule.lead.size());
    for (int s = 1; s < N; ++s) {
        if (!has_period(rule.lead, s)) continue;
        // overlap word of degree N + s: positions 0 and s both carry the lead
        Word w(rule.lead.begin(), rule.lead.begin() + s);
        w.insert(w.end(), rule.lead.begin(), rule.lead.end());

        Poly left, right;
        // reduce at position 0 first
        for (const auto& [t, tc] : rule.tail) {
            Word repl = t;
            repl.insert(repl.end(), w.begin() + N, w.end());
            left.emplace_back(std::move(repl), tc);
        }
        // reduce at position s first
        for (const auto& [t, tc] : rule.tail) {
            Word repl(w.begin(), w.begin() + s);
            repl.insert(repl.end(), t.begin(), t.end());
            right.emplace_back(std::move(repl), tc);
        }
        const Poly nl = normal_form(rule, left);
        const Poly nr = normal_form(rule, right);
        report.ambiguities.push_back({w, nl == nr});
    }
    return report;
}

long long irreducible_count(const RewriteRule& rule, int n, int d) {
    return avoid_count(rule.lead, n, d);
}

} // namespace nkz
