#pragma once

#include <cstdint>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "nkz/tensor.hpp"

namespace nkz {

/// Forward (non-reduced) row echelon accumulator. Every stored row is monic,
/// its pivot is its largest word, and pivots are pairwise distinct; supports
/// of rows only contain words <= the row's own pivot. This is the workhorse
/// for rank/dimension computations and normal forms; canonical subspaces are
/// produced from it by back substitution.
template <class F>
class EchelonT {
public:
    EchelonT(int n, int degree) : n_(n), degree_(degree) {}

    int n() const { return n_; }
    int degree() const { return degree_; }
    std::size_t dim() const { return rows_.size(); }
    const std::vector<TensorT<F>>& rows() const { return rows_; }

    /// Registers a row that is already monic with a fresh pivot.
    /// Used for block constructions whose triangularity is structural.
    void seed(TensorT<F> row) {
        pivot_row_.emplace(row.lead_word(), rows_.size());
        rows_.push_back(std::move(row));
    }

    /// Reduces t against the stored rows and, if a nonzero remainder is left,
    /// normalizes and stores it. Returns true when the dimension grew.
    bool insert(const TensorT<F>& t) {
        TensorT<F> rem = reduce(t);
        if (rem.is_zero()) return false;
        const F inv = rem.lead_coeff().inverse();
        if (!inv.is_one()) rem = scale(rem, inv);
        seed(std::move(rem));
        return true;
    }

    /// Normal form of t modulo the row space: no pivot word occurs in the
    /// result. Unique because the rows are triangular with distinct pivots.
    TensorT<F> reduce(const TensorT<F>& t) const {
        if (t.n != n_ || t.degree != degree_)
            throw InvalidInput("degree mismatch: reducing degree " + std::to_string(t.degree) +
                               " against degree " + std::to_string(degree_));
        std::map<std::uint64_t, F, std::greater<>> work(t.terms.rbegin(), t.terms.rend());
        TensorT<F> out;
        out.n = n_;
        out.degree = degree_;
        std::vector<std::pair<std::uint64_t, F>> kept;
        while (!work.empty()) {
            auto top = work.begin();
            const std::uint64_t w = top->first;
            F c = std::move(top->second);
            work.erase(top);
            if (c.is_zero()) continue;
            auto hit = pivot_row_.find(w);
            if (hit == pivot_row_.end()) {
                kept.emplace_back(w, std::move(c));
                continue;
            }
            const TensorT<F>& row = rows_[hit->second];
            // row is monic with pivot w; subtract c * row (pivot cancels,
            // all remaining action is on strictly smaller words).
            auto it = row.terms.end();
            --it; // pivot term, skipped
            for (auto jt = row.terms.begin(); jt != it; ++jt) {
                F& slot = work[jt->first];
                slot -= c * jt->second;
                if (slot.is_zero()) work.erase(jt->first);
            }
        }
        std::reverse(kept.begin(), kept.end());
        out.terms = std::move(kept);
        return out;
    }

    bool has_pivot(std::uint64_t word) const { return pivot_row_.count(word) != 0; }

private:
    int n_;
    int degree_;
    std::vector<TensorT<F>> rows_;
    std::unordered_map<std::uint64_t, std::size_t> pivot_row_;
};

using Echelon = EchelonT<Rational>;

/// Linear subspace of V^{ \otimes degree } in canonical form: rows are a
/// reduced basis sorted by strictly decreasing pivot word, every pivot
/// coefficient is 1, and no pivot word occurs in any other row. Two equal
/// subspaces have identical representations, so == is structural.
template <class F>
struct SubspaceT {
    int n = 0;
    int degree = 0;
    std::vector<TensorT<F>> rows;

    std::size_t dim() const { return rows.size(); }
    bool is_zero() const { return rows.empty(); }

    friend bool operator==(const SubspaceT& a, const SubspaceT& b) {
        return a.n == b.n && a.degree == b.degree && a.rows == b.rows;
    }
    friend bool operator!=(const SubspaceT& a, const SubspaceT& b) { return !(a == b); }

    std::uint64_t hash() const {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (const auto& r : rows) h = (h ^ r.hash()) * 0x100000001b3ULL;
        return h;
    }
};

using Subspace = SubspaceT<Rational>;

namespace detail {

/// Back-substitutes a forward echelon into the canonical reduced basis.
template <class F>
SubspaceT<F> canonicalize(const EchelonT<F>& ech) {
    SubspaceT<F> s;
    s.n = ech.n();
    s.degree = ech.degree();
    std::vector<const TensorT<F>*> sorted;
    sorted.reserve(ech.rows().size());
    for (const auto& r : ech.rows()) sorted.push_back(&r);
    std::sort(sorted.begin(), sorted.end(),
              [](const TensorT<F>* a, const TensorT<F>* b) { return a->lead_word() < b->lead_word(); });
    EchelonT<F> clean(ech.n(), ech.degree());
    for (const TensorT<F>* r : sorted) {
        // Rows with smaller pivots are already clean; reducing the tail
        // against them cannot touch the pivot term.
        TensorT<F> tail = *r;
        tail.terms.pop_back();
        TensorT<F> red = clean.reduce(tail);
        red.terms.emplace_back(r->lead_word(), F(1));
        clean.seed(std::move(red));
    }
    s.rows.assign(clean.rows().rbegin(), clean.rows().rend());
    return s;
}

} // namespace detail

template <class F>
SubspaceT<F> zero_subspace(int n, int degree) {
    pow_checked(n, degree);
    SubspaceT<F> s;
    s.n = n;
    s.degree = degree;
    return s;
}

/// All of V^{ \otimes degree }; guarded by the tensor-power cap.
template <class F>
SubspaceT<F> full_subspace(int n, int degree) {
    const std::uint64_t count = pow_checked(n, degree);
    SubspaceT<F> s;
    s.n = n;
    s.degree = degree;
    s.rows.reserve(count);
    for (std::uint64_t w = count; w-- > 0;) {
        TensorT<F> t;
        t.n = n;
        t.degree = degree;
        t.terms.emplace_back(w, F(1));
        s.rows.push_back(std::move(t));
    }
    return s;
}

/// Canonical reduced basis of the span of arbitrary degree-m vectors.
template <class F>
SubspaceT<F> span_of(int n, int degree, const std::vector<TensorT<F>>& vectors) {
    EchelonT<F> ech(n, degree);
    for (const auto& v : vectors) {
        if (v.n != n || v.degree != degree)
            throw InvalidInput("span: vector of degree " + std::to_string(v.degree) +
                               " in ambient degree " + std::to_string(degree));
        ech.insert(v);
    }
    return detail::canonicalize(ech);
}

template <class F>
EchelonT<F> echelon_of(const SubspaceT<F>& s) {
    EchelonT<F> ech(s.n, s.degree);
    for (auto it = s.rows.rbegin(); it != s.rows.rend(); ++it) ech.seed(*it);
    return ech;
}

template <class F>
void check_same_space(const SubspaceT<F>& a, const SubspaceT<F>& b, const char* op) {
    if (a.n != b.n || a.degree != b.degree)
        throw InvalidInput(std::string(op) + ": degree mismatch (" + std::to_string(a.degree) +
                           " vs " + std::to_string(b.degree) + ")");
}

template <class F>
SubspaceT<F> sum(const SubspaceT<F>& a, const SubspaceT<F>& b) {
    check_same_space(a, b, "sum");
    const SubspaceT<F>& big = a.dim() >= b.dim() ? a : b;
    const SubspaceT<F>& small = a.dim() >= b.dim() ? b : a;
    EchelonT<F> ech = echelon_of(big);
    for (const auto& r : small.rows) ech.insert(r);
    return detail::canonicalize(ech);
}

/// Exact intersection. Reduces the smaller operand against the bigger one and
/// extracts the kernel of the remainder map: a combination of rows of A whose
/// remainder vanishes lies in B.
template <class F>
SubspaceT<F> intersect(const SubspaceT<F>& a, const SubspaceT<F>& b) {
    check_same_space(a, b, "intersect");
    const SubspaceT<F>& small = a.dim() <= b.dim() ? a : b;
    const SubspaceT<F>& big = a.dim() <= b.dim() ? b : a;
    if (small.is_zero()) return zero_subspace<F>(a.n, a.degree);
    EchelonT<F> big_ech = echelon_of(big);

    // Augmented elimination on (remainder | combination) pairs.
    struct AugRow {
        TensorT<F> rem;
        TensorT<F> comb; // element of span(small) producing rem
    };
    std::vector<AugRow> stored;
    std::unordered_map<std::uint64_t, std::size_t> pivot_of;
    std::vector<TensorT<F>> intersection_rows;

    for (const auto& r : small.rows) {
        AugRow cur{big_ech.reduce(r), r};
        while (!cur.rem.is_zero()) {
            auto hit = pivot_of.find(cur.rem.lead_word());
            if (hit == pivot_of.end()) break;
            const AugRow& piv = stored[hit->second];
            const F c = cur.rem.lead_coeff();
            axpy(cur.rem, -c, piv.rem);
            axpy(cur.comb, -c, piv.comb);
        }
        if (cur.rem.is_zero()) {
            if (!cur.comb.is_zero()) intersection_rows.push_back(std::move(cur.comb));
        } else {
            const F inv = cur.rem.lead_coeff().inverse();
            if (!inv.is_one()) {
                cur.rem = scale(cur.rem, inv);
                cur.comb = scale(cur.comb, inv);
            }
            pivot_of.emplace(cur.rem.lead_word(), stored.size());
            stored.push_back(std::move(cur));
        }
    }
    return span_of<F>(a.n, a.degree, intersection_rows);
}

/// True iff every basis row of inner reduces to zero against outer.
template <class F>
bool contains(const SubspaceT<F>& outer, const SubspaceT<F>& inner) {
    check_same_space(outer, inner, "contains");
    if (inner.dim() > outer.dim()) return false;
    EchelonT<F> ech = echelon_of(outer);
    for (const auto& r : inner.rows)
        if (!ech.reduce(r).is_zero()) return false;
    return true;
}

/// V^{ \otimes left } (x) S (x) V^{ \otimes right }. Preserves canonical form:
/// padding a reduced basis with unit words keeps pivots distinct and reduced.
template <class F>
SubspaceT<F> extend(const SubspaceT<F>& s, int left, int right) {
    const int deg = left + s.degree + right;
    const std::uint64_t nl = pow_checked(s.n, left);
    const std::uint64_t nr = pow_checked(s.n, right);
    pow_checked(s.n, deg);
    SubspaceT<F> out;
    out.n = s.n;
    out.degree = deg;
    out.rows.reserve(nl * nr * s.rows.size());
    const std::uint64_t mid_shift = nr;
    const std::uint64_t left_shift = pow_checked(s.n, s.degree + right);
    for (std::uint64_t u = nl; u-- > 0;) {
        for (const auto& row : s.rows) {
            for (std::uint64_t w = nr; w-- > 0;) {
                TensorT<F> t;
                t.n = s.n;
                t.degree = deg;
                t.terms.reserve(row.terms.size());
                for (const auto& [mid, c] : row.terms)
                    t.terms.emplace_back(u * left_shift + mid * mid_shift + w, c);
                out.rows.push_back(std::move(t));
            }
        }
    }
    return out;
}

/// Coordinates of S relative to the pivot basis of J (S must be contained in
/// span J). The result lives in a dim(J)-dimensional coordinate space encoded
/// as degree-1 words over dim(J) "letters"; the mapping is order-preserving,
/// so canonical bases stay canonical and decompression restores them exactly.
template <class F>
SubspaceT<F> compress(const SubspaceT<F>& J, const SubspaceT<F>& s) {
    check_same_space(J, s, "compress");
    const std::size_t d = J.dim();
    std::unordered_map<std::uint64_t, std::uint64_t> coord_of;
    coord_of.reserve(d);
    for (std::size_t j = 0; j < d; ++j)
        coord_of.emplace(J.rows[j].lead_word(), static_cast<std::uint64_t>(d - 1 - j));
    SubspaceT<F> out;
    out.n = static_cast<int>(d);
    out.degree = d == 0 ? 0 : 1;
    out.rows.reserve(s.rows.size());
    for (const auto& row : s.rows) {
        TensorT<F> t;
        t.n = out.n;
        t.degree = out.degree;
        for (const auto& [w, c] : row.terms) {
            auto hit = coord_of.find(w);
            if (hit != coord_of.end()) t.terms.emplace_back(hit->second, c);
        }
        std::sort(t.terms.begin(), t.terms.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        if (t.is_zero()) throw InvalidInput("compress: vector outside the reference space");
        out.rows.push_back(std::move(t));
    }
    return out;
}

template <class F>
SubspaceT<F> decompress(const SubspaceT<F>& J, const SubspaceT<F>& c) {
    const std::size_t d = J.dim();
    SubspaceT<F> out;
    out.n = J.n;
    out.degree = J.degree;
    out.rows.reserve(c.rows.size());
    for (const auto& row : c.rows) {
        TensorT<F> acc;
        acc.n = J.n;
        acc.degree = J.degree;
        for (const auto& [coord, coef] : row.terms)
            axpy(acc, coef, J.rows[d - 1 - static_cast<std::size_t>(coord)]);
        out.rows.push_back(std::move(acc));
    }
    return out;
}

} // namespace nkz
