#include "nkz/classification.hpp"

#include <algorithm>

namespace nkz {

CoeffMatrix coeff_matrix(const Tensor& f) {
    if (f.degree != 2) throw InvalidInput("coefficient matrix requires a quadratic tensor");
    CoeffMatrix out;
    out.n = f.n;
    out.m.assign(static_cast<std::size_t>(f.n), std::vector<Rational>(static_cast<std::size_t>(f.n)));
    for (const auto& [w, c] : f.terms) {
        const auto i = static_cast<std::size_t>(w / static_cast<std::uint64_t>(f.n));
        const auto j = static_cast<std::size_t>(w % static_cast<std::uint64_t>(f.n));
        out.m[i][j] = c;
    }
    return out;
}

int matrix_rank(const CoeffMatrix& m) {
    auto a = m.m;
    const std::size_t n = a.size();
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < n; ++col) {
        std::size_t piv = row;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) continue;
        std::swap(a[piv], a[row]);
        const Rational inv = a[row][col].inverse();
        for (std::size_t j = col; j < n; ++j) a[row][j] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == row || a[i][col].is_zero()) continue;
            const Rational c = a[i][col];
            for (std::size_t j = col; j < n; ++j) a[i][j] -= c * a[row][j];
        }
        ++row;
        ++rank;
    }
    return rank;
}

bool matrix_symmetric(const CoeffMatrix& m) {
    for (int i = 0; i < m.n; ++i)
        for (int j = i + 1; j < m.n; ++j)
            if (m.at(i, j) != m.at(j, i)) return false;
    return true;
}

bool matrix_antisymmetric(const CoeffMatrix& m) {
    for (int i = 0; i < m.n; ++i)
        for (int j = i; j < m.n; ++j)
            if (m.at(i, j) != -m.at(j, i)) return false;
    return true;
}

CoeffMatrix congruence(const CoeffMatrix& m, const std::vector<std::vector<Rational>>& p) {
    const std::size_t n = m.m.size();
    if (p.size() != n) throw InvalidInput("congruence: size mismatch");
    CoeffMatrix out;
    out.n = m.n;
    out.m.assign(n, std::vector<Rational>(n));
    // out = P^t M P
    std::vector<std::vector<Rational>> mp(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) mp[i][j] += m.m[i][k] * p[k][j];
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) out.m[i][j] += p[k][i] * mp[k][j];
    return out;
}

Tensor substitute_generators(const Tensor& f, const std::vector<std::vector<Rational>>& subst) {
    const int n = f.n;
    if (static_cast<int>(subst.size()) != n) throw InvalidInput("substitution: size mismatch");
    std::vector<std::pair<std::uint64_t, Rational>> raw;
    for (const auto& [w, c] : f.terms) {
        Word word = decode_word(w, f.degree, n);
        // expand the product over the letters of the word
        std::vector<std::pair<std::uint64_t, Rational>> cur{{0, c}};
        for (int letter : word) {
            std::vector<std::pair<std::uint64_t, Rational>> next;
            next.reserve(cur.size() * static_cast<std::size_t>(n));
            for (const auto& [prefix, coef] : cur)
                for (int y = 0; y < n; ++y) {
                    const Rational& s = subst[static_cast<std::size_t>(letter)][static_cast<std::size_t>(y)];
                    if (s.is_zero()) continue;
                    next.emplace_back(prefix * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(y),
                                      coef * s);
                }
            cur = std::move(next);
        }
        raw.insert(raw.end(), cur.begin(), cur.end());
    }
    return make_tensor<Rational>(n, f.degree, std::move(raw));
}

bool is_antisymmetric(const Tensor& f) {
    if (f.degree < 1) return false;
    const int n = f.n;
    for (int t = 0; t + 1 < f.degree; ++t) {
        std::vector<std::pair<std::uint64_t, Rational>> raw;
        raw.reserve(f.terms.size());
        for (const auto& [w, c] : f.terms) {
            Word word = decode_word(w, f.degree, n);
            std::swap(word[static_cast<std::size_t>(t)], word[static_cast<std::size_t>(t) + 1]);
            raw.emplace_back(encode_word(word, n), c);
        }
        Tensor swapped = make_tensor<Rational>(n, f.degree, std::move(raw));
        if (!(swapped == scale(f, Rational(-1)))) return false;
    }
    return true;
}

Tensor antisymmetriser(int n, const std::vector<int>& indices) {
    const int m = static_cast<int>(indices.size());
    if (m == 0) throw InvalidInput("antisymmetriser of no generators");
    for (std::size_t i = 0; i < indices.size(); ++i)
        for (std::size_t j = i + 1; j < indices.size(); ++j)
            if (indices[i] == indices[j])
                throw InvalidInput("antisymmetriser with a repeated index is zero");
    validate_word(indices, n);

    std::vector<int> pos(indices.size());
    for (std::size_t i = 0; i < pos.size(); ++i) pos[i] = static_cast<int>(i);
    std::sort(pos.begin(), pos.end());
    std::vector<std::pair<std::uint64_t, Rational>> raw;
    do {
        // parity by counting inversions of the position permutation
        int inv = 0;
        for (std::size_t i = 0; i < pos.size(); ++i)
            for (std::size_t j = i + 1; j < pos.size(); ++j)
                if (pos[i] > pos[j]) ++inv;
        Word w(indices.size());
        for (std::size_t i = 0; i < pos.size(); ++i)
            w[i] = indices[static_cast<std::size_t>(pos[i])];
        raw.emplace_back(encode_word(w, n), Rational(inv % 2 == 0 ? 1 : -1));
    } while (std::next_permutation(pos.begin(), pos.end()));
    return make_tensor<Rational>(n, m, std::move(raw));
}

AntisymProfile classify_antisymmetric(const Presentation& p, const Limits& limits) {
    validate_presentation(p);
    const Subspace r = relation_space(p);
    if (r.dim() != 1) throw InvalidInput("antisymmetric classification requires dim R = 1");
    const Tensor& f = r.rows.front();
    if (!is_antisymmetric(f)) throw InvalidInput("relation is not antisymmetric");
    if (!(2 <= p.N && p.N <= p.n))
        throw InvalidInput("antisymmetric classification requires 2 <= N <= n");

    AntisymProfile out;
    out.n = p.n;
    out.N = p.N;
    out.koszul = true;
    out.global_dimension = 2;
    // The zero-overlap relations behind Koszulity and gldim 2; checked
    // computationally and recorded, not assumed.
    if (2 * p.N - 1 > limits.max_degree)
        throw ResourceLimit("antisymmetric overlap degree exceeds the cap");
    for (int m = 1; m < p.N; ++m) {
        Subspace left = extend(r, 0, m);
        Subspace right = extend(r, m, 0);
        Subspace meet = intersect(left, right);
        if (!meet.is_zero())
            throw std::logic_error("overlap space unexpectedly nonzero for antisymmetric relation");
        out.verified_zero_overlaps.push_back(m);
    }
    if (p.N == 2) {
        CoeffMatrix m = coeff_matrix(f);
        out.as_gorenstein = (p.n % 2 == 0) && (matrix_rank(m) == p.n);
    } else {
        out.as_gorenstein = false;
    }
    out.calabi_yau = out.as_gorenstein;
    return out;
}

QuadraticProfile classify_quadratic(const Presentation& p) {
    validate_presentation(p);
    if (p.N != 2) throw InvalidInput("quadratic classification requires N = 2");
    const Subspace r = relation_space(p);
    if (r.dim() != 1) throw InvalidInput("quadratic classification requires a single nonzero relation");
    const CoeffMatrix m = coeff_matrix(r.rows.front());

    QuadraticProfile out;
    out.rank = matrix_rank(m);
    out.symmetric = matrix_symmetric(m);
    out.antisymmetric = matrix_antisymmetric(m);
    out.nondegenerate = out.rank == p.n;
    out.p1 = out.rank == 1;
    out.p2 = out.p1 && out.symmetric;
    out.koszul = true;
    out.gldim_infinite = out.p2;
    out.as_gorenstein = out.nondegenerate && !out.gldim_infinite;
    out.calabi_yau = out.as_gorenstein && out.antisymmetric;
    return out;
}

bool zerodivisor_probe(const Presentation& p, const Tensor& v, int d_max, const Limits& limits) {
    validate_presentation(p);
    if (p.N != 2) throw InvalidInput("zerodivisor probe requires N = 2");
    if (v.degree != 1 || v.is_zero()) throw InvalidInput("probe vector must be nonzero of degree 1");
    const Subspace r = relation_space(p);
    if (r.dim() != 1) throw InvalidInput("zerodivisor probe requires dim R = 1");
    if (matrix_rank(coeff_matrix(r.rows.front())) <= 1)
        throw InvalidInput("zerodivisor probe requires rank(f) > 1");

    IdealSlices slices(p, d_max + 1, limits);
    for (int d = 0; d <= d_max; ++d) {
        for (std::uint64_t bw : slices.basis_words(d)) {
            Tensor a;
            a.n = p.n;
            a.degree = d;
            a.terms.emplace_back(bw, Rational(1));
            if (slices.project(tensor_product(a, v)).is_zero()) return false;
            if (slices.project(tensor_product(v, a)).is_zero()) return false;
        }
    }
    return true;
}

} // namespace nkz
