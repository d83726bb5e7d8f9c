#include "nkz/distributivity.hpp"

#include <array>
#include <unordered_map>

namespace nkz {

namespace {

/// Dedup pool of canonical subspaces with hash buckets.
class ElementPool {
public:
    std::pair<std::uint32_t, bool> find_or_add(Subspace s) {
        const std::uint64_t h = s.hash();
        auto& bucket = index_[h];
        for (std::uint32_t idx : bucket)
            if (elems_[idx] == s) return {idx, false};
        const auto idx = static_cast<std::uint32_t>(elems_.size());
        elems_.push_back(std::move(s));
        bucket.push_back(idx);
        return {idx, true};
    }
    const Subspace& operator[](std::uint32_t i) const { return elems_[i]; }
    std::size_t size() const { return elems_.size(); }
    std::vector<Subspace>& elements() { return elems_; }

private:
    std::vector<Subspace> elems_;
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> index_;
};

} // namespace

Lattice generate_sublattice(const Presentation& p, int m, std::size_t cap, const Limits& limits) {
    validate_presentation(p);
    if (m < p.N) throw InvalidInput("sublattice degree m must be >= N");
    if (m > limits.max_degree)
        throw ResourceLimit("sublattice degree " + std::to_string(m) + " exceeds cap " +
                            std::to_string(limits.max_degree));
    const Subspace r = relation_space(p);
    if (r.is_zero()) throw InvalidInput("sublattice of a presentation without relations");

    std::vector<Subspace> gens;
    for (int i = 0; i + p.N <= m; ++i) gens.push_back(extend(r, i, m - p.N - i));

    // Every lattice element lives inside the join of the generators; work in
    // coordinates relative to it so the closure runs in dimension dim(J).
    Subspace join = gens.front();
    for (std::size_t i = 1; i < gens.size(); ++i) join = sum(join, gens[i]);

    ElementPool pool;
    Lattice out;
    out.degree = m;
    for (const auto& g : gens) {
        auto [idx, fresh] = pool.find_or_add(compress(join, g));
        out.generator_indices.push_back(idx);
    }

    // Worklist closure over pairs; op tables grow with the element list.
    std::unordered_map<std::uint64_t, std::uint32_t> sums, meets;
    auto key = [](std::uint32_t a, std::uint32_t b) {
        if (a > b) std::swap(a, b);
        return (static_cast<std::uint64_t>(a) << 32) | b;
    };
    std::size_t frontier = 0;
    while (frontier < pool.size()) {
        const auto j = static_cast<std::uint32_t>(frontier++);
        for (std::uint32_t i = 0; i <= j; ++i) {
            const auto k = key(i, j);
            sums.emplace(k, pool.find_or_add(sum(pool[i], pool[j])).first);
            meets.emplace(k, pool.find_or_add(intersect(pool[i], pool[j])).first);
            if (pool.size() > cap)
                throw ResourceLimit("sublattice closure exceeded the element cap " +
                                    std::to_string(cap));
        }
    }

    const std::size_t count = pool.size();
    out.sum_table.assign(count * count, 0);
    out.meet_table.assign(count * count, 0);
    for (std::uint32_t i = 0; i < count; ++i)
        for (std::uint32_t j = 0; j < count; ++j) {
            out.sum_table[i * count + j] = sums.at(key(i, j));
            out.meet_table[i * count + j] = meets.at(key(i, j));
        }
    out.elements.reserve(count);
    for (std::uint32_t i = 0; i < count; ++i)
        out.elements.push_back(decompress(join, pool[static_cast<std::uint32_t>(i)]));
    return out;
}

Lattice lattice_from_subspaces(int degree, std::vector<Subspace> elements) {
    Lattice out;
    out.degree = degree;
    for (const auto& e : elements)
        if (e.degree != degree) throw InvalidInput("lattice element of wrong degree");
    out.elements = std::move(elements);
    return out;
}

DistributivityResult check_distributive(const Lattice& l) {
    const std::size_t count = l.elements.size();
    auto table_sum = [&](std::size_t i, std::size_t j) { return l.sum_table[i * count + j]; };
    auto table_meet = [&](std::size_t i, std::size_t j) { return l.meet_table[i * count + j]; };

    // One role assignment of an unordered triple: E distributes over F + G.
    auto check_roles = [&](std::size_t e, std::size_t f, std::size_t g) -> bool {
        if (l.has_tables()) {
            const auto lhs = table_meet(e, table_sum(f, g));
            const auto rhs = table_sum(table_meet(e, f), table_meet(e, g));
            return lhs == rhs;
        }
        const Subspace lhs = intersect(l.elements[e], sum(l.elements[f], l.elements[g]));
        const Subspace rhs =
            sum(intersect(l.elements[e], l.elements[f]), intersect(l.elements[e], l.elements[g]));
        return lhs == rhs;
    };

    for (std::size_t a = 0; a < count; ++a)
        for (std::size_t b = a; b < count; ++b)
            for (std::size_t c = b; c < count; ++c) {
                const std::array<std::array<std::size_t, 3>, 3> roles = {
                    {{a, b, c}, {b, a, c}, {c, a, b}}};
                for (const auto& [e, f, g] : roles) {
                    if (check_roles(e, f, g)) continue;
                    return {false,
                            std::array<Subspace, 3>{l.elements[e], l.elements[f], l.elements[g]}};
                }
            }
    return {true, std::nullopt};
}

GerasimovReport gerasimov_suite(const Presentation& p, int m_max, std::size_t cap,
                                const Limits& limits) {
    validate_presentation(p);
    GerasimovReport report;
    report.single_relation_hypothesis = relation_space(p).dim() == 1;
    for (int m = p.N; m <= m_max; ++m) {
        Lattice l = generate_sublattice(p, m, cap, limits);
        DistributivityResult res = check_distributive(l);
        report.entries.push_back({m, l.elements.size(), res.distributive});
        if (!res.distributive) {
            report.all_distributive = false;
            if (!report.violating_triple) report.violating_triple = res.violating_triple;
        }
    }
    return report;
}

} // namespace nkz
