#pragma once

#include <optional>
#include <vector>

#include "nkz/presentation.hpp"

namespace nkz {

/// Sublattice of L(V^{xm}) generated by the spaces V^{xi} (x) R (x) V^{xj},
/// closed under pairwise sum and intersection. Elements are canonical and
/// pairwise distinct; when produced by generate_sublattice the lattice also
/// carries the full sum/meet operation tables, making triple checks pure
/// lookups.
struct Lattice {
    int degree = 0;
    std::vector<Subspace> elements;
    std::vector<std::size_t> generator_indices;
    /// op_table[i * elements.size() + j]; empty when constructed directly.
    std::vector<std::uint32_t> sum_table;
    std::vector<std::uint32_t> meet_table;

    bool has_tables() const { return !sum_table.empty(); }
};

/// Fixed-point closure starting from the m - N + 1 generators. Raises
/// ResourceLimit past `cap` elements. Requires m >= N.
Lattice generate_sublattice(const Presentation& p, int m, std::size_t cap = 20000,
                            const Limits& limits = {});

/// A lattice assembled from explicit subspaces (not necessarily closed);
/// check_distributive then computes sums and meets directly.
Lattice lattice_from_subspaces(int degree, std::vector<Subspace> elements);

struct DistributivityResult {
    bool distributive = true;
    /// First violating triple (E, F, G) with E meet (F + G) != (E meet F) + (E meet G).
    std::optional<std::array<Subspace, 3>> violating_triple;
};

/// Tests E meet (F + G) = (E meet F) + (E meet G) for every triple of
/// elements, each unordered triple in all three role assignments.
DistributivityResult check_distributive(const Lattice& l);

struct GerasimovReport {
    struct Entry {
        int m = 0;
        std::size_t lattice_size = 0;
        bool distributive = true;
    };
    std::vector<Entry> entries;
    bool single_relation_hypothesis = true; // dim R = 1
    bool all_distributive = true;
    std::optional<std::array<Subspace, 3>> violating_triple;
};

/// Runs generate_sublattice + check_distributive for every m in N..m_max.
/// The one-dimensional-relation hypothesis is recorded, not enforced: the
/// suite also runs on out-of-hypothesis control presentations.
GerasimovReport gerasimov_suite(const Presentation& p, int m_max, std::size_t cap = 20000,
                                const Limits& limits = {});

} // namespace nkz
