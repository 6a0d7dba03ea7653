#ifndef COVSTACK_SNF_HPP
#define COVSTACK_SNF_HPP

#include "covstack/intmatrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace covstack {

struct SmithResult {
    std::vector<Int> factors; // d_1 | d_2 | ..., nonnegative, trailing zeros = free rank
    IntMatrix left;           // unimodular U
    IntMatrix right;          // unimodular V, with U*M*V = diag(factors)
};

/// Smith normal form by unimodular row/column operations.  Pivoting picks
/// the smallest nonzero magnitude in the working submatrix to limit
/// coefficient growth.
SmithResult smith_normal_form(const IntMatrix &m);

/// Finitely presented abelian group Z^g / rowspan(relations), normalized.
/// invariant_factors keeps only entries >= 2 (unit factors dropped).
struct AbelianPresentation {
    std::size_t generator_count = 0;
    IntMatrix relations;
    std::vector<Int> invariant_factors;
    std::size_t free_rank = 0;

    bool is_finite() const { return free_rank == 0; }
    /// Group order; nullopt when infinite.
    std::optional<Int> order() const;
    /// "Z/2 x Z/6", "Z^2", "Z x Z/10", "trivial"
    std::string structure() const;
};

AbelianPresentation group_from_relations(std::size_t generators, const IntMatrix &relations);

} // namespace covstack

#endif
