#ifndef COVSTACK_COVER_HPP
#define COVSTACK_COVER_HPP

#include "covstack/form.hpp"

#include <random>
#include <string>

namespace covstack {

/// Degree-r uniform cyclic cover of P^n branched along { F = 0 }, deg F = rd.
struct UniformCoverSpec {
    unsigned n, r, d;
    Form branch_form;

    UniformCoverSpec(unsigned n, unsigned r, unsigned d, Form f);
};

/// mu_3-cover of P^1 with branch forms f1 (degree 2d1-d2) and f2 (degree
/// 2d2-d1).  Branch degrees satisfy 0 <= d1 <= 2d2 and 0 <= d2 <= 2d1.
struct TripleCoverSpec {
    Int d1, d2;
    Form f1, f2;

    TripleCoverSpec(Form f1, Form f2); // derives (d1, d2) from the degrees
};

/// Multiplication table of a cover algebra on a fixed basis.  Structure
/// constants are general polynomials: the deliberately broken triple-cover
/// tables (h != f1 f2) need inhomogeneous entries.
struct CoverAlgebra {
    unsigned rank = 0;
    unsigned grading_modulus = 1;
    unsigned num_vars = 0;
    Field field;
    std::vector<std::string> basis_labels;
    std::vector<unsigned> grades;
    // table[i][j] = coefficients of e_i * e_j in the basis
    std::vector<std::vector<std::vector<Poly>>> table;

    std::vector<Poly> multiply(const std::vector<Poly> &x, const std::vector<Poly> &y) const;
    std::vector<Poly> basis_element(unsigned i) const;
    /// Structure constants respect the mu_r grading.
    bool grading_respected() const;
};

/// Rank-r algebra O + L + ... + L^{r-1} with t^i t^j = t^{i+j} for
/// i+j < r and F t^{i+j-r} otherwise.
CoverAlgebra build_uniform_algebra(const UniformCoverSpec &spec);

struct AssociatorViolation {
    unsigned i, j, k;
    std::vector<Poly> associator; // (e_i e_j) e_k - e_i (e_j e_k)
};

struct AssociativityAudit {
    bool associative = true;
    std::vector<AssociatorViolation> violations;
};

struct TripleAlgebraResult {
    CoverAlgebra algebra;
    AssociativityAudit audit;
};

/// Rank-3 table t1^2 = f1 t2, t2^2 = f2 t1, t1 t2 = h, with h defaulting to
/// f1 f2.  A supplied h is used verbatim so the failure mode is observable;
/// the audit expands every (e_i e_j) e_k - e_i (e_j e_k).
TripleAlgebraResult build_triple_algebra(const Form &f1, const Form &f2,
                                         const std::optional<Poly> &h = std::nullopt);

enum class VerdictStrength {
    Exact,        // decided over the algebraic closure
    BoundedSearch // only over the enumerated extensions
};

struct SmoothnessVerdict {
    bool smooth = false;
    VerdictStrength strength = VerdictStrength::Exact;
    unsigned extension_bound = 0; // meaningful for BoundedSearch
    std::optional<std::vector<Scalar>> witness; // singular point when found
    std::string detail;
};

/// n = 1: exact via the binary discriminant.  n >= 2: bounded search for
/// singular points over GF(p^j), j <= extension_bound (finite fields only);
/// a found witness settles singularity exactly, absence only certifies
/// smoothness over the enumerated fields.  Requires the characteristic not
/// to divide 2rd.
SmoothnessVerdict is_smooth_uniform(const UniformCoverSpec &spec, unsigned extension_bound = 1,
                                    std::uint64_t budget = kDefaultSearchBudget);

/// Exact: f1 and f2 squarefree and without common projective zero.
/// Degree <= 1 branch forms bypass the multiple-root test.  When both
/// branch degrees are >= 2 the characteristic must not divide
/// 2(2d1-d2)(2d2-d1).
SmoothnessVerdict is_smooth_triple(const TripleCoverSpec &spec);

struct WitnessPair {
    Form form;                 // homogenization of sum_i a_i (x_i^m - x_i^2)
    std::vector<Scalar> point; // the expected unique singular point (1:0:...:0)
};

/// Singular-witness construction: g(x) = x^2 (x^{m-2} - 1) has a double
/// root at 0 and no other multiple root; F is the homogenization of
/// sum_i a_i g(x_i).  Requires m >= 3, nonzero a_i, and characteristic not
/// dividing m, m-2 or 2.
WitnessPair generate_singular_witness(unsigned n, unsigned m, const Field &field,
                                      const std::vector<Scalar> &coeffs);

struct WitnessVerification {
    bool partials_vanish = false;
    bool linear_rank_full = false;  // linear parts of dehomogenized partials have rank n
    bool unique_singular = false;   // exhaustive search finds exactly the expected point
    SingularSearchResult search;

    bool ok() const { return partials_vanish && linear_rank_full && unique_singular; }
};

/// Checks the three companion conditions; the search runs over the base
/// field and extensions up to extension_bound (finite fields only).
WitnessVerification verify_singular_witness(const WitnessPair &witness, unsigned extension_bound = 2,
                                            std::uint64_t budget = kDefaultSearchBudget);

struct WitnessGeneration {
    WitnessPair witness;
    WitnessVerification verification;
    std::vector<Scalar> coeffs;
    unsigned attempts = 0;
};

/// Draws random nonzero a_i until the verification passes; generic failures
/// (an extra singular point over a small field) trigger a retry.
WitnessGeneration generate_singular_witness_random(unsigned n, unsigned m, const Field &field,
                                                   std::mt19937_64 &rng, unsigned max_attempts = 32,
                                                   unsigned extension_bound = 2,
                                                   std::uint64_t budget = kDefaultSearchBudget);

} // namespace covstack

#endif
