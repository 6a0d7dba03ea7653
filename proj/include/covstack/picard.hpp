#ifndef COVSTACK_PICARD_HPP
#define COVSTACK_PICARD_HPP

#include "covstack/chargroup.hpp"
#include "covstack/snf.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace covstack {

struct PicardProvenance {
    // uniform: { deg Delta }; triple: degrees of the two discriminant rows
    std::vector<Int> deg_delta;
    std::vector<std::array<Int, 2>> rows_e;       // triple: classes in the e-basis
    std::vector<std::array<Int, 2>> rows_v;       // triple: pipeline rows in the v-basis
    std::vector<std::array<Int, 2>> paper_rows_v; // printed closed-form rows
    // pipeline rows agree with the printed rows up to the sign of each row
    // (a relation and its negation present the same group)
    bool paper_closed_form_match = true;
    std::vector<std::string> notes;
};

struct PicardResult {
    std::string kind; // "uniform" | "hyperelliptic" | "triple"
    std::vector<Int> params;
    AbelianPresentation presentation;
    std::optional<Int> order; // nullopt = infinite
    PicardProvenance provenance;
};

/// Picard group of the stack of smooth uniform degree-r covers of P^n with
/// branch degree d: cyclic of order
///     deg Delta * r * gcd(d, n+1) / (n+1),
/// with deg Delta computed by Chow expansion; the closed form
/// r (rd-1)^n gcd(d, n+1) is cross-asserted.  Requires rd >= 2.
PicardResult picard_uniform(unsigned n, unsigned r, unsigned d);

/// Hyperelliptic genus-g case: picard_uniform(1, 2, g+1), with the parity
/// closed form 2(2g+1) (g even) / 4(2g+1) (g odd) asserted.
PicardResult hyperelliptic_picard(unsigned g);

struct TripleRows {
    GammaLattice lattice;
    std::vector<Int> deg_delta;
    std::vector<std::array<Int, 2>> rows_e;
    std::vector<std::array<Int, 2>> rows_v;
    std::vector<std::string> notes;
};

/// Classes of Delta_1, Delta_2 and Z in the e-basis and the v-basis, from
/// the cone-class pipeline (bidegree of Z via Chow expansion).  Interior
/// parameters only: 2d1-d2 >= 1 and 2d2-d1 >= 1.
TripleRows triple_pipeline_rows(const Int &d1, const Int &d2);

/// The three relation rows in the v-basis as a 3x2 integer matrix.
IntMatrix triple_relation_matrix(const Int &d1, const Int &d2);

/// Picard presentation of the stack of smooth triple covers: two generators
/// v1, v2 and the three hypersurface relations, reduced by Smith normal
/// form.  Provenance carries the pipeline rows next to the closed-form rows
/// for the parity case (paper_rows_v, with the even third relation taken as
/// (4d2-5d1)v1 + (4d1-5d2)v2) and a match flag.
PicardResult triple_picard(const Int &d1, const Int &d2);

/// binom(rd+n, n) - (n+1)^2.
Int stack_dimension_uniform(unsigned n, unsigned r, unsigned d);
/// (2d1-d2+1)(2d2-d1+1) - 5; boundary degrees allowed.
Int stack_dimension_triple(const Int &d1, const Int &d2);

} // namespace covstack

#endif
