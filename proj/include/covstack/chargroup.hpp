#ifndef COVSTACK_CHARGROUP_HPP
#define COVSTACK_CHARGROUP_HPP

#include "covstack/scalar.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace covstack {

/// Basis a character's coordinates refer to:
///  - Det: rank 1, generated by det on GL_{n+1};
///  - E:   rank 2, e1 = projection Gm x GL2 -> Gm, e2 = (alpha, A) -> det A;
///  - V:   the basis (v1, v2) of the Gamma(d1,d2) character lattice.
enum class CharBasis { Det, E, V };

struct Character {
    CharBasis basis = CharBasis::E;
    std::vector<Int> coords;
    Int d1 = 0, d2 = 0; // populated for the V basis

    bool operator==(const Character &o) const {
        return basis == o.basis && coords == o.coords && d1 == o.d1 && d2 == o.d2;
    }
    std::string str() const;
};

Character char_e(const Int &c1, const Int &c2);
Character char_v(const Int &m1, const Int &m2, const Int &d1, const Int &d2);

/// Index of the character group of GL_{n+1}/mu_d inside that of GL_{n+1}:
/// d / gcd(d, n+1).  det^{that power} generates the quotient's characters.
Int uniform_char_index(unsigned n, const Int &d);

/// Membership in the Gamma(d1,d2) character lattice:
/// x1 = 2 x2 (mod d1) and x1 = 0 (mod d2).
bool gamma_membership(const Int &x1, const Int &x2, const Int &d1, const Int &d2);

/// Index of the congruence lattice in Z^2, from the congruences alone
/// (cokernel order via Smith normal form) — independent of any basis.
Int gamma_lattice_index(const Int &d1, const Int &d2);

/// Basis of the Gamma(d1,d2) character lattice in the e-basis.
/// d1 odd:        v1 = d2 e1 + (d1+1)d2/2 e2,  v2 = d1 e2
/// d1, d2 even:   v1 = d2 e1 + d2/2 e2,        v2 = d1/2 e2
/// d1 even with d2 odd is rejected with an error directing the caller to
/// swap (the swapped stack is canonically isomorphic).  Construction
/// verifies both congruences for v1, v2 and that |det(v1, v2)| equals the
/// congruence-lattice index.
struct GammaLattice {
    Int d1, d2;
    bool even_case; // both even; otherwise d1 odd
    Character v1, v2;
};

GammaLattice gamma_lattice(const Int &d1, const Int &d2);

/// Character (e-basis) by which the equation of an invariant hypersurface
/// of bidegree (a1, a2) transforms:
/// ((a1 - 2a2) d2,  -(a1(2d1 - d2) + a2(2d2 - d1))/2).
/// Throws "non-integral class" when the e2 numerator is odd.
Character cone_class_e(const Int &a1, const Int &a2, const Int &d1, const Int &d2);

/// Exact change of basis into (v1, v2); requires lattice membership.
Character to_v_basis(const Character &c, const GammaLattice &lattice);
/// m1 v1 + m2 v2 written in the e-basis.
Character from_v_basis(const Character &c, const GammaLattice &lattice);

/// Numerical verification of the closed-form isomorphisms for
/// GL_{n+1}/mu_d with d = 0, 1, -1 (mod n+1):
///   d = 0:  [A] -> (det(A)^q, [A])   into Gm x PGL_{n+1}
///   d = 1:  [A] -> det(A)^q  A       into GL_{n+1}
///   d = -1: [A] -> det(A)^{-q} A     into GL_{n+1}
/// Checks multiplicativity on random pairs, that scalar matrices alpha*I
/// with alpha^d = 1 land on the identity, and (d = +-1) injectivity on
/// random non-equivalent classes.  Other residues throw
/// "no closed-form isomorphism given".
struct IsomReport {
    bool passed = true;
    unsigned multiplicative_checks = 0;
    unsigned scalar_checks = 0;
    unsigned injectivity_checks = 0;
    int residue_case = 0; // 0, 1 or -1
    std::string failure;  // witness description when !passed
};

IsomReport isom_check(unsigned n, const Int &d, unsigned samples, const Field &field,
                      std::uint64_t seed);

} // namespace covstack

#endif
