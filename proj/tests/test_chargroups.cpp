#include "doctest.h"

#include "covstack/chargroup.hpp"
#include "covstack/chow.hpp"

#include <random>

using namespace covstack;

TEST_CASE("uniform character index") {
    CHECK(uniform_char_index(1, 1) == 1);
    CHECK(uniform_char_index(1, 2) == 1); // gcd(2,2) = 2
    CHECK(uniform_char_index(1, 3) == 3); // gcd(3,2) = 1
    CHECK(uniform_char_index(2, 6) == 2);
}

namespace {

// independent residue count on the d1*d2 torus
Int brute_lattice_index(const Int &d1, const Int &d2) {
    Int L = d1 * d2;
    Int count = 0;
    for (Int x1 = 0; x1 < L; ++x1)
        for (Int x2 = 0; x2 < L; ++x2)
            if (gamma_membership(x1, x2, d1, d2)) ++count;
    return L * L / count;
}

} // namespace

TEST_CASE("gamma lattice bases") {
    SUBCASE("(1,1): v1 = e1 + e2, v2 = e2") {
        GammaLattice lat = gamma_lattice(1, 1);
        CHECK(lat.v1 == char_e(1, 1));
        CHECK(lat.v2 == char_e(0, 1));
        CHECK(!lat.even_case);
    }
    SUBCASE("(2,2): v1 = 2e1 + e2, v2 = e2") {
        GammaLattice lat = gamma_lattice(2, 2);
        CHECK(lat.v1 == char_e(2, 1));
        CHECK(lat.v2 == char_e(0, 1));
        CHECK(lat.even_case);
    }
    SUBCASE("(3,2): v1 = 2e1 + 4e2, v2 = 3e2") {
        GammaLattice lat = gamma_lattice(3, 2);
        CHECK(lat.v1 == char_e(2, 4));
        CHECK(lat.v2 == char_e(0, 3));
    }
    SUBCASE("(even, odd) directs the caller to swap") {
        CHECK_THROWS_WITH_AS(gamma_lattice(2, 1),
                             "d1 even and d2 odd: swap the branch degrees (the swapped stack is "
                             "canonically isomorphic)",
                             std::domain_error);
    }
}

TEST_CASE("gamma lattice index matches residue counting") {
    for (Int d1 = 1; d1 <= 12; ++d1)
        for (Int d2 = 1; d2 <= 12; ++d2) {
            if (d1 % 2 == 0 && d2 % 2 != 0) continue; // served by swapping
            GammaLattice lat = gamma_lattice(d1, d2);
            // both congruences hold for the basis
            for (const Character *v : {&lat.v1, &lat.v2})
                CHECK(gamma_membership(v->coords[0], v->coords[1], d1, d2));
            // |det| of the basis equals the index counted independently
            Int det = lat.v1.coords[0] * lat.v2.coords[1] - lat.v1.coords[1] * lat.v2.coords[0];
            CHECK(abs(det) == brute_lattice_index(d1, d2));
            CHECK(gamma_lattice_index(d1, d2) == brute_lattice_index(d1, d2));
        }
}

TEST_CASE("cone classes in the e-basis") {
    CHECK(cone_class_e(0, 0, 5, 7) == char_e(0, 0));
    // Delta_1 at (2,2): bidegree (2,0)
    CHECK(cone_class_e(2, 0, 2, 2) == char_e(4, -2));
    // Z at (2,2): bidegree (2,2)
    CHECK(cone_class_e(2, 2, 2, 2) == char_e(-4, -4));
    // odd numerator
    CHECK_THROWS_WITH_AS(cone_class_e(1, 0, 1, 1), "non-integral class", std::domain_error);
}

TEST_CASE("v-basis change") {
    GammaLattice lat = gamma_lattice(2, 2);
    CHECK(to_v_basis(char_e(4, -2), lat) == char_v(2, -4, 2, 2));
    CHECK(to_v_basis(char_e(-4, -4), lat) == char_v(-2, -2, 2, 2));
    CHECK(to_v_basis(lat.v1, lat) == char_v(1, 0, 2, 2));
    CHECK_THROWS_WITH_AS(to_v_basis(char_e(1, 0), lat), "class not Gamma-invariant",
                         std::domain_error);
}

TEST_CASE("to_v_basis inverts from_v_basis") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 200; ++trial) {
        Int d1 = 1 + rng() % 12, d2 = 1 + rng() % 12;
        if (d1 % 2 == 0 && d2 % 2 != 0) continue;
        GammaLattice lat = gamma_lattice(d1, d2);
        Int m1 = Int(static_cast<std::int64_t>(rng() % 21) - 10);
        Int m2 = Int(static_cast<std::int64_t>(rng() % 21) - 10);
        Character v = char_v(m1, m2, d1, d2);
        CHECK(to_v_basis(from_v_basis(v, lat), lat) == v);
    }
}

TEST_CASE("cone classes of the three hypersurfaces are lattice members") {
    for (Int d1 = 1; d1 <= 12; ++d1)
        for (Int d2 = 1; d2 <= 12; ++d2) {
            Int e1 = 2 * d1 - d2, e2 = 2 * d2 - d1;
            if (e1 < 1 || e2 < 1) continue; // interior only
            Int dd1 = d1, dd2 = d2;
            if (d1 % 2 == 0 && d2 % 2 != 0) { dd1 = d2; dd2 = d1; } // swap rule
            Int f1 = 2 * dd1 - dd2, f2 = 2 * dd2 - dd1;
            auto [z1, z2] = z_bidegree(dd1, dd2);
            const std::pair<Int, Int> bidegrees[3] = {
                {2 * (f1 - 1), 0}, {0, 2 * (f2 - 1)}, {z1, z2}};
            for (const auto &[a1, a2] : bidegrees) {
                Character c = cone_class_e(a1, a2, dd1, dd2);
                CHECK(gamma_membership(c.coords[0], c.coords[1], dd1, dd2));
            }
        }
}

TEST_CASE("even-case closed form of the cone class lemma") {
    // (a1 - 2a2) v1 + (-2a1 + a2) v2 against the e-basis pipeline
    std::mt19937_64 rng(67);
    for (Int d1 = 2; d1 <= 12; d1 += 2)
        for (Int d2 = 2; d2 <= 12; d2 += 2) {
            GammaLattice lat = gamma_lattice(d1, d2);
            for (int trial = 0; trial < 10; ++trial) {
                Int a1 = Int(static_cast<std::int64_t>(rng() % 41) - 20);
                Int a2 = Int(static_cast<std::int64_t>(rng() % 41) - 20);
                Character v = to_v_basis(cone_class_e(a1, a2, d1, d2), lat);
                CHECK(v.coords[0] == a1 - 2 * a2);
                CHECK(v.coords[1] == -2 * a1 + a2);
            }
        }
}

TEST_CASE("isomorphism checks") {
    SUBCASE("n=1, d=2 over Q: the Gm x PGL_2 case, mu_2 killed") {
        IsomReport rep = isom_check(1, 2, 20, Field::rationals(), 1);
        CHECK(rep.passed);
        CHECK(rep.residue_case == 0);
        CHECK(rep.scalar_checks == 2); // alpha = 1 and alpha = -1 (diag(-1,-1))
    }
    SUBCASE("n=2, d=4 over F_101: d = 1 mod 3") {
        IsomReport rep = isom_check(2, 4, 25, Field::gf(101), 2);
        CHECK(rep.passed);
        CHECK(rep.residue_case == 1);
        CHECK(rep.multiplicative_checks == 25);
        CHECK(rep.injectivity_checks > 0);
    }
    SUBCASE("n=2, d=5 over F_101: d = -1 mod 3") {
        IsomReport rep = isom_check(2, 5, 25, Field::gf(101), 3);
        CHECK(rep.passed);
        CHECK(rep.residue_case == -1);
    }
    SUBCASE("n=1, d=6 over F_13: the Gm x PGL_2 case with many roots of unity") {
        IsomReport rep = isom_check(1, 6, 20, Field::gf(13), 4);
        CHECK(rep.passed);
        CHECK(rep.residue_case == 0);
        CHECK(rep.scalar_checks == 6); // gcd(6, 12) = 6 sixth roots of unity in F_13
    }
    SUBCASE("residues without a closed form are rejected") {
        CHECK_THROWS_WITH_AS(isom_check(3, 2, 5, Field::gf(101), 5),
                             "no closed-form isomorphism given", std::domain_error);
    }
}
