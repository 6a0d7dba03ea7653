#include "doctest.h"

#include "covstack/cover.hpp"
#include "covstack/form_io.hpp"
#include "test_util.hpp"

#include <random>

using namespace covstack;
using testutil::rnd_binary_form;
using testutil::rnd_invertible;
using testutil::rnd_nonzero;

namespace {

Form parse(const Field &field, const std::string &text) {
    Form f = parse_form_text(text);
    return field.is_rational() ? f : f.change_field(field);
}

} // namespace

TEST_CASE("uniform cover algebras") {
    Field q = Field::rationals();
    SUBCASE("r = 1 is the trivial rank-1 algebra") {
        Form f = parse(q, "1 1,0\n1 0,1\n"); // x+y, d=1
        UniformCoverSpec spec(1, 1, 1, f);
        CoverAlgebra alg = build_uniform_algebra(spec);
        CHECK(alg.rank == 1);
        CHECK(alg.grading_respected());
        auto one = alg.basis_element(0);
        CHECK(alg.multiply(one, one) == one);
    }
    SUBCASE("r = 2: t*t = F") {
        Form f = parse(q, "1 4,0\n1 0,4\n");
        UniformCoverSpec spec(1, 2, 2, f);
        CoverAlgebra alg = build_uniform_algebra(spec);
        auto t = alg.basis_element(1);
        auto prod = alg.multiply(t, t);
        CHECK(prod[0] == f.poly());
        CHECK(prod[1].is_zero());
        CHECK(alg.grading_respected());
    }
    SUBCASE("r = 3, F = 1: the Kummer algebra of mu_3") {
        Poly one_p(2, q);
        one_p.add_term({0, 0}, Scalar::one(q));
        UniformCoverSpec spec(1, 3, 0, Form(one_p)); // degree-0 test case
        CoverAlgebra alg = build_uniform_algebra(spec);
        auto t = alg.basis_element(1), t2 = alg.basis_element(2);
        CHECK(alg.multiply(t, t) == t2);
        CHECK(alg.multiply(t2, t2) == t);  // t^4 = F t = t
        CHECK(alg.multiply(t, t2) == alg.basis_element(0));
        CHECK(alg.grading_respected());
    }
    SUBCASE("r = 5 grading and reduction") {
        Field f11 = Field::gf(11);
        std::mt19937_64 rng(89);
        Form f = testutil::rnd_binary_form(f11, 5, rng);
        CoverAlgebra alg = build_uniform_algebra(UniformCoverSpec(1, 5, 1, f));
        CHECK(alg.grading_respected());
        // t^3 * t^4 = F t^2
        auto prod = alg.multiply(alg.basis_element(3), alg.basis_element(4));
        CHECK(prod[2] == f.poly());
        for (unsigned k : {0u, 1u, 3u, 4u}) CHECK(prod[k].is_zero());
    }
    SUBCASE("spec validation") {
        Form f = parse(q, "1 4,0\n");
        CHECK_THROWS_AS(UniformCoverSpec(1, 2, 3, f), std::domain_error); // degree mismatch
        CHECK_THROWS_AS(UniformCoverSpec(2, 2, 2, f), std::domain_error); // wrong variable count
        CHECK_THROWS_AS(UniformCoverSpec(1, 2, 2, Form::zero(2, 4, q)), std::domain_error);
    }
}

TEST_CASE("triple cover algebra and the associativity audit") {
    Field q = Field::rationals();
    SUBCASE("default h = f1 f2 is associative") {
        std::mt19937_64 rng(71);
        Field f101 = Field::gf(101);
        for (int trial = 0; trial < 10; ++trial) {
            Form f1 = rnd_binary_form(f101, rng() % 5, rng);
            Form f2 = rnd_binary_form(f101, rng() % 5, rng);
            auto res = build_triple_algebra(f1, f2);
            CHECK(res.audit.associative);
            CHECK(res.audit.violations.empty());
            CHECK(res.algebra.grading_respected());
        }
    }
    SUBCASE("f1 = f2 = 1 gives the mu_3 group algebra") {
        Poly one_p(2, q);
        one_p.add_term({0, 0}, Scalar::one(q));
        auto res = build_triple_algebra(Form(one_p), Form(one_p));
        CHECK(res.audit.associative);
        auto t1 = res.algebra.basis_element(1), t2 = res.algebra.basis_element(2);
        CHECK(res.algebra.multiply(t1, t1) == t2);
        CHECK(res.algebra.multiply(t1, t2) == res.algebra.basis_element(0));
    }
    SUBCASE("h = f1 f2 + 1 reports the associator (t1 t1) t2 - t1 (t1 t2)") {
        Form fx = parse(q, "1 1,0\n"); // x
        Form fy = parse(q, "1 0,1\n"); // y
        Poly h = fx.poly() * fy.poly();
        h.add_term({0, 0}, Scalar::one(q)); // xy + 1, deliberately broken
        auto res = build_triple_algebra(fx, fy, h);
        CHECK(!res.audit.associative);
        bool found = false;
        for (const auto &v : res.audit.violations)
            if (v.i == 1 && v.j == 1 && v.k == 2) {
                found = true;
                // (t1 t1) t2 - t1 (t1 t2) = (f1 f2 - h) t1 = -t1
                CHECK(v.associator[0].is_zero());
                CHECK(v.associator[1] == Poly::constant(2, Scalar(Int(-1))));
                CHECK(v.associator[2].is_zero());
            }
        CHECK(found);
    }
}

TEST_CASE("uniform smoothness verdicts") {
    Field q = Field::rationals();
    SUBCASE("genus-1 double cover: xy(x-y)(x+y)") {
        // (x y) (x-y) (x+y) = x^3 y - x y^3
        Form f = parse(q, "1 3,1\n-1 1,3\n");
        UniformCoverSpec spec(1, 2, 2, f);
        auto v = is_smooth_uniform(spec);
        CHECK(v.smooth);
        CHECK(v.strength == VerdictStrength::Exact);
    }
    SUBCASE("square factor is singular") {
        Form f = parse(q, "1 2,2\n"); // x^2 y^2
        auto v = is_smooth_uniform(UniformCoverSpec(1, 2, 2, f));
        CHECK(!v.smooth);
        CHECK(v.strength == VerdictStrength::Exact);
    }
    SUBCASE("Fermat sextic surface over F_7, two extensions") {
        Field f7 = Field::gf(7);
        Form f = parse(f7, "1 6,0,0\n1 0,6,0\n1 0,0,6\n");
        auto v = is_smooth_uniform(UniformCoverSpec(2, 2, 3, f), 2);
        CHECK(v.smooth);
        CHECK(v.strength == VerdictStrength::BoundedSearch);
        CHECK(v.extension_bound == 2);
    }
    SUBCASE("singular surface comes with a witness point") {
        Field f7 = Field::gf(7);
        Form f = parse(f7, "1 2,1,0\n"); // x0^2 x1
        auto v = is_smooth_uniform(UniformCoverSpec(2, 1, 3, f), 1);
        CHECK(!v.smooth);
        CHECK(v.strength == VerdictStrength::Exact);
        REQUIRE(v.witness.has_value());
        // every partial vanishes at the witness
        for (const Form &p : partials(f)) CHECK(p.eval(*v.witness).is_zero());
    }
    SUBCASE("bad characteristic") {
        Field f3 = Field::gf(3);
        Form f = parse(f3, "1 6,0\n1 0,6\n");
        CHECK_THROWS_WITH_AS(is_smooth_uniform(UniformCoverSpec(1, 2, 3, f)), "bad characteristic",
                             std::domain_error);
    }
    SUBCASE("n >= 2 over the rationals is out of reach") {
        Form f = parse(q, "1 2,0,0\n1 0,2,0\n1 0,0,2\n");
        CHECK_THROWS_AS(is_smooth_uniform(UniformCoverSpec(2, 1, 2, f)), std::domain_error);
    }
}

TEST_CASE("smoothness verdict is act_linear invariant") {
    Field f101 = Field::gf(101);
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 40; ++trial) {
        Form f = rnd_binary_form(f101, 6, rng);
        bool smooth = is_smooth_uniform(UniformCoverSpec(1, 2, 3, f)).smooth;
        ScalarMatrix a = rnd_invertible(2, f101, rng);
        Form g = act_linear(f, a, std::nullopt, {});
        CHECK(is_smooth_uniform(UniformCoverSpec(1, 2, 3, g)).smooth == smooth);
    }
}

namespace {

// exhaustive multiple-root detection for binary forms over F_5: a root of
// multiplicity >= 2 generates an extension of degree at most m/2 <= 3
bool has_multiple_root_brute(const Form &f) {
    unsigned m = f.degree();
    for (unsigned j = 1; 2 * j <= m; ++j) {
        Field ext = Field::gf(5, j);
        Poly lifted(2, ext);
        for (const auto &[e, c] : f.poly().terms())
            lifted.add_term(e, Scalar(ext, Int(c.gf_coeffs()[0])));
        Form g(std::move(lifted), f.degree());
        auto parts = partials(g);
        std::uint64_t q = ext.context()->order_u64();
        // points (1 : t) and (0 : 1)
        for (std::uint64_t code = 0; code <= q; ++code) {
            std::vector<Scalar> pt;
            if (code < q)
                pt = {Scalar::one(ext), Scalar(ext, ext.context()->decode(code))};
            else
                pt = {Scalar::zero(ext), Scalar::one(ext)};
            if (parts[0].eval(pt).is_zero() && parts[1].eval(pt).is_zero()) return true;
        }
    }
    return false;
}

} // namespace

TEST_CASE("n=1 verdict agrees with brute-force root detection over F_5") {
    Field f5 = Field::gf(5);
    std::mt19937_64 rng(79);
    for (unsigned m : {2u, 3u, 4u, 6u}) {
        for (int trial = 0; trial < 25; ++trial) {
            Form f = rnd_binary_form(f5, m, rng);
            // realize deg m as r*d with r = 1
            bool smooth = is_smooth_uniform(UniformCoverSpec(1, 1, m, f)).smooth;
            CHECK(smooth == !has_multiple_root_brute(f));
        }
    }
    // m = 5 hits the characteristic guard
    Form f = rnd_binary_form(f5, 5, rng);
    CHECK_THROWS_WITH_AS(is_smooth_uniform(UniformCoverSpec(1, 1, 5, f)), "bad characteristic",
                         std::domain_error);
}

TEST_CASE("triple cover smoothness") {
    Field q = Field::rationals();
    Form fx = parse(q, "1 1,0\n");
    Form fy = parse(q, "1 0,1\n");

    SUBCASE("distinct single roots are smooth") {
        auto v = is_smooth_triple(TripleCoverSpec(fx, fy));
        CHECK(v.smooth);
        CHECK(v.strength == VerdictStrength::Exact);
    }
    SUBCASE("common zero is not smooth") {
        auto v = is_smooth_triple(TripleCoverSpec(fx, fx));
        CHECK(!v.smooth);
        CHECK(v.detail == "f1 and f2 have a common root");
    }
    SUBCASE("multiple zero is not smooth") {
        Form f1 = parse(q, "1 2,1\n");  // x^2 y
        Form f2 = parse(q, "1 0,3\n1 3,0\n");
        auto v = is_smooth_triple(TripleCoverSpec(f1, f2));
        CHECK(!v.smooth);
        CHECK(v.detail == "f1 has a multiple root");
    }
    SUBCASE("degree constraints are validated") {
        Form quad = parse(q, "1 2,0\n1 0,2\n");
        CHECK_THROWS_AS(TripleCoverSpec(fx, quad), std::domain_error); // degrees (1,2): not 3 | 2e1+e2
    }
    SUBCASE("swap symmetry") {
        Field f101 = Field::gf(101);
        std::mt19937_64 rng(83);
        for (int trial = 0; trial < 30; ++trial) {
            unsigned e = 1 + rng() % 4;
            Form f1 = rnd_binary_form(f101, e, rng);
            Form f2 = rnd_binary_form(f101, e, rng); // equal degrees keep both orders valid
            CHECK(is_smooth_triple(TripleCoverSpec(f1, f2)).smooth ==
                  is_smooth_triple(TripleCoverSpec(f2, f1)).smooth);
        }
    }
}

TEST_CASE("singular witness construction") {
    SUBCASE("partials vanish at the expected point over Q") {
        auto pair = generate_singular_witness(2, 4, Field::rationals(),
                                              {Scalar(Int(1)), Scalar(Int(1))});
        // F = x1^4 + x2^4 - x1^2 x0^2 - x2^2 x0^2
        CHECK(pair.form.degree() == 4);
        for (const Form &p : partials(pair.form)) CHECK(p.eval(pair.point).is_zero());
    }
    SUBCASE("reduction mod 101 has exactly the expected singular point") {
        Field f101 = Field::gf(101);
        auto rational = generate_singular_witness(2, 4, Field::rationals(),
                                                  {Scalar(Int(1)), Scalar(Int(1))});
        WitnessPair reduced{rational.form.change_field(f101),
                            {Scalar::one(f101), Scalar::zero(f101), Scalar::zero(f101)}};
        auto ver = verify_singular_witness(reduced, 2);
        CHECK(ver.partials_vanish);
        CHECK(ver.linear_rank_full);
        CHECK(ver.unique_singular);
    }
    SUBCASE("linear parts have rank n") {
        Field f101 = Field::gf(101);
        auto pair = generate_singular_witness(3, 5, f101,
                                              {Scalar(f101, Int(3)), Scalar(f101, Int(7)),
                                               Scalar(f101, Int(11))});
        auto ver = verify_singular_witness(pair, 1);
        CHECK(ver.linear_rank_full);
        CHECK(ver.partials_vanish);
    }
    SUBCASE("preconditions") {
        Field f101 = Field::gf(101);
        std::vector<Scalar> a = {Scalar(f101, Int(1)), Scalar(f101, Int(1))};
        CHECK_THROWS_AS(generate_singular_witness(2, 2, f101, a), std::domain_error); // m >= 3
        CHECK_THROWS_WITH_AS(generate_singular_witness(2, 101, f101, a), "bad characteristic",
                             std::domain_error);
        CHECK_THROWS_WITH_AS(generate_singular_witness(2, 103, f101, a), "bad characteristic",
                             std::domain_error); // char | m-2
        CHECK_THROWS_AS(
            generate_singular_witness(2, 4, f101, {Scalar::zero(f101), Scalar::one(f101)}),
            std::domain_error); // zero coefficient
    }
    SUBCASE("randomized generation with retry") {
        Field f101 = Field::gf(101);
        std::mt19937_64 rng(87);
        auto gen = generate_singular_witness_random(2, 4, f101, rng, 32, 2);
        CHECK(gen.verification.ok());
        CHECK(gen.attempts >= 1);
    }
}
