#include "covstack/cover.hpp"

#include <sstream>
#include <stdexcept>

namespace covstack {

UniformCoverSpec::UniformCoverSpec(unsigned n_, unsigned r_, unsigned d_, Form f)
    : n(n_), r(r_), d(d_), branch_form(std::move(f)) {
    if (n < 1 || r < 1) throw std::domain_error("cover parameters must be positive");
    // d = 0 (constant branch form) is allowed as the degenerate torsor case
    if (branch_form.is_zero()) throw std::domain_error("branch form must be nonzero");
    if (branch_form.num_vars() != n + 1)
        throw std::domain_error("branch form must have n+1 variables");
    if (branch_form.degree() != 1ull * r * d)
        throw std::domain_error("branch form degree must equal r*d");
}

TripleCoverSpec::TripleCoverSpec(Form f1_, Form f2_) : f1(std::move(f1_)), f2(std::move(f2_)) {
    if (f1.is_zero() || f2.is_zero()) throw std::domain_error("branch forms must be nonzero");
    if (f1.num_vars() != 2 || f2.num_vars() != 2)
        throw std::domain_error("triple cover branch forms must be binary");
    if (f1.field() != f2.field()) throw std::domain_error("mixed coefficient fields");
    Int e1 = f1.degree(), e2 = f2.degree();
    // deg f1 = 2 d1 - d2 and deg f2 = 2 d2 - d1 invert to
    // d1 = (2 e1 + e2)/3, d2 = (e1 + 2 e2)/3
    if ((2 * e1 + e2) % 3 != 0)
        throw std::domain_error("degrees are not of the form (2d1-d2, 2d2-d1)");
    d1 = (2 * e1 + e2) / 3;
    d2 = (e1 + 2 * e2) / 3;
}

std::vector<Poly> CoverAlgebra::basis_element(unsigned i) const {
    std::vector<Poly> v(rank, Poly(num_vars, field));
    v[i] = Poly::constant(num_vars, Scalar::one(field));
    return v;
}

std::vector<Poly> CoverAlgebra::multiply(const std::vector<Poly> &x, const std::vector<Poly> &y) const {
    std::vector<Poly> out(rank, Poly(num_vars, field));
    for (unsigned i = 0; i < rank; ++i) {
        if (x[i].is_zero()) continue;
        for (unsigned j = 0; j < rank; ++j) {
            if (y[j].is_zero()) continue;
            Poly c = x[i] * y[j];
            for (unsigned k = 0; k < rank; ++k) {
                if (table[i][j][k].is_zero()) continue;
                out[k] = out[k] + c * table[i][j][k];
            }
        }
    }
    return out;
}

bool CoverAlgebra::grading_respected() const {
    for (unsigned i = 0; i < rank; ++i)
        for (unsigned j = 0; j < rank; ++j)
            for (unsigned k = 0; k < rank; ++k) {
                if (table[i][j][k].is_zero()) continue;
                if ((grades[i] + grades[j]) % grading_modulus != grades[k]) return false;
            }
    return true;
}

CoverAlgebra build_uniform_algebra(const UniformCoverSpec &spec) {
    CoverAlgebra alg;
    alg.rank = spec.r;
    alg.grading_modulus = spec.r;
    alg.num_vars = spec.n + 1;
    alg.field = spec.branch_form.field();
    for (unsigned i = 0; i < spec.r; ++i) {
        std::ostringstream label;
        if (i == 0)
            label << "1";
        else if (i == 1)
            label << "t";
        else
            label << "t^" << i;
        alg.basis_labels.push_back(label.str());
        alg.grades.push_back(i);
    }
    Poly one = Poly::constant(alg.num_vars, Scalar::one(alg.field));
    alg.table.assign(spec.r, std::vector<std::vector<Poly>>(
                                 spec.r, std::vector<Poly>(spec.r, Poly(alg.num_vars, alg.field))));
    for (unsigned i = 0; i < spec.r; ++i)
        for (unsigned j = 0; j < spec.r; ++j) {
            if (i + j < spec.r)
                alg.table[i][j][i + j] = one;
            else
                alg.table[i][j][i + j - spec.r] = spec.branch_form.poly();
        }
    return alg;
}

TripleAlgebraResult build_triple_algebra(const Form &f1, const Form &f2,
                                         const std::optional<Poly> &h) {
    if (f1.num_vars() != 2 || f2.num_vars() != 2)
        throw std::domain_error("triple cover branch forms must be binary");
    if (f1.field() != f2.field()) throw std::domain_error("mixed coefficient fields");
    Poly hh = h ? *h : f1.poly() * f2.poly();
    if (hh.num_vars() != 2 || hh.field() != f1.field())
        throw std::domain_error("h must be a binary polynomial over the same field");

    CoverAlgebra alg;
    alg.rank = 3;
    alg.grading_modulus = 3;
    alg.num_vars = 2;
    alg.field = f1.field();
    alg.basis_labels = {"1", "t1", "t2"};
    alg.grades = {0, 1, 2};
    Poly one = Poly::constant(2, Scalar::one(alg.field));
    alg.table.assign(3, std::vector<std::vector<Poly>>(3, std::vector<Poly>(3, Poly(2, alg.field))));
    for (unsigned i = 0; i < 3; ++i) {
        alg.table[0][i][i] = one;
        alg.table[i][0][i] = one;
    }
    alg.table[1][1][2] = f1.poly(); // t1*t1 = f1 t2
    alg.table[2][2][1] = f2.poly(); // t2*t2 = f2 t1
    alg.table[1][2][0] = hh;        // t1*t2 = h
    alg.table[2][1][0] = hh;

    AssociativityAudit audit;
    for (unsigned i = 0; i < 3; ++i)
        for (unsigned j = 0; j < 3; ++j)
            for (unsigned k = 0; k < 3; ++k) {
                auto left = alg.multiply(alg.multiply(alg.basis_element(i), alg.basis_element(j)),
                                         alg.basis_element(k));
                auto right = alg.multiply(alg.basis_element(i),
                                          alg.multiply(alg.basis_element(j), alg.basis_element(k)));
                std::vector<Poly> assoc;
                bool nonzero = false;
                for (unsigned t = 0; t < 3; ++t) {
                    Poly diff = left[t] - right[t];
                    if (!diff.is_zero()) nonzero = true;
                    assoc.push_back(std::move(diff));
                }
                if (nonzero) {
                    audit.associative = false;
                    audit.violations.push_back({i, j, k, std::move(assoc)});
                }
            }
    return {std::move(alg), std::move(audit)};
}

namespace {

void check_char(const Field &field, const Int &value) {
    Int p = field.characteristic();
    if (p > 0 && value % p == 0) throw std::domain_error("bad characteristic");
}

} // namespace

SmoothnessVerdict is_smooth_uniform(const UniformCoverSpec &spec, unsigned extension_bound,
                                    std::uint64_t budget) {
    if (spec.d < 1) throw std::domain_error("smoothness needs branch degree d >= 1");
    check_char(spec.branch_form.field(), Int(2) * spec.r * spec.d);
    SmoothnessVerdict verdict;
    if (spec.n == 1) {
        verdict.smooth = !disc_binary(spec.branch_form).is_zero();
        verdict.strength = VerdictStrength::Exact;
        verdict.detail = verdict.smooth ? "binary discriminant nonzero"
                                        : "binary discriminant vanishes";
        return verdict;
    }
    if (!spec.branch_form.field().is_finite())
        throw std::domain_error("smoothness for n >= 2 is only semi-decided over finite fields");
    SingularSearchResult search = singular_point_search(spec.branch_form, extension_bound, budget);
    for (const auto &scan : search.scans)
        if (!scan.points.empty()) {
            verdict.smooth = false;
            verdict.strength = VerdictStrength::Exact; // a witness settles it
            verdict.witness = scan.points.front();
            std::ostringstream os;
            os << "singular point found over " << scan.field.name();
            verdict.detail = os.str();
            return verdict;
        }
    verdict.smooth = true;
    verdict.strength = VerdictStrength::BoundedSearch;
    verdict.extension_bound = extension_bound;
    std::ostringstream os;
    os << "no singular point over the enumerated fields (extension bound " << extension_bound
       << "); not a proof over the closure";
    verdict.detail = os.str();
    return verdict;
}

SmoothnessVerdict is_smooth_triple(const TripleCoverSpec &spec) {
    Int e1 = spec.f1.degree(), e2 = spec.f2.degree();
    if (e1 >= 2 && e2 >= 2) check_char(spec.f1.field(), Int(2) * e1 * e2);

    SmoothnessVerdict verdict;
    verdict.strength = VerdictStrength::Exact;
    // degree <= 1 forms are squarefree outright
    bool sf1 = e1 <= 1 || is_squarefree_binary(spec.f1);
    bool sf2 = e2 <= 1 || is_squarefree_binary(spec.f2);
    bool disjoint = true;
    if (e1 >= 1 && e2 >= 1) disjoint = !sylvester_resultant(spec.f1, spec.f2).is_zero();
    verdict.smooth = sf1 && sf2 && disjoint;
    if (!sf1)
        verdict.detail = "f1 has a multiple root";
    else if (!sf2)
        verdict.detail = "f2 has a multiple root";
    else if (!disjoint)
        verdict.detail = "f1 and f2 have a common root";
    else
        verdict.detail = "branch divisors squarefree and disjoint";
    return verdict;
}

WitnessPair generate_singular_witness(unsigned n, unsigned m, const Field &field,
                                      const std::vector<Scalar> &coeffs) {
    if (n < 1) throw std::domain_error("witness needs n >= 1");
    if (m < 3) throw std::domain_error("witness needs m >= 3");
    check_char(field, Int(m));
    check_char(field, Int(m) - 2);
    check_char(field, Int(2));
    if (coeffs.size() != n) throw std::domain_error("need exactly n coefficients");
    for (const Scalar &a : coeffs) {
        if (a.field() != field) throw std::domain_error("mixed coefficient fields");
        if (a.is_zero()) throw std::domain_error("witness coefficients must be nonzero");
    }

    // F = sum_i a_i (x_i^m - x_i^2 x_0^{m-2}), the homogenization of
    // sum a_i g(x_i) with g(x) = x^2 (x^{m-2} - 1)
    Poly p(n + 1, field);
    for (unsigned i = 1; i <= n; ++i) {
        ExpVec hi(n + 1, 0), lo(n + 1, 0);
        hi[i] = m;
        lo[i] = 2;
        lo[0] = m - 2;
        p.add_term(hi, coeffs[i - 1]);
        p.add_term(lo, -coeffs[i - 1]);
    }
    std::vector<Scalar> point(n + 1, Scalar::zero(field));
    point[0] = Scalar::one(field);
    return {Form(std::move(p)), std::move(point)};
}

WitnessVerification verify_singular_witness(const WitnessPair &witness, unsigned extension_bound,
                                            std::uint64_t budget) {
    const Form &f = witness.form;
    const unsigned n = f.num_vars() - 1;
    WitnessVerification ver;

    auto parts = partials(f);
    ver.partials_vanish = true;
    for (const Form &p : parts)
        if (!p.eval(witness.point).is_zero()) ver.partials_vanish = false;

    // linear parts of the dehomogenized partials d/dx_i f(1, x_1..x_n)
    std::vector<bool> mask(n + 1, false);
    mask[0] = true;
    std::vector<Scalar> at_one(n + 1, Scalar::zero(f.field()));
    at_one[0] = Scalar::one(f.field());
    ScalarMatrix linear(n, std::vector<Scalar>(n, Scalar::zero(f.field())));
    for (unsigned i = 1; i <= n; ++i) {
        Poly dehom = f.poly().derivative(i).partial_eval(mask, at_one);
        Poly lin = dehom.homogeneous_component(1);
        for (const auto &[e, c] : lin.terms())
            for (unsigned j = 1; j <= n; ++j)
                if (e[j] == 1) linear[i - 1][j - 1] = c;
    }
    ver.linear_rank_full = mat_rank(linear) == n;

    ver.search = singular_point_search(f, extension_bound, budget);
    ver.unique_singular = true;
    for (const auto &scan : ver.search.scans) {
        std::vector<Scalar> expected(n + 1, Scalar::zero(scan.field));
        expected[0] = Scalar::one(scan.field);
        if (scan.points.size() != 1 || scan.points.front() != expected) ver.unique_singular = false;
    }
    return ver;
}

WitnessGeneration generate_singular_witness_random(unsigned n, unsigned m, const Field &field,
                                                   std::mt19937_64 &rng, unsigned max_attempts,
                                                   unsigned extension_bound, std::uint64_t budget) {
    if (!field.is_finite())
        throw std::domain_error("witness verification requires a finite coefficient field");
    std::uint64_t q = field.context()->order_u64();
    for (unsigned attempt = 1; attempt <= max_attempts; ++attempt) {
        std::vector<Scalar> coeffs;
        for (unsigned i = 0; i < n; ++i)
            coeffs.emplace_back(field, field.context()->decode(1 + rng() % (q - 1)));
        WitnessPair pair = generate_singular_witness(n, m, field, coeffs);
        WitnessVerification ver = verify_singular_witness(pair, extension_bound, budget);
        if (ver.ok()) return {std::move(pair), std::move(ver), std::move(coeffs), attempt};
    }
    std::ostringstream os;
    os << "witness generation failed after " << max_attempts << " attempts";
    throw std::domain_error(os.str());
}

} // namespace covstack
