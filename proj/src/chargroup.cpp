#include "covstack/chargroup.hpp"

#include "covstack/scalar_matrix.hpp"
#include "covstack/snf.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

namespace covstack {

std::string Character::str() const {
    std::ostringstream os;
    const char *names[2] = {nullptr, nullptr};
    switch (basis) {
        case CharBasis::Det: names[0] = "det"; break;
        case CharBasis::E: names[0] = "e1"; names[1] = "e2"; break;
        case CharBasis::V: names[0] = "v1"; names[1] = "v2"; break;
    }
    bool first = true;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] == 0) continue;
        if (!first) os << " + ";
        os << coords[i] << "*" << names[i];
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

Character char_e(const Int &c1, const Int &c2) { return Character{CharBasis::E, {c1, c2}, 0, 0}; }

Character char_v(const Int &m1, const Int &m2, const Int &d1, const Int &d2) {
    return Character{CharBasis::V, {m1, m2}, d1, d2};
}

Int uniform_char_index(unsigned n, const Int &d) {
    if (n < 1 || d < 1) throw std::domain_error("uniform_char_index needs n, d >= 1");
    return d / gcd(d, Int(n + 1));
}

namespace {
Int mod_nonneg(const Int &a, const Int &m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}
} // namespace

bool gamma_membership(const Int &x1, const Int &x2, const Int &d1, const Int &d2) {
    return mod_nonneg(x1 - 2 * x2, d1) == 0 && mod_nonneg(x1, d2) == 0;
}

Int gamma_lattice_index(const Int &d1, const Int &d2) {
    if (d1 < 1 || d2 < 1) throw std::domain_error("branch degrees must be positive");
    // The lattice is the kernel of Z^2 -> Z/d1 x Z/d2, (x1,x2) |-> (x1-2x2, x1);
    // its index is the image order d1*d2 / |coker|, where the cokernel is
    // presented by the generator images together with the moduli rows.
    IntMatrix rel{{Int(1), Int(1)}, {Int(-2), Int(0)}, {d1, Int(0)}, {Int(0), d2}};
    AbelianPresentation coker = group_from_relations(2, rel);
    Int coker_order = coker.order().value(); // full column rank, always finite
    return d1 * d2 / coker_order;
}

GammaLattice gamma_lattice(const Int &d1, const Int &d2) {
    if (d1 < 1 || d2 < 1) throw std::domain_error("branch degrees must be positive");
    bool d1_odd = (d1 % 2) != 0;
    bool d2_odd = (d2 % 2) != 0;
    if (!d1_odd && d2_odd)
        throw std::domain_error("d1 even and d2 odd: swap the branch degrees (the swapped stack is canonically isomorphic)");

    GammaLattice lat;
    lat.d1 = d1;
    lat.d2 = d2;
    lat.even_case = !d1_odd;
    if (d1_odd) {
        lat.v1 = char_e(d2, (d1 + 1) * d2 / 2);
        lat.v2 = char_e(0, d1);
    } else {
        lat.v1 = char_e(d2, d2 / 2);
        lat.v2 = char_e(0, d1 / 2);
    }

    for (const Character *v : {&lat.v1, &lat.v2})
        if (!gamma_membership(v->coords[0], v->coords[1], d1, d2))
            throw std::logic_error("lattice basis fails the membership congruences");
    Int det = lat.v1.coords[0] * lat.v2.coords[1] - lat.v1.coords[1] * lat.v2.coords[0];
    if (abs(det) != gamma_lattice_index(d1, d2))
        throw std::logic_error("lattice basis does not span the congruence lattice");
    return lat;
}

Character cone_class_e(const Int &a1, const Int &a2, const Int &d1, const Int &d2) {
    Int num = a1 * (2 * d1 - d2) + a2 * (2 * d2 - d1);
    if (mod_nonneg(num, 2) != 0) throw std::domain_error("non-integral class");
    return char_e((a1 - 2 * a2) * d2, -num / 2);
}

Character to_v_basis(const Character &c, const GammaLattice &lattice) {
    if (c.basis != CharBasis::E) throw std::domain_error("expected a character in the e-basis");
    const Int &x1 = c.coords[0], &x2 = c.coords[1];
    if (!gamma_membership(x1, x2, lattice.d1, lattice.d2))
        throw std::domain_error("class not Gamma-invariant");
    // v2 has no e1 component in either parity case, so m1 comes from the
    // first coordinate alone.
    const Int &v1e1 = lattice.v1.coords[0];
    if (x1 % v1e1 != 0) throw std::logic_error("non-exact division in basis change");
    Int m1 = x1 / v1e1;
    Int rem = x2 - m1 * lattice.v1.coords[1];
    if (rem % lattice.v2.coords[1] != 0) throw std::logic_error("non-exact division in basis change");
    Int m2 = rem / lattice.v2.coords[1];
    return char_v(m1, m2, lattice.d1, lattice.d2);
}

Character from_v_basis(const Character &c, const GammaLattice &lattice) {
    if (c.basis != CharBasis::V) throw std::domain_error("expected a character in the v-basis");
    Int x1 = c.coords[0] * lattice.v1.coords[0] + c.coords[1] * lattice.v2.coords[0];
    Int x2 = c.coords[0] * lattice.v1.coords[1] + c.coords[1] * lattice.v2.coords[1];
    return char_e(x1, x2);
}

// ----------------------------------------------------------- isom_check

namespace {

Scalar random_scalar(const Field &field, std::mt19937_64 &rng) {
    if (field.is_finite()) {
        std::uint64_t q = field.context()->order_u64();
        return Scalar(field, field.context()->decode(rng() % q));
    }
    return Scalar(field, Int(static_cast<std::int64_t>(rng() % 11) - 5));
}

ScalarMatrix random_invertible(std::size_t n, const Field &field, std::mt19937_64 &rng) {
    for (;;) {
        ScalarMatrix m(n, std::vector<Scalar>(n, Scalar::zero(field)));
        for (auto &row : m)
            for (auto &v : row) v = random_scalar(field, rng);
        if (!mat_det(m).is_zero()) return m;
    }
}

// B = lambda * A for some scalar lambda?  Returns lambda when so.
std::optional<Scalar> proportionality(const ScalarMatrix &a, const ScalarMatrix &b) {
    std::size_t n = a.size();
    std::optional<Scalar> lambda;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (a[i][j].is_zero() != b[i][j].is_zero()) return std::nullopt;
            if (a[i][j].is_zero()) continue;
            Scalar l = b[i][j] / a[i][j];
            if (!lambda)
                lambda = l;
            else if (*lambda != l)
                return std::nullopt;
        }
    return lambda;
}

// d-th roots of unity in the field (enumerated exhaustively for finite
// fields; {1, -1} as applicable over the rationals).
std::vector<Scalar> roots_of_unity(const Field &field, const Int &d) {
    std::vector<Scalar> roots;
    if (field.is_finite()) {
        std::uint64_t q = field.context()->order_u64();
        if (q == 0 || q > (1u << 22))
            throw std::domain_error("field too large to enumerate roots of unity");
        for (std::uint64_t code = 1; code < q; ++code) {
            Scalar x(field, field.context()->decode(code));
            if (x.pow(d).is_one()) roots.push_back(x);
        }
    } else {
        roots.push_back(Scalar(Int(1)));
        if (d % 2 == 0) roots.push_back(Scalar(Int(-1)));
    }
    return roots;
}

std::string describe(const ScalarMatrix &m) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < m.size(); ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < m[i].size(); ++j) os << (j ? "," : "") << m[i][j].str();
    }
    os << "]";
    return os.str();
}

} // namespace

IsomReport isom_check(unsigned n, const Int &d, unsigned samples, const Field &field,
                      std::uint64_t seed) {
    if (n < 1 || d < 1) throw std::domain_error("isom_check needs n, d >= 1");
    const Int np1 = n + 1;
    Int residue = mod_nonneg(d, np1);
    IsomReport report;
    Int q_exp; // the exponent q in the closed forms
    if (residue == 0) {
        report.residue_case = 0;
        q_exp = d / np1;
    } else if (residue == 1) {
        report.residue_case = 1;
        q_exp = (d - 1) / np1;
    } else if (residue == np1 - 1) {
        report.residue_case = -1;
        q_exp = (d + 1) / np1;
    } else {
        throw std::domain_error("no closed-form isomorphism given");
    }

    std::mt19937_64 rng(seed);
    const std::size_t dim = n + 1;

    auto psi_gl = [&](const ScalarMatrix &a) {
        Int e = report.residue_case == -1 ? -q_exp : q_exp;
        return mat_scale(a, mat_det(a).pow(e));
    };

    const std::vector<Scalar> roots = roots_of_unity(field, d);
    auto random_root = [&]() { return roots[rng() % roots.size()]; };

    // Multiplicativity on classes: representatives are twisted by random
    // d-th roots of unity, so this also exercises well-definedness on
    // GL/mu_d rather than just det multiplicativity.
    for (unsigned s = 0; s < samples; ++s) {
        ScalarMatrix a = random_invertible(dim, field, rng);
        ScalarMatrix b = random_invertible(dim, field, rng);
        ScalarMatrix ab = mat_mul(mat_scale(a, random_root()), mat_scale(b, random_root()));
        bool ok;
        if (report.residue_case == 0) {
            Scalar da = mat_det(a).pow(q_exp), db = mat_det(b).pow(q_exp);
            Scalar dab = mat_det(ab).pow(q_exp);
            auto lambda = proportionality(mat_mul(a, b), ab); // PGL component
            ok = (dab == da * db) && lambda.has_value();
        } else {
            ok = mat_equal(psi_gl(ab), mat_mul(psi_gl(a), psi_gl(b)));
        }
        ++report.multiplicative_checks;
        if (!ok) {
            report.passed = false;
            report.failure = "multiplicativity fails at A=" + describe(a) + ", B=" + describe(b);
            return report;
        }
    }

    // scalar matrices alpha*I with alpha^d = 1 must map to the identity
    ScalarMatrix ident = mat_identity(dim, field);
    for (const Scalar &alpha : roots) {
        ScalarMatrix ai = mat_scale(ident, alpha);
        bool ok;
        if (report.residue_case == 0) {
            Scalar first = mat_det(ai).pow(q_exp);
            auto lambda = proportionality(ident, ai);
            ok = first.is_one() && lambda.has_value();
        } else {
            ok = mat_equal(psi_gl(ai), ident);
        }
        ++report.scalar_checks;
        if (!ok) {
            report.passed = false;
            report.failure = "scalar alpha=" + alpha.str() + " with alpha^d=1 not killed";
            return report;
        }
    }

    // injectivity on non-equivalent classes (GL-valued cases only)
    if (report.residue_case != 0) {
        for (unsigned s = 0; s < samples; ++s) {
            ScalarMatrix a = random_invertible(dim, field, rng);
            ScalarMatrix b = random_invertible(dim, field, rng);
            auto lambda = proportionality(a, b);
            if (lambda && lambda->pow(d).is_one()) continue; // same class in GL/mu_d
            ++report.injectivity_checks;
            if (mat_equal(psi_gl(a), psi_gl(b))) {
                report.passed = false;
                report.failure = "non-equivalent classes collide: A=" + describe(a) + ", B=" + describe(b);
                return report;
            }
        }
    }
    return report;
}

} // namespace covstack
