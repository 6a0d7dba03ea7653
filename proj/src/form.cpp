#include "covstack/form.hpp"

#include <sstream>
#include <stdexcept>

namespace covstack {

Form::Form(Poly p, std::optional<unsigned> zero_degree) : poly_(std::move(p)) {
    if (poly_.is_zero()) {
        degree_ = zero_degree.value_or(0);
        return;
    }
    auto d = poly_.homogeneous_degree();
    if (!d) throw std::domain_error("form must be homogeneous");
    degree_ = *d;
}

Form Form::zero(unsigned num_vars, unsigned degree, Field field) {
    return Form(Poly(num_vars, field), degree);
}

Form Form::operator+(const Form &o) const {
    if (!is_zero() && !o.is_zero() && degree_ != o.degree_)
        throw std::domain_error("sum of forms of different degrees");
    return Form(poly_ + o.poly_, std::max(degree_, o.degree_));
}

Form Form::operator*(const Form &o) const { return Form(poly_ * o.poly_, degree_ + o.degree_); }

Form Form::scaled(const Scalar &c) const { return Form(poly_.scaled(c), degree_); }

Form Form::change_field(const Field &target) const { return Form(poly_.change_field(target), degree_); }

Form act_linear(const Form &f, const ScalarMatrix &a, const std::optional<Scalar> &alpha,
                const TwistSpec &twist) {
    const unsigned n = f.num_vars();
    if (a.size() != n) throw std::domain_error("matrix size does not match variable count");
    for (const auto &row : a)
        if (row.size() != n) throw std::domain_error("matrix size does not match variable count");
    if (n > 0 && a[0][0].field() != f.field()) throw std::domain_error("mixed coefficient fields");
    if (twist.scalar_exponent != 0 && !alpha)
        throw std::domain_error("scalar twist requires alpha");
    if (alpha && alpha->is_zero()) throw std::domain_error("alpha must be invertible");

    ScalarMatrix inv = mat_inverse(a); // throws "non-invertible matrix"
    Form g(f.poly().linear_substitute(inv), f.degree());

    Scalar factor = Scalar::one(f.field());
    if (twist.det_exponent != 0) factor = factor * mat_det(a).pow(twist.det_exponent);
    if (twist.scalar_exponent != 0) factor = factor * alpha->pow(twist.scalar_exponent);
    return g.scaled(factor);
}

std::vector<Form> partials(const Form &f) {
    std::vector<Form> out;
    out.reserve(f.num_vars());
    unsigned d = f.degree() > 0 ? f.degree() - 1 : 0;
    for (unsigned i = 0; i < f.num_vars(); ++i) out.emplace_back(f.poly().derivative(i), d);
    return out;
}

namespace {

void require_binary(const Form &f, const char *what) {
    if (f.num_vars() != 2) throw std::domain_error(std::string(what) + " requires binary forms");
}

// Coefficients of a binary form by descending x-power: c[j] = coeff of
// x^{m-j} y^j, length m+1.
std::vector<Scalar> binary_coeffs(const Form &f) {
    unsigned m = f.degree();
    std::vector<Scalar> c(m + 1, Scalar::zero(f.field()));
    for (const auto &[e, v] : f.poly().terms()) c[e[1]] = v;
    return c;
}

void check_char_divides(const Field &field, unsigned m) {
    Int p = field.characteristic();
    if (p > 0 && Int(m) % p == 0) throw std::domain_error("bad characteristic");
}

} // namespace

Scalar sylvester_resultant(const Form &f, const Form &g) {
    require_binary(f, "resultant");
    require_binary(g, "resultant");
    if (f.is_zero() || g.is_zero()) throw std::domain_error("resultant of zero form undefined");
    if (f.field() != g.field()) throw std::domain_error("mixed coefficient fields");
    unsigned m1 = f.degree(), m2 = g.degree();
    if (m1 < 1 || m2 < 1) throw std::domain_error("resultant requires positive degrees");

    std::vector<Scalar> a = binary_coeffs(f);
    std::vector<Scalar> b = binary_coeffs(g);
    std::size_t n = m1 + m2;
    ScalarMatrix s(n, std::vector<Scalar>(n, Scalar::zero(f.field())));
    for (unsigned i = 0; i < m2; ++i)
        for (unsigned j = 0; j <= m1; ++j) s[i][i + j] = a[j];
    for (unsigned i = 0; i < m1; ++i)
        for (unsigned j = 0; j <= m2; ++j) s[m2 + i][i + j] = b[j];
    return mat_det(s);
}

Scalar disc_binary(const Form &f) {
    require_binary(f, "discriminant");
    if (f.is_zero()) throw std::domain_error("discriminant of zero form undefined");
    unsigned m = f.degree();
    if (m < 2) throw std::domain_error("discriminant requires degree >= 2");
    check_char_divides(f.field(), m);
    auto d = partials(f);
    // a vanishing partial forces a multiple root; Res(h, 0) = 0 by convention
    if (d[0].is_zero() || d[1].is_zero()) return Scalar::zero(f.field());
    return sylvester_resultant(d[0], d[1]);
}

bool is_squarefree_binary(const Form &f) {
    require_binary(f, "squarefreeness");
    if (f.is_zero()) throw std::domain_error("squarefreeness of zero form undefined");
    unsigned m = f.degree();
    if (m == 0) return true; // nonzero constant: no roots at all
    check_char_divides(f.field(), m);

    // chart y=1 covers every root but (1:0); that one is read off the
    // multiplicity of y in f
    if (f.poly().variable_multiplicity(1) >= 2) return false;
    std::vector<Scalar> c = binary_coeffs(f); // c[j] = coeff x^{m-j} y^j
    std::vector<Scalar> u(m + 1, Scalar::zero(f.field()));
    for (unsigned j = 0; j <= m; ++j) u[m - j] = c[j]; // u[i] = coeff of x^i in f(x,1)
    UniPoly uf(f.field(), std::move(u));
    if (uf.degree() < 1) return true; // f = c * y^{m}, m <= 1 here
    UniPoly du = uf.derivative();
    if (du.is_zero()) return false; // inseparable: every root multiple
    return UniPoly::gcd(uf, du).degree() < 1;
}

// ------------------------------------------------------ singular search

namespace {

struct Condition {
    Poly poly;   // specialized to the current chart
    int max_var; // largest variable involved; -1 for constants
};

class SearchDriver {
  public:
    SearchDriver(const Form &form, std::uint64_t budget)
        : n_(form.num_vars() - 1), budget_(budget) {
        parts_ = partials(form);
    }

    void scan_field(const Field &field, ExtensionScan &out) {
        const auto &ctx = *field.context();
        std::uint64_t q = ctx.order_u64();
        if (q == 0 || q > budget_) {
            std::ostringstream os;
            os << "enumeration budget exceeded (budget = " << budget_ << " candidate visits)";
            throw std::domain_error(os.str());
        }
        elems_.clear();
        elems_.reserve(q);
        for (std::uint64_t code = 0; code < q; ++code) elems_.emplace_back(field, ctx.decode(code));

        std::vector<Form> lifted;
        for (const Form &p : parts_) lifted.push_back(lift(p, field));

        for (unsigned lead = 0; lead <= n_; ++lead) {
            // chart: x_0 = ... = x_{lead-1} = 0, x_lead = 1
            std::vector<Scalar> point(n_ + 1, Scalar::zero(field));
            point[lead] = Scalar::one(field);
            std::vector<bool> mask(n_ + 1, false);
            for (unsigned i = 0; i <= lead; ++i) mask[i] = true;

            std::vector<Condition> conds;
            bool chart_empty = false;
            for (const Form &p : lifted) {
                if (p.is_zero()) continue; // vanishes identically, no constraint
                Poly sp = p.poly().partial_eval(mask, point);
                int mv = -1;
                for (unsigned v = lead + 1; v <= n_; ++v)
                    if (sp.involves(v)) mv = static_cast<int>(v);
                if (mv == -1) {
                    if (!sp.is_zero()) {
                        chart_empty = true; // constant nonzero partial on this chart
                        break;
                    }
                    continue;
                }
                conds.push_back({std::move(sp), mv});
            }
            if (chart_empty) continue;
            descend(lead + 1, point, conds, out.points);
        }
    }

    std::uint64_t visited() const { return visited_; }

  private:
    static Form lift(const Form &f, const Field &target) {
        if (f.field() == target) return f;
        // coefficients live in the prime field; re-map by integer code
        Poly r(f.num_vars(), target);
        for (const auto &[e, c] : f.poly().terms())
            r.add_term(e, Scalar(target, Int(c.gf_coeffs()[0])));
        return Form(r, f.degree());
    }

    void charge() {
        if (++visited_ > budget_) {
            std::ostringstream os;
            os << "enumeration budget exceeded (budget = " << budget_ << " candidate visits)";
            throw std::domain_error(os.str());
        }
    }

    void descend(unsigned var, std::vector<Scalar> &point, const std::vector<Condition> &conds,
                 std::vector<std::vector<Scalar>> &found) {
        if (var > n_) {
            charge();
            found.push_back(point);
            return;
        }
        for (const Scalar &v : elems_) {
            charge();
            point[var] = v;
            bool ok = true;
            for (const Condition &c : conds)
                if (c.max_var == static_cast<int>(var) && !c.poly.eval(point).is_zero()) {
                    ok = false;
                    break;
                }
            if (ok) descend(var + 1, point, conds, found);
        }
        point[var] = Scalar::zero(point[var].field());
    }

    unsigned n_;
    std::uint64_t budget_;
    std::uint64_t visited_ = 0;
    std::vector<Form> parts_;
    std::vector<Scalar> elems_;
};

} // namespace

SingularSearchResult singular_point_search(const Form &form, unsigned extension_bound,
                                           std::uint64_t budget) {
    if (form.is_zero()) throw std::domain_error("singular point search of zero form undefined");
    if (!form.field().is_finite())
        throw std::domain_error("singular point search requires a finite coefficient field");
    if (extension_bound < 1) throw std::domain_error("extension bound must be at least 1");
    const auto &base = *form.field().context();
    if (base.k() > 1 && extension_bound > 1)
        throw std::domain_error("extension search requires a prime base field");

    SingularSearchResult result;
    SearchDriver driver(form, budget);
    for (unsigned j = 1; j <= extension_bound; ++j) {
        Field fj = base.k() == 1 ? Field::gf(base.p(), j) : form.field();
        ExtensionScan scan;
        scan.extension_degree = j;
        scan.field = fj;
        driver.scan_field(fj, scan);
        result.scans.push_back(std::move(scan));
    }
    result.candidates_visited = driver.visited();
    return result;
}

} // namespace covstack
