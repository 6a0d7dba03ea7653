#include "covstack/poly.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace covstack {

namespace {
unsigned exp_sum(const ExpVec &e) { return std::accumulate(e.begin(), e.end(), 0u); }
} // namespace

Poly Poly::constant(unsigned num_vars, const Scalar &c) {
    Poly p(num_vars, c.field());
    p.add_term(ExpVec(num_vars, 0), c);
    return p;
}

Poly Poly::monomial(ExpVec exps, const Scalar &c) {
    Poly p(static_cast<unsigned>(exps.size()), c.field());
    p.add_term(exps, c);
    return p;
}

Poly Poly::variable(unsigned num_vars, unsigned index, Field field) {
    if (index >= num_vars) throw std::domain_error("variable index out of range");
    ExpVec e(num_vars, 0);
    e[index] = 1;
    return monomial(e, Scalar::one(field));
}

int Poly::total_degree() const {
    int d = -1;
    for (const auto &[e, c] : terms_) d = std::max(d, static_cast<int>(exp_sum(e)));
    return d;
}

std::optional<unsigned> Poly::homogeneous_degree() const {
    if (terms_.empty()) return 0;
    unsigned d = exp_sum(terms_.begin()->first);
    for (const auto &[e, c] : terms_)
        if (exp_sum(e) != d) return std::nullopt;
    return d;
}

void Poly::add_term(const ExpVec &exps, const Scalar &c) {
    if (exps.size() != num_vars_) throw std::domain_error("exponent vector has wrong length");
    if (c.field() != field_) throw std::domain_error("mixed coefficient fields");
    if (c.is_zero()) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, c);
    } else {
        Scalar s = it->second + c;
        if (s.is_zero())
            terms_.erase(it);
        else
            it->second = s;
    }
}

Scalar Poly::coefficient(const ExpVec &exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void Poly::check_compatible(const Poly &o) const {
    if (num_vars_ != o.num_vars_) throw std::domain_error("polynomials in different variable sets");
    if (field_ != o.field_) throw std::domain_error("mixed coefficient fields");
}

Poly Poly::operator+(const Poly &o) const {
    check_compatible(o);
    Poly r = *this;
    for (const auto &[e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Poly Poly::operator-(const Poly &o) const {
    check_compatible(o);
    Poly r = *this;
    for (const auto &[e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

Poly Poly::operator-() const {
    Poly r(num_vars_, field_);
    for (const auto &[e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Poly Poly::operator*(const Poly &o) const {
    check_compatible(o);
    Poly r(num_vars_, field_);
    for (const auto &[ea, ca] : terms_)
        for (const auto &[eb, cb] : o.terms_) {
            ExpVec e(num_vars_);
            for (unsigned i = 0; i < num_vars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

Poly Poly::scaled(const Scalar &c) const {
    if (c.field() != field_) throw std::domain_error("mixed coefficient fields");
    Poly r(num_vars_, field_);
    if (c.is_zero()) return r;
    for (const auto &[e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

bool Poly::operator==(const Poly &o) const {
    return num_vars_ == o.num_vars_ && field_ == o.field_ && terms_ == o.terms_;
}

Poly Poly::derivative(unsigned var) const {
    if (var >= num_vars_) throw std::domain_error("variable index out of range");
    Poly r(num_vars_, field_);
    for (const auto &[e, c] : terms_) {
        if (e[var] == 0) continue;
        ExpVec d = e;
        d[var] -= 1;
        r.add_term(d, c * Scalar(field_, Int(e[var])));
    }
    return r;
}

Scalar Poly::eval(const std::vector<Scalar> &point) const {
    if (point.size() != num_vars_) throw std::domain_error("point has wrong dimension");
    Scalar acc = Scalar::zero(field_);
    for (const auto &[e, c] : terms_) {
        Scalar t = c;
        for (unsigned i = 0; i < num_vars_; ++i)
            for (unsigned j = 0; j < e[i]; ++j) t = t * point[i];
        acc = acc + t;
    }
    return acc;
}

Poly Poly::partial_eval(const std::vector<bool> &mask, const std::vector<Scalar> &point) const {
    if (mask.size() != num_vars_ || point.size() != num_vars_)
        throw std::domain_error("mask/point has wrong dimension");
    Poly r(num_vars_, field_);
    for (const auto &[e, c] : terms_) {
        Scalar t = c;
        ExpVec rest = e;
        for (unsigned i = 0; i < num_vars_; ++i) {
            if (!mask[i] || e[i] == 0) continue;
            t = t * point[i].pow(Int(e[i]));
            rest[i] = 0;
        }
        r.add_term(rest, t);
    }
    return r;
}

Poly Poly::linear_substitute(const std::vector<std::vector<Scalar>> &coeffs) const {
    if (coeffs.size() != num_vars_) throw std::domain_error("substitution matrix has wrong dimension");
    // images of the variables
    std::vector<Poly> image;
    image.reserve(num_vars_);
    for (unsigned i = 0; i < num_vars_; ++i) {
        Poly li(num_vars_, field_);
        for (unsigned j = 0; j < num_vars_; ++j) {
            ExpVec e(num_vars_, 0);
            e[j] = 1;
            li.add_term(e, coeffs[i][j]);
        }
        image.push_back(std::move(li));
    }
    Poly r(num_vars_, field_);
    for (const auto &[e, c] : terms_) {
        Poly t = Poly::constant(num_vars_, c);
        for (unsigned i = 0; i < num_vars_; ++i)
            for (unsigned j = 0; j < e[i]; ++j) t = t * image[i];
        r = r + t;
    }
    return r;
}

Poly Poly::homogeneous_component(unsigned degree) const {
    Poly r(num_vars_, field_);
    for (const auto &[e, c] : terms_)
        if (exp_sum(e) == degree) r.terms_.emplace(e, c);
    return r;
}

Poly Poly::change_field(const Field &target) const {
    if (target == field_) return *this;
    if (!field_.is_rational())
        throw std::domain_error("can only change field from the rationals");
    Poly r(num_vars_, target);
    for (const auto &[e, c] : terms_) {
        const Rat &q = c.rational();
        Scalar num(target, numerator(q));
        Scalar den(target, denominator(q));
        if (den.is_zero()) throw std::domain_error("denominator vanishes in target field");
        r.add_term(e, num / den);
    }
    return r;
}

unsigned Poly::variable_multiplicity(unsigned var) const {
    if (terms_.empty()) return 0;
    unsigned m = UINT32_MAX;
    for (const auto &[e, c] : terms_) m = std::min(m, e[var]);
    return m;
}

bool Poly::involves(unsigned var) const {
    for (const auto &[e, c] : terms_)
        if (e[var] > 0) return true;
    return false;
}

std::string Poly::str(const std::vector<std::string> &var_names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (unsigned i = 0; i < num_vars_; ++i) {
            if (e[i] == 0) continue;
            if (i < var_names.size())
                os << "*" << var_names[i];
            else
                os << "*x" << i;
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

// ------------------------------------------------------------- UniPoly

UniPoly::UniPoly(Field field, std::vector<Scalar> coeffs) : field_(field), coeffs_(std::move(coeffs)) {
    for (const Scalar &c : coeffs_)
        if (c.field() != field_) throw std::domain_error("mixed coefficient fields");
    normalize();
}

void UniPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UniPoly UniPoly::derivative() const {
    std::vector<Scalar> d;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * Scalar(field_, Int(i)));
    return UniPoly(field_, std::move(d));
}

UniPoly UniPoly::rem(const UniPoly &divisor) const {
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    UniPoly r = *this;
    Scalar lc_inv = divisor.coeffs_.back().inverse();
    while (!r.is_zero() && r.degree() >= divisor.degree()) {
        Scalar q = r.coeffs_.back() * lc_inv;
        std::size_t shift = r.coeffs_.size() - divisor.coeffs_.size();
        for (std::size_t i = 0; i < divisor.coeffs_.size(); ++i)
            r.coeffs_[shift + i] = r.coeffs_[shift + i] - q * divisor.coeffs_[i];
        r.normalize();
    }
    return r;
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = a.rem(b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

} // namespace covstack
