#include "covstack/chow.hpp"

#include <sstream>
#include <stdexcept>

namespace covstack {

std::shared_ptr<const ChowRing> ChowRing::make(std::vector<std::string> names,
                                               std::vector<unsigned> trunc) {
    if (names.size() != trunc.size()) throw std::domain_error("ring needs one truncation per class");
    for (unsigned t : trunc)
        if (t == 0) throw std::domain_error("truncation exponents must be positive");
    auto r = std::make_shared<ChowRing>();
    r->var_names = std::move(names);
    r->trunc = std::move(trunc);
    return r;
}

ChowClass ChowClass::hyperplane(const std::shared_ptr<const ChowRing> &ring, std::size_t var) {
    if (var >= ring->trunc.size()) throw std::domain_error("hyperplane class index out of range");
    ChowClass c(ring);
    std::vector<unsigned> e(ring->trunc.size(), 0);
    e[var] = 1;
    c.add_term(e, 1);
    return c;
}

ChowClass ChowClass::constant(const std::shared_ptr<const ChowRing> &ring, const Int &v) {
    ChowClass c(ring);
    c.add_term(std::vector<unsigned>(ring->trunc.size(), 0), v);
    return c;
}

Int ChowClass::coefficient(const std::vector<unsigned> &expo) const {
    auto it = coeffs_.find(expo);
    return it == coeffs_.end() ? Int(0) : it->second;
}

void ChowClass::add_term(const std::vector<unsigned> &expo, const Int &c) {
    if (c == 0) return;
    for (std::size_t i = 0; i < expo.size(); ++i)
        if (expo[i] >= ring_->trunc[i]) return; // at or above truncation: dies
    auto it = coeffs_.find(expo);
    if (it == coeffs_.end()) {
        coeffs_.emplace(expo, c);
    } else {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

ChowClass ChowClass::operator+(const ChowClass &o) const {
    if (ring_ != o.ring_) throw std::domain_error("Chow ring mismatch");
    ChowClass r = *this;
    for (const auto &[e, c] : o.coeffs_) r.add_term(e, c);
    return r;
}

ChowClass ChowClass::operator*(const ChowClass &o) const {
    if (ring_ != o.ring_) throw std::domain_error("Chow ring mismatch");
    ChowClass r(ring_);
    std::size_t nv = ring_->trunc.size();
    for (const auto &[ea, ca] : coeffs_)
        for (const auto &[eb, cb] : o.coeffs_) {
            std::vector<unsigned> e(nv);
            for (std::size_t i = 0; i < nv; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

ChowClass ChowClass::scaled(const Int &c) const {
    ChowClass r(ring_);
    if (c == 0) return r;
    for (const auto &[e, v] : coeffs_) r.coeffs_.emplace(e, v * c);
    return r;
}

ChowClass ChowClass::pow(unsigned e) const {
    ChowClass r = ChowClass::constant(ring_, 1);
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

bool ChowClass::operator==(const ChowClass &o) const {
    return ring_ == o.ring_ && coeffs_ == o.coeffs_;
}

std::string ChowClass::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[e, c] : coeffs_) {
        if (!first) os << " + ";
        first = false;
        os << c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            os << "*" << ring_->var_names[i];
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

Int discriminant_degree(unsigned n, unsigned m) {
    if (n < 1 || m < 1) throw std::domain_error("discriminant degree needs n >= 1, m >= 1");
    // eta truncated at 2: only the eta^1 coefficient is ever read.
    auto ring = ChowRing::make({"xi", "eta"}, {n + 1, 2});
    ChowClass xi = ChowClass::hyperplane(ring, 0);
    ChowClass eta = ChowClass::hyperplane(ring, 1);
    ChowClass cls = (xi.scaled(Int(m) - 1) + eta).pow(n + 1);
    std::vector<unsigned> top = {n, 1};
    return cls.coefficient(top);
}

std::pair<Int, Int> z_bidegree(const Int &d1, const Int &d2) {
    Int e1 = 2 * d1 - d2, e2 = 2 * d2 - d1;
    if (e1 < 0 || e2 < 0) throw std::domain_error("invalid branch degrees");
    auto ring = ChowRing::make({"eta", "xi1", "xi2"}, {2, 2, 2});
    ChowClass eta = ChowClass::hyperplane(ring, 0);
    ChowClass xi1 = ChowClass::hyperplane(ring, 1);
    ChowClass xi2 = ChowClass::hyperplane(ring, 2);
    ChowClass cls = (eta.scaled(e1) + xi1) * (eta.scaled(e2) + xi2);
    return {cls.coefficient({1, 1, 0}), cls.coefficient({1, 0, 1})};
}

} // namespace covstack
