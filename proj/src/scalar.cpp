#include "covstack/scalar.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace covstack {

namespace {

// ---- dense univariate arithmetic over F_p on uint64 coefficients ----
// Self-contained so GFContext construction does not depend on Scalar.

using UPoly = std::vector<std::uint64_t>; // low-to-high, may carry trailing zeros

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return (a * b) % p; // p < 2^31 so the product fits in 64 bits
}

void trim(UPoly &f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

UPoly poly_rem(UPoly a, const UPoly &b, std::uint64_t p) {
    // b monic after scaling; general remainder with field division.
    UPoly g = b;
    trim(g);
    if (g.empty()) throw std::domain_error("polynomial division by zero");
    trim(a);
    std::uint64_t lc = g.back();
    // inverse of lc mod p by Fermat
    std::uint64_t inv = 1, base = lc, e = p - 2;
    while (e) {
        if (e & 1) inv = mulmod(inv, base, p);
        base = mulmod(base, base, p);
        e >>= 1;
    }
    while (a.size() >= g.size()) {
        std::uint64_t c = mulmod(a.back(), inv, p);
        std::size_t shift = a.size() - g.size();
        if (c != 0) {
            for (std::size_t i = 0; i < g.size(); ++i) {
                std::uint64_t t = mulmod(c, g[i], p);
                a[shift + i] = (a[shift + i] + p - t) % p;
            }
        }
        a.pop_back();
        trim(a);
        if (a.empty()) break;
    }
    return a;
}

UPoly poly_mulmod(const UPoly &a, const UPoly &b, const UPoly &mod, std::uint64_t p) {
    UPoly r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
    }
    return poly_rem(std::move(r), mod, p);
}

UPoly poly_powmod(UPoly base, Int e, const UPoly &mod, std::uint64_t p) {
    UPoly r{1};
    base = poly_rem(std::move(base), mod, p);
    while (e > 0) {
        if ((e & 1) != 0) r = poly_mulmod(r, base, mod, p);
        base = poly_mulmod(base, base, mod, p);
        e >>= 1;
    }
    return r;
}

UPoly poly_gcd(UPoly a, UPoly b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        UPoly r = poly_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Monic f of degree k, given as low coefficients m_0..m_{k-1}.  Irreducible
// iff x^{p^k} = x mod f and gcd(x^{p^{k/t}} - x, f) = 1 for prime t | k.
bool is_irreducible(const std::vector<std::uint64_t> &low, std::uint64_t p) {
    unsigned k = static_cast<unsigned>(low.size());
    UPoly f(low);
    f.push_back(1);
    Int pk = 1;
    for (unsigned i = 0; i < k; ++i) pk *= p;
    UPoly xq = poly_powmod(UPoly{0, 1}, pk, f, p);
    // x^{p^k} - x must be 0 mod f
    UPoly diff = xq;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (!diff.empty()) return false;
    for (unsigned t = 2; t <= k; ++t) {
        if (k % t != 0) continue;
        bool t_prime = true;
        for (unsigned s = 2; s * s <= t; ++s)
            if (t % s == 0) { t_prime = false; break; }
        if (!t_prime) continue;
        Int e = 1;
        for (unsigned i = 0; i < k / t; ++i) e *= p;
        UPoly xe = poly_powmod(UPoly{0, 1}, e, f, p);
        if (xe.size() < 2) xe.resize(2, 0);
        xe[1] = (xe[1] + p - 1) % p;
        trim(xe);
        UPoly g = poly_gcd(f, xe, p);
        if (g.size() > 1) return false;
    }
    return true;
}

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod64(r, a, m);
        a = mulmod64(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace

bool GFContext::is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t s : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % s == 0) return n == s;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) { d >>= 1; ++r; }
    // Deterministic Miller-Rabin witness set for 64-bit inputs.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod64(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

GFContext::GFContext(std::uint64_t p, unsigned k) : p_(p), k_(k) {
    if (!is_prime_u64(p)) throw std::domain_error("field characteristic must be prime");
    if (p >= (1ull << 31)) throw std::domain_error("prime exceeds supported range (p < 2^31)");
    if (k == 0) throw std::domain_error("extension degree must be at least 1");
    q_ = 1;
    for (unsigned i = 0; i < k; ++i) q_ *= p;
    q64_ = (q_ <= Int(UINT64_MAX)) ? static_cast<std::uint64_t>(q_) : 0;

    if (k == 1) {
        modulus_ = {0}; // x: elements are plain residues mod p
        return;
    }
    // First irreducible monic polynomial in lexicographic coefficient order
    // (m_0 most significant).  The search is an odometer over [0,p)^k.
    std::vector<std::uint64_t> c(k, 0);
    for (;;) {
        if (c[0] != 0 && is_irreducible(c, p)) { // m_0 = 0 means x | f
            modulus_ = c;
            return;
        }
        // increment last position fastest
        int i = static_cast<int>(k) - 1;
        while (i >= 0) {
            if (++c[i] < p) break;
            c[i] = 0;
            --i;
        }
        if (i < 0) throw std::logic_error("no irreducible polynomial found"); // unreachable
    }
}

std::shared_ptr<const GFContext> GFContext::get(std::uint64_t p, unsigned k) {
    static std::mutex mtx;
    static std::map<std::pair<std::uint64_t, unsigned>, std::shared_ptr<const GFContext>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(p, k);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto ctx = std::shared_ptr<const GFContext>(new GFContext(p, k));
    cache.emplace(key, ctx);
    return ctx;
}

std::string GFContext::name() const {
    std::ostringstream os;
    os << "GF(" << p_;
    if (k_ > 1) os << "^" << k_;
    os << ")";
    return os.str();
}

GFContext::Elem GFContext::one() const {
    Elem e(k_, 0);
    e[0] = 1;
    return e;
}

GFContext::Elem GFContext::from_integer(const Int &n) const {
    Int r = n % Int(p_);
    if (r < 0) r += Int(p_);
    Elem e(k_, 0);
    e[0] = static_cast<std::uint64_t>(r);
    return e;
}

bool GFContext::is_zero(const Elem &a) const {
    return std::all_of(a.begin(), a.end(), [](std::uint64_t c) { return c == 0; });
}

GFContext::Elem GFContext::add(const Elem &a, const Elem &b) const {
    Elem r(k_);
    for (unsigned i = 0; i < k_; ++i) r[i] = (a[i] + b[i]) % p_;
    return r;
}

GFContext::Elem GFContext::sub(const Elem &a, const Elem &b) const {
    Elem r(k_);
    for (unsigned i = 0; i < k_; ++i) r[i] = (a[i] + p_ - b[i]) % p_;
    return r;
}

GFContext::Elem GFContext::neg(const Elem &a) const {
    Elem r(k_);
    for (unsigned i = 0; i < k_; ++i) r[i] = (p_ - a[i]) % p_;
    return r;
}

GFContext::Elem GFContext::mul(const Elem &a, const Elem &b) const {
    if (k_ == 1) return Elem{mulmod(a[0], b[0], p_)};
    std::vector<std::uint64_t> prod(2 * k_ - 1, 0);
    for (unsigned i = 0; i < k_; ++i) {
        if (a[i] == 0) continue;
        for (unsigned j = 0; j < k_; ++j)
            prod[i + j] = (prod[i + j] + mulmod(a[i], b[j], p_)) % p_;
    }
    // reduce with x^k = -(m_{k-1}x^{k-1} + ... + m_0)
    for (unsigned d = 2 * k_ - 2; d >= k_; --d) {
        std::uint64_t c = prod[d];
        if (c != 0) {
            prod[d] = 0;
            for (unsigned i = 0; i < k_; ++i) {
                std::uint64_t t = mulmod(c, modulus_[i], p_);
                prod[d - k_ + i] = (prod[d - k_ + i] + p_ - t) % p_;
            }
        }
    }
    prod.resize(k_);
    return prod;
}

GFContext::Elem GFContext::inv(const Elem &a) const {
    if (is_zero(a)) throw std::domain_error("division by zero");
    if (k_ == 1) {
        std::uint64_t r = 1, base = a[0], e = p_ - 2;
        while (e) {
            if (e & 1) r = mulmod(r, base, p_);
            base = mulmod(base, base, p_);
            e >>= 1;
        }
        return Elem{r};
    }
    // a^{q-2} = a^{-1}
    return pow(a, q_ - 2);
}

GFContext::Elem GFContext::pow(const Elem &a, const Int &e) const {
    if (e < 0) return pow(inv(a), -e);
    Elem r = one();
    Elem base = a;
    Int m = e;
    while (m > 0) {
        if ((m & 1) != 0) r = mul(r, base);
        base = mul(base, base);
        m >>= 1;
    }
    return r;
}

std::uint64_t GFContext::encode(const Elem &a) const {
    std::uint64_t code = 0;
    for (unsigned i = k_; i-- > 0;) code = code * p_ + a[i];
    return code;
}

GFContext::Elem GFContext::decode(std::uint64_t code) const {
    Elem e(k_);
    for (unsigned i = 0; i < k_; ++i) {
        e[i] = code % p_;
        code /= p_;
    }
    return e;
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(Field f, const Int &n) : field_(f) {
    if (field_.is_rational())
        rat_ = Rat(n);
    else
        gfc_ = field_.context()->from_integer(n);
}

Scalar::Scalar(Field f, GFContext::Elem coeffs) : field_(f), gfc_(std::move(coeffs)) {
    if (field_.is_rational()) throw std::domain_error("coefficient vector requires a finite field");
    if (gfc_.size() != field_.context()->k()) throw std::domain_error("coefficient vector has wrong length");
}

void Scalar::require_same_field(const Scalar &o) const {
    if (field_ != o.field_) throw std::domain_error("mixed coefficient fields");
}

bool Scalar::is_zero() const {
    return field_.is_rational() ? rat_.is_zero() : field_.context()->is_zero(gfc_);
}

bool Scalar::is_one() const {
    if (field_.is_rational()) return rat_ == 1;
    return gfc_ == field_.context()->one();
}

Scalar Scalar::operator+(const Scalar &o) const {
    require_same_field(o);
    if (field_.is_rational()) return Scalar(Rat(rat_ + o.rat_));
    return Scalar(field_, field_.context()->add(gfc_, o.gfc_));
}

Scalar Scalar::operator-(const Scalar &o) const {
    require_same_field(o);
    if (field_.is_rational()) return Scalar(Rat(rat_ - o.rat_));
    return Scalar(field_, field_.context()->sub(gfc_, o.gfc_));
}

Scalar Scalar::operator-() const {
    if (field_.is_rational()) return Scalar(Rat(-rat_));
    return Scalar(field_, field_.context()->neg(gfc_));
}

Scalar Scalar::operator*(const Scalar &o) const {
    require_same_field(o);
    if (field_.is_rational()) return Scalar(Rat(rat_ * o.rat_));
    return Scalar(field_, field_.context()->mul(gfc_, o.gfc_));
}

Scalar Scalar::operator/(const Scalar &o) const { return *this * o.inverse(); }

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    if (field_.is_rational()) return Scalar(Rat(1 / rat_));
    return Scalar(field_, field_.context()->inv(gfc_));
}

Scalar Scalar::pow(const Int &e) const {
    if (e < 0) return inverse().pow(-e);
    if (field_.is_rational()) {
        Rat r = 1, base = rat_;
        Int m = e;
        while (m > 0) {
            if ((m & 1) != 0) r *= base;
            base *= base;
            m >>= 1;
        }
        return Scalar(r);
    }
    return Scalar(field_, field_.context()->pow(gfc_, e));
}

bool Scalar::operator==(const Scalar &o) const {
    if (field_ != o.field_) return false;
    return field_.is_rational() ? rat_ == o.rat_ : gfc_ == o.gfc_;
}

const Rat &Scalar::rational() const {
    if (!field_.is_rational()) throw std::domain_error("scalar is not rational");
    return rat_;
}

const GFContext::Elem &Scalar::gf_coeffs() const {
    if (field_.is_rational()) throw std::domain_error("scalar is not a field element");
    return gfc_;
}

std::string Scalar::str() const {
    std::ostringstream os;
    if (field_.is_rational()) {
        os << numerator(rat_);
        if (denominator(rat_) != 1) os << "/" << denominator(rat_);
    } else {
        const auto &ctx = *field_.context();
        os << ctx.encode(gfc_) << " mod " << ctx.p();
        if (ctx.k() > 1) os << "^" << ctx.k();
    }
    return os.str();
}

Scalar Scalar::parse(const std::string &text) {
    auto mod_pos = text.find(" mod ");
    if (mod_pos == std::string::npos) {
        try {
            auto slash = text.find('/');
            if (slash == std::string::npos) return Scalar(Int(text));
            Int num(text.substr(0, slash));
            Int den(text.substr(slash + 1));
            if (den == 0) throw std::domain_error("zero denominator");
            return Scalar(Rat(Rat(num) / Rat(den))); // division canonicalizes the sign
        } catch (const std::runtime_error &) {
            throw std::domain_error("cannot parse scalar: " + text);
        }
    }
    std::string code_part = text.substr(0, mod_pos);
    std::string field_part = text.substr(mod_pos + 5);
    std::uint64_t p;
    unsigned k = 1;
    auto caret = field_part.find('^');
    try {
        if (caret == std::string::npos) {
            p = std::stoull(field_part);
        } else {
            p = std::stoull(field_part.substr(0, caret));
            k = static_cast<unsigned>(std::stoul(field_part.substr(caret + 1)));
        }
        Field f = Field::gf(p, k);
        Int code(code_part);
        if (code < 0 || code >= f.context()->order())
            throw std::domain_error("field element code out of range: " + text);
        return Scalar(f, f.context()->decode(static_cast<std::uint64_t>(code)));
    } catch (const std::invalid_argument &) {
        throw std::domain_error("cannot parse scalar: " + text);
    } catch (const std::out_of_range &) {
        throw std::domain_error("cannot parse scalar: " + text);
    }
}

} // namespace covstack
