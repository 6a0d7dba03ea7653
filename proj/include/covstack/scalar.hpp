#ifndef COVSTACK_SCALAR_HPP
#define COVSTACK_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace covstack {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Arithmetic context for the finite field GF(p^k), p prime, k >= 1.
///
/// Elements are coefficient vectors of length k relative to the power basis
/// 1, a, ..., a^{k-1}, where a is a root of the modulus polynomial
/// x^k + m_{k-1} x^{k-1} + ... + m_0.  The modulus is the first monic
/// irreducible polynomial of degree k in lexicographic order of the
/// coefficient tuple (m_0, m_1, ..., m_{k-1}), so a field built twice is the
/// same field.  Contexts are interned: GFContext::get returns the same
/// object for the same (p, k), and pointer equality decides field equality.
class GFContext {
  public:
    using Elem = std::vector<std::uint64_t>;

    static std::shared_ptr<const GFContext> get(std::uint64_t p, unsigned k);

    std::uint64_t p() const { return p_; }
    unsigned k() const { return k_; }
    const Int &order() const { return q_; }
    // Field order as uint64, or 0 when it does not fit.
    std::uint64_t order_u64() const { return q64_; }
    const std::vector<std::uint64_t> &modulus() const { return modulus_; }
    std::string name() const;

    Elem zero() const { return Elem(k_, 0); }
    Elem one() const;
    Elem from_integer(const Int &n) const;
    bool is_zero(const Elem &a) const;

    Elem add(const Elem &a, const Elem &b) const;
    Elem sub(const Elem &a, const Elem &b) const;
    Elem neg(const Elem &a) const;
    Elem mul(const Elem &a, const Elem &b) const;
    Elem inv(const Elem &a) const;
    Elem pow(const Elem &a, const Int &e) const;

    // Canonical integer code sum c_i p^i in [0, p^k); requires order_u64().
    std::uint64_t encode(const Elem &a) const;
    Elem decode(std::uint64_t code) const;

    static bool is_prime_u64(std::uint64_t n);

  private:
    GFContext(std::uint64_t p, unsigned k);

    std::uint64_t p_;
    unsigned k_;
    std::vector<std::uint64_t> modulus_; // m_0..m_{k-1}, top coefficient 1 implicit
    Int q_;
    std::uint64_t q64_;
};

/// Coefficient domain tag: the rationals (with integers as the denominator-1
/// case) or an interned finite field.
class Field {
  public:
    Field() = default; // rationals
    static Field rationals() { return Field(); }
    static Field gf(std::uint64_t p, unsigned k = 1) { return Field(GFContext::get(p, k)); }

    bool is_rational() const { return gf_ == nullptr; }
    bool is_finite() const { return gf_ != nullptr; }
    const std::shared_ptr<const GFContext> &context() const { return gf_; }
    Int characteristic() const { return gf_ ? Int(gf_->p()) : Int(0); }
    std::string name() const { return gf_ ? gf_->name() : "QQ"; }

    bool operator==(const Field &o) const { return gf_ == o.gf_; }
    bool operator!=(const Field &o) const { return !(*this == o); }

  private:
    explicit Field(std::shared_ptr<const GFContext> g) : gf_(std::move(g)) {}
    std::shared_ptr<const GFContext> gf_;
};

/// Exact scalar: a rational number or an element of a fixed GF(p^k).
/// Immutable value type; all arithmetic is exact, mixing fields throws.
class Scalar {
  public:
    Scalar() : field_(), rat_(0) {}
    explicit Scalar(const Int &n) : field_(), rat_(n) {}
    explicit Scalar(const Rat &r) : field_(), rat_(r) {}
    Scalar(Field f, const Int &n);
    Scalar(Field f, GFContext::Elem coeffs);

    static Scalar zero(const Field &f) { return Scalar(f, Int(0)); }
    static Scalar one(const Field &f) { return Scalar(f, Int(1)); }

    const Field &field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar &o) const;
    Scalar operator-(const Scalar &o) const;
    Scalar operator-() const;
    Scalar operator*(const Scalar &o) const;
    Scalar operator/(const Scalar &o) const; // throws on zero divisor
    Scalar inverse() const;
    Scalar pow(const Int &e) const; // negative e inverts first

    bool operator==(const Scalar &o) const;
    bool operator!=(const Scalar &o) const { return !(*this == o); }

    // Rational payload; throws if the scalar is a field element.
    const Rat &rational() const;
    // GF payload; throws if the scalar is rational.
    const GFContext::Elem &gf_coeffs() const;

    /// Text form: "a", "a/b", or "c mod p^k" with c the canonical code.
    /// parse() inverts str() exactly.
    std::string str() const;
    static Scalar parse(const std::string &text);

  private:
    void require_same_field(const Scalar &o) const;

    Field field_;
    Rat rat_;
    GFContext::Elem gfc_;
};

} // namespace covstack

#endif
