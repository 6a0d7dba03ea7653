#ifndef COVSTACK_CHOW_HPP
#define COVSTACK_CHOW_HPP

#include "covstack/scalar.hpp"

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace covstack {

/// Ambient ring for truncated intersection calculus on a product of
/// projective spaces: Z[h_0,...,h_{r-1}] / (h_i^{trunc_i}), one hyperplane
/// class per factor.
struct ChowRing {
    std::vector<std::string> var_names;
    std::vector<unsigned> trunc; // dim of factor + 1

    static std::shared_ptr<const ChowRing> make(std::vector<std::string> names,
                                                std::vector<unsigned> trunc);
};

/// Element of a ChowRing: integer combination of monomials below truncation.
class ChowClass {
  public:
    explicit ChowClass(std::shared_ptr<const ChowRing> ring) : ring_(std::move(ring)) {}

    static ChowClass hyperplane(const std::shared_ptr<const ChowRing> &ring, std::size_t var);
    static ChowClass constant(const std::shared_ptr<const ChowRing> &ring, const Int &c);

    const std::shared_ptr<const ChowRing> &ring() const { return ring_; }
    bool is_zero() const { return coeffs_.empty(); }
    Int coefficient(const std::vector<unsigned> &expo) const;

    ChowClass operator+(const ChowClass &o) const;
    ChowClass operator*(const ChowClass &o) const;
    ChowClass scaled(const Int &c) const;
    ChowClass pow(unsigned e) const;
    bool operator==(const ChowClass &o) const;

    std::string str() const;

  private:
    void add_term(const std::vector<unsigned> &expo, const Int &c);

    std::shared_ptr<const ChowRing> ring_;
    std::map<std::vector<unsigned>, Int> coeffs_;
};

/// Degree of the locus of singular degree-m forms on P^n, computed by
/// expanding ((m-1) xi + eta)^{n+1} in the Chow ring of P^n x P(forms) and
/// reading the coefficient of xi^n eta (the pushforward to the form space).
/// Equals (n+1)(m-1)^n; callers treat that closed form as the oracle.
Int discriminant_degree(unsigned n, unsigned m);

/// Bidegree of the incidence locus of pairs of binary forms of degrees
/// 2d1-d2 and 2d2-d1 with a common root, via expansion of
/// ((2d1-d2) eta + xi1)((2d2-d1) eta + xi2) and pushforward along P^1.
/// Equals (2d2-d1, 2d1-d2).
std::pair<Int, Int> z_bidegree(const Int &d1, const Int &d2);

} // namespace covstack

#endif
