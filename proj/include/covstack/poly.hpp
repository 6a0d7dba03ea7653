#ifndef COVSTACK_POLY_HPP
#define COVSTACK_POLY_HPP

#include "covstack/scalar.hpp"

#include <map>
#include <optional>
#include <vector>

namespace covstack {

using ExpVec = std::vector<unsigned>;

/// Sparse multivariate polynomial over a fixed coefficient field.  Terms map
/// exponent vectors (length num_vars) to nonzero scalars; no homogeneity is
/// imposed here (Form adds that).  The zero polynomial has an empty term map
/// and keeps its declared field.
class Poly {
  public:
    Poly() : num_vars_(0), field_() {}
    Poly(unsigned num_vars, Field field) : num_vars_(num_vars), field_(field) {}

    static Poly constant(unsigned num_vars, const Scalar &c);
    static Poly monomial(ExpVec exps, const Scalar &c);
    static Poly variable(unsigned num_vars, unsigned index, Field field);

    unsigned num_vars() const { return num_vars_; }
    const Field &field() const { return field_; }
    const std::map<ExpVec, Scalar> &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Total degree; -1 for the zero polynomial.
    int total_degree() const;
    /// Degree if homogeneous (all terms equal total degree); nullopt otherwise.
    /// The zero polynomial is homogeneous of every degree and reports 0 here.
    std::optional<unsigned> homogeneous_degree() const;

    void add_term(const ExpVec &exps, const Scalar &c);
    Scalar coefficient(const ExpVec &exps) const;

    Poly operator+(const Poly &o) const;
    Poly operator-(const Poly &o) const;
    Poly operator-() const;
    Poly operator*(const Poly &o) const;
    Poly scaled(const Scalar &c) const;
    bool operator==(const Poly &o) const;
    bool operator!=(const Poly &o) const { return !(*this == o); }

    Poly derivative(unsigned var) const;
    Scalar eval(const std::vector<Scalar> &point) const;
    /// Substitute point[i] for variable i when mask[i] is set; the result
    /// lives in the same variable set with those variables eliminated.
    Poly partial_eval(const std::vector<bool> &mask, const std::vector<Scalar> &point) const;
    /// Substitute each variable by a linear combination of the variables:
    /// x_i -> sum_j coeffs[i][j] x_j.
    Poly linear_substitute(const std::vector<std::vector<Scalar>> &coeffs) const;
    /// Extract the homogeneous component of the given total degree.
    Poly homogeneous_component(unsigned degree) const;
    /// Map coefficients into another field (rational -> GF(p) reduction or
    /// identity).  Throws if a denominator vanishes in the target.
    Poly change_field(const Field &target) const;
    /// Largest e with x_var^e dividing every term (0 for the zero polynomial).
    unsigned variable_multiplicity(unsigned var) const;
    /// True when some term has a positive exponent on var.
    bool involves(unsigned var) const;

    std::string str(const std::vector<std::string> &var_names = {}) const;

  private:
    void check_compatible(const Poly &o) const;

    unsigned num_vars_;
    Field field_;
    std::map<ExpVec, Scalar> terms_;
};

/// Dense univariate polynomial over Scalar, low-to-high coefficients.
/// Just enough for gcd-based squarefreeness tests.
class UniPoly {
  public:
    UniPoly(Field field) : field_(field) {}
    UniPoly(Field field, std::vector<Scalar> coeffs);

    const Field &field() const { return field_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Scalar &operator[](std::size_t i) const { return coeffs_[i]; }

    UniPoly derivative() const;
    /// Euclidean remainder; divisor must be nonzero.
    UniPoly rem(const UniPoly &divisor) const;
    static UniPoly gcd(UniPoly a, UniPoly b);

  private:
    void normalize();

    Field field_;
    std::vector<Scalar> coeffs_;
};

} // namespace covstack

#endif
