#ifndef COVSTACK_FORM_HPP
#define COVSTACK_FORM_HPP

#include "covstack/poly.hpp"
#include "covstack/scalar_matrix.hpp"

#include <cstdint>
#include <optional>

namespace covstack {

/// Homogeneous multivariate form: a Poly all of whose terms share one total
/// degree.  The zero form carries a declared degree.
class Form {
  public:
    Form() = default;
    /// Validates homogeneity; throws for inhomogeneous input.  The zero
    /// polynomial needs an explicit degree.
    explicit Form(Poly p, std::optional<unsigned> zero_degree = std::nullopt);
    static Form zero(unsigned num_vars, unsigned degree, Field field);

    unsigned num_vars() const { return poly_.num_vars(); }
    unsigned degree() const { return degree_; }
    const Field &field() const { return poly_.field(); }
    bool is_zero() const { return poly_.is_zero(); }
    const Poly &poly() const { return poly_; }

    Form operator+(const Form &o) const;
    Form operator*(const Form &o) const;
    Form scaled(const Scalar &c) const;
    bool operator==(const Form &o) const { return poly_ == o.poly_ && degree_ == o.degree_; }
    bool operator!=(const Form &o) const { return !(*this == o); }

    Scalar eval(const std::vector<Scalar> &point) const { return poly_.eval(point); }
    Form change_field(const Field &target) const;

    std::string str() const { return poly_.str(); }

  private:
    Poly poly_;
    unsigned degree_ = 0;
};

/// Twist of the substitution action: multiply f(A^{-1}x) by
/// det(A)^det_exponent * alpha^scalar_exponent.
struct TwistSpec {
    Int det_exponent = 0;
    Int scalar_exponent = 0;
};

/// alpha^scalar_exponent * det(A)^det_exponent * f(A^{-1}x).
/// A must be invertible over the coefficient field of f; alpha must be
/// supplied (and nonzero) whenever scalar_exponent != 0.
Form act_linear(const Form &f, const ScalarMatrix &a, const std::optional<Scalar> &alpha,
                const TwistSpec &twist = {});

/// All n+1 partial derivatives, in variable order.
std::vector<Form> partials(const Form &f);

/// Resultant of two nonzero binary forms of positive degree, as the
/// determinant of the (m1+m2) x (m1+m2) Sylvester matrix of their
/// dehomogenizations at y=1, padded with the (possibly zero) leading
/// coefficients so the point at infinity participates.  Vanishes iff the
/// forms share a projective zero over the algebraic closure.  Fixed
/// convention: rows list f-coefficients (highest x-power first) shifted
/// through m2 rows, then g-coefficients through m1 rows; this gives
/// Res(x, y) = 1 and Res(f, g) = (-1)^{m1 m2} Res(g, f).
Scalar sylvester_resultant(const Form &f, const Form &g);

/// Discriminant of a binary form of degree m >= 2, defined as
/// sylvester_resultant(df/dx, df/dy); degree 2(m-1) in the coefficients,
/// and a unit multiple of the classical discriminant.  Vanishes iff f has a
/// multiple projective root over the algebraic closure.  Requires the
/// characteristic not to divide m.
Scalar disc_binary(const Form &f);

/// Multiple-root test independent of disc_binary: Euclidean gcd of the
/// dehomogenization with its derivative, plus the multiplicity of the point
/// at infinity read off the other chart.  Same characteristic guard.
bool is_squarefree_binary(const Form &f);

constexpr std::uint64_t kDefaultSearchBudget = 200'000'000;

/// Exhaustive scan of one extension field.
struct ExtensionScan {
    unsigned extension_degree; // j: points enumerated over GF(p^j)
    Field field;
    std::vector<std::vector<Scalar>> points; // normalized, first nonzero coord = 1
};

struct SingularSearchResult {
    std::vector<ExtensionScan> scans;
    std::uint64_t candidates_visited = 0;
};

/// All projective points over GF(p^j), j = 1..extension_bound, at which
/// every partial derivative of F vanishes.  Exhaustive for the fields
/// listed; says nothing about larger extensions.  The enumeration walks
/// normalized representatives chart by chart and prunes a subtree as soon
/// as a partial depending only on the fixed coordinates is nonzero; the
/// budget caps the number of candidate visits and exceeding it throws an
/// error naming the budget.  F must live over a prime field when
/// extension_bound > 1.  Result order is deterministic.
SingularSearchResult singular_point_search(const Form &form, unsigned extension_bound,
                                           std::uint64_t budget = kDefaultSearchBudget);

} // namespace covstack

#endif
