#ifndef COVSTACK_SCALAR_MATRIX_HPP
#define COVSTACK_SCALAR_MATRIX_HPP

#include "covstack/scalar.hpp"

#include <vector>

namespace covstack {

/// Square/rectangular matrices over a coefficient field, stored as nested
/// vectors.  Small sizes only (group elements, Sylvester matrices).
using ScalarMatrix = std::vector<std::vector<Scalar>>;

ScalarMatrix mat_identity(std::size_t n, const Field &field);
ScalarMatrix mat_mul(const ScalarMatrix &a, const ScalarMatrix &b);
ScalarMatrix mat_scale(const ScalarMatrix &a, const Scalar &c);
Scalar mat_det(const ScalarMatrix &a);
/// Inverse by Gaussian elimination; throws "non-invertible matrix".
ScalarMatrix mat_inverse(const ScalarMatrix &a);
std::size_t mat_rank(ScalarMatrix a);
bool mat_equal(const ScalarMatrix &a, const ScalarMatrix &b);

} // namespace covstack

#endif
