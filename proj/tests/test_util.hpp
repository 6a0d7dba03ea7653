#ifndef COVSTACK_TEST_UTIL_HPP
#define COVSTACK_TEST_UTIL_HPP

#include "covstack/form.hpp"
#include "covstack/scalar_matrix.hpp"

#include <random>

namespace testutil {

using namespace covstack;

inline Scalar rnd_scalar(const Field &f, std::mt19937_64 &rng) {
    if (f.is_finite()) {
        std::uint64_t q = f.context()->order_u64();
        return Scalar(f, f.context()->decode(rng() % q));
    }
    return Scalar(Int(static_cast<std::int64_t>(rng() % 21) - 10));
}

inline Scalar rnd_nonzero(const Field &f, std::mt19937_64 &rng) {
    for (;;) {
        Scalar s = rnd_scalar(f, rng);
        if (!s.is_zero()) return s;
    }
}

// Random nonzero homogeneous form of the exact given degree.
inline Form rnd_form(const Field &f, unsigned num_vars, unsigned degree, std::mt19937_64 &rng,
                     double density = 0.6) {
    for (;;) {
        Poly p(num_vars, f);
        // iterate all exponent vectors of total degree `degree`
        ExpVec e(num_vars, 0);
        e[0] = degree;
        for (;;) {
            if ((rng() % 100) < static_cast<std::uint64_t>(density * 100))
                p.add_term(e, rnd_scalar(f, rng));
            // next composition of `degree` into num_vars parts
            unsigned i = 0;
            while (i + 1 < num_vars && e[i] == 0) ++i;
            if (i + 1 >= num_vars) break;
            unsigned head = e[i];
            e[i] = 0;
            e[i + 1] += 1;
            e[0] = head - 1;
        }
        if (!p.is_zero()) return Form(std::move(p));
    }
}

inline Form rnd_binary_form(const Field &f, unsigned degree, std::mt19937_64 &rng) {
    return rnd_form(f, 2, degree, rng);
}

inline ScalarMatrix rnd_invertible(std::size_t n, const Field &f, std::mt19937_64 &rng) {
    for (;;) {
        ScalarMatrix m(n, std::vector<Scalar>(n, Scalar::zero(f)));
        for (auto &row : m)
            for (auto &v : row) v = rnd_scalar(f, rng);
        if (!mat_det(m).is_zero()) return m;
    }
}

} // namespace testutil

#endif
