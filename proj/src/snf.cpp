#include "covstack/snf.hpp"

#include <sstream>
#include <stdexcept>

namespace covstack {

namespace {

void swap_rows(IntMatrix &m, std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntMatrix &m, std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

void add_row(IntMatrix &m, std::size_t dst, std::size_t src, const Int &factor) {
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(dst, j) += factor * m.at(src, j);
}

void add_col(IntMatrix &m, std::size_t dst, std::size_t src, const Int &factor) {
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, dst) += factor * m.at(i, src);
}

void negate_row(IntMatrix &m, std::size_t i) {
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = -m.at(i, j);
}

bool find_smallest_pivot(const IntMatrix &d, std::size_t t, std::size_t &pr, std::size_t &pc) {
    bool found = false;
    Int best = 0;
    for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j) {
            const Int &v = d.at(i, j);
            if (v == 0) continue;
            Int a = abs(v);
            if (!found || a < best) {
                best = a;
                pr = i;
                pc = j;
                found = true;
            }
        }
    return found;
}

bool row_col_clear(const IntMatrix &d, std::size_t t) {
    for (std::size_t i = t + 1; i < d.rows(); ++i)
        if (d.at(i, t) != 0) return false;
    for (std::size_t j = t + 1; j < d.cols(); ++j)
        if (d.at(t, j) != 0) return false;
    return true;
}

// Clear row t and column t beyond the pivot by repeated Euclidean steps,
// mirroring every operation into u and v.
void clear_position(IntMatrix &d, IntMatrix &u, IntMatrix &v, std::size_t t) {
    for (;;) {
        std::size_t pr = t, pc = t;
        if (!find_smallest_pivot(d, t, pr, pc)) return; // submatrix is zero
        if (pr != t) {
            swap_rows(d, t, pr);
            swap_rows(u, t, pr);
        }
        if (pc != t) {
            swap_cols(d, t, pc);
            swap_cols(v, t, pc);
        }
        bool reduced = false;
        for (std::size_t i = t + 1; i < d.rows(); ++i)
            if (d.at(i, t) != 0) {
                Int q = d.at(i, t) / d.at(t, t);
                add_row(d, i, t, -q);
                add_row(u, i, t, -q);
                if (d.at(i, t) != 0) reduced = true; // remainder left, pivot will shrink
            }
        for (std::size_t j = t + 1; j < d.cols(); ++j)
            if (d.at(t, j) != 0) {
                Int q = d.at(t, j) / d.at(t, t);
                add_col(d, j, t, -q);
                add_col(v, j, t, -q);
                if (d.at(t, j) != 0) reduced = true;
            }
        if (!reduced && row_col_clear(d, t)) return;
    }
}

} // namespace

SmithResult smith_normal_form(const IntMatrix &m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    const std::size_t s = std::min(rows, cols);
    IntMatrix d = m;
    IntMatrix u = IntMatrix::identity(rows);
    IntMatrix v = IntMatrix::identity(cols);

    for (std::size_t t = 0; t < s; ++t) clear_position(d, u, v, t);

    // Sort zero diagonal entries to the back.
    for (std::size_t i = 0; i < s; ++i) {
        if (d.at(i, i) != 0) continue;
        for (std::size_t j = i + 1; j < s; ++j)
            if (d.at(j, j) != 0) {
                swap_rows(d, i, j);
                swap_rows(u, i, j);
                swap_cols(d, i, j);
                swap_cols(v, i, j);
                break;
            }
    }

    // Enforce the divisibility chain: when d_i does not divide d_j, fold
    // column j into column i and re-clear position i (gcd lands at (i,i)).
    bool changed = true;
    std::size_t guard = 0;
    while (changed) {
        if (++guard > 16 * (s + 1) * (s + 1)) throw std::logic_error("smith normal form did not converge");
        changed = false;
        for (std::size_t i = 0; i + 1 < s && !changed; ++i) {
            if (d.at(i, i) == 0) continue;
            for (std::size_t j = i + 1; j < s; ++j)
                if (d.at(j, j) % d.at(i, i) != 0) {
                    add_col(d, i, j, 1);
                    add_col(v, i, j, 1);
                    for (std::size_t t = i; t < s; ++t) clear_position(d, u, v, t);
                    changed = true;
                    break;
                }
        }
    }

    for (std::size_t i = 0; i < s; ++i)
        if (d.at(i, i) < 0) {
            negate_row(d, i);
            negate_row(u, i);
        }

    SmithResult res;
    res.factors.reserve(s);
    for (std::size_t i = 0; i < s; ++i) res.factors.push_back(d.at(i, i));
    res.left = std::move(u);
    res.right = std::move(v);
    return res;
}

std::optional<Int> AbelianPresentation::order() const {
    if (free_rank > 0) return std::nullopt;
    Int n = 1;
    for (const Int &f : invariant_factors) n *= f;
    return n;
}

std::string AbelianPresentation::structure() const {
    std::ostringstream os;
    bool first = true;
    if (free_rank == 1) {
        os << "Z";
        first = false;
    } else if (free_rank > 1) {
        os << "Z^" << free_rank;
        first = false;
    }
    for (const Int &f : invariant_factors) {
        os << (first ? "" : " x ") << "Z/" << f;
        first = false;
    }
    if (first) os << "trivial";
    return os.str();
}

AbelianPresentation group_from_relations(std::size_t generators, const IntMatrix &relations) {
    if (relations.rows() > 0 && relations.cols() != generators)
        throw std::domain_error("relation matrix must have one column per generator");

    AbelianPresentation pres;
    pres.generator_count = generators;
    pres.relations = relations;

    SmithResult snf = relations.rows() == 0 ? SmithResult{} : smith_normal_form(relations);
    std::size_t nonzero = 0;
    for (const Int &f : snf.factors) {
        if (f == 0) continue;
        ++nonzero;
        if (f >= 2) pres.invariant_factors.push_back(f);
    }
    pres.free_rank = generators - nonzero;
    return pres;
}

} // namespace covstack
