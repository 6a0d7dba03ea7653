#ifndef COVSTACK_INTMATRIX_HPP
#define COVSTACK_INTMATRIX_HPP

#include "covstack/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace covstack {

/// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
  public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols, 0) {}
    IntMatrix(std::initializer_list<std::initializer_list<Int>> init);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int &at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Int &at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    IntMatrix operator*(const IntMatrix &o) const;
    bool operator==(const IntMatrix &o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }

    /// Exact determinant (square matrices), fraction-free Bareiss.
    Int determinant() const;

    std::string str() const;

  private:
    std::size_t rows_, cols_;
    std::vector<Int> e_;
};

} // namespace covstack

#endif
