#pragma once

#include <initializer_list>
#include <vector>

#include "evoalg/errors.hpp"
#include "evoalg/rational.hpp"

namespace evoalg {

// Dense row-major matrix; target sizes are n <= ~64, so no sparsity machinery.
template <class T>
class Matrix {
  public:
    Matrix() = default;
    Matrix(int rows, int cols, const T& init = T())
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, init) {
        if (rows < 0 || cols < 0) throw DimensionMismatch("negative matrix dimension");
    }
    Matrix(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = static_cast<int>(init.size());
        cols_ = rows_ ? static_cast<int>(init.begin()->size()) : 0;
        data_.reserve(static_cast<size_t>(rows_) * cols_);
        for (const auto& row : init) {
            if (static_cast<int>(row.size()) != cols_)
                throw DimensionMismatch("ragged initializer");
            for (const auto& v : row) data_.push_back(v);
        }
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const T& operator()(int i, int j) const {
        return data_[static_cast<size_t>(i) * cols_ + j];
    }

    bool operator==(const Matrix&) const = default;

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<BigInt>;
using RationalMatrix = Matrix<BigRational>;
using RationalVector = std::vector<BigRational>;

// Exact determinant by Bareiss fraction-free elimination; throws NonSquare.
BigInt det(const IntMatrix& m);
BigRational det(const RationalMatrix& m);

// Exact rank over the rationals, fraction-free elimination with full pivoting
// (adjacency matrices have structured zero blocks that defeat partial pivots).
int rank(const IntMatrix& m);
int rank(const RationalMatrix& m);

struct LinearSolveResult {
    enum class Kind { Unique, Inconsistent, Underdetermined };
    Kind kind;
    // Unique: the solution. Underdetermined: a particular solution (free
    // variables set to zero).
    RationalVector solution;
    // Underdetermined only: basis of the nullspace of a.
    std::vector<RationalVector> nullspace;
};

// Solves a x = b exactly; throws DimensionMismatch when sizes disagree.
LinearSolveResult solve_linear(const RationalMatrix& a, const RationalVector& b);

RationalMatrix to_rational(const IntMatrix& m);

}  // namespace evoalg
