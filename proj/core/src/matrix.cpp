#include "evoalg/matrix.hpp"

#include <algorithm>
#include <utility>

namespace evoalg {

namespace {

// Bareiss fraction-free elimination on a working copy. Every division is
// exact by the Sylvester identity, so entries stay integers of moderate size
// instead of exploding like naive cross-multiplication.
BigInt bareiss_det(IntMatrix m) {
    const int n = m.rows();
    if (n == 0) return 1;
    BigInt prev(1);
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i) {
                if (m(i, k) != 0) {
                    pivot = i;
                    break;
                }
            }
            if (pivot < 0) return 0;
            for (int j = k; j < n; ++j) std::swap(m(k, j), m(pivot, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                BigInt num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign > 0 ? m(n - 1, n - 1) : BigInt(-m(n - 1, n - 1));
}

}  // namespace

BigInt det(const IntMatrix& m) {
    if (!m.square()) throw NonSquare("det of a non-square matrix");
    return bareiss_det(m);
}

BigRational det(const RationalMatrix& m) {
    if (!m.square()) throw NonSquare("det of a non-square matrix");
    const int n = m.rows();
    // Scale each row integral, run Bareiss, divide the scales back out.
    IntMatrix im(n, n);
    BigRational scale(1);
    for (int i = 0; i < n; ++i) {
        BigInt l(1);
        for (int j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (int j = 0; j < n; ++j) {
            BigRational v = m(i, j) * l;
            im(i, j) = v.get_num();  // denominator is 1 after scaling
        }
        scale *= l;
    }
    BigRational result = BigRational(bareiss_det(im)) / scale;
    result.canonicalize();
    return result;
}

int rank(const IntMatrix& m) {
    // Fraction-free elimination with full pivoting: any nonzero entry of the
    // remaining submatrix may serve as pivot, so structured zero blocks in
    // adjacency matrices never stall the sweep.
    IntMatrix a = m;
    const int rows = a.rows(), cols = a.cols();
    BigInt prev(1);
    int r = 0;
    for (; r < std::min(rows, cols); ++r) {
        int pi = -1, pj = -1;
        for (int i = r; i < rows && pi < 0; ++i)
            for (int j = r; j < cols; ++j)
                if (a(i, j) != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi < 0) break;
        if (pi != r)
            for (int j = 0; j < cols; ++j) std::swap(a(r, j), a(pi, j));
        if (pj != r)
            for (int i = 0; i < rows; ++i) std::swap(a(i, r), a(i, pj));
        for (int i = r + 1; i < rows; ++i) {
            for (int j = r + 1; j < cols; ++j) {
                BigInt num = a(i, j) * a(r, r) - a(i, r) * a(r, j);
                mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a(i, r) = 0;
        }
        prev = a(r, r);
    }
    return r;
}

int rank(const RationalMatrix& m) {
    // Row scaling by denominator lcms preserves rank and lands in the
    // integer fraction-free path.
    IntMatrix im(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        BigInt l(1);
        for (int j = 0; j < m.cols(); ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (int j = 0; j < m.cols(); ++j) {
            BigRational v = m(i, j) * l;
            im(i, j) = v.get_num();
        }
    }
    return rank(im);
}

RationalMatrix to_rational(const IntMatrix& m) {
    RationalMatrix r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = BigRational(m(i, j));
    return r;
}

LinearSolveResult solve_linear(const RationalMatrix& a, const RationalVector& b) {
    if (static_cast<int>(b.size()) != a.rows())
        throw DimensionMismatch("solve_linear: rhs length does not match rows");
    const int rows = a.rows(), cols = a.cols();

    // Gauss-Jordan on the augmented matrix, exact rationals throughout.
    RationalMatrix aug(rows, cols + 1);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) aug(i, j) = a(i, j);
        aug(i, cols) = b[i];
    }

    std::vector<int> pivot_col_of_row;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int pivot = -1;
        for (int i = row; i < rows; ++i)
            if (aug(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != row)
            for (int j = 0; j <= cols; ++j) std::swap(aug(row, j), aug(pivot, j));
        BigRational inv = aug(row, col);
        for (int j = col; j <= cols; ++j) {
            aug(row, j) /= inv;
            aug(row, j).canonicalize();
        }
        for (int i = 0; i < rows; ++i) {
            if (i == row || aug(i, col) == 0) continue;
            BigRational f = aug(i, col);
            for (int j = col; j <= cols; ++j) {
                aug(i, j) -= f * aug(row, j);
                aug(i, j).canonicalize();
            }
        }
        pivot_col_of_row.push_back(col);
        ++row;
    }

    for (int i = row; i < rows; ++i)
        if (aug(i, cols) != 0) return {LinearSolveResult::Kind::Inconsistent, {}, {}};

    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col_of_row) is_pivot[c] = true;

    RationalVector solution(cols, BigRational(0));
    for (size_t r2 = 0; r2 < pivot_col_of_row.size(); ++r2)
        solution[pivot_col_of_row[r2]] = aug(static_cast<int>(r2), cols);

    if (static_cast<int>(pivot_col_of_row.size()) == cols)
        return {LinearSolveResult::Kind::Unique, std::move(solution), {}};

    std::vector<RationalVector> nullspace;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        RationalVector v(cols, BigRational(0));
        v[free] = 1;
        for (size_t r2 = 0; r2 < pivot_col_of_row.size(); ++r2)
            v[pivot_col_of_row[r2]] = -aug(static_cast<int>(r2), free);
        nullspace.push_back(std::move(v));
    }
    return {LinearSolveResult::Kind::Underdetermined, std::move(solution), std::move(nullspace)};
}

}  // namespace evoalg
