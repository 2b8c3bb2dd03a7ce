#pragma once

#include <optional>
#include <vector>

#include "solvform/scalar.hpp"

namespace solvform {

template <typename S>
using DenseMatrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <typename S>
using DenseVector = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using MatrixQ = DenseMatrix<Rational>;
using VectorQ = DenseVector<Rational>;
using MatrixS = DenseMatrix<Scalar>;
using VectorS = DenseVector<Scalar>;

// Exact Gauss-Jordan elimination over any field scalar (Rational or Scalar).
// Pivoting is deterministic: columns are scanned left to right and the first
// row with a nonzero entry is used, so identical inputs always produce
// identical echelon forms, kernels, and representative choices.
//
// Conjugation is never delegated to Eigen; anything Hermitian is spelled out
// with solvform::conj at the call site.

template <typename S>
struct RowEchelon {
    DenseMatrix<S> mat;           // reduced row echelon form
    std::vector<Eigen::Index> pivots; // pivot column per nonzero row
    int sign = 1;                 // parity of the row swaps performed

    Eigen::Index rank() const { return static_cast<Eigen::Index>(pivots.size()); }
};

template <typename S>
RowEchelon<S> row_echelon(DenseMatrix<S> m) {
    RowEchelon<S> out;
    const Eigen::Index rows = m.rows(), cols = m.cols();
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index p = -1;
        for (Eigen::Index i = r; i < rows; ++i) {
            if (!(m(i, c) == S(0))) {
                p = i;
                break;
            }
        }
        if (p < 0) continue;
        if (p != r) {
            m.row(p).swap(m.row(r));
            out.sign = -out.sign;
        }
        S inv = S(1) / m(r, c);
        for (Eigen::Index j = c; j < cols; ++j) m(r, j) = m(r, j) * inv;
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (i == r || m(i, c) == S(0)) continue;
            S f = m(i, c);
            for (Eigen::Index j = c; j < cols; ++j) m(i, j) = m(i, j) - f * m(r, j);
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.mat = std::move(m);
    return out;
}

template <typename S>
Eigen::Index rank(const DenseMatrix<S>& m) {
    return row_echelon(m).rank();
}

/// Basis of the right kernel, one column per free column of m, ordered by
/// ascending free column index. Each basis vector carries coefficient 1 at
/// its free index, which is its last nonzero coordinate.
template <typename S>
DenseMatrix<S> kernel_basis(const DenseMatrix<S>& m) {
    const Eigen::Index cols = m.cols();
    RowEchelon<S> re = row_echelon(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (Eigen::Index c : re.pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    const Eigen::Index k = cols - re.rank();
    DenseMatrix<S> basis = DenseMatrix<S>::Zero(cols, k);
    Eigen::Index out = 0;
    for (Eigen::Index f = 0; f < cols; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        basis(f, out) = S(1);
        for (Eigen::Index i = 0; i < re.rank(); ++i) basis(re.pivots[static_cast<std::size_t>(i)], out) = -re.mat(i, f);
        ++out;
    }
    return basis;
}

template <typename S>
S determinant(DenseMatrix<S> m) {
    if (m.rows() != m.cols()) throw Error("determinant of non-square matrix");
    const Eigen::Index n = m.rows();
    S det = S(1);
    for (Eigen::Index c = 0; c < n; ++c) {
        Eigen::Index p = -1;
        for (Eigen::Index i = c; i < n; ++i) {
            if (!(m(i, c) == S(0))) {
                p = i;
                break;
            }
        }
        if (p < 0) return S(0);
        if (p != c) {
            m.row(p).swap(m.row(c));
            det = -det;
        }
        det = det * m(c, c);
        S inv = S(1) / m(c, c);
        for (Eigen::Index i = c + 1; i < n; ++i) {
            if (m(i, c) == S(0)) continue;
            S f = m(i, c) * inv;
            for (Eigen::Index j = c; j < n; ++j) m(i, j) = m(i, j) - f * m(c, j);
        }
    }
    return det;
}

template <typename S>
std::optional<DenseMatrix<S>> inverse(const DenseMatrix<S>& m) {
    if (m.rows() != m.cols()) throw Error("inverse of non-square matrix");
    const Eigen::Index n = m.rows();
    DenseMatrix<S> aug(n, 2 * n);
    aug.leftCols(n) = m;
    aug.rightCols(n) = DenseMatrix<S>::Identity(n, n);
    RowEchelon<S> re = row_echelon(aug);
    if (re.rank() < n || (n > 0 && re.pivots[static_cast<std::size_t>(n - 1)] >= n)) return std::nullopt;
    return DenseMatrix<S>(re.mat.rightCols(n));
}

/// Particular solution of A x = b with all free variables set to zero;
/// nullopt when the system is inconsistent.
template <typename S>
std::optional<DenseVector<S>> solve_linear(const DenseMatrix<S>& a, const DenseVector<S>& b) {
    if (a.rows() != b.rows()) throw Error("solve_linear: shape mismatch");
    DenseMatrix<S> aug(a.rows(), a.cols() + 1);
    aug.leftCols(a.cols()) = a;
    aug.col(a.cols()) = b;
    RowEchelon<S> re = row_echelon(aug);
    for (Eigen::Index c : re.pivots) {
        if (c == a.cols()) return std::nullopt;
    }
    DenseVector<S> x = DenseVector<S>::Zero(a.cols());
    for (Eigen::Index i = 0; i < re.rank(); ++i) x(re.pivots[static_cast<std::size_t>(i)]) = re.mat(i, a.cols());
    return x;
}

template <typename S>
bool exact_equal(const DenseMatrix<S>& a, const DenseMatrix<S>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
        for (Eigen::Index i = 0; i < a.rows(); ++i) {
            if (!(a(i, j) == b(i, j))) return false;
        }
    }
    return true;
}

template <typename S>
bool is_zero_matrix(const DenseMatrix<S>& a) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
        for (Eigen::Index i = 0; i < a.rows(); ++i) {
            if (!(a(i, j) == S(0))) return false;
        }
    }
    return true;
}

inline MatrixS to_scalar_matrix(const MatrixQ& m) {
    MatrixS out(m.rows(), m.cols());
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        for (Eigen::Index i = 0; i < m.rows(); ++i) out(i, j) = Scalar(m(i, j));
    }
    return out;
}

/// Conjugate transpose, spelled out because Eigen-level conjugation is unused.
inline MatrixS conjugate_transpose(const MatrixS& m) {
    MatrixS out(m.cols(), m.rows());
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        for (Eigen::Index i = 0; i < m.rows(); ++i) out(j, i) = conj(m(i, j));
    }
    return out;
}

} // namespace solvform
