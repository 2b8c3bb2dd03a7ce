#include "solvform/lie_algebra.hpp"

#include <sstream>

namespace solvform {

namespace {

std::vector<std::string> default_labels(int n) {
    std::vector<std::string> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) out.push_back("e" + std::to_string(i));
    return out;
}

} // namespace

LieAlgebra::LieAlgebra(int dim, const std::vector<BracketTerm>& brackets,
                       std::vector<std::string> labels)
    : dim_(dim), labels_(std::move(labels)) {
    if (dim_ < 1 || dim_ > kMaxDim)
        throw InputError("algebra dimension out of range: " + std::to_string(dim_));
    if (labels_.empty()) labels_ = default_labels(dim_);
    if (static_cast<int>(labels_.size()) != dim_)
        throw InputError("label count does not match dimension");
    const std::size_t n = static_cast<std::size_t>(dim_);
    constants_.assign(n * n * n, Rational(0));
    for (const BracketTerm& t : brackets) {
        if (t.i < 1 || t.i > dim_ || t.j < 1 || t.j > dim_ || t.k < 1 || t.k > dim_)
            throw InputError("bracket index out of range");
        if (t.i == t.j) throw InputError("bracket [x_i, x_i] must vanish");
        constants_[at(t.i, t.j, t.k)] += t.c;
        constants_[at(t.j, t.i, t.k)] -= t.c;
    }

    d_covector_.reserve(n);
    for (int k = 1; k <= dim_; ++k) {
        Multivector dk(dim_);
        for (int i = 1; i <= dim_; ++i) {
            for (int j = i + 1; j <= dim_; ++j) {
                Rational c = constants_[at(i, j, k)];
                if (c == 0) continue;
                Monomial m = (Monomial(1) << (i - 1)) | (Monomial(1) << (j - 1));
                dk.add_term(m, Scalar(-c));
            }
        }
        d_covector_.push_back(std::move(dk));
    }

    jacobi_.ok = true;
    for (int i = 1; i <= dim_ && jacobi_.ok; ++i) {
        for (int j = i + 1; j <= dim_ && jacobi_.ok; ++j) {
            for (int k = j + 1; k <= dim_ && jacobi_.ok; ++k) {
                VectorQ ei = VectorQ::Zero(dim_), ej = VectorQ::Zero(dim_), ek = VectorQ::Zero(dim_);
                ei(i - 1) = 1;
                ej(j - 1) = 1;
                ek(k - 1) = 1;
                VectorQ defect = bracket_vectors(bracket(i, j), ek) +
                                 bracket_vectors(bracket(j, k), ei) +
                                 bracket_vectors(bracket(k, i), ej);
                bool zero = true;
                for (int m = 0; m < dim_; ++m) {
                    if (defect(m) != 0) {
                        zero = false;
                        break;
                    }
                }
                if (!zero) {
                    jacobi_.ok = false;
                    jacobi_.i = i;
                    jacobi_.j = j;
                    jacobi_.k = k;
                    jacobi_.defect = std::move(defect);
                }
            }
        }
    }
}

std::size_t LieAlgebra::at(int i, int j, int k) const {
    const std::size_t n = static_cast<std::size_t>(dim_);
    return (static_cast<std::size_t>(i - 1) * n + static_cast<std::size_t>(j - 1)) * n +
           static_cast<std::size_t>(k - 1);
}

Rational LieAlgebra::structure_constant(int i, int j, int k) const {
    if (i < 1 || i > dim_ || j < 1 || j > dim_ || k < 1 || k > dim_)
        throw InputError("bracket index out of range");
    return constants_[at(i, j, k)];
}

VectorQ LieAlgebra::bracket(int i, int j) const {
    VectorQ out(dim_);
    for (int k = 1; k <= dim_; ++k) out(k - 1) = structure_constant(i, j, k);
    return out;
}

VectorQ LieAlgebra::bracket_vectors(const VectorQ& u, const VectorQ& v) const {
    if (u.size() != dim_ || v.size() != dim_) throw Error("vector length mismatch");
    VectorQ out = VectorQ::Zero(dim_);
    for (int i = 1; i <= dim_; ++i) {
        if (u(i - 1) == 0) continue;
        for (int j = 1; j <= dim_; ++j) {
            if (v(j - 1) == 0) continue;
            Rational f = u(i - 1) * v(j - 1);
            for (int k = 1; k <= dim_; ++k) {
                Rational c = constants_[at(i, j, k)];
                if (c != 0) out(k - 1) += f * c;
            }
        }
    }
    return out;
}

void LieAlgebra::require_valid() const {
    if (jacobi_.ok) return;
    std::ostringstream os;
    os << "Jacobi identity fails on triple (" << jacobi_.i << ", " << jacobi_.j << ", "
       << jacobi_.k << ")";
    throw ValidationError(os.str());
}

bool LieAlgebra::is_unimodular() const {
    for (int i = 1; i <= dim_; ++i) {
        Rational tr(0);
        for (int j = 1; j <= dim_; ++j) tr += structure_constant(i, j, j);
        if (tr != 0) return false;
    }
    return true;
}

Multivector LieAlgebra::differential_unchecked(const Multivector& a) const {
    if (a.dim() != dim_) throw Error("multivector dimension mismatch");
    Multivector out(dim_);
    for (const auto& [mono, coeff] : a.terms()) {
        std::vector<int> idx = monomial_indices(mono);
        for (std::size_t pos = 0; pos < idx.size(); ++pos) {
            const Multivector& dk = d_covector_[static_cast<std::size_t>(idx[pos] - 1)];
            if (dk.is_zero()) continue;
            Monomial rest = mono & ~(Monomial(1) << (idx[pos] - 1));
            int sign = (pos % 2 == 0) ? 1 : -1;
            out += (Scalar(sign) * coeff) * wedge(dk, Multivector::monomial_term(dim_, rest, Scalar(1)));
        }
    }
    return out;
}

Multivector LieAlgebra::differential(const Multivector& a) const {
    require_valid();
    return differential_unchecked(a);
}

MatrixS LieAlgebra::differential_matrix(int p) const {
    require_valid();
    std::vector<Monomial> source = monomials(dim_, p);
    std::vector<Monomial> target = monomials(dim_, p + 1);
    MatrixS out = MatrixS::Zero(static_cast<Eigen::Index>(target.size()),
                                static_cast<Eigen::Index>(source.size()));
    for (std::size_t c = 0; c < source.size(); ++c) {
        Multivector d = differential_unchecked(Multivector::monomial_term(dim_, source[c], Scalar(1)));
        out.col(static_cast<Eigen::Index>(c)) = coordinates(d, p + 1);
    }
    return out;
}

LieAlgebra::Cohomology LieAlgebra::cohomology(int p) const {
    require_valid();
    if (p < 0 || p > dim_) throw InputError("degree out of range: " + std::to_string(p));
    Cohomology out;
    out.degree = p;
    MatrixS d_here = differential_matrix(p);
    MatrixS closed = kernel_basis(d_here);
    MatrixS d_prev;
    if (p == 0)
        d_prev = MatrixS::Zero(closed.rows(), 0);
    else
        d_prev = differential_matrix(p - 1);
    MatrixS joint(closed.rows(), d_prev.cols() + closed.cols());
    joint.leftCols(d_prev.cols()) = d_prev;
    joint.rightCols(closed.cols()) = closed;
    RowEchelon<Scalar> re = row_echelon(joint);
    for (Eigen::Index c : re.pivots) {
        if (c < d_prev.cols()) continue;
        Eigen::Index k = c - d_prev.cols();
        out.representatives.push_back(from_coordinates(dim_, p, closed.col(k)));
    }
    out.betti = static_cast<Eigen::Index>(out.representatives.size());
    return out;
}

std::vector<Eigen::Index> LieAlgebra::betti_vector() const {
    std::vector<Eigen::Index> out;
    out.reserve(static_cast<std::size_t>(dim_ + 1));
    for (int p = 0; p <= dim_; ++p) out.push_back(betti(p));
    return out;
}

} // namespace solvform
