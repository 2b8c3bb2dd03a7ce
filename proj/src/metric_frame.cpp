#include "solvform/metric_frame.hpp"

namespace solvform {

Multivector substitute(const Multivector& a, const MatrixS& images) {
    if (images.rows() != a.dim() || images.cols() != a.dim())
        throw Error("substitution matrix shape mismatch");
    const int n = a.dim();
    std::vector<Multivector> image_forms;
    image_forms.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        Multivector form(n);
        for (int j = 0; j < n; ++j) form.set_coefficient(Monomial(1) << j, images(i, j));
        image_forms.push_back(std::move(form));
    }
    Multivector out(n);
    for (const auto& [mono, coeff] : a.terms()) {
        Multivector product = Multivector::scalar(n, Scalar(1));
        for (int i : monomial_indices(mono)) product = wedge(product, image_forms[static_cast<std::size_t>(i - 1)]);
        out += coeff * product;
    }
    return out;
}

MetricFrame::MetricFrame(MatrixS coframe) : dim_(static_cast<int>(coframe.rows())) {
    if (coframe.rows() != coframe.cols()) throw InputError("coframe matrix must be square");
    if (dim_ < 1 || dim_ > kMaxDim)
        throw InputError("coframe dimension out of range: " + std::to_string(dim_));
    for (Eigen::Index j = 0; j < coframe.cols(); ++j) {
        for (Eigen::Index i = 0; i < coframe.rows(); ++i) {
            if (!coframe(i, j).is_real()) throw InputError("coframe entries must be rational");
        }
    }
    auto inv = inverse(coframe);
    if (!inv) throw ValidationError("coframe matrix is singular");
    coframe_ = std::move(coframe);
    inverse_ = std::move(*inv);
}

MetricFrame MetricFrame::identity(int n) {
    if (n < 1 || n > kMaxDim) throw InputError("coframe dimension out of range: " + std::to_string(n));
    return MetricFrame(MatrixS(MatrixS::Identity(n, n)));
}

MetricFrame MetricFrame::from_gram(const MatrixQ& gram) {
    if (gram.rows() != gram.cols()) throw InputError("Gram matrix must be square");
    const Eigen::Index n = gram.rows();
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index i = 0; i < j; ++i) {
            if (gram(i, j) != gram(j, i)) throw InputError("Gram matrix must be symmetric");
        }
    }
    MatrixS gram_s = to_scalar_matrix(gram);
    auto inv = inverse(gram_s);
    if (!inv) throw InputError("Gram matrix is singular");

    // C^T C = G^{-1} via H = L D L^T with unit lower L; C = diag(sqrt D) L^T
    // requires every pivot of D to be a rational square.
    MatrixQ h(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index i = 0; i < n; ++i) h(i, j) = (*inv)(i, j).re;
    }
    MatrixQ l = MatrixQ::Identity(n, n);
    VectorQ d(n);
    for (Eigen::Index j = 0; j < n; ++j) {
        Rational dj = h(j, j);
        for (Eigen::Index k = 0; k < j; ++k) dj -= l(j, k) * l(j, k) * d(k);
        if (dj <= 0) throw InputError("Gram matrix is not positive definite");
        d(j) = dj;
        for (Eigen::Index i = j + 1; i < n; ++i) {
            Rational v = h(i, j);
            for (Eigen::Index k = 0; k < j; ++k) v -= l(i, k) * l(j, k) * d(k);
            l(i, j) = v / dj;
        }
    }
    MatrixS c = MatrixS::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        Rational root;
        if (!rational_sqrt(d(i), root))
            throw InputError("Gram pivot " + to_string(d(i)) +
                             " has no rational square root; supply an explicit orthonormal "
                             "coframe matrix instead of a Gram matrix");
        for (Eigen::Index j = i; j < n; ++j) c(i, j) = Scalar(root * l(j, i));
    }
    return MetricFrame(std::move(c));
}

Multivector MetricFrame::to_frame(const Multivector& a) const {
    if (a.dim() != dim_) throw Error("multivector dimension mismatch");
    return substitute(a, inverse_);
}

Multivector MetricFrame::from_frame(const Multivector& a) const {
    if (a.dim() != dim_) throw Error("multivector dimension mismatch");
    return substitute(a, coframe_);
}

Multivector MetricFrame::volume_form() const {
    Monomial top = (Monomial(1) << dim_) - 1;
    return from_frame(Multivector::monomial_term(dim_, top, Scalar(1)));
}

MatrixQ MetricFrame::gram() const {
    MatrixS ctc = MatrixS(coframe_.transpose()) * coframe_;
    auto inv = inverse(ctc);
    MatrixQ out(dim_, dim_);
    for (Eigen::Index j = 0; j < dim_; ++j) {
        for (Eigen::Index i = 0; i < dim_; ++i) out(i, j) = (*inv)(i, j).re;
    }
    return out;
}

} // namespace solvform
