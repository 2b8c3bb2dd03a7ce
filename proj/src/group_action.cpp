#include "solvform/group_action.hpp"

namespace solvform {

FiniteAction FiniteAction::generate(int dim, std::vector<MatrixS> generators, std::size_t cap) {
    if (dim < 1 || dim > kMaxDim)
        throw InputError("action dimension out of range: " + std::to_string(dim));
    for (const MatrixS& g : generators) {
        if (g.rows() != dim || g.cols() != dim)
            throw InputError("action generator shape does not match dimension");
        if (!inverse(g)) throw ValidationError("action generator is singular");
    }
    std::vector<MatrixS> elements;
    elements.push_back(MatrixS::Identity(dim, dim));
    auto known = [&elements](const MatrixS& m) {
        for (const MatrixS& e : elements) {
            if (exact_equal(e, m)) return true;
        }
        return false;
    };
    for (std::size_t next = 0; next < elements.size(); ++next) {
        for (const MatrixS& g : generators) {
            MatrixS product = elements[next] * g;
            if (known(product)) continue;
            if (elements.size() >= cap)
                throw ValidationError("group closure exceeds cap of " + std::to_string(cap) +
                                      " elements");
            elements.push_back(std::move(product));
        }
    }
    return FiniteAction(dim, std::move(generators), std::move(elements));
}

Multivector apply_action(const MatrixS& g, const Multivector& a) {
    return substitute(a, g);
}

bool is_algebra_automorphism(const MatrixS& g, const LieAlgebra& l) {
    if (g.rows() != l.dim() || g.cols() != l.dim())
        throw InputError("matrix dimension does not match algebra");
    if (!inverse(g)) return false;
    for (int k = 1; k <= l.dim(); ++k) {
        Multivector xk = Multivector::covector(l.dim(), k);
        Multivector lhs = l.differential_unchecked(apply_action(g, xk));
        Multivector rhs = apply_action(g, l.differential_unchecked(xk));
        if (lhs != rhs) return false;
    }
    return true;
}

namespace {

void require_automorphisms(const LieAlgebra& l, const FiniteAction& action) {
    if (action.dim() != l.dim()) throw InputError("action dimension does not match algebra");
    for (const MatrixS& g : action.generators()) {
        if (!is_algebra_automorphism(g, l))
            throw ValidationError("action generator is not a Lie algebra automorphism");
    }
}

} // namespace

MatrixS induced_cohomology_matrix(const LieAlgebra& l, const MatrixS& g, int p) {
    LieAlgebra::Cohomology coh = l.cohomology(p);
    const Eigen::Index b = coh.betti;
    MatrixS out(b, b);
    if (b == 0) return out;
    std::vector<Monomial> basis = monomials(l.dim(), p);
    MatrixS reps(static_cast<Eigen::Index>(basis.size()), b);
    for (Eigen::Index c = 0; c < b; ++c)
        reps.col(c) = coordinates(coh.representatives[static_cast<std::size_t>(c)], p);
    MatrixS d_prev;
    if (p == 0)
        d_prev = MatrixS::Zero(reps.rows(), 0);
    else
        d_prev = l.differential_matrix(p - 1);
    MatrixS stacked(reps.rows(), b + d_prev.cols());
    stacked.leftCols(b) = reps;
    stacked.rightCols(d_prev.cols()) = d_prev;
    for (Eigen::Index c = 0; c < b; ++c) {
        Multivector image = apply_action(g, coh.representatives[static_cast<std::size_t>(c)]);
        auto x = solve_linear(stacked, VectorS(coordinates(image, p)));
        if (!x)
            throw ValidationError(
                "induced action does not preserve cohomology; matrix is not an automorphism");
        out.col(c) = x->head(b);
    }
    return out;
}

MatrixS averaging_projector(const LieAlgebra& l, const FiniteAction& action, int p) {
    require_automorphisms(l, action);
    const Eigen::Index b = l.betti(p);
    MatrixS sum = MatrixS::Zero(b, b);
    for (const MatrixS& g : action.elements()) sum += induced_cohomology_matrix(l, g, p);
    Scalar factor = Scalar(1) / Scalar(static_cast<long>(action.order()));
    return factor * sum;
}

std::vector<Eigen::Index> invariant_cohomology_dims(const LieAlgebra& l,
                                                    const FiniteAction& action) {
    require_automorphisms(l, action);
    std::vector<Eigen::Index> out;
    out.reserve(static_cast<std::size_t>(l.dim() + 1));
    for (int p = 0; p <= l.dim(); ++p) out.push_back(rank(averaging_projector(l, action, p)));
    return out;
}

namespace {

bool is_unitary(const MatrixS& m) {
    return exact_equal(MatrixS(conjugate_transpose(m) * m),
                       MatrixS(MatrixS::Identity(m.rows(), m.cols())));
}

void require_isometries(const MetricFrame& f, const FiniteAction& action) {
    for (const MatrixS& g : action.generators()) {
        MatrixS conjugated = f.coframe() * g * f.coframe_inverse();
        if (!is_unitary(conjugated))
            throw ValidationError("action generator does not preserve the metric");
    }
}

} // namespace

std::vector<Multivector> invariant_harmonic_basis(const LieAlgebra& l, const MetricFrame& f,
                                                  const FiniteAction& action, int p) {
    require_automorphisms(l, action);
    require_isometries(f, action);
    std::vector<Multivector> basis = harmonic_basis(l, f, p);
    const Eigen::Index h = static_cast<Eigen::Index>(basis.size());
    if (h == 0 || action.order() == 1) return basis;
    std::vector<Monomial> mono = monomials(l.dim(), p);
    MatrixS basis_mat(static_cast<Eigen::Index>(mono.size()), h);
    for (Eigen::Index c = 0; c < h; ++c) basis_mat.col(c) = coordinates(basis[static_cast<std::size_t>(c)], p);

    MatrixS stacked(h * static_cast<Eigen::Index>(action.order() - 1), h);
    Eigen::Index row = 0;
    for (std::size_t e = 1; e < action.order(); ++e) {
        const MatrixS& g = action.elements()[e];
        MatrixS induced(h, h);
        for (Eigen::Index c = 0; c < h; ++c) {
            Multivector image = apply_action(g, basis[static_cast<std::size_t>(c)]);
            auto x = solve_linear(basis_mat, VectorS(coordinates(image, p)));
            if (!x)
                throw ValidationError("action does not preserve the harmonic subspace");
            induced.col(c) = *x;
        }
        stacked.middleRows(row, h) = induced - MatrixS::Identity(h, h);
        row += h;
    }
    MatrixS fixed = kernel_basis(stacked);
    std::vector<Multivector> out;
    out.reserve(static_cast<std::size_t>(fixed.cols()));
    for (Eigen::Index c = 0; c < fixed.cols(); ++c)
        out.push_back(from_coordinates(l.dim(), p, basis_mat * fixed.col(c)));
    return out;
}

InvariantFormality invariant_formality_check(const LieAlgebra& l, const MetricFrame& f,
                                             const FiniteAction& action) {
    InvariantFormality out;
    std::vector<std::vector<Multivector>> bases;
    bases.reserve(static_cast<std::size_t>(l.dim() + 1));
    for (int p = 0; p <= l.dim(); ++p) {
        bases.push_back(invariant_harmonic_basis(l, f, action, p));
        out.harmonic_dims.push_back(static_cast<Eigen::Index>(bases.back().size()));
    }
    out.verdict = formality_scan(l, f, bases);
    return out;
}

} // namespace solvform
