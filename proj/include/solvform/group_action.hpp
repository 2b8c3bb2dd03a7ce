#pragma once

#include "solvform/hodge.hpp"

namespace solvform {

/// A finite matrix group acting on the structure coframe: row i of each
/// element is the image of covector x^i. Built as the multiplicative closure
/// of a generator list with exact deduplication.
class FiniteAction {
public:
    /// Breadth-first closure; throws ValidationError on singular generators
    /// or when the element count exceeds the cap.
    static FiniteAction generate(int dim, std::vector<MatrixS> generators,
                                 std::size_t cap = 100000);

    int dim() const { return dim_; }
    std::size_t order() const { return elements_.size(); }
    /// Identity first, then breadth-first discovery order.
    const std::vector<MatrixS>& elements() const { return elements_; }
    const std::vector<MatrixS>& generators() const { return generators_; }

private:
    FiniteAction(int dim, std::vector<MatrixS> generators, std::vector<MatrixS> elements)
        : dim_(dim), generators_(std::move(generators)), elements_(std::move(elements)) {}

    int dim_ = 0;
    std::vector<MatrixS> generators_;
    std::vector<MatrixS> elements_;
};

/// Multiplicative extension of the coframe map to the exterior algebra.
Multivector apply_action(const MatrixS& g, const Multivector& a);

/// True iff the extension of g to the exterior algebra commutes with d on
/// degree 1 (hence everywhere); false for singular g.
bool is_algebra_automorphism(const MatrixS& g, const LieAlgebra& l);

/// Matrix of the action induced on H^p in the basis of stored
/// representatives: images are re-expressed modulo exact forms by an exact
/// solve. Requires g to act by a Lie algebra automorphism.
MatrixS induced_cohomology_matrix(const LieAlgebra& l, const MatrixS& g, int p);

/// (1/|G|) sum of the induced matrices on H^p; idempotent, with rank equal
/// to the invariant dimension.
MatrixS averaging_projector(const LieAlgebra& l, const FiniteAction& action, int p);

/// Dimensions of the fixed subspaces of H^0..H^n, via the averaging
/// projector. Throws ValidationError when a generator is not an
/// automorphism.
std::vector<Eigen::Index> invariant_cohomology_dims(const LieAlgebra& l,
                                                    const FiniteAction& action);

/// Basis of the action-fixed subspace of the grade-p harmonic space.
/// Requires every generator to be an automorphism and an isometry of the
/// metric (the coframe-conjugated matrix C g C^{-1} must be unitary).
std::vector<Multivector> invariant_harmonic_basis(const LieAlgebra& l, const MetricFrame& f,
                                                  const FiniteAction& action, int p);

struct InvariantFormality {
    std::vector<Eigen::Index> harmonic_dims;
    FormalityVerdict verdict;
};

/// Pairwise wedge-harmonicity scan over the invariant harmonic subspaces.
InvariantFormality invariant_formality_check(const LieAlgebra& l, const MetricFrame& f,
                                             const FiniteAction& action);

} // namespace solvform
