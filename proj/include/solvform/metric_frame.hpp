#pragma once

#include "solvform/multivector.hpp"

namespace solvform {

/// Replaces each covector x^i by the 1-form whose coefficients are row i of
/// `images`, extending multiplicatively over wedge products. The algebra
/// homomorphism induced by any linear change of coframe.
Multivector substitute(const Multivector& a, const MatrixS& images);

/// An invariant metric, presented by an orthonormal oriented coframe:
/// row i of C expresses the orthonormal covector theta_i in structure-coframe
/// coordinates. Entries are rational; the orientation is the row order, with
/// volume form theta_1 ^ ... ^ theta_n.
class MetricFrame {
public:
    /// Throws InputError for non-square or non-rational entries,
    /// ValidationError when C is singular.
    explicit MetricFrame(MatrixS coframe);

    static MetricFrame identity(int n);

    /// Builds a frame whose structure-coframe Gram matrix is the given
    /// symmetric positive-definite rational G, via an exact LDL^T
    /// factorization of G^{-1}. Throws InputError with guidance when some
    /// pivot has no rational square root.
    static MetricFrame from_gram(const MatrixQ& gram);

    int dim() const { return dim_; }
    const MatrixS& coframe() const { return coframe_; }
    const MatrixS& coframe_inverse() const { return inverse_; }

    /// Rewrites a structure-coordinate form in theta coordinates.
    Multivector to_frame(const Multivector& a) const;
    /// Inverse rewriting; from_frame(to_frame(a)) == a exactly.
    Multivector from_frame(const Multivector& a) const;

    /// Volume form in structure coordinates: det(C) x^1 ^ ... ^ x^n.
    Multivector volume_form() const;

    /// Gram matrix of the structure coframe, (C^T C)^{-1}.
    MatrixQ gram() const;

private:
    int dim_;
    MatrixS coframe_;
    MatrixS inverse_;
};

} // namespace solvform
