#pragma once

#include <string>
#include <vector>

#include "solvform/multivector.hpp"

namespace solvform {

/// One structure constant: [x_i, x_j] contains c * x_k. Indices are 1-based.
struct BracketTerm {
    int i = 0;
    int j = 0;
    int k = 0;
    Rational c;
};

struct JacobiReport {
    bool ok = true;
    // First violating triple i < j < k in lexicographic order, with the
    // defect [[x_i,x_j],x_k] + [[x_j,x_k],x_i] + [[x_k,x_i],x_j] as a
    // coefficient vector over the basis.
    int i = 0, j = 0, k = 0;
    VectorQ defect;
};

/// Finite-dimensional real Lie algebra given by rational structure constants
/// on a fixed basis x_1..x_n. Immutable after construction; the Jacobi check
/// runs once at construction time and is cached.
///
/// The dual coframe x^1..x^n generates the exterior algebra, with the
/// differential fixed by d x^k = -sum_{i<j} c_ij^k x^i ^ x^j and extended as
/// a degree +1 derivation, so that da(X, Y) = -a([X, Y]) on covectors.
class LieAlgebra {
public:
    LieAlgebra(int dim, const std::vector<BracketTerm>& brackets,
               std::vector<std::string> labels = {});

    int dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }

    /// c_ij^k with antisymmetry in (i, j); 1-based indices.
    Rational structure_constant(int i, int j, int k) const;

    /// Coefficient vector of [x_i, x_j].
    VectorQ bracket(int i, int j) const;

    /// Bilinear extension: coefficient vector of [u, v].
    VectorQ bracket_vectors(const VectorQ& u, const VectorQ& v) const;

    const JacobiReport& jacobi() const { return jacobi_; }
    bool is_valid() const { return jacobi_.ok; }
    /// Throws ValidationError naming the first violating triple.
    void require_valid() const;

    /// trace(ad x_i) == 0 for every i; equivalent to d vanishing on (n-1)-forms.
    bool is_unimodular() const;

    /// Chevalley-Eilenberg differential. Requires a valid algebra.
    Multivector differential(const Multivector& a) const;

    /// Same derivation without the Jacobi guard; d*d = 0 is only guaranteed
    /// once jacobi().ok holds.
    Multivector differential_unchecked(const Multivector& a) const;

    /// Matrix of d restricted to grade p, columns over monomials(n, p) and
    /// rows over monomials(n, p+1). Requires a valid algebra.
    MatrixS differential_matrix(int p) const;

    struct Cohomology {
        int degree = 0;
        Eigen::Index betti = 0;
        /// Closed representatives, independent modulo exact forms; chosen
        /// deterministically as the kernel basis columns that survive
        /// reduction against the image of the previous differential.
        std::vector<Multivector> representatives;
    };

    /// Invariant de Rham cohomology in degree p, 0 <= p <= dim.
    Cohomology cohomology(int p) const;

    Eigen::Index betti(int p) const { return cohomology(p).betti; }
    std::vector<Eigen::Index> betti_vector() const;

private:
    int dim_;
    std::vector<std::string> labels_;
    std::vector<Rational> constants_; // dense c_ij^k, antisymmetrized
    std::vector<Multivector> d_covector_;
    JacobiReport jacobi_;

    std::size_t at(int i, int j, int k) const;
};

} // namespace solvform
