#pragma once

#include <optional>

#include "solvform/lie_algebra.hpp"
#include "solvform/metric_frame.hpp"

namespace solvform {

/// Hodge star for the metric presented by F, computed monomial-wise in theta
/// coordinates: *(theta_I) = sgn(sigma_IJ) theta_J with J the complementary
/// index set, conjugate-linear in the coefficients so that
/// v ^ *(conj u) = <v, u> vol.
Multivector hodge_star(const Multivector& a, const MetricFrame& f);

/// Codifferential, grade by grade: on grade p in dimension n,
/// delta = (-1)^{n p + n + 1} * d *. Lowers each grade by one.
Multivector codifferential(const Multivector& a, const LieAlgebra& l, const MetricFrame& f);

/// Metric inner product <a, b> = inner_product(to_frame a, to_frame b).
Scalar metric_inner(const Multivector& a, const Multivector& b, const MetricFrame& f);

/// d a == 0 and delta a == 0.
bool is_harmonic(const Multivector& a, const LieAlgebra& l, const MetricFrame& f);

/// Exact basis of ker d intersect ker delta in grade p, in deterministic
/// kernel order.
std::vector<Multivector> harmonic_basis(const LieAlgebra& l, const MetricFrame& f, int p);

std::vector<Eigen::Index> harmonic_dims(const LieAlgebra& l, const MetricFrame& f);

struct FormalityWitness {
    Multivector left;
    Multivector right;
    Multivector product;
    int left_grade = 0;
    int right_grade = 0;
    /// "d" when the product fails closedness, "delta" when it fails
    /// cocloseness.
    std::string failure;
};

struct FormalityVerdict {
    bool formal = true;
    std::optional<FormalityWitness> witness;
};

/// Formal iff every pairwise wedge of harmonic basis elements is harmonic;
/// the witness, when present, is the first failing pair in grade order then
/// basis order.
FormalityVerdict formality_check(const LieAlgebra& l, const MetricFrame& f);

/// Same scan over a caller-supplied collection of per-grade harmonic bases.
FormalityVerdict formality_scan(const LieAlgebra& l, const MetricFrame& f,
                                const std::vector<std::vector<Multivector>>& bases);

struct GradeDiagnostics {
    int degree = 0;
    Eigen::Index betti = 0;
    Eigen::Index harmonic_dim = 0;
    bool match = false;
};

struct HodgeDiagnostics {
    bool unimodular = false;
    bool star_involution_ok = false;
    std::vector<GradeDiagnostics> grades;
    bool all_match = false;
};

/// Per-grade harmonic dimension versus betti number, the ** = (-1)^{p(n-p)}
/// involution check on every basis monomial, and the unimodularity flag
/// (harmonic dim = betti is only guaranteed for unimodular algebras).
HodgeDiagnostics hodge_diagnostics(const LieAlgebra& l, const MetricFrame& f);

} // namespace solvform
