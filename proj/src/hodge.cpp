#include "solvform/hodge.hpp"

namespace solvform {

namespace {

int star_sign(Monomial i_set) {
    // sgn of the permutation (i_1..i_p, j_1..j_{n-p}) of (1..n), both halves
    // ascending: (-1)^{sum_k (i_k - k)}.
    long long total = 0;
    int k = 0;
    for (int idx : monomial_indices(i_set)) {
        ++k;
        total += idx - k;
    }
    return (total % 2 == 0) ? 1 : -1;
}

} // namespace

Multivector hodge_star(const Multivector& a, const MetricFrame& f) {
    if (a.dim() != f.dim()) throw Error("multivector dimension mismatch");
    const int n = f.dim();
    const Monomial full = (Monomial(1) << n) - 1;
    Multivector theta = f.to_frame(a);
    Multivector out(n);
    for (const auto& [mono, coeff] : theta.terms()) {
        out.add_term(full & ~mono, Scalar(star_sign(mono)) * conj(coeff));
    }
    return f.from_frame(out);
}

Multivector codifferential(const Multivector& a, const LieAlgebra& l, const MetricFrame& f) {
    if (a.dim() != l.dim() || a.dim() != f.dim()) throw Error("multivector dimension mismatch");
    const int n = l.dim();
    Multivector out(n);
    for (int p : a.grades()) {
        if (p == 0) continue;
        Multivector part = grade_project(a, p);
        int exponent = n * p + n + 1;
        int sign = (exponent % 2 == 0) ? 1 : -1;
        out += Scalar(sign) * hodge_star(l.differential(hodge_star(part, f)), f);
    }
    return out;
}

Scalar metric_inner(const Multivector& a, const Multivector& b, const MetricFrame& f) {
    return inner_product(f.to_frame(a), f.to_frame(b));
}

bool is_harmonic(const Multivector& a, const LieAlgebra& l, const MetricFrame& f) {
    return l.differential(a).is_zero() && codifferential(a, l, f).is_zero();
}

std::vector<Multivector> harmonic_basis(const LieAlgebra& l, const MetricFrame& f, int p) {
    l.require_valid();
    const int n = l.dim();
    if (p < 0 || p > n) throw InputError("degree out of range: " + std::to_string(p));
    std::vector<Monomial> source = monomials(n, p);
    const Eigen::Index cols = static_cast<Eigen::Index>(source.size());
    std::vector<Monomial> up = monomials(n, p + 1);
    std::vector<Monomial> down = monomials(n, p - 1);
    MatrixS stacked = MatrixS::Zero(static_cast<Eigen::Index>(up.size() + down.size()), cols);
    for (Eigen::Index c = 0; c < cols; ++c) {
        Multivector mono = Multivector::monomial_term(n, source[static_cast<std::size_t>(c)], Scalar(1));
        stacked.col(c).head(static_cast<Eigen::Index>(up.size())) = coordinates(l.differential(mono), p + 1);
        stacked.col(c).tail(static_cast<Eigen::Index>(down.size())) =
            coordinates(codifferential(mono, l, f), p - 1);
    }
    MatrixS kernel = kernel_basis(stacked);
    std::vector<Multivector> out;
    out.reserve(static_cast<std::size_t>(kernel.cols()));
    for (Eigen::Index c = 0; c < kernel.cols(); ++c) out.push_back(from_coordinates(n, p, kernel.col(c)));
    return out;
}

std::vector<Eigen::Index> harmonic_dims(const LieAlgebra& l, const MetricFrame& f) {
    std::vector<Eigen::Index> out;
    out.reserve(static_cast<std::size_t>(l.dim() + 1));
    for (int p = 0; p <= l.dim(); ++p)
        out.push_back(static_cast<Eigen::Index>(harmonic_basis(l, f, p).size()));
    return out;
}

FormalityVerdict formality_scan(const LieAlgebra& l, const MetricFrame& f,
                                const std::vector<std::vector<Multivector>>& bases) {
    for (std::size_t p = 0; p < bases.size(); ++p) {
        for (std::size_t q = p; q < bases.size(); ++q) {
            for (std::size_t i = 0; i < bases[p].size(); ++i) {
                std::size_t j_start = (p == q) ? i : 0;
                for (std::size_t j = j_start; j < bases[q].size(); ++j) {
                    Multivector product = wedge(bases[p][i], bases[q][j]);
                    if (product.is_zero()) continue;
                    std::string failure;
                    if (!l.differential(product).is_zero())
                        failure = "d";
                    else if (!codifferential(product, l, f).is_zero())
                        failure = "delta";
                    if (failure.empty()) continue;
                    FormalityVerdict verdict;
                    verdict.formal = false;
                    verdict.witness = FormalityWitness{bases[p][i], bases[q][j], std::move(product),
                                                      static_cast<int>(p), static_cast<int>(q),
                                                      std::move(failure)};
                    return verdict;
                }
            }
        }
    }
    return FormalityVerdict{};
}

FormalityVerdict formality_check(const LieAlgebra& l, const MetricFrame& f) {
    std::vector<std::vector<Multivector>> bases;
    bases.reserve(static_cast<std::size_t>(l.dim() + 1));
    for (int p = 0; p <= l.dim(); ++p) bases.push_back(harmonic_basis(l, f, p));
    return formality_scan(l, f, bases);
}

HodgeDiagnostics hodge_diagnostics(const LieAlgebra& l, const MetricFrame& f) {
    l.require_valid();
    const int n = l.dim();
    HodgeDiagnostics out;
    out.unimodular = l.is_unimodular();
    out.star_involution_ok = true;
    for (int p = 0; p <= n && out.star_involution_ok; ++p) {
        int sign = ((p * (n - p)) % 2 == 0) ? 1 : -1;
        for (Monomial m : monomials(n, p)) {
            Multivector mono = Multivector::monomial_term(n, m, Scalar(1));
            if (hodge_star(hodge_star(mono, f), f) != Scalar(sign) * mono) {
                out.star_involution_ok = false;
                break;
            }
        }
    }
    out.all_match = true;
    for (int p = 0; p <= n; ++p) {
        GradeDiagnostics g;
        g.degree = p;
        g.betti = l.betti(p);
        g.harmonic_dim = static_cast<Eigen::Index>(harmonic_basis(l, f, p).size());
        g.match = g.betti == g.harmonic_dim;
        if (!g.match) out.all_match = false;
        out.grades.push_back(std::move(g));
    }
    return out;
}

} // namespace solvform
