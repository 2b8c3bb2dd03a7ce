#pragma once

#include <string>
#include <vector>

#include "solvform/multivector.hpp"

namespace solvform {

/// Named real constants assumed linearly independent over the rationals,
/// except for explicitly declared rational linear relations. Zero-testing a
/// symbolic combination means membership in the declared relation space.
class SymbolBasis {
public:
    SymbolBasis() = default;
    SymbolBasis(std::vector<std::string> names, std::vector<VectorQ> relations);

    int count() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<VectorQ>& relations() const { return relations_; }
    int symbol_index(const std::string& name) const; // -1 when unknown

    /// Canonical normal form modulo the relation space.
    VectorQ reduce(VectorQ v) const;
    bool is_zero(const VectorQ& v) const;

private:
    std::vector<std::string> names_;
    std::vector<VectorQ> relations_;
    MatrixQ reduced_relations_;
    std::vector<Eigen::Index> pivots_;
};

/// One character log-value: real part sym . symbols + cst, imaginary part
/// (2 pi) * im2pi.
struct WeightValue {
    VectorQ sym;
    Rational cst;
    Rational im2pi;

    static WeightValue zero(int symbol_count);
    bool real_part_vanishes(const SymbolBasis& basis) const;
};

WeightValue operator+(const WeightValue& a, const WeightValue& b);

/// Table of character evaluations: entry (k, i) is the log of the i-th
/// diagonal character at the k-th lattice generator. The index subsets whose
/// character product restricts trivially to the lattice enumerate a basis of
/// the invariant subcomplex, which carries zero differential here, so
/// counting them by size yields the Betti table.
class CharacterSystem {
public:
    CharacterSystem(SymbolBasis basis, int covectors,
                    std::vector<std::vector<WeightValue>> generator_rows,
                    std::vector<std::string> labels = {});

    int covector_count() const { return covectors_; }
    int generator_count() const { return static_cast<int>(rows_.size()); }
    const SymbolBasis& symbol_basis() const { return basis_; }
    const std::vector<std::vector<WeightValue>>& generator_rows() const { return rows_; }
    const std::vector<std::string>& labels() const { return labels_; }

    /// True iff for every generator the subset's weight sum has vanishing
    /// real part (modulo declared relations) and integer im2pi.
    bool is_trivial(Monomial subset) const;
    bool is_trivial(const std::vector<int>& subset) const;

    /// All trivial subsets, in grade-then-lexicographic order.
    std::vector<Monomial> trivial_subsets() const;

    /// b_p = number of trivial subsets of size p, p = 0..N.
    std::vector<Eigen::Index> betti_table() const;

    /// The full index set is trivial on every generator.
    bool is_unimodular() const;

    struct DualityReport {
        bool ok = true;
        Monomial counterexample = 0;
    };
    /// For unimodular systems: every trivial subset has trivial complement.
    /// Throws ValidationError when the system is not unimodular.
    DualityReport complement_duality() const;

    struct Certificate {
        std::vector<Eigen::Index> betti;
        std::vector<std::vector<int>> trivial_subsets;
        bool unimodular = false;
        bool duality_ok = false;
        bool differential_vanishes = true;
        bool star_closed = false;
        std::string verdict; // "formal"
    };
    /// Formality certificate for the invariant subcomplex: unimodularity,
    /// complement duality (star-closure), zero differential, hence every
    /// product of harmonic elements stays harmonic. Replayable by re-running
    /// is_trivial on each listed subset. Throws ValidationError when the
    /// preconditions fail.
    Certificate formality_certificate() const;

    /// Copy with one more generator row; trivial subsets can only shrink.
    CharacterSystem with_generator(std::vector<WeightValue> row) const;

    struct Validation {
        bool unimodular = false;
        int zero_weight_covectors = 0;
        std::vector<std::string> notes;
    };
    Validation validate() const;

private:
    SymbolBasis basis_;
    int covectors_ = 0;
    std::vector<std::vector<WeightValue>> rows_;
    std::vector<std::string> labels_;
};

} // namespace solvform
