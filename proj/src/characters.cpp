#include "solvform/characters.hpp"

#include <bit>
#include <set>

namespace solvform {

SymbolBasis::SymbolBasis(std::vector<std::string> names, std::vector<VectorQ> relations)
    : names_(std::move(names)), relations_(std::move(relations)) {
    std::set<std::string> seen;
    for (const std::string& name : names_) {
        if (name.empty()) throw InputError("empty symbol name");
        if (!seen.insert(name).second) throw InputError("duplicate symbol name: " + name);
    }
    const Eigen::Index n = static_cast<Eigen::Index>(names_.size());
    MatrixQ rel(static_cast<Eigen::Index>(relations_.size()), n);
    for (std::size_t r = 0; r < relations_.size(); ++r) {
        if (relations_[r].size() != n) throw InputError("relation length does not match symbol count");
        rel.row(static_cast<Eigen::Index>(r)) = relations_[r].transpose();
    }
    RowEchelon<Rational> re = row_echelon(rel);
    reduced_relations_ = re.mat.topRows(re.rank());
    pivots_ = re.pivots;
}

int SymbolBasis::symbol_index(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == name) return static_cast<int>(i);
    }
    return -1;
}

VectorQ SymbolBasis::reduce(VectorQ v) const {
    if (v.size() != static_cast<Eigen::Index>(names_.size()))
        throw Error("symbol vector length mismatch");
    for (Eigen::Index r = 0; r < reduced_relations_.rows(); ++r) {
        Rational f = v(pivots_[static_cast<std::size_t>(r)]);
        if (f == 0) continue;
        v -= f * reduced_relations_.row(r).transpose();
    }
    return v;
}

bool SymbolBasis::is_zero(const VectorQ& v) const {
    VectorQ r = reduce(v);
    for (Eigen::Index i = 0; i < r.size(); ++i) {
        if (r(i) != 0) return false;
    }
    return true;
}

WeightValue WeightValue::zero(int symbol_count) {
    WeightValue w;
    w.sym = VectorQ::Zero(symbol_count);
    w.cst = 0;
    w.im2pi = 0;
    return w;
}

bool WeightValue::real_part_vanishes(const SymbolBasis& basis) const {
    return cst == 0 && basis.is_zero(sym);
}

WeightValue operator+(const WeightValue& a, const WeightValue& b) {
    if (a.sym.size() != b.sym.size()) throw Error("symbol vector length mismatch");
    WeightValue out;
    out.sym = a.sym + b.sym;
    out.cst = a.cst + b.cst;
    out.im2pi = a.im2pi + b.im2pi;
    return out;
}

CharacterSystem::CharacterSystem(SymbolBasis basis, int covectors,
                                 std::vector<std::vector<WeightValue>> generator_rows,
                                 std::vector<std::string> labels)
    : basis_(std::move(basis)), covectors_(covectors), rows_(std::move(generator_rows)),
      labels_(std::move(labels)) {
    if (covectors_ < 0 || covectors_ > kMaxDim)
        throw InputError("covector count out of range: " + std::to_string(covectors_));
    for (const auto& row : rows_) {
        if (static_cast<int>(row.size()) != covectors_)
            throw InputError("generator row length does not match covector count");
        for (const WeightValue& w : row) {
            if (w.sym.size() != static_cast<Eigen::Index>(basis_.count()))
                throw InputError("weight symbol vector length does not match symbol count");
        }
    }
    if (labels_.empty()) {
        for (int i = 1; i <= covectors_; ++i) labels_.push_back("x" + std::to_string(i));
    }
    if (static_cast<int>(labels_.size()) != covectors_)
        throw InputError("label count does not match covector count");
}

bool CharacterSystem::is_trivial(Monomial subset) const {
    if ((subset >> covectors_) != 0) throw InputError("subset index out of range");
    for (const auto& row : rows_) {
        WeightValue sum = WeightValue::zero(basis_.count());
        Monomial rest = subset;
        while (rest != 0) {
            Monomial low = rest & (~rest + 1u);
            sum = sum + row[static_cast<std::size_t>(std::countr_zero(low))];
            rest ^= low;
        }
        if (!sum.real_part_vanishes(basis_)) return false;
        if (!is_integer(sum.im2pi)) return false;
    }
    return true;
}

bool CharacterSystem::is_trivial(const std::vector<int>& subset) const {
    Monomial m = 0;
    for (int i : subset) {
        if (i < 1 || i > covectors_) throw InputError("subset index out of range: " + std::to_string(i));
        m |= Monomial(1) << (i - 1);
    }
    return is_trivial(m);
}

std::vector<Monomial> CharacterSystem::trivial_subsets() const {
    std::vector<Monomial> out;
    for (int p = 0; p <= covectors_; ++p) {
        for (Monomial m : monomials(covectors_, p)) {
            if (is_trivial(m)) out.push_back(m);
        }
    }
    return out;
}

std::vector<Eigen::Index> CharacterSystem::betti_table() const {
    std::vector<Eigen::Index> out(static_cast<std::size_t>(covectors_ + 1), 0);
    for (Monomial m : trivial_subsets()) ++out[static_cast<std::size_t>(monomial_grade(m))];
    return out;
}

bool CharacterSystem::is_unimodular() const {
    Monomial full = (covectors_ == 0) ? 0 : ((Monomial(1) << covectors_) - 1);
    return is_trivial(full);
}

CharacterSystem::DualityReport CharacterSystem::complement_duality() const {
    if (!is_unimodular())
        throw ValidationError("complement duality requires a unimodular character system");
    DualityReport out;
    Monomial full = (covectors_ == 0) ? 0 : ((Monomial(1) << covectors_) - 1);
    for (int p = 0; p <= covectors_; ++p) {
        for (Monomial m : monomials(covectors_, p)) {
            if (is_trivial(m) != is_trivial(full & ~m)) {
                out.ok = false;
                out.counterexample = m;
                return out;
            }
        }
    }
    return out;
}

CharacterSystem::Certificate CharacterSystem::formality_certificate() const {
    if (!is_unimodular())
        throw ValidationError("formality certificate requires a unimodular character system");
    Certificate cert;
    cert.unimodular = true;
    DualityReport duality = complement_duality();
    if (!duality.ok) throw ValidationError("complement duality check failed");
    cert.duality_ok = true;
    cert.star_closed = true;
    cert.differential_vanishes = true;
    cert.betti = betti_table();
    for (Monomial m : trivial_subsets()) cert.trivial_subsets.push_back(monomial_indices(m));
    cert.verdict = "formal";
    return cert;
}

CharacterSystem CharacterSystem::with_generator(std::vector<WeightValue> row) const {
    std::vector<std::vector<WeightValue>> rows = rows_;
    rows.push_back(std::move(row));
    return CharacterSystem(basis_, covectors_, std::move(rows), labels_);
}

CharacterSystem::Validation CharacterSystem::validate() const {
    Validation out;
    out.unimodular = is_unimodular();
    for (int i = 0; i < covectors_; ++i) {
        bool zero = true;
        for (const auto& row : rows_) {
            const WeightValue& w = row[static_cast<std::size_t>(i)];
            bool sym_zero = true;
            for (Eigen::Index s = 0; s < w.sym.size(); ++s) {
                if (w.sym(s) != 0) {
                    sym_zero = false;
                    break;
                }
            }
            if (!sym_zero || w.cst != 0 || w.im2pi != 0) {
                zero = false;
                break;
            }
        }
        if (zero) ++out.zero_weight_covectors;
    }
    if (!out.unimodular) out.notes.push_back("full index set is not trivial (system is not unimodular)");
    if (out.zero_weight_covectors < generator_count())
        out.notes.push_back("fewer zero-weight covectors than generators");
    return out;
}

} // namespace solvform
