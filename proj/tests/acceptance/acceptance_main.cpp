// Acceptance gate: every release-blocking check, one verdict line each.
// Exits nonzero when any line fails. All comparisons are exact.

#include <exception>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "solvform/group_action.hpp"
#include "solvform/json_io.hpp"
#include "support/generators.hpp"

using namespace solvform;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw Failure(what);
}

template <typename T>
std::string show(const std::vector<T>& v) {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
    out << ")";
    return out.str();
}

using Betti = std::vector<Eigen::Index>;

void require_betti(const Betti& got, const Betti& want, const std::string& what) {
    require(got == want, what + ": got " + show(got) + ", want " + show(want));
}

void require_palindrome(const Betti& b, const std::string& what) {
    for (std::size_t p = 0; p < b.size(); ++p)
        require(b[p] == b[b.size() - 1 - p], what + ": table " + show(b) + " is not symmetric");
}

// --- 1: sol4_1 Betti/harmonic/formality, plus 20 random coframes ---------

void criterion_sol4_1() {
    const CatalogEntry& e = catalog_entry("sol4_1");
    const LieAlgebra& l = *e.algebra;
    const MetricFrame& f = *e.frame;
    require_betti(l.betti_vector(), {1, 1, 0, 1, 1}, "betti");
    std::vector<Multivector> h1 = harmonic_basis(l, f, 1);
    require(h1.size() == 1, "grade-1 harmonic dimension");
    require(to_string(h1[0], l.labels()) == "dt",
            "grade-1 harmonic basis is " + to_string(h1[0], l.labels()) + ", want dt");
    require(harmonic_basis(l, f, 2).empty(), "grade-2 harmonic space should be empty");
    require(formality_check(l, f).formal, "catalog frame should be formal");
    gen::Rng rng(20260822u);
    for (int t = 0; t < 20; ++t) {
        MetricFrame random = gen::frame(rng, l.dim());
        require(formality_check(l, random).formal,
                "random coframe " + std::to_string(t) + " should be formal");
    }
}

// --- 2: example_5_6 harmonic span and non-formality witness --------------

void criterion_example_5_6() {
    const CatalogEntry& e = catalog_entry("example_5_6");
    const LieAlgebra& l = *e.algebra;
    const MetricFrame& f = *e.frame;
    std::vector<Multivector> h1 = harmonic_basis(l, f, 1);
    require(h1.size() == 2, "harmonic one-space should have dimension 2");

    const Multivector z = Multivector::covector(4, 3);
    const Multivector wx = Multivector::covector(4, 4) - Multivector::covector(4, 1);
    MatrixS computed(4, 2), joint(4, 4);
    computed.col(0) = coordinates(h1[0], 1);
    computed.col(1) = coordinates(h1[1], 1);
    joint.leftCols(2) = computed;
    joint.col(2) = coordinates(z, 1);
    joint.col(3) = coordinates(wx, 1);
    require(rank(computed) == 2 && rank(joint) == 2,
            "harmonic one-space should equal span{z, w-x}");

    FormalityVerdict v = formality_check(l, f);
    require(!v.formal, "metric should not be formal");
    require(v.witness.has_value(), "missing witness");
    const Multivector target = wedge(z, wx);
    MatrixS pair(coordinates(target, 2).rows(), 2);
    pair.col(0) = coordinates(v.witness->product, 2);
    pair.col(1) = coordinates(target, 2);
    require(!v.witness->product.is_zero() && rank(pair) == 1,
            "witness product should span z^(w-x); got " +
                to_string(v.witness->product, l.labels()));
    require(v.witness->failure == "delta",
            "witness should fail cocloseness, got \"" + v.witness->failure + "\"");
}

// --- 3: nilmanifold entries non-formal, tori formal ----------------------

void criterion_nilmanifolds() {
    for (const char* name : {"nil3", "nil3xE", "nil4"}) {
        const CatalogEntry& e = catalog_entry(name);
        require(!formality_check(*e.algebra, *e.frame).formal,
                std::string(name) + " should not be formal");
    }
    for (const char* name : {"e3", "e4"}) {
        const CatalogEntry& e = catalog_entry(name);
        require(formality_check(*e.algebra, *e.frame).formal,
                std::string(name) + " should be formal");
    }
}

// --- 4: character-system certificates ------------------------------------

void criterion_certificates() {
    const std::vector<std::pair<std::string, Betti>> cases = {
        {"sol3", {1, 1, 1, 1}},
        {"sol3xE", {1, 2, 2, 2, 1}},
        {"sol4_mn", {1, 1, 0, 1, 1}},
        {"sol4_0", {1, 1, 0, 1, 1}},
    };
    for (const auto& [name, betti] : cases) {
        const CatalogEntry& e = catalog_entry(name);
        const CharacterSystem& s = *e.characters;
        require_betti(s.betti_table(), betti, name);
        require(s.is_unimodular(), name + " should be unimodular");
        require(s.complement_duality().ok, name + " complement duality should hold");
        CharacterSystem::Certificate cert = s.formality_certificate();
        require(cert.verdict == "formal" && cert.duality_ok && cert.unimodular &&
                    cert.differential_vanishes && cert.star_closed,
                name + " certificate flags");
        require_betti(cert.betti, betti, name + " certificate betti");
        for (const std::vector<int>& subset : cert.trivial_subsets)
            require(s.is_trivial(subset), name + " certificate subset replay");
    }
}

// --- 5: Heisenberg sign action -------------------------------------------

void criterion_sign_action() {
    const CatalogEntry& e = catalog_entry("nil3");
    MatrixQ g = MatrixQ::Identity(3, 3);
    g(0, 0) = -1;
    g(1, 1) = -1;
    FiniteAction action = FiniteAction::generate(3, {to_scalar_matrix(g)});
    require(action.order() == 2, "sign action should have order 2");
    require_betti(invariant_cohomology_dims(*e.algebra, action), {1, 0, 0, 1},
                  "invariant cohomology dims");
    InvariantFormality inv = invariant_formality_check(*e.algebra, *e.frame, action);
    require_betti(inv.harmonic_dims, {1, 0, 0, 1}, "invariant harmonic dims");
    require(inv.verdict.formal, "invariant complex should be formal");
}

// --- 6: property suites, >= 200 exact cases each -------------------------

LieAlgebra random_valid_algebra(gen::Rng& rng, int n) {
    if (gen::below(rng, 4) == 0) {
        std::vector<Rational> weights;
        for (int i = 0; i < n - 1; ++i) weights.push_back(gen::rational(rng));
        LieAlgebra l = gen::diagonal_extension(weights);
        if (gen::below(rng, 2) == 0) return gen::change_basis(l, gen::invertible_rational(rng, n));
        return l;
    }
    return gen::random_algebra(rng, n);
}

void suite_differential(gen::Rng& rng) {
    for (int t = 0; t < 200; ++t) {
        int n = 3 + gen::below(rng, 4);
        LieAlgebra l = random_valid_algebra(rng, n);
        Multivector a = gen::mixed_form(rng, n);
        require(l.differential(l.differential(a)).is_zero(), "d^2 should vanish");
        int p = gen::below(rng, n);
        Multivector left = gen::form(rng, n, p);
        Multivector b = gen::mixed_form(rng, n);
        Scalar sign = p % 2 == 0 ? Scalar(1) : Scalar(-1);
        require(l.differential(wedge(left, b)) ==
                    wedge(l.differential(left), b) + sign * wedge(left, l.differential(b)),
                "derivation law");
    }
}

void suite_star_involution(gen::Rng& rng) {
    for (int t = 0; t < 200; ++t) {
        int n = 1 + gen::below(rng, 6);
        MetricFrame f = gen::frame(rng, n);
        int p = gen::below(rng, n + 1);
        Multivector a = gen::form(rng, n, p);
        Multivector twice = hodge_star(hodge_star(a, f), f);
        Multivector expected = (p * (n - p)) % 2 == 0 ? a : Scalar(-1) * a;
        require(twice == expected, "** should be (-1)^{p(n-p)}");
    }
}

void suite_adjointness(gen::Rng& rng) {
    for (int t = 0; t < 200; ++t) {
        int n = 3 + gen::below(rng, 3);
        LieAlgebra l = gen::random_unimodular(rng, n);
        require(l.is_unimodular(), "generator should produce unimodular algebras");
        MetricFrame f = gen::frame(rng, n);
        int p = gen::below(rng, n);
        Multivector a = gen::form(rng, n, p);
        Multivector b = gen::form(rng, n, p + 1);
        require(metric_inner(l.differential(a), b, f) ==
                    metric_inner(a, codifferential(b, l, f), f),
                "<da,b> should equal <a,delta b>");
    }
}

void suite_harmonic_dims(gen::Rng& rng) {
    int cases = 0;
    for (const CatalogEntry& e : catalog()) {
        if (e.route != "ce") continue;
        require(e.algebra->is_unimodular(), e.name + " should be unimodular");
        Betti betti = e.algebra->betti_vector();
        require_betti(harmonic_dims(*e.algebra, *e.frame), betti, e.name + " catalog frame");
        ++cases;
        for (int t = 0; t < 30; ++t) {
            MetricFrame f = gen::frame(rng, e.algebra->dim());
            require_betti(harmonic_dims(*e.algebra, f), betti, e.name + " random frame");
            ++cases;
        }
    }
    require(cases >= 200, "harmonic/betti suite ran only " + std::to_string(cases) + " cases");
}

void suite_poincare_duality(gen::Rng& rng) {
    for (const CatalogEntry& e : catalog()) {
        if (e.route != "ce") continue;
        require_palindrome(e.algebra->betti_vector(), e.name);
    }
    for (int t = 0; t < 200; ++t) {
        int n = 3 + gen::below(rng, 3);
        require_palindrome(gen::random_unimodular(rng, n).betti_vector(), "random unimodular");
    }
    LieAlgebra affine(2, {{1, 2, 2, 1}});
    require(!affine.is_unimodular(), "affine algebra should not be unimodular");
    require_betti(affine.betti_vector(), {1, 1, 0}, "affine line algebra");
}

void suite_character_symmetry(gen::Rng& rng) {
    for (int t = 0; t < 200; ++t) {
        int covectors = 3 + gen::below(rng, 4);
        int generators = 1 + gen::below(rng, 2);
        bool symbolic = gen::below(rng, 2) == 0;
        SymbolBasis basis =
            symbolic ? SymbolBasis({"a", "b"}, {}) : SymbolBasis();
        std::vector<std::vector<WeightValue>> rows;
        for (int g = 0; g < generators; ++g) {
            std::vector<WeightValue> row;
            WeightValue total = WeightValue::zero(basis.count());
            for (int i = 0; i + 1 < covectors; ++i) {
                WeightValue v = WeightValue::zero(basis.count());
                for (Eigen::Index s = 0; s < v.sym.size(); ++s) v.sym(s) = gen::rational(rng);
                v.cst = basis.count() == 0 ? gen::rational(rng) : Rational(0);
                v.im2pi = Rational(gen::below(rng, 5) - 2) / Rational(1 + gen::below(rng, 2));
                total = total + v;
                row.push_back(v);
            }
            WeightValue last = WeightValue::zero(basis.count());
            last.sym = -total.sym;
            last.cst = -total.cst;
            last.im2pi = -total.im2pi;
            row.push_back(last);
            rows.push_back(row);
        }
        CharacterSystem s(basis, covectors, rows);
        require(s.is_unimodular(), "constructed system should be unimodular");
        require(s.complement_duality().ok, "complement duality should hold");
        require_palindrome(s.betti_table(), "character betti table");
    }
}

void criterion_property_suites() {
    gen::Rng rng(6002u);
    suite_differential(rng);
    suite_star_involution(rng);
    suite_adjointness(rng);
    suite_harmonic_dims(rng);
    suite_poincare_duality(rng);
    suite_character_symmetry(rng);
}

// --- 7: character table vs Chevalley-Eilenberg on diagonal algebras ------

void check_diagonal(const std::vector<Rational>& weights) {
    LieAlgebra l = gen::diagonal_extension(weights);
    std::vector<WeightValue> row;
    for (const Rational& w : weights) {
        WeightValue v = WeightValue::zero(0);
        v.cst = w;
        row.push_back(v);
    }
    row.push_back(WeightValue::zero(0));
    CharacterSystem s(SymbolBasis(), l.dim(), {row});
    require(s.betti_table() == l.betti_vector(),
            "tables disagree: characters " + show(s.betti_table()) + " vs cohomology " +
                show(l.betti_vector()));
}

void criterion_diagonal_cross_check() {
    check_diagonal({Rational(1), Rational(-1), Rational(0)});
    gen::Rng rng(7001u);
    for (int t = 0; t < 50; ++t) {
        int m = 2 + gen::below(rng, 4);
        std::vector<Rational> weights;
        for (int i = 0; i < m; ++i) weights.push_back(gen::rational(rng));
        check_diagonal(weights);
    }
}

} // namespace

int main() {
    struct Criterion {
        std::string label;
        std::function<void()> run;
    };
    const std::vector<Criterion> criteria = {
        {"[1] sol4_1: betti (1,1,0,1,1), harmonic {dt}, formal for catalog and 20 random coframes",
         criterion_sol4_1},
        {"[2] example_5_6: harmonic one-forms span {z, w-x}, not formal, witness z^(w-x)",
         criterion_example_5_6},
        {"[3] nil3/nil3xE/nil4 not formal; e3/e4 formal", criterion_nilmanifolds},
        {"[4] certificates for sol3, sol3xE, sol4_mn, sol4_0 with duality and subset replay",
         criterion_certificates},
        {"[5] heisenberg sign action: invariant dims (1,0,0,1), formal", criterion_sign_action},
        {"[6] property suites (>=200 cases each): d^2=0, derivation, **, adjointness, "
         "harmonic=betti, duality, character symmetry",
         criterion_property_suites},
        {"[7] diagonal algebras: character table equals cohomology table",
         criterion_diagonal_cross_check},
    };

    int failed = 0;
    for (const Criterion& c : criteria) {
        try {
            c.run();
            std::cout << "PASS: " << c.label << "\n";
        } catch (const std::exception& ex) {
            ++failed;
            std::cout << "FAIL: " << c.label << " -- " << ex.what() << "\n";
        }
    }
    if (failed != 0) std::cout << failed << " criterion(s) failed\n";
    return failed == 0 ? 0 : 1;
}
