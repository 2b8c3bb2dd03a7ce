#include <doctest.h>

#include "solvform/group_action.hpp"
#include "support/generators.hpp"

using namespace solvform;

namespace {

MatrixS mat(int n, std::initializer_list<Rational> vals) {
    MatrixS m(n, n);
    auto it = vals.begin();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = Scalar(*it++);
    return m;
}

const MatrixS kSignFlip = mat(3, {-1, 0, 0, 0, -1, 0, 0, 0, 1});
const MatrixS kRotation = mat(2, {0, -1, 1, 0});

} // namespace

TEST_CASE("closure orders of small groups") {
    FiniteAction sign = FiniteAction::generate(3, {kSignFlip});
    CHECK(sign.order() == 2);
    CHECK(exact_equal(sign.elements()[0], MatrixS(MatrixS::Identity(3, 3))));

    CHECK(FiniteAction::generate(2, {kRotation}).order() == 4);

    MatrixS a = mat(2, {-1, 0, 0, 1});
    MatrixS b = mat(2, {1, 0, 0, -1});
    CHECK(FiniteAction::generate(2, {a, b}).order() == 4);

    CHECK(FiniteAction::generate(2, {}).order() == 1);
}

TEST_CASE("closure rejects singular generators and runaway groups") {
    CHECK_THROWS_AS(FiniteAction::generate(2, {mat(2, {1, 0, 0, 0})}), ValidationError);
    CHECK_THROWS_AS(FiniteAction::generate(2, {kRotation}, 3), ValidationError);
    CHECK_THROWS_AS(FiniteAction::generate(2, {mat(2, {2, 0, 0, 1})}, 50), ValidationError);
}

TEST_CASE("apply_action extends multiplicatively") {
    gen::Rng rng(71);
    for (int c = 0; c < 100; ++c) {
        int n = 2 + gen::below(rng, 3);
        MatrixS g = to_scalar_matrix(gen::invertible_rational(rng, n));
        Multivector a = gen::form(rng, n, gen::below(rng, n + 1));
        Multivector b = gen::form(rng, n, gen::below(rng, n + 1));
        CHECK(apply_action(g, wedge(a, b)) == wedge(apply_action(g, a), apply_action(g, b)));
    }
}

TEST_CASE("automorphism detection on the heisenberg algebra") {
    LieAlgebra l = gen::heisenberg();
    CHECK(is_algebra_automorphism(kSignFlip, l));
    CHECK_FALSE(is_algebra_automorphism(mat(3, {-1, 0, 0, 0, 1, 0, 0, 0, 1}), l));
    CHECK_FALSE(is_algebra_automorphism(mat(3, {0, 0, 0, 0, 1, 0, 0, 0, 1}), l));
    CHECK(is_algebra_automorphism(MatrixS(MatrixS::Identity(3, 3)), l));
    CHECK(is_algebra_automorphism(mat(3, {0, -1, 0, 1, 0, 0, 0, 0, 1}), l));
}

TEST_CASE("induced matrices on cohomology") {
    LieAlgebra l = gen::heisenberg();
    MatrixS h1 = induced_cohomology_matrix(l, kSignFlip, 1);
    CHECK(exact_equal(h1, mat(2, {-1, 0, 0, -1})));
    MatrixS h2 = induced_cohomology_matrix(l, kSignFlip, 2);
    CHECK(exact_equal(h2, mat(2, {-1, 0, 0, -1})));
    MatrixS h3 = induced_cohomology_matrix(l, kSignFlip, 3);
    CHECK(exact_equal(h3, MatrixS(MatrixS::Identity(1, 1))));
}

TEST_CASE("invariant cohomology dimensions") {
    LieAlgebra l = gen::heisenberg();
    FiniteAction sign = FiniteAction::generate(3, {kSignFlip});
    CHECK(invariant_cohomology_dims(l, sign) == std::vector<Eigen::Index>{1, 0, 0, 1});

    LieAlgebra torus(3, {});
    FiniteAction minus = FiniteAction::generate(3, {mat(3, {-1, 0, 0, 0, -1, 0, 0, 0, -1})});
    CHECK(invariant_cohomology_dims(torus, minus) == std::vector<Eigen::Index>{1, 0, 3, 0});

    MatrixS rot3 = mat(3, {0, -1, 0, 1, 0, 0, 0, 0, 1});
    FiniteAction quarter = FiniteAction::generate(3, {rot3});
    CHECK(quarter.order() == 4);
    CHECK(invariant_cohomology_dims(l, quarter) == std::vector<Eigen::Index>{1, 0, 0, 1});
}

TEST_CASE("non-automorphism generators are rejected for invariants") {
    LieAlgebra l = gen::heisenberg();
    FiniteAction bad = FiniteAction::generate(3, {mat(3, {-1, 0, 0, 0, 1, 0, 0, 0, 1})});
    CHECK_THROWS_AS(invariant_cohomology_dims(l, bad), ValidationError);
}

TEST_CASE("invariant harmonic forms and formality for the sign action") {
    LieAlgebra l = gen::heisenberg();
    MetricFrame f = MetricFrame::identity(3);
    FiniteAction sign = FiniteAction::generate(3, {kSignFlip});
    CHECK(invariant_harmonic_basis(l, f, sign, 1).empty());
    std::vector<Multivector> top = invariant_harmonic_basis(l, f, sign, 3);
    REQUIRE(top.size() == 1);
    CHECK(top[0] ==
          Multivector::monomial_term(3, monomial_from_indices({1, 2, 3}, 3), Scalar(1)));
    InvariantFormality inv = invariant_formality_check(l, f, sign);
    CHECK(inv.harmonic_dims == std::vector<Eigen::Index>{1, 0, 0, 1});
    CHECK(inv.verdict.formal);
}

TEST_CASE("trivial action reproduces the plain formality verdict") {
    LieAlgebra l(4, {{3, 1, 1, 1}, {3, 1, 4, 1}, {3, 2, 2, -1}}, {"x", "y", "z", "w"});
    MetricFrame f = MetricFrame::identity(4);
    FiniteAction trivial = FiniteAction::generate(4, {});
    InvariantFormality inv = invariant_formality_check(l, f, trivial);
    CHECK(inv.harmonic_dims == std::vector<Eigen::Index>{1, 2, 2, 2, 1});
    REQUIRE_FALSE(inv.verdict.formal);
    const FormalityWitness& w = *inv.verdict.witness;
    CHECK(to_string(w.left, l.labels()) == "z");
    CHECK(to_string(w.right, l.labels()) == "w-x");
    CHECK(w.failure == "delta");
}

TEST_CASE("isometry requirement for harmonic invariants") {
    LieAlgebra torus(2, {});
    MetricFrame f = MetricFrame::identity(2);
    MatrixS shear = mat(2, {1, 1, 0, 1});
    CHECK(is_algebra_automorphism(shear, torus));
    CHECK_THROWS_AS(FiniteAction::generate(2, {shear}, 10), ValidationError);

    MatrixS reflect = mat(2, {0, 1, 1, 0});
    FiniteAction swap = FiniteAction::generate(2, {reflect});
    std::vector<Multivector> h1 = invariant_harmonic_basis(torus, f, swap, 1);
    REQUIRE(h1.size() == 1);
    CHECK(h1[0] == Multivector::covector(2, 1) + Multivector::covector(2, 2));

    FiniteAction quarter = FiniteAction::generate(2, {kRotation});
    CHECK(invariant_harmonic_basis(torus, f, quarter, 1).empty());
    InvariantFormality inv = invariant_formality_check(torus, f, quarter);
    CHECK(inv.harmonic_dims == std::vector<Eigen::Index>{1, 0, 1});
    CHECK(inv.verdict.formal);
}

TEST_CASE("non-isometric automorphism is rejected by the metric check") {
    LieAlgebra torus(2, {});
    MetricFrame f = MetricFrame::identity(2);
    // An involution conjugated by a shear: finite order but not orthogonal.
    MatrixS skew_reflect = mat(2, {1, -2, 0, -1});
    FiniteAction act = FiniteAction::generate(2, {skew_reflect});
    CHECK(act.order() == 2);
    CHECK(is_algebra_automorphism(skew_reflect, torus));
    CHECK_THROWS_AS(invariant_harmonic_basis(torus, f, act, 1), ValidationError);
    CHECK(invariant_cohomology_dims(torus, act) == std::vector<Eigen::Index>{1, 1, 0});
}
