#include <doctest.h>

#include "solvform/metric_frame.hpp"
#include "support/generators.hpp"

using namespace solvform;

namespace {

MatrixS diag(std::initializer_list<Rational> entries) {
    Eigen::Index n = static_cast<Eigen::Index>(entries.size());
    MatrixS m = MatrixS::Zero(n, n);
    Eigen::Index i = 0;
    for (const Rational& r : entries) {
        m(i, i) = Scalar(r);
        ++i;
    }
    return m;
}

} // namespace

TEST_CASE("substitute replaces covectors by matrix rows") {
    Multivector a = wedge(Multivector::covector(2, 1), Multivector::covector(2, 2));
    MatrixS swap(2, 2);
    swap << Scalar(0), Scalar(1), Scalar(1), Scalar(0);
    CHECK(substitute(a, swap) == Scalar(-1) * a);
    MatrixS scale = diag({2, 1});
    CHECK(substitute(Multivector::covector(2, 1), scale) ==
          Scalar(2) * Multivector::covector(2, 1));
    CHECK(substitute(Multivector::scalar(2, Scalar(7)), swap) ==
          Multivector::scalar(2, Scalar(7)));
}

TEST_CASE("substitute is multiplicative, randomized") {
    gen::Rng rng(41);
    for (int c = 0; c < 100; ++c) {
        int n = 2 + gen::below(rng, 3);
        MatrixS g = to_scalar_matrix(gen::invertible_rational(rng, n));
        Multivector a = gen::form(rng, n, gen::below(rng, n + 1));
        Multivector b = gen::form(rng, n, gen::below(rng, n + 1));
        CHECK(substitute(wedge(a, b), g) == wedge(substitute(a, g), substitute(b, g)));
    }
}

TEST_CASE("frame construction validates input") {
    CHECK_THROWS_AS(MetricFrame(MatrixS(MatrixS::Zero(2, 3))), InputError);
    MatrixS complex_entry = diag({1, 1});
    complex_entry(0, 1) = Scalar(Rational(0), Rational(1));
    CHECK_THROWS_AS(MetricFrame{complex_entry}, InputError);
    CHECK_THROWS_AS(MetricFrame(diag({1, 0})), ValidationError);
}

TEST_CASE("frame rewriting round trips") {
    MetricFrame f(diag({2, 1}));
    Multivector x1 = Multivector::covector(2, 1);
    CHECK(f.to_frame(x1) == Scalar(Rational(1, 2)) * x1);
    CHECK(f.from_frame(f.to_frame(x1)) == x1);

    gen::Rng rng(42);
    for (int c = 0; c < 100; ++c) {
        int n = 2 + gen::below(rng, 4);
        MetricFrame g = gen::frame(rng, n);
        Multivector a = gen::mixed_form(rng, n);
        CHECK(g.from_frame(g.to_frame(a)) == a);
        CHECK(g.to_frame(g.from_frame(a)) == a);
    }
}

TEST_CASE("volume form scales with the coframe determinant") {
    MetricFrame id = MetricFrame::identity(3);
    CHECK(id.volume_form() ==
          Multivector::monomial_term(3, monomial_from_indices({1, 2, 3}, 3), Scalar(1)));
    MetricFrame f(diag({2, 1, 1}));
    CHECK(f.volume_form() ==
          Multivector::monomial_term(3, monomial_from_indices({1, 2, 3}, 3), Scalar(2)));
}

TEST_CASE("gram matrix of the structure coframe") {
    MetricFrame f(diag({2, 1}));
    MatrixQ g = f.gram();
    CHECK(g(0, 0) == Rational(1, 4));
    CHECK(g(1, 1) == Rational(1));
    CHECK(g(0, 1) == Rational(0));
    CHECK(MetricFrame::identity(3).gram() == MatrixQ(MatrixQ::Identity(3, 3)));
}

TEST_CASE("from_gram round trips diagonal and LDL-friendly matrices") {
    MatrixQ g = MatrixQ::Zero(2, 2);
    g(0, 0) = Rational(1, 4);
    g(1, 1) = Rational(1);
    MetricFrame f = MetricFrame::from_gram(g);
    CHECK(f.gram() == g);

    MatrixQ h(2, 2);
    h << Rational(2), Rational(-1), Rational(-1), Rational(1);
    MetricFrame fh = MetricFrame::from_gram(h);
    CHECK(fh.gram() == h);
}

TEST_CASE("from_gram rejects bad input") {
    MatrixQ asym(2, 2);
    asym << 1, 1, 0, 1;
    CHECK_THROWS_AS(MetricFrame::from_gram(asym), InputError);

    MatrixQ indef(2, 2);
    indef << -1, 0, 0, 1;
    CHECK_THROWS_AS(MetricFrame::from_gram(indef), InputError);

    MatrixQ no_root(2, 2);
    no_root << 5, 4, 4, 5;
    auto g = inverse(no_root);
    REQUIRE(g.has_value());
    CHECK_THROWS_WITH_AS(MetricFrame::from_gram(*g),
                         doctest::Contains("square root"), InputError);
}
