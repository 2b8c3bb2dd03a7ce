#include "solvform/catalog.hpp"

namespace solvform {

namespace {

CatalogEntry ce_entry(std::string name, std::string description, std::string annotation,
                      int dim, std::vector<BracketTerm> brackets,
                      std::vector<std::string> labels, std::vector<Eigen::Index> betti,
                      bool formal) {
    CatalogEntry e;
    e.name = std::move(name);
    e.description = std::move(description);
    e.annotation = std::move(annotation);
    e.dimension = dim;
    e.route = "ce";
    e.algebra = LieAlgebra(dim, brackets, std::move(labels));
    e.frame = MetricFrame::identity(dim);
    e.expected_betti = std::move(betti);
    e.expected_formal = formal;
    return e;
}

WeightValue weight(std::initializer_list<Rational> sym, Rational im2pi = 0) {
    WeightValue w;
    w.sym = VectorQ(static_cast<Eigen::Index>(sym.size()));
    Eigen::Index i = 0;
    for (const Rational& r : sym) w.sym(i++) = r;
    w.cst = 0;
    w.im2pi = std::move(im2pi);
    return w;
}

CatalogEntry characters_entry(std::string name, std::string description, std::string annotation,
                              CharacterSystem system, std::vector<Eigen::Index> betti) {
    CatalogEntry e;
    e.name = std::move(name);
    e.description = std::move(description);
    e.annotation = std::move(annotation);
    e.dimension = system.covector_count();
    e.route = "characters";
    e.characters = std::move(system);
    e.expected_betti = std::move(betti);
    e.expected_formal = true;
    return e;
}

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> out;

    out.push_back(ce_entry(
        "e3", "flat 3-torus",
        "abelian algebra; every invariant metric is flat and formal",
        3, {}, {"dx", "dy", "dz"}, {1, 3, 3, 1}, true));

    out.push_back(ce_entry(
        "e4", "flat 4-torus",
        "abelian algebra; every invariant metric is flat and formal",
        4, {}, {"dx", "dy", "dz", "dt"}, {1, 4, 6, 4, 1}, true));

    out.push_back(ce_entry(
        "nil3", "Heisenberg nilmanifold",
        "coframe {dx, dy, dz - x dy} for the metric dx^2 + dy^2 + (dz - x dy)^2; "
        "non-toral nilmanifolds carry no formal metric",
        3, {{1, 2, 3, 1}}, {"dx", "dy", "dz-xdy"}, {1, 2, 2, 1}, false));

    out.push_back(ce_entry(
        "nil3xE", "Heisenberg nilmanifold times a circle",
        "product of the Heisenberg coframe with a flat direction dt",
        4, {{1, 2, 3, 1}}, {"dx", "dy", "dz-xdy", "dt"}, {1, 3, 4, 3, 1}, false));

    out.push_back(ce_entry(
        "nil4", "filiform 4-dimensional nilmanifold",
        "the published coordinate coframe for this geometry is not left-invariant as "
        "written, so the standard filiform constants [e1,e2]=e3, [e1,e3]=e4 with the "
        "identity frame are stored instead",
        4, {{1, 2, 3, 1}, {1, 3, 4, 1}}, {}, {1, 2, 2, 2, 1}, false));

    out.push_back(ce_entry(
        "sol4_1", "4-dimensional solvable geometry over the Heisenberg group",
        "orthonormal coframe {exp(-t) dx, exp(t) dy, dz - x dy, dt} of the metric "
        "exp(-2t) dx^2 + exp(2t) dy^2 + (dz - x dy)^2 + dt^2, labeled e1, e2, e3, dt; "
        "structure equations d e1 = e1^dt, d e2 = -e2^dt, d e3 = -e1^e2; any invariant "
        "metric is formal",
        4, {{1, 4, 1, -1}, {2, 4, 2, 1}, {1, 2, 3, 1}}, {"e1", "e2", "e3", "dt"},
        {1, 1, 0, 1, 1}, true));

    out.push_back(ce_entry(
        "example_5_6", "completely solvable algebra with a non-formal invariant metric",
        "structure equations dx = -z^x, dy = z^y, dz = 0, dw = -z^x with the metric "
        "x^2 + y^2 + z^2 + w^2; z and w-x are harmonic but z^(w-x) is not",
        4, {{3, 1, 1, 1}, {3, 1, 4, 1}, {3, 2, 2, -1}}, {"x", "y", "z", "w"},
        {1, 2, 2, 2, 1}, false));

    {
        SymbolBasis basis({"a"}, {});
        CharacterSystem system(basis, 3, {{weight({1}), weight({-1}), weight({0})}},
                               {"x", "y", "z"});
        out.push_back(characters_entry(
            "sol3", "3-dimensional solvable geometry",
            "weights a, -a, 0 are the logs of the diagonal expansion factors of the "
            "metric exp(2z) dx^2 + exp(-2z) dy^2 + dz^2; the invariant subcomplex carries "
            "zero differential and a formal invariant metric exists",
            std::move(system), {1, 1, 1, 1}));
    }

    {
        SymbolBasis basis({"a"}, {});
        CharacterSystem system(basis, 4,
                               {{weight({1}), weight({-1}), weight({0}), weight({0})}},
                               {"x", "y", "z", "t"});
        out.push_back(characters_entry(
            "sol3xE", "3-dimensional solvable geometry times a circle",
            "weights a, -a, 0, 0; the extra flat direction doubles each trivial-subset "
            "count",
            std::move(system), {1, 2, 2, 2, 1}));
    }

    {
        VectorQ relation(3);
        relation << 1, 1, 1;
        SymbolBasis basis({"a", "b", "c"}, {relation});
        CharacterSystem system(basis, 4,
                               {{weight({1, 0, 0}), weight({0, 1, 0}), weight({0, 0, 1}),
                                 weight({0, 0, 0})}},
                               {"x", "y", "z", "t"});
        out.push_back(characters_entry(
            "sol4_mn", "4-dimensional diagonal solvable geometry, generic family member",
            "symbols a, b, c are the logs of the distinct real roots of a cubic with "
            "product 1, hence the declared relation a + b + c = 0; weights a, b, c, 0",
            std::move(system), {1, 1, 0, 1, 1}));
    }

    {
        SymbolBasis basis({"a"}, {});
        CharacterSystem system(basis, 4,
                               {{weight({1}), weight({1}), weight({-2}), weight({0})}},
                               {"x", "y", "z", "t"});
        out.push_back(characters_entry(
            "sol4_0", "4-dimensional diagonal solvable geometry with a repeated weight",
            "weights a, a, -2a, 0; the simply connected diagonal group admits no lattice, "
            "so only Lie-algebra-level results are exposed",
            std::move(system), {1, 1, 0, 1, 1}));
    }

    {
        SymbolBasis basis({"s"}, {});
        CharacterSystem system(basis, 4,
                               {{weight({1}, Rational(1, 4)), weight({1}, Rational(-1, 4)),
                                 weight({-2}), weight({0})}},
                               {"x", "y", "z", "t"});
        out.push_back(characters_entry(
            "example_INO", "infra-solvmanifold data with a conjugate pair of complex weights",
            "the diagonal model admits no lattice; the discrete subgroup sits in a rotated "
            "model whose first two weights are complex conjugates s +- i theta; theta "
            "enters every trivial subset only through conjugate cancellation, so the "
            "rational placeholder 1/4 for theta/(2 pi) reproduces the triviality pattern",
            std::move(system), {1, 1, 0, 1, 1}));
    }

    return out;
}

} // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries;
}

std::vector<std::string> catalog_names() {
    std::vector<std::string> out;
    out.reserve(catalog().size());
    for (const CatalogEntry& e : catalog()) out.push_back(e.name);
    return out;
}

const CatalogEntry& catalog_entry(const std::string& name) {
    for (const CatalogEntry& e : catalog()) {
        if (e.name == name) return e;
    }
    throw InputError("unknown catalog entry: " + name);
}

} // namespace solvform
