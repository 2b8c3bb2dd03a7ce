#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "solvform/linalg.hpp"
#include "solvform/scalar.hpp"

namespace solvform {

/// Exterior monomials over covectors x^1..x^n are index subsets stored as
/// bitmasks: bit i-1 set means covector i occurs. The empty mask is the
/// scalar monomial 1.
using Monomial = std::uint32_t;

constexpr int kMaxDim = 20;

int monomial_grade(Monomial m);

/// Sorted 1-based index tuple of a monomial.
std::vector<int> monomial_indices(Monomial m);

Monomial monomial_from_indices(const std::vector<int>& indices, int dim);

/// Grade-then-lexicographic order on index tuples; used for every basis
/// enumeration and matrix column layout, so all reductions are reproducible.
bool monomial_less(Monomial a, Monomial b);

struct MonomialLess {
    bool operator()(Monomial a, Monomial b) const { return monomial_less(a, b); }
};

/// All grade-p monomials in n covectors, in monomial_less order.
std::vector<Monomial> monomials(int n, int p);

/// Sign of reordering the concatenation (a, b) into ascending order, or 0
/// when the index sets overlap.
int wedge_sign(Monomial a, Monomial b);

/// Element of the complexified exterior algebra over a fixed coframe of
/// dimension n, stored sparsely as monomial -> coefficient with zero
/// coefficients pruned. Pure value type; all operations return fresh values.
class Multivector {
public:
    using TermMap = std::map<Monomial, Scalar, MonomialLess>;

    explicit Multivector(int dim);

    static Multivector scalar(int dim, const Scalar& value);
    /// The basis covector x^i, 1-based.
    static Multivector covector(int dim, int i);
    static Multivector monomial_term(int dim, Monomial m, const Scalar& coeff);

    int dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    Scalar coefficient(Monomial m) const;
    void set_coefficient(Monomial m, const Scalar& value);
    void add_term(Monomial m, const Scalar& value);

    /// Sorted distinct grades with nonzero terms.
    std::vector<int> grades() const;
    /// True when all terms share one grade; a zero multivector is homogeneous
    /// of every grade and reports -1.
    bool is_homogeneous(int* grade = nullptr) const;

    Multivector& operator+=(const Multivector& o);
    Multivector& operator-=(const Multivector& o);
    Multivector& operator*=(const Scalar& c);

    friend bool operator==(const Multivector& a, const Multivector& b) {
        return a.dim_ == b.dim_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Multivector& a, const Multivector& b) { return !(a == b); }

private:
    int dim_;
    TermMap terms_;
};

Multivector operator+(Multivector a, const Multivector& b);
Multivector operator-(Multivector a, const Multivector& b);
Multivector operator*(const Scalar& c, Multivector a);
Multivector operator-(const Multivector& a);

Multivector wedge(const Multivector& a, const Multivector& b);

/// Hermitian monomial pairing sum_I a_I * conj(b_I); the basis monomials are
/// declared orthonormal.
Scalar inner_product(const Multivector& a, const Multivector& b);

Multivector grade_project(const Multivector& a, int p);

/// Conjugates every coefficient.
Multivector conjugate(const Multivector& a);

/// Coefficients of the grade-p part as a column over monomials(n, p).
VectorS coordinates(const Multivector& a, int p);

Multivector from_coordinates(int n, int p, const VectorS& coords);

/// Renders with positive terms first, then negative terms, each group in
/// monomial order; composite labels are parenthesized inside wedges.
/// With no labels given, covector i prints as "e<i>".
std::string to_string(const Multivector& a);
std::string to_string(const Multivector& a, const std::vector<std::string>& labels);

} // namespace solvform
