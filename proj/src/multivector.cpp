#include "solvform/multivector.hpp"

#include <algorithm>
#include <bit>

namespace solvform {

int monomial_grade(Monomial m) { return std::popcount(m); }

std::vector<int> monomial_indices(Monomial m) {
    std::vector<int> out;
    while (m != 0) {
        Monomial low = m & (~m + 1u);
        out.push_back(std::countr_zero(low) + 1);
        m ^= low;
    }
    return out;
}

Monomial monomial_from_indices(const std::vector<int>& indices, int dim) {
    Monomial m = 0;
    for (int i : indices) {
        if (i < 1 || i > dim) throw InputError("covector index out of range: " + std::to_string(i));
        Monomial bit = Monomial(1) << (i - 1);
        if (m & bit) throw InputError("repeated covector index: " + std::to_string(i));
        m |= bit;
    }
    return m;
}

bool monomial_less(Monomial a, Monomial b) {
    int ga = monomial_grade(a), gb = monomial_grade(b);
    if (ga != gb) return ga < gb;
    while (a != 0) {
        Monomial la = a & (~a + 1u);
        Monomial lb = b & (~b + 1u);
        if (la != lb) return la < lb;
        a ^= la;
        b ^= lb;
    }
    return false;
}

std::vector<Monomial> monomials(int n, int p) {
    std::vector<Monomial> out;
    if (p < 0 || p > n) return out;
    std::vector<int> idx(static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        Monomial m = 0;
        for (int i : idx) m |= Monomial(1) << (i - 1);
        out.push_back(m);
        int k = p - 1;
        while (k >= 0 && idx[static_cast<std::size_t>(k)] == n - (p - 1 - k)) --k;
        if (k < 0) break;
        ++idx[static_cast<std::size_t>(k)];
        for (int j = k + 1; j < p; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

int wedge_sign(Monomial a, Monomial b) {
    if ((a & b) != 0) return 0;
    int inversions = 0;
    Monomial rest = a;
    while (rest != 0) {
        Monomial low = rest & (~rest + 1u);
        inversions += std::popcount(b & (low - 1u));
        rest ^= low;
    }
    return (inversions % 2 == 0) ? 1 : -1;
}

Multivector::Multivector(int dim) : dim_(dim) {
    if (dim < 1 || dim > kMaxDim) throw InputError("multivector dimension out of range: " + std::to_string(dim));
}

Multivector Multivector::scalar(int dim, const Scalar& value) {
    Multivector v(dim);
    v.set_coefficient(0, value);
    return v;
}

Multivector Multivector::covector(int dim, int i) {
    Multivector v(dim);
    if (i < 1 || i > dim) throw InputError("covector index out of range: " + std::to_string(i));
    v.set_coefficient(Monomial(1) << (i - 1), Scalar(1));
    return v;
}

Multivector Multivector::monomial_term(int dim, Monomial m, const Scalar& coeff) {
    Multivector v(dim);
    v.set_coefficient(m, coeff);
    return v;
}

Scalar Multivector::coefficient(Monomial m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void Multivector::set_coefficient(Monomial m, const Scalar& value) {
    if ((m >> dim_) != 0)
        throw InputError("monomial outside algebra of dimension " + std::to_string(dim_));
    if (value.is_zero())
        terms_.erase(m);
    else
        terms_[m] = value;
}

void Multivector::add_term(Monomial m, const Scalar& value) {
    set_coefficient(m, coefficient(m) + value);
}

std::vector<int> Multivector::grades() const {
    std::vector<int> out;
    for (const auto& [m, c] : terms_) {
        int g = monomial_grade(m);
        if (out.empty() || out.back() != g) out.push_back(g);
    }
    return out;
}

bool Multivector::is_homogeneous(int* grade) const {
    std::vector<int> gs = grades();
    if (gs.empty()) {
        if (grade) *grade = -1;
        return true;
    }
    if (gs.size() == 1) {
        if (grade) *grade = gs.front();
        return true;
    }
    return false;
}

Multivector& Multivector::operator+=(const Multivector& o) {
    if (dim_ != o.dim_) throw Error("multivector dimension mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) {
    if (dim_ != o.dim_) throw Error("multivector dimension mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Multivector& Multivector::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        *this = Multivector(dim_);
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
Multivector operator*(const Scalar& c, Multivector a) { return a *= c; }
Multivector operator-(const Multivector& a) { return Scalar(-1) * a; }

Multivector wedge(const Multivector& a, const Multivector& b) {
    if (a.dim() != b.dim()) throw Error("multivector dimension mismatch");
    Multivector out(a.dim());
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            int s = wedge_sign(ma, mb);
            if (s == 0) continue;
            out.add_term(ma | mb, Scalar(s) * ca * cb);
        }
    }
    return out;
}

Scalar inner_product(const Multivector& a, const Multivector& b) {
    if (a.dim() != b.dim()) throw Error("multivector dimension mismatch");
    Scalar out(0);
    for (const auto& [m, c] : a.terms()) out += c * conj(b.coefficient(m));
    return out;
}

Multivector grade_project(const Multivector& a, int p) {
    Multivector out(a.dim());
    for (const auto& [m, c] : a.terms()) {
        if (monomial_grade(m) == p) out.set_coefficient(m, c);
    }
    return out;
}

Multivector conjugate(const Multivector& a) {
    Multivector out(a.dim());
    for (const auto& [m, c] : a.terms()) out.set_coefficient(m, conj(c));
    return out;
}

VectorS coordinates(const Multivector& a, int p) {
    std::vector<Monomial> basis = monomials(a.dim(), p);
    VectorS out = VectorS::Zero(static_cast<Eigen::Index>(basis.size()));
    for (std::size_t i = 0; i < basis.size(); ++i) out(static_cast<Eigen::Index>(i)) = a.coefficient(basis[i]);
    return out;
}

Multivector from_coordinates(int n, int p, const VectorS& coords) {
    std::vector<Monomial> basis = monomials(n, p);
    if (coords.size() != static_cast<Eigen::Index>(basis.size()))
        throw Error("coordinate vector length mismatch");
    Multivector out(n);
    for (std::size_t i = 0; i < basis.size(); ++i) out.set_coefficient(basis[i], coords(static_cast<Eigen::Index>(i)));
    return out;
}

namespace {

bool needs_parentheses(const std::string& label) {
    return label.find_first_of("+-^* ") != std::string::npos;
}

std::string monomial_string(Monomial m, const std::vector<std::string>& labels) {
    std::string out;
    for (int i : monomial_indices(m)) {
        if (!out.empty()) out += "^";
        const std::string& label = labels[static_cast<std::size_t>(i - 1)];
        if (needs_parentheses(label))
            out += "(" + label + ")";
        else
            out += label;
    }
    return out;
}

bool leading_negative(const Scalar& c) { return c.re < 0 || (c.re == 0 && c.im < 0); }

std::string term_string(Monomial m, const Scalar& coeff, const std::vector<std::string>& labels) {
    if (m == 0) return to_string(coeff);
    bool neg = leading_negative(coeff);
    Scalar mag = neg ? -coeff : coeff;
    std::string prefix;
    if (!(mag == Scalar(1))) {
        std::string s = to_string(mag);
        if (mag.re != 0 && mag.im != 0)
            prefix = "(" + s + ")*";
        else
            prefix = s + "*";
    }
    return (neg ? "-" : "") + prefix + monomial_string(m, labels);
}

} // namespace

std::string to_string(const Multivector& a, const std::vector<std::string>& labels) {
    if (static_cast<int>(labels.size()) != a.dim()) throw Error("label count mismatch");
    if (a.is_zero()) return "0";
    std::vector<std::pair<Monomial, Scalar>> pos, neg;
    for (const auto& [m, c] : a.terms()) {
        (leading_negative(c) ? neg : pos).emplace_back(m, c);
    }
    std::string out;
    for (const auto& group : {pos, neg}) {
        for (const auto& [m, c] : group) {
            std::string t = term_string(m, c, labels);
            if (out.empty() || t.front() == '-')
                out += t;
            else
                out += "+" + t;
        }
    }
    return out;
}

std::string to_string(const Multivector& a) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(a.dim()));
    for (int i = 1; i <= a.dim(); ++i) labels.push_back("e" + std::to_string(i));
    return to_string(a, labels);
}

} // namespace solvform
