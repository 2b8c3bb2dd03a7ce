#include "solvform/scalar.hpp"

#include <cctype>
#include <ostream>

namespace solvform {

Rational parse_rational(const std::string& text) {
    auto fail = [&text]() -> Rational {
        throw InputError("invalid rational literal: \"" + text + "\"");
    };
    if (text.empty()) return fail();
    std::size_t pos = 0;
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
        negative = text[pos] == '-';
        ++pos;
    }
    std::size_t num_start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == num_start) return fail();
    std::string numer = text.substr(num_start, pos - num_start);
    std::string denom = "1";
    if (pos < text.size()) {
        if (text[pos] != '/') return fail();
        ++pos;
        std::size_t den_start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == den_start || pos != text.size()) return fail();
        denom = text.substr(den_start);
        if (denom.find_first_not_of('0') == std::string::npos)
            throw InputError("zero denominator in rational literal: \"" + text + "\"");
    }
    // Built from integer parts so the result is canonical; mpq string
    // assignment neither reduces fractions nor accepts a leading '+'.
    Rational value = Rational(Integer(numer)) / Rational(Integer(denom));
    return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& r) { return r.str(); }

bool is_integer(const Rational& r) { return mp::denominator(r) == 1; }

namespace {

bool integer_sqrt(const Integer& n, Integer& root) {
    if (n < 0) return false;
    root = mp::sqrt(n);
    return root * root == n;
}

} // namespace

bool rational_sqrt(const Rational& r, Rational& root) {
    if (r < 0) return false;
    Integer num_root, den_root;
    if (!integer_sqrt(Integer(mp::numerator(r)), num_root)) return false;
    if (!integer_sqrt(Integer(mp::denominator(r)), den_root)) return false;
    root = Rational(num_root) / Rational(den_root);
    return true;
}

namespace {

// Imaginary part without the leading sign: "i", "2i", "3/4i".
std::string imag_magnitude(const Rational& im) {
    Rational a = im < 0 ? Rational(-im) : im;
    if (a == 1) return "i";
    return a.str() + "i";
}

} // namespace

std::string to_string(const Scalar& a) {
    if (a.im == 0) return a.re.str();
    std::string imag = (a.im < 0 ? "-" : "") + imag_magnitude(a.im);
    if (a.re == 0) return imag;
    if (a.im > 0) return a.re.str() + "+" + imag;
    return a.re.str() + imag;
}

std::ostream& operator<<(std::ostream& os, const Scalar& a) { return os << to_string(a); }

} // namespace solvform
