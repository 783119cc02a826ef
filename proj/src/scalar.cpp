#include "apollo/scalar.hpp"

#include <algorithm>
#include <sstream>

namespace apollo {

std::optional<BigInt> integer_sqrt(const BigInt& n) {
    if (n < 0) throw NegativeRadicand();
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
    BigInt root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    return root;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
    if (q < 0) throw NegativeRadicand();
    auto num = integer_sqrt(q.get_num());
    if (!num) return std::nullopt;
    auto den = integer_sqrt(q.get_den());
    if (!den) return std::nullopt;
    return make_rational(*num, *den);
}

Rational make_rational(BigInt num, BigInt den) {
    if (den == 0) throw Error("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::optional<Rational> parse_rational(const std::string& text) {
    if (text.empty()) return std::nullopt;
    auto valid_int = [](const std::string& s) {
        if (s.empty()) return false;
        size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        return std::all_of(s.begin() + i, s.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        std::string a = text.substr(0, slash), b = text.substr(slash + 1);
        if (!valid_int(a) || !valid_int(b)) return std::nullopt;
        BigInt den(b);
        if (den == 0) return std::nullopt;
        return make_rational(BigInt(a), den);
    }
    auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string head = text.substr(0, dot), tail = text.substr(dot + 1);
        if (head.empty() || head == "-" || head == "+") head += "0";
        if (!valid_int(head)) return std::nullopt;
        if (tail.empty() || !std::all_of(tail.begin(), tail.end(),
                                         [](char c) { return c >= '0' && c <= '9'; }))
            return std::nullopt;
        BigInt scale = 1;
        for (size_t i = 0; i < tail.size(); ++i) scale *= 10;
        BigInt whole(head);
        BigInt frac(tail.empty() ? std::string("0") : tail);
        bool neg = text[0] == '-';
        BigInt num = whole * scale + (neg ? -frac : frac);
        return make_rational(num, scale);
    }
    if (!valid_int(text)) return std::nullopt;
    return Rational(BigInt(text));
}

Scalar Scalar::sqrt_or_float() const {
    if (sign() < 0) throw NegativeRadicand();
    if (exact_) {
        if (auto r = rational_sqrt(q_)) return Scalar(*r);
        return Scalar(std::sqrt(q_.get_d()));
    }
    return Scalar(std::sqrt(f_));
}

std::string Scalar::str() const {
    if (exact_) return q_.get_str();
    std::ostringstream os;
    os.precision(17);
    os << f_;
    return os.str();
}

bool approx_eq(double a, double b, double scale) {
    double m = std::max({1.0, std::abs(scale), std::abs(a), std::abs(b)});
    return std::abs(a - b) <= 1e-12 * m;
}

std::string ComplexScalar::str() const {
    std::string s = re.str();
    if (im.sign() >= 0)
        s += "+" + im.str() + "i";
    else
        s += im.str() + "i";
    return s;
}

std::string ProjPoint::str() const {
    if (infinite) return "inf";
    return z.str();
}

}  // namespace apollo
