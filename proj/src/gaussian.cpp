#include "wsd/gaussian.hpp"

#include <cctype>
#include <ostream>

namespace wsd {

std::string rational_str(const mpq_class& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

mpq_class parse_rational(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational");
    // strict shape: [-]digits[/digits]
    std::size_t pos = 0;
    if (s[pos] == '-') ++pos;
    std::size_t digits = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) { ++pos; ++digits; }
    if (digits == 0) throw ParseError("bad rational '" + s + "'");
    if (pos < s.size()) {
        if (s[pos] != '/') throw ParseError("bad rational '" + s + "'");
        ++pos;
        std::size_t den_digits = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) { ++pos; ++den_digits; }
        if (den_digits == 0 || pos != s.size()) throw ParseError("bad rational '" + s + "'");
    }
    mpq_class q(s, 10);
    if (q.get_den() == 0) throw ZeroDenominator();
    q.canonicalize();
    return q;
}

Gaussian Gaussian::normalize(const mpz_class& rn, const mpz_class& rd,
                             const mpz_class& in_, const mpz_class& id) {
    if (rd == 0 || id == 0) throw ZeroDenominator();
    mpq_class re(rn, rd), im(in_, id);
    re.canonicalize();
    im.canonicalize();
    return Gaussian(re, im);
}

Gaussian Gaussian::rational(long num, long den) {
    return normalize(num, den, 0, 1);
}

Gaussian Gaussian::i(long num, long den) {
    return normalize(0, 1, num, den);
}

Gaussian Gaussian::operator/(const Gaussian& o) const {
    mpq_class n = o.norm();
    if (sgn(n) == 0) throw DivisionByZero();
    // (a+bi)/(c+di) = (a+bi)(c-di)/(c^2+d^2)
    Gaussian num = *this * o.conj();
    return Gaussian(num.re_ / n, num.im_ / n);
}

std::string Gaussian::str() const {
    if (is_zero()) return "0";
    if (sgn(im_) == 0) return rational_str(re_);
    std::string imag = rational_str(abs(im_)) + "*i";
    if (sgn(re_) == 0) return (sgn(im_) < 0 ? "-" : "") + imag;
    return rational_str(re_) + (sgn(im_) < 0 ? "-" : "+") + imag;
}

Gaussian Gaussian::parse(const std::string& s) {
    if (s.empty()) throw ParseError("empty scalar");
    if (s.size() >= 2 && s.compare(s.size() - 2, 2, "*i") == 0) {
        std::string body = s.substr(0, s.size() - 2);
        // a sign after the leading character splits real from imaginary part
        for (std::size_t p = 1; p < body.size(); ++p) {
            if (body[p] == '+' || body[p] == '-') {
                mpq_class re = parse_rational(body.substr(0, p));
                std::string rest = body.substr(p);     // keeps the sign
                mpq_class im = (rest[0] == '+') ? parse_rational(rest.substr(1))
                                                : -parse_rational(rest.substr(1));
                return Gaussian(re, im);
            }
        }
        return Gaussian(mpq_class(0), parse_rational(body));
    }
    return Gaussian(parse_rational(s), mpq_class(0));
}

std::ostream& operator<<(std::ostream& os, const Gaussian& z) {
    return os << z.str();
}

} // namespace wsd
