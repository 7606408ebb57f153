#include "elnet/rat.hpp"

#include <cctype>

#include "elnet/errors.hpp"

namespace elnet {

namespace {

bool is_integer_literal(const std::string& s) {
    size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

}  // namespace

Rat::Rat(long num, long den) {
    if (den == 0) throw DivisionByZero("zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rat Rat::parse(const std::string& s) {
    const auto slash = s.find('/');
    const std::string p = s.substr(0, slash);
    if (!is_integer_literal(p)) throw ParseError("not a rational: '" + s + "'");
    mpz_class num(p[0] == '+' ? p.substr(1) : p, 10);
    mpz_class den = 1;
    if (slash != std::string::npos) {
        const std::string q = s.substr(slash + 1);
        if (!is_integer_literal(q) || q[0] == '-' || q[0] == '+')
            throw ParseError("not a rational: '" + s + "'");
        den = mpz_class(q, 10);
        if (den == 0) throw DivisionByZero("zero denominator in '" + s + "'");
    }
    mpq_class q(num, den);
    q.canonicalize();
    return Rat(q);
}

std::string Rat::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rat::decimal(int digits) const {
    if (digits < 0) digits = 0;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    mpz_class a = abs(v_.get_num()) * scale * 2 + v_.get_den();
    mpz_class b = v_.get_den() * 2;
    mpz_class rounded = a / b;  // round half up on the magnitude
    std::string body = rounded.get_str();
    if (digits > 0) {
        if (static_cast<int>(body.size()) <= digits)
            body = std::string(static_cast<size_t>(digits) + 1 - body.size(), '0') + body;
        body.insert(body.size() - static_cast<size_t>(digits), ".");
    }
    const bool neg = sgn(v_) < 0 && rounded != 0;
    return neg ? "-" + body : body;
}

Rat Rat::inv() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    return Rat(mpq_class(1 / v_));
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw DivisionByZero("division by zero");
    v_ /= o.v_;
    return *this;
}

Rat pow(const Rat& base, int exponent) {
    Rat result = 1;
    Rat b = exponent >= 0 ? base : base.inv();
    for (int e = exponent >= 0 ? exponent : -exponent; e > 0; --e) result *= b;
    return result;
}

}  // namespace elnet
