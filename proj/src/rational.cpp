#include "decatic/rational.hpp"

#include <algorithm>
#include <cctype>

namespace decatic {

bool rational_sqrt(const Rational &q, Rational *root) {
    if (sgn(q) < 0)
        return false;
    if (sgn(q) == 0) {
        if (root)
            *root = 0;
        return true;
    }
    const mpz_class num = q.get_num(), den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) ||
        !mpz_perfect_square_p(den.get_mpz_t()))
        return false;
    if (root) {
        mpz_class rn, rd;
        mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
        *root = rational(rn, rd);
    }
    return true;
}

namespace {

bool valid_digits(const std::string &s) {
    if (s.empty())
        return false;
    return std::all_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isdigit(c); });
}

} // namespace

Rational parse_rational(const std::string &text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s += c;
    if (s.empty())
        throw std::invalid_argument("parse_rational: empty string");

    bool negative = false;
    if (s[0] == '+' || s[0] == '-') {
        negative = (s[0] == '-');
        s.erase(0, 1);
    }
    if (s.empty())
        throw std::invalid_argument("parse_rational: sign without digits");

    // a/b form
    if (auto slash = s.find('/'); slash != std::string::npos) {
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!valid_digits(num) || !valid_digits(den))
            throw std::invalid_argument("parse_rational: bad fraction '" + text + "'");
        Rational q = rational(Integer(num, 10), Integer(den, 10));
        return negative ? Rational(-q) : q;
    }

    // decimal with optional exponent
    long exp10 = 0;
    if (auto epos = s.find_first_of("eE"); epos != std::string::npos) {
        std::string exppart = s.substr(epos + 1);
        s.erase(epos);
        try {
            exp10 = std::stol(exppart);
        } catch (const std::exception &) {
            throw std::invalid_argument("parse_rational: bad exponent '" + text + "'");
        }
    }
    std::string digits = s;
    if (auto dot = s.find('.'); dot != std::string::npos) {
        digits = s.substr(0, dot) + s.substr(dot + 1);
        exp10 -= static_cast<long>(s.size() - dot - 1);
    }
    if (!valid_digits(digits))
        throw std::invalid_argument("parse_rational: bad number '" + text + "'");

    Rational q{Integer(digits, 10)};
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::abs(exp10)));
    if (exp10 >= 0)
        q *= Rational(scale);
    else
        q /= Rational(scale);
    q.canonicalize();
    return negative ? Rational(-q) : q;
}

std::string to_string(const Rational &q) {
    if (is_integer(q))
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational pow_int(const Rational &base, long exp) {
    if (exp == 0)
        return 1;
    if (sgn(base) == 0 && exp < 0)
        throw std::domain_error("pow_int: zero to negative power");
    Rational b = exp < 0 ? Rational(1 / base) : base;
    unsigned long n = static_cast<unsigned long>(exp < 0 ? -exp : exp);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), b.get_num_mpz_t(), n);
    mpz_pow_ui(den.get_mpz_t(), b.get_den_mpz_t(), n);
    return rational(num, den);
}

} // namespace decatic
