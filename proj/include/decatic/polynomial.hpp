#pragma once

#include "decatic/bigdecimal.hpp"
#include "decatic/extended_scalar.hpp"
#include "decatic/rational.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace decatic {

/// Variable tags carried by polynomials. X is the spatial coordinate, E the
/// energy; Param names an eliminated potential coefficient during resultant
/// work.
enum class Var { X, E, Param };

inline const char *var_name(Var v) {
    switch (v) {
    case Var::X: return "x";
    case Var::E: return "E";
    case Var::Param: return "param";
    }
    return "?";
}

struct VariableMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Uniform integer embedding for the three scalar kinds.
template <class T>
struct ScalarOps;

template <>
struct ScalarOps<Rational> {
    static Rational from_int(long v) { return Rational(v); }
};
template <>
struct ScalarOps<ExtendedScalar> {
    static ExtendedScalar from_int(long v) { return ExtendedScalar(v); }
};
template <>
struct ScalarOps<BigDecimal> {
    static BigDecimal from_int(long v) { return BigDecimal::from_long(v); }
};

/// Dense univariate polynomial over an exact or decimal scalar. Coefficients
/// are stored ascending; the trailing (highest-index) coefficient is nonzero
/// unless the polynomial is zero, and degree() == -1 flags the zero
/// polynomial.
template <class T>
class UniPoly {
  public:
    explicit UniPoly(Var var = Var::X) : var_(var) {}
    UniPoly(Var var, std::vector<T> coeffs) : var_(var), c_(std::move(coeffs)) { trim(); }

    static UniPoly constant(Var var, const T &value) {
        return UniPoly(var, std::vector<T>{value});
    }
    static UniPoly monomial(Var var, const T &value, std::size_t degree) {
        std::vector<T> c(degree + 1);
        c[degree] = value;
        return UniPoly(var, std::move(c));
    }

    Var var() const { return var_; }
    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }

    const T &coeff(std::size_t i) const {
        static const T zero{};
        return i < c_.size() ? c_[i] : zero;
    }
    const std::vector<T> &coeffs() const { return c_; }

    const T &leading() const {
        if (c_.empty())
            throw std::domain_error("UniPoly: zero polynomial has no leading coefficient");
        return c_.back();
    }

    void set_coeff(std::size_t i, const T &value) {
        if (i >= c_.size())
            c_.resize(i + 1);
        c_[i] = value;
        trim();
    }

    UniPoly operator-() const {
        UniPoly r(var_);
        r.c_.reserve(c_.size());
        for (const T &v : c_)
            r.c_.push_back(-v);
        return r;
    }

    friend UniPoly operator+(const UniPoly &a, const UniPoly &b) {
        check_vars(a, b, "add");
        UniPoly r(a.var_);
        r.c_.resize(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.c_.size(); ++i)
            r.c_[i] = a.coeff(i) + b.coeff(i);
        r.trim();
        return r;
    }

    friend UniPoly operator-(const UniPoly &a, const UniPoly &b) {
        check_vars(a, b, "subtract");
        UniPoly r(a.var_);
        r.c_.resize(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.c_.size(); ++i)
            r.c_[i] = a.coeff(i) - b.coeff(i);
        r.trim();
        return r;
    }

    friend UniPoly operator*(const UniPoly &a, const UniPoly &b) {
        check_vars(a, b, "multiply");
        UniPoly r(a.var_);
        if (a.is_zero() || b.is_zero())
            return r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, T{});
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (decatic::is_zero(a.c_[i]))
                continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }

    friend UniPoly operator*(const UniPoly &a, const T &s) {
        UniPoly r(a.var_);
        if (decatic::is_zero(s))
            return r;
        r.c_.reserve(a.c_.size());
        for (const T &v : a.c_)
            r.c_.push_back(v * s);
        r.trim();
        return r;
    }
    friend UniPoly operator*(const T &s, const UniPoly &a) { return a * s; }

    friend bool operator==(const UniPoly &a, const UniPoly &b) {
        return a.var_ == b.var_ && a.c_ == b.c_;
    }
    friend bool operator!=(const UniPoly &a, const UniPoly &b) { return !(a == b); }

    /// Formal derivative with respect to the polynomial's own variable.
    UniPoly derivative() const {
        UniPoly r(var_);
        if (c_.size() <= 1)
            return r;
        r.c_.resize(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i)
            r.c_[i - 1] = c_[i] * ScalarOps<T>::from_int(static_cast<long>(i));
        r.trim();
        return r;
    }

    T eval(const T &x) const {
        T acc{};
        for (std::size_t i = c_.size(); i-- > 0;)
            acc = acc * x + c_[i];
        return acc;
    }

    /// Taylor shift: returns p(x + offset).
    UniPoly shifted(const T &offset) const {
        if (decatic::is_zero(offset))
            return *this;
        UniPoly r(var_);
        r.c_.assign(c_.size(), T{});
        // synthetic Horner expansion around -offset
        for (std::size_t i = c_.size(); i-- > 0;) {
            for (std::size_t j = r.c_.size(); j-- > 1;)
                r.c_[j] = r.c_[j] * offset + r.c_[j - 1];
            if (!r.c_.empty())
                r.c_[0] = r.c_[0] * offset + c_[i];
        }
        r.trim();
        return r;
    }

    /// Coefficients in reverse order: x^d * p(1/x).
    UniPoly reversed() const {
        UniPoly r(var_);
        r.c_.assign(c_.rbegin(), c_.rend());
        r.trim();
        return r;
    }

    UniPoly times_power(std::size_t k) const {
        if (is_zero() || k == 0)
            return *this;
        UniPoly r(var_);
        r.c_.assign(c_.size() + k, T{});
        std::copy(c_.begin(), c_.end(), r.c_.begin() + static_cast<long>(k));
        return r;
    }

    /// Quotient and remainder over a field scalar; division is exact in the
    /// sense of polynomial long division.
    friend std::pair<UniPoly, UniPoly> divmod(const UniPoly &num, const UniPoly &den) {
        check_vars(num, den, "divide");
        if (den.is_zero())
            throw std::domain_error("UniPoly: division by zero polynomial");
        UniPoly q(num.var_), r = num;
        if (num.degree() < den.degree())
            return {q, r};
        q.c_.assign(static_cast<std::size_t>(num.degree() - den.degree()) + 1, T{});
        while (!r.is_zero() && r.degree() >= den.degree()) {
            std::size_t shift = static_cast<std::size_t>(r.degree() - den.degree());
            T factor = r.leading() / den.leading();
            q.c_[shift] = factor;
            for (std::size_t i = 0; i < den.c_.size(); ++i)
                r.c_[shift + i] -= factor * den.c_[i];
            r.c_.pop_back(); // leading term cancels by construction
            r.trim();
        }
        q.trim();
        return {q, r};
    }

    std::string str() const {
        if (is_zero())
            return "0";
        std::string out;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (decatic::is_zero(c_[i]))
                continue;
            if (!out.empty())
                out += " + ";
            out += "(" + scalar_str(c_[i]) + ")";
            if (i > 0) {
                out += "*";
                out += var_name(var_);
                if (i > 1)
                    out += "^" + std::to_string(i);
            }
        }
        return out;
    }

  private:
    static void check_vars(const UniPoly &a, const UniPoly &b, const char *op) {
        if (a.var_ != b.var_)
            throw VariableMismatch(std::string("UniPoly: cannot ") + op + " polynomial in " +
                                   var_name(a.var_) + " with polynomial in " + var_name(b.var_));
    }

    static std::string scalar_str(const Rational &v) { return to_string(v); }
    static std::string scalar_str(const ExtendedScalar &v) { return v.str(); }
    static std::string scalar_str(const BigDecimal &v) { return v.str(20); }

    void trim() {
        while (!c_.empty() && decatic::is_zero(c_.back()))
            c_.pop_back();
    }

    Var var_;
    std::vector<T> c_;
};

template <class T>
bool is_zero(const UniPoly<T> &p) {
    return p.is_zero();
}

/// Product and formal derivative as free functions.
template <class T>
UniPoly<T> poly_mul(const UniPoly<T> &p, const UniPoly<T> &q) {
    return p * q;
}

template <class T>
UniPoly<T> poly_diff(const UniPoly<T> &p) {
    return p.derivative();
}

template <class T, class U, class F>
UniPoly<U> map_poly(const UniPoly<T> &p, F convert) {
    std::vector<U> out;
    out.reserve(p.coeffs().size());
    for (const T &c : p.coeffs())
        out.push_back(convert(c));
    return UniPoly<U>(p.var(), std::move(out));
}

inline UniPoly<ExtendedScalar> to_extended(const UniPoly<Rational> &p) {
    return map_poly<Rational, ExtendedScalar>(p, [](const Rational &c) { return ExtendedScalar(c); });
}

inline UniPoly<BigDecimal> to_decimal(const UniPoly<Rational> &p, long digits = 0) {
    return map_poly<Rational, BigDecimal>(
        p, [digits](const Rational &c) { return BigDecimal::from_rational(c, digits); });
}

inline UniPoly<BigDecimal> to_decimal(const UniPoly<ExtendedScalar> &p, long digits = 0) {
    return map_poly<ExtendedScalar, BigDecimal>(
        p, [digits](const ExtendedScalar &c) { return BigDecimal::from_extended(c, digits); });
}

/// Dense bivariate polynomial: grid[i][j] multiplies u^i * v^j, where (u, v)
/// are the two tagged variables. Differentiation acts on u only; for the AIM
/// state u is x and v is E.
template <class T>
class BiPoly {
  public:
    explicit BiPoly(Var u = Var::X, Var v = Var::E) : u_(u), v_(v) {
        if (u == v)
            throw VariableMismatch("BiPoly: variables must differ");
    }

    static BiPoly constant(Var u, Var v, const T &value) {
        BiPoly r(u, v);
        if (!decatic::is_zero(value))
            r.g_ = {{value}};
        return r;
    }

    /// Embeds a univariate polynomial (matching one of the two tags).
    static BiPoly from_uni(const UniPoly<T> &p, Var u, Var v) {
        BiPoly r(u, v);
        if (p.is_zero())
            return r;
        if (p.var() == u) {
            r.g_.resize(p.coeffs().size());
            for (std::size_t i = 0; i < p.coeffs().size(); ++i)
                if (!decatic::is_zero(p.coeff(i)))
                    r.g_[i] = {p.coeff(i)};
                else
                    r.g_[i] = {};
        } else if (p.var() == v) {
            r.g_.resize(1);
            r.g_[0] = p.coeffs();
        } else {
            throw VariableMismatch("BiPoly: univariate variable matches neither axis");
        }
        r.trim();
        return r;
    }

    Var u() const { return u_; }
    Var v() const { return v_; }
    bool is_zero() const { return g_.empty(); }

    long deg_u() const { return static_cast<long>(g_.size()) - 1; }
    long deg_v() const {
        long d = -1;
        for (const auto &row : g_)
            d = std::max(d, static_cast<long>(row.size()) - 1);
        return d;
    }

    const T &coeff(std::size_t i, std::size_t j) const {
        static const T zero{};
        if (i >= g_.size() || j >= g_[i].size())
            return zero;
        return g_[i][j];
    }

    void set_coeff(std::size_t i, std::size_t j, const T &value) {
        if (i >= g_.size())
            g_.resize(i + 1);
        if (j >= g_[i].size())
            g_[i].resize(j + 1);
        g_[i][j] = value;
        trim();
    }

    BiPoly operator-() const {
        BiPoly r(u_, v_);
        r.g_.resize(g_.size());
        for (std::size_t i = 0; i < g_.size(); ++i) {
            r.g_[i].reserve(g_[i].size());
            for (const T &c : g_[i])
                r.g_[i].push_back(-c);
        }
        return r;
    }

    friend BiPoly operator+(const BiPoly &a, const BiPoly &b) {
        check_vars(a, b, "add");
        BiPoly r(a.u_, a.v_);
        r.g_.resize(std::max(a.g_.size(), b.g_.size()));
        for (std::size_t i = 0; i < r.g_.size(); ++i) {
            std::size_t arow = i < a.g_.size() ? a.g_[i].size() : 0;
            std::size_t brow = i < b.g_.size() ? b.g_[i].size() : 0;
            r.g_[i].resize(std::max(arow, brow));
            for (std::size_t j = 0; j < r.g_[i].size(); ++j)
                r.g_[i][j] = a.coeff(i, j) + b.coeff(i, j);
        }
        r.trim();
        return r;
    }

    friend BiPoly operator-(const BiPoly &a, const BiPoly &b) { return a + (-b); }

    friend BiPoly operator*(const BiPoly &a, const BiPoly &b) { return mul_trunc(a, b, -1); }

    friend BiPoly operator*(const BiPoly &a, const T &s) {
        BiPoly r(a.u_, a.v_);
        if (decatic::is_zero(s))
            return r;
        r.g_.resize(a.g_.size());
        for (std::size_t i = 0; i < a.g_.size(); ++i) {
            r.g_[i].reserve(a.g_[i].size());
            for (const T &c : a.g_[i])
                r.g_[i].push_back(c * s);
        }
        r.trim();
        return r;
    }

    friend bool operator==(const BiPoly &a, const BiPoly &b) {
        return a.u_ == b.u_ && a.v_ == b.v_ && a.g_ == b.g_;
    }
    friend bool operator!=(const BiPoly &a, const BiPoly &b) { return !(a == b); }

    /// Product with the u-degree capped at max_deg_u (-1 = no cap). The cap
    /// is what makes the AIM taylor-truncated mode affordable.
    static BiPoly mul_trunc(const BiPoly &a, const BiPoly &b, long max_deg_u) {
        check_vars(a, b, "multiply");
        BiPoly r(a.u_, a.v_);
        if (a.is_zero() || b.is_zero())
            return r;
        std::size_t usize = a.g_.size() + b.g_.size() - 1;
        if (max_deg_u >= 0)
            usize = std::min(usize, static_cast<std::size_t>(max_deg_u) + 1);
        r.g_.resize(usize);
        for (std::size_t i = 0; i < a.g_.size() && i < usize; ++i) {
            for (std::size_t k = 0; k < b.g_.size() && i + k < usize; ++k) {
                if (a.g_[i].empty() || b.g_[k].empty())
                    continue;
                auto &row = r.g_[i + k];
                if (row.size() < a.g_[i].size() + b.g_[k].size() - 1)
                    row.resize(a.g_[i].size() + b.g_[k].size() - 1);
                for (std::size_t j = 0; j < a.g_[i].size(); ++j) {
                    if (decatic::is_zero(a.g_[i][j]))
                        continue;
                    for (std::size_t l = 0; l < b.g_[k].size(); ++l)
                        row[j + l] += a.g_[i][j] * b.g_[k][l];
                }
            }
        }
        r.trim();
        return r;
    }

    /// Drops every u-power above max_deg_u.
    BiPoly truncated_u(long max_deg_u) const {
        BiPoly r = *this;
        if (max_deg_u >= 0 && r.g_.size() > static_cast<std::size_t>(max_deg_u) + 1)
            r.g_.resize(static_cast<std::size_t>(max_deg_u) + 1);
        r.trim();
        return r;
    }

    /// Formal derivative with respect to u.
    BiPoly diff_u() const {
        BiPoly r(u_, v_);
        if (g_.size() <= 1)
            return r;
        r.g_.resize(g_.size() - 1);
        for (std::size_t i = 1; i < g_.size(); ++i) {
            r.g_[i - 1].reserve(g_[i].size());
            for (const T &c : g_[i])
                r.g_[i - 1].push_back(c * ScalarOps<T>::from_int(static_cast<long>(i)));
        }
        r.trim();
        return r;
    }

    /// Evaluates u = point, leaving a univariate polynomial in v.
    UniPoly<T> eval_u(const T &point) const {
        UniPoly<T> acc(v_);
        for (std::size_t i = g_.size(); i-- > 0;)
            acc = acc * point + UniPoly<T>(v_, g_[i]);
        return acc;
    }

    /// Evaluates v = point, leaving a univariate polynomial in u.
    UniPoly<T> eval_v(const T &point) const {
        std::vector<T> out(g_.size());
        for (std::size_t i = 0; i < g_.size(); ++i)
            out[i] = UniPoly<T>(v_, g_[i]).eval(point);
        return UniPoly<T>(u_, std::move(out));
    }

    /// Row i as a polynomial in v (the coefficient of u^i).
    UniPoly<T> row_poly(std::size_t i) const {
        if (i >= g_.size())
            return UniPoly<T>(v_);
        return UniPoly<T>(v_, g_[i]);
    }

    std::string str() const {
        if (is_zero())
            return "0";
        std::string out;
        for (std::size_t i = 0; i < g_.size(); ++i) {
            UniPoly<T> row(v_, g_[i]);
            if (row.is_zero())
                continue;
            if (!out.empty())
                out += " + ";
            out += "[" + row.str() + "]";
            if (i > 0) {
                out += "*";
                out += var_name(u_);
                if (i > 1)
                    out += "^" + std::to_string(i);
            }
        }
        return out;
    }

  private:
    static void check_vars(const BiPoly &a, const BiPoly &b, const char *op) {
        if (a.u_ != b.u_ || a.v_ != b.v_)
            throw VariableMismatch(std::string("BiPoly: cannot ") + op +
                                   " polynomials with different variables");
    }

    void trim() {
        for (auto &row : g_)
            while (!row.empty() && decatic::is_zero(row.back()))
                row.pop_back();
        while (!g_.empty() && g_.back().empty())
            g_.pop_back();
    }

    Var u_, v_;
    std::vector<std::vector<T>> g_;
};

template <class T>
BiPoly<T> poly_diff(const BiPoly<T> &p) {
    return p.diff_u();
}

template <class T, class U, class F>
BiPoly<U> map_poly(const BiPoly<T> &p, F convert) {
    BiPoly<U> out(p.u(), p.v());
    for (long i = 0; i <= p.deg_u(); ++i)
        for (long j = 0; j <= p.deg_v(); ++j) {
            const T &c = p.coeff(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
            if (!is_zero(c))
                out.set_coeff(static_cast<std::size_t>(i), static_cast<std::size_t>(j), convert(c));
        }
    return out;
}

inline BiPoly<BigDecimal> to_decimal(const BiPoly<ExtendedScalar> &p, long digits = 0) {
    return map_poly<ExtendedScalar, BigDecimal>(
        p, [digits](const ExtendedScalar &c) { return BigDecimal::from_extended(c, digits); });
}

} // namespace decatic
