#pragma once

#include "decatic/polynomial.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace decatic {

struct PrecisionExhaustion : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One real root: refined value, multiplicity, and the exact value when the
/// root happened to be representable (rational endpoint hit, exact path only).
struct RealRoot {
    BigDecimal value;
    int multiplicity = 1;
};

namespace detail {
inline Rational reciprocal(const Rational &v) { return 1 / v; }
inline ExtendedScalar reciprocal(const ExtendedScalar &v) { return v.inverse(); }
} // namespace detail

/// Monic-normalized polynomial gcd over a field scalar.
template <class T>
UniPoly<T> poly_gcd(UniPoly<T> a, UniPoly<T> b) {
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        (void)q;
        a = b;
        b = r;
    }
    return a * detail::reciprocal(a.leading());
}

/// Sturm chain for exact real-root counting.
template <class T>
class SturmChain {
  public:
    explicit SturmChain(const UniPoly<T> &p) {
        if (p.is_zero())
            throw std::invalid_argument("SturmChain: zero polynomial");
        seq_.push_back(p);
        UniPoly<T> d = p.derivative();
        if (!d.is_zero())
            seq_.push_back(d);
        while (seq_.size() >= 2 && !seq_.back().is_zero()) {
            auto [q, r] = divmod(seq_[seq_.size() - 2], seq_.back());
            (void)q;
            if (r.is_zero())
                break;
            seq_.push_back(-r);
        }
    }

    int variations_at(const T &x) const {
        int count = 0, prev = 0;
        for (const auto &p : seq_) {
            const int s = sign(p.eval(x));
            if (s == 0)
                continue;
            if (prev != 0 && s != prev)
                ++count;
            prev = s;
        }
        return count;
    }

    /// Number of distinct real roots in the half-open interval (a, b].
    int count(const T &a, const T &b) const { return variations_at(a) - variations_at(b); }

  private:
    std::vector<UniPoly<T>> seq_;
};

/// All real roots of an exact polynomial inside [lo, hi], ascending, refined
/// to `digits` decimal digits, with multiplicities. Isolation is complete:
/// Sturm counting cannot miss a root.
std::vector<RealRoot> real_roots(const UniPoly<Rational> &p, const Rational &lo,
                                 const Rational &hi, long digits);
std::vector<RealRoot> real_roots(const UniPoly<ExtendedScalar> &p, const Rational &lo,
                                 const Rational &hi, long digits);

/// Real roots of a decimal-coefficient polynomial inside [lo, hi] via
/// Descartes-bound bisection. Throws PrecisionExhaustion when the requested
/// digits exceed the coefficients' working precision.
std::vector<RealRoot> real_roots(const UniPoly<BigDecimal> &p, const BigDecimal &lo,
                                 const BigDecimal &hi, long digits);

/// Exact isolating intervals for an exact polynomial (used both by the
/// refining front ends above and directly by tests).
template <class T>
std::vector<std::pair<T, T>> isolate_roots_sturm(const UniPoly<T> &squarefree, const T &lo,
                                                 const T &hi);

} // namespace decatic
