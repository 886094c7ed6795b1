#include "decatic/roots.hpp"

#include "decatic/linalg.hpp"

#include <algorithm>
#include <cassert>

namespace decatic {

namespace {

// ---------------------------------------------------------------------------
// exact path: Sturm isolation + decimal bisection refinement
// ---------------------------------------------------------------------------

template <class T>
struct FieldOps;

template <>
struct FieldOps<Rational> {
    static Rational from_rational(const Rational &q) { return q; }
    static BigDecimal to_decimal(const Rational &v, long digits) {
        return BigDecimal::from_rational(v, digits);
    }
};

template <>
struct FieldOps<ExtendedScalar> {
    static ExtendedScalar from_rational(const Rational &q) { return ExtendedScalar(q); }
    static BigDecimal to_decimal(const ExtendedScalar &v, long digits) {
        return BigDecimal::from_extended(v, digits);
    }
};

template <class T>
std::vector<std::pair<T, T>> isolate_impl(const SturmChain<T> &chain, const T &lo, const T &hi) {
    std::vector<std::pair<T, T>> out;
    const T half = FieldOps<T>::from_rational(rational(1, 2));
    // worklist of (a, b] intervals with their root counts
    std::vector<std::pair<T, T>> work{{lo, hi}};
    while (!work.empty()) {
        auto [a, b] = work.back();
        work.pop_back();
        const int n = chain.count(a, b);
        if (n == 0)
            continue;
        if (n == 1) {
            out.emplace_back(a, b);
            continue;
        }
        const T mid = (a + b) * half;
        work.emplace_back(a, mid);
        work.emplace_back(mid, b);
    }
    std::sort(out.begin(), out.end(),
              [](const auto &x, const auto &y) { return sign(T(x.first - y.first)) < 0; });
    return out;
}

// Bisection refinement of a bracketing interval of a squarefree polynomial,
// done in decimal arithmetic after exact isolation.
BigDecimal refine_bisect(const UniPoly<BigDecimal> &p, BigDecimal a, BigDecimal b, long digits) {
    const long work = digits + 25;
    BigDecimal fa = p.eval(a);
    if (fa.is_zero())
        return a;
    BigDecimal fb = p.eval(b);
    if (fb.is_zero())
        return b;
    assert(fa.sign() != fb.sign());
    const BigDecimal half = BigDecimal::from_rational(rational(1, 2), work);
    BigDecimal width = (b - a).abs();
    const BigDecimal one = BigDecimal::from_long(1, work);
    for (int iter = 0; iter < 8 * (digits + 4) && !width.is_zero(); ++iter) {
        BigDecimal scale = a.abs();
        if (scale < one)
            scale = one;
        if (width < scale * BigDecimal::pow10(-digits - 2, work))
            break;
        const BigDecimal mid = (a + b) * half;
        const BigDecimal fm = p.eval(mid);
        if (fm.is_zero())
            return mid;
        if (fm.sign() == fa.sign()) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
        width = (b - a).abs();
    }
    return (a + b) * half;
}

template <class T>
std::vector<RealRoot> real_roots_exact(const UniPoly<T> &p, const Rational &lo,
                                       const Rational &hi, long digits) {
    if (p.is_zero())
        throw std::invalid_argument("real_roots: zero polynomial");
    if (lo > hi)
        throw std::invalid_argument("real_roots: empty interval");
    if (digits < 1)
        throw std::invalid_argument("real_roots: digits must be positive");

    const T a = FieldOps<T>::from_rational(lo);
    const T b = FieldOps<T>::from_rational(hi);

    if (p.degree() == 0)
        return {};

    // squarefree part carries the distinct roots; the gcd tower recovers
    // multiplicities
    std::vector<UniPoly<T>> tower{p};
    while (tower.back().degree() > 0) {
        UniPoly<T> g = poly_gcd(tower.back(), tower.back().derivative());
        if (g.degree() <= 0)
            break;
        tower.push_back(g);
    }
    const UniPoly<T> squarefree =
        tower.size() > 1 ? exact_quotient(tower[0], tower[1]) : tower[0];

    const long work = digits + 30;
    const UniPoly<BigDecimal> pd = map_poly<T, BigDecimal>(
        squarefree, [work](const T &c) { return FieldOps<T>::to_decimal(c, work); });

    std::vector<RealRoot> roots;
    SturmChain<T> chain(squarefree);

    auto multiplicity_at = [&](const T &ia, const T &ib) {
        int mult = 1;
        for (std::size_t level = 1; level < tower.size(); ++level) {
            SturmChain<T> sub(tower[level]);
            if (sub.count(ia, ib) > 0)
                ++mult;
            else
                break;
        }
        return mult;
    };

    // the half-open Sturm count misses a root exactly at lo
    if (sign(squarefree.eval(a)) == 0) {
        RealRoot r;
        r.value = FieldOps<T>::to_decimal(a, work);
        r.multiplicity = 1;
        for (std::size_t level = 1; level < tower.size(); ++level)
            if (sign(tower[level].eval(a)) == 0)
                ++r.multiplicity;
            else
                break;
        roots.push_back(std::move(r));
    }

    const T half = FieldOps<T>::from_rational(rational(1, 2));
    for (const auto &[ia, ib] : isolate_impl(chain, a, b)) {
        RealRoot r;
        if (sign(squarefree.eval(ib)) == 0) {
            r.value = FieldOps<T>::to_decimal(ib, work);
            r.multiplicity = 1;
            for (std::size_t level = 1; level < tower.size(); ++level)
                if (sign(tower[level].eval(ib)) == 0)
                    ++r.multiplicity;
                else
                    break;
            roots.push_back(std::move(r));
            continue;
        }
        // shrink exactly until the left endpoint is off the root (it can sit
        // on one when isolation split at a root), then hand over to decimal
        // bisection
        T la = ia, lb = ib;
        std::optional<T> exact_hit;
        while (sign(squarefree.eval(la)) == 0) {
            const T mid = (la + lb) * half;
            const int s = sign(squarefree.eval(mid));
            if (s == 0) {
                exact_hit = mid;
                break;
            }
            if (chain.count(mid, lb) == 1)
                la = mid;
            else
                lb = mid;
        }
        if (exact_hit) {
            r.value = FieldOps<T>::to_decimal(*exact_hit, work);
        } else {
            r.value = refine_bisect(pd, FieldOps<T>::to_decimal(la, work),
                                    FieldOps<T>::to_decimal(lb, work), digits);
        }
        r.multiplicity = multiplicity_at(ia, ib);
        roots.push_back(std::move(r));
    }
    std::sort(roots.begin(), roots.end(),
              [](const RealRoot &x, const RealRoot &y) { return x.value < y.value; });
    return roots;
}

// ---------------------------------------------------------------------------
// decimal path: Descartes-bound bisection
// ---------------------------------------------------------------------------

int descartes_variations(const UniPoly<BigDecimal> &p) {
    int count = 0, prev = 0;
    for (const BigDecimal &c : p.coeffs()) {
        const int s = c.sign();
        if (s == 0)
            continue;
        if (prev != 0 && s != prev)
            ++count;
        prev = s;
    }
    return count;
}

// Descartes bound on the number of roots of p inside (0, 1).
int descartes_01(const UniPoly<BigDecimal> &p) {
    const BigDecimal one = BigDecimal::from_long(1);
    return descartes_variations(p.reversed().shifted(one));
}

// p mapped so that [a, b] becomes [0, 1].
UniPoly<BigDecimal> to_unit_interval(const UniPoly<BigDecimal> &p, const BigDecimal &a,
                                     const BigDecimal &b) {
    const BigDecimal scale = b - a;
    UniPoly<BigDecimal> shifted = p.shifted(a);
    std::vector<BigDecimal> c(shifted.coeffs());
    BigDecimal power = BigDecimal::from_long(1);
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = c[i] * power;
        power = power * scale;
    }
    return UniPoly<BigDecimal>(p.var(), std::move(c));
}

} // namespace

template <class T>
std::vector<std::pair<T, T>> isolate_roots_sturm(const UniPoly<T> &squarefree, const T &lo,
                                                 const T &hi) {
    SturmChain<T> chain(squarefree);
    return isolate_impl(chain, lo, hi);
}

template std::vector<std::pair<Rational, Rational>>
isolate_roots_sturm(const UniPoly<Rational> &, const Rational &, const Rational &);
template std::vector<std::pair<ExtendedScalar, ExtendedScalar>>
isolate_roots_sturm(const UniPoly<ExtendedScalar> &, const ExtendedScalar &,
                    const ExtendedScalar &);

std::vector<RealRoot> real_roots(const UniPoly<Rational> &p, const Rational &lo,
                                 const Rational &hi, long digits) {
    return real_roots_exact(p, lo, hi, digits);
}

std::vector<RealRoot> real_roots(const UniPoly<ExtendedScalar> &p, const Rational &lo,
                                 const Rational &hi, long digits) {
    return real_roots_exact(p, lo, hi, digits);
}

std::vector<RealRoot> real_roots(const UniPoly<BigDecimal> &p, const BigDecimal &lo,
                                 const BigDecimal &hi, long digits) {
    if (p.is_zero())
        throw std::invalid_argument("real_roots: zero polynomial");
    if (hi < lo)
        throw std::invalid_argument("real_roots: empty interval");
    long coeff_digits = 0;
    for (const BigDecimal &c : p.coeffs())
        coeff_digits = std::max(coeff_digits, c.digits());
    if (digits > coeff_digits)
        throw PrecisionExhaustion("real_roots: requested " + std::to_string(digits) +
                                  " digits but coefficients carry only " +
                                  std::to_string(coeff_digits));
    if (p.degree() == 0)
        return {};

    std::vector<RealRoot> roots;
    const BigDecimal half = BigDecimal::from_rational(rational(1, 2), coeff_digits);
    const BigDecimal one = BigDecimal::from_long(1, coeff_digits);
    const BigDecimal min_width = BigDecimal::pow10(-digits - 4, coeff_digits);

    if (p.eval(lo).is_zero())
        roots.push_back(RealRoot{lo, 1});

    struct Interval {
        BigDecimal a, b;
    };
    std::vector<Interval> work{{lo, hi}};
    std::vector<Interval> isolated;
    while (!work.empty()) {
        Interval iv = work.back();
        work.pop_back();
        const int v = descartes_01(to_unit_interval(p, iv.a, iv.b));
        if (v == 0)
            continue;
        BigDecimal scale = iv.a.abs();
        if (scale < one)
            scale = one;
        const BigDecimal width = iv.b - iv.a;
        if (v == 1) {
            isolated.push_back(iv);
            continue;
        }
        if (width < scale * min_width) {
            // unresolved cluster: report the midpoint with the bound as
            // multiplicity
            roots.push_back(RealRoot{(iv.a + iv.b) * half, v});
            continue;
        }
        BigDecimal mid = (iv.a + iv.b) * half;
        if (p.eval(mid).is_zero()) {
            roots.push_back(RealRoot{mid, 1});
            // nudge the split so the root does not sit on a boundary
            mid = mid + width * BigDecimal::pow10(-digits - 2, coeff_digits);
        }
        work.push_back({iv.a, mid});
        work.push_back({mid, iv.b});
    }

    for (const Interval &iv : isolated) {
        const BigDecimal fa = p.eval(iv.a), fb = p.eval(iv.b);
        if (fb.is_zero()) {
            roots.push_back(RealRoot{iv.b, 1});
            continue;
        }
        if (fa.is_zero() || fa.sign() == fb.sign()) {
            // a single root without a sign change can only be an even-order
            // touch at this precision; report the interval midpoint
            roots.push_back(RealRoot{(iv.a + iv.b) * half, 1});
            continue;
        }
        roots.push_back(RealRoot{refine_bisect(p, iv.a, iv.b, digits), 1});
    }

    std::sort(roots.begin(), roots.end(),
              [](const RealRoot &x, const RealRoot &y) { return x.value < y.value; });
    // drop duplicates introduced by boundary handling
    std::vector<RealRoot> unique;
    const BigDecimal tol = BigDecimal::pow10(-digits, coeff_digits);
    for (RealRoot &r : roots) {
        if (!unique.empty()) {
            BigDecimal scale = unique.back().value.abs();
            if (scale < one)
                scale = one;
            if ((r.value - unique.back().value).abs() < scale * tol)
                continue;
        }
        unique.push_back(std::move(r));
    }
    return unique;
}

} // namespace decatic
