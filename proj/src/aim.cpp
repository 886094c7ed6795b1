#include "decatic/aim.hpp"

#include "decatic/roots.hpp"

#include <algorithm>
#include <cmath>

namespace decatic {

long AimConfig::effective_precision() const {
    if (precision > 0)
        return precision;
    return digits + 30 + (max_iters + 3) / 4;
}

BigDecimal AimConfig::effective_tol() const {
    if (!convergence_tol.is_zero())
        return convergence_tol;
    return BigDecimal::pow10(-digits - 2, 30);
}

void AimConfig::validate() const {
    if (max_iters < 1)
        throw std::invalid_argument("AimConfig: max_iters must be >= 1");
    if (effective_precision() < 30)
        throw std::invalid_argument("AimConfig: precision must be >= 30 digits");
    if (!(window_low < window_high))
        throw std::invalid_argument("AimConfig: energy window is empty");
    if (digits < 1)
        throw std::invalid_argument("AimConfig: digits must be positive");
}

namespace {

// shift a bivariate polynomial in u: p(u, v) -> p(u + offset, v)
BiPoly<ExtendedScalar> shift_u(const BiPoly<ExtendedScalar> &p, const ExtendedScalar &offset) {
    if (offset.is_zero())
        return p;
    BiPoly<ExtendedScalar> out(p.u(), p.v());
    for (long j = 0; j <= p.deg_v(); ++j) {
        std::vector<ExtendedScalar> col(static_cast<std::size_t>(p.deg_u()) + 1);
        for (long i = 0; i <= p.deg_u(); ++i)
            col[static_cast<std::size_t>(i)] =
                p.coeff(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
        UniPoly<ExtendedScalar> sh = UniPoly<ExtendedScalar>(p.u(), std::move(col)).shifted(offset);
        for (long i = 0; i <= sh.degree(); ++i)
            out.set_coeff(static_cast<std::size_t>(i), static_cast<std::size_t>(j),
                          sh.coeff(static_cast<std::size_t>(i)));
    }
    return out;
}

} // namespace

AimState aim_init(const Potential &V, const AimConfig &cfg) {
    cfg.validate();
    const long work = cfg.effective_precision();
    const ReducedOde ode = reduce(V);
    const ExtendedScalar offset(cfg.x0);

    AimState st;
    st.n = 0;
    st.x0 = cfg.x0;
    st.trunc_budget = cfg.representation == AimRepresentation::TaylorTruncated ? cfg.max_iters : -1;
    BiPoly<ExtendedScalar> l0 =
        shift_u(BiPoly<ExtendedScalar>::from_uni(ode.lambda0, Var::X, Var::E), offset);
    BiPoly<ExtendedScalar> s0 = shift_u(ode.s0, offset);
    st.lambda0 = to_decimal(l0, work);
    st.s0 = to_decimal(s0, work);
    st.lambda = st.lambda0;
    st.s = st.s0;
    return st;
}

AimState aim_step(const AimState &state) {
    AimState next;
    next.n = state.n + 1;
    next.x0 = state.x0;
    next.lambda0 = state.lambda0;
    next.s0 = state.s0;
    next.lambda_prev = state.lambda;
    next.s_prev = state.s;

    long cap = -1;
    if (state.trunc_budget >= 0) {
        if (state.trunc_budget == 0)
            throw PrecisionExhaustion("aim_step: taylor truncation budget exhausted");
        next.trunc_budget = state.trunc_budget - 1;
        cap = next.trunc_budget;
    } else {
        next.trunc_budget = -1;
    }

    next.lambda = state.lambda.diff_u() + state.s +
                  BiPoly<BigDecimal>::mul_trunc(state.lambda0, state.lambda, cap);
    next.s = state.s.diff_u() + BiPoly<BigDecimal>::mul_trunc(state.s0, state.lambda, cap);
    if (cap >= 0) {
        next.lambda = next.lambda.truncated_u(cap);
        next.s = next.s.truncated_u(cap);
    }
    return next;
}

UniPoly<BigDecimal> aim_delta(const AimState &state, const BigDecimal &x0) {
    if (state.n < 1)
        throw std::invalid_argument("aim_delta: needs at least one iteration");
    const BigDecimal t = x0 - BigDecimal::from_rational(state.x0, x0.digits());
    if (state.trunc_budget >= 0 && !t.is_zero())
        throw std::invalid_argument("aim_delta: truncated states evaluate at x0 only");
    const UniPoly<BigDecimal> l_at = state.lambda.eval_u(t);
    const UniPoly<BigDecimal> s_at = state.s.eval_u(t);
    const UniPoly<BigDecimal> lp_at = state.lambda_prev.eval_u(t);
    const UniPoly<BigDecimal> sp_at = state.s_prev.eval_u(t);
    return s_at * lp_at - sp_at * l_at;
}

UniPoly<BigDecimal> aim_delta(const AimState &state) {
    const UniPoly<BigDecimal> l_at = state.lambda.row_poly(0);
    const UniPoly<BigDecimal> s_at = state.s.row_poly(0);
    const UniPoly<BigDecimal> lp_at = state.lambda_prev.row_poly(0);
    const UniPoly<BigDecimal> sp_at = state.s_prev.row_poly(0);
    if (state.n < 1)
        throw std::invalid_argument("aim_delta: needs at least one iteration");
    return s_at * lp_at - sp_at * l_at;
}

// ---------------------------------------------------------------------------
// eigenvalue driver
// ---------------------------------------------------------------------------

namespace {

struct Track {
    BigDecimal value;      // last raw estimate
    BigDecimal best_value; // accelerated estimate
    BigDecimal best_err;   // its error bound
    BigDecimal prev_delta; // |change| at the last genuine update
    std::vector<BigDecimal> distinct; // genuine estimate sequence
    std::vector<std::pair<long, BigDecimal>> history;
    long matches = 0;        // genuine (distinct-value) updates
    long stable_repeats = 0; // exact repeats at refinement resolution
    long last_seen = 0;
    bool seen_this_iter = false;
    bool converged = false;
    long converged_at = 0;
    long digits_agreed = 0;
};

long agreed_digits(const BigDecimal &diff, const BigDecimal &value) {
    if (diff.is_zero())
        return 1000;
    BigDecimal scale = value.abs();
    const BigDecimal one = BigDecimal::from_long(1);
    if (scale < one)
        scale = one;
    const double lg = std::log10(std::fabs((diff / scale).to_double()));
    if (!std::isfinite(lg))
        return 1000;
    return lg >= 0 ? 0 : static_cast<long>(-lg);
}

std::vector<BigDecimal> aitken_pass(const std::vector<BigDecimal> &s) {
    std::vector<BigDecimal> out;
    out.reserve(s.size() - 2);
    for (std::size_t i = 0; i + 2 < s.size(); ++i) {
        const BigDecimal d1 = s[i + 1] - s[i], d2 = s[i + 2] - s[i + 1];
        const BigDecimal den = d2 - d1;
        if (den.is_zero())
            out.push_back(s[i + 2]);
        else
            out.push_back(s[i + 2] - d2 * d2 / den);
    }
    return out;
}

// Iterated Aitken extrapolation of the tail of a track's estimate sequence;
// the error bound is the agreement between the last two accepted levels. The
// raw AIM approximants converge geometrically once settled, which iterated
// delta-squared turns into several extra digits per level; the early
// wandering phase is excluded.
void accelerate(Track &t) {
    t.best_value = t.value;
    t.best_err = t.prev_delta;
    if (t.distinct.size() < 4 || t.best_err.is_zero())
        return;
    constexpr std::size_t kTail = 12;
    std::vector<BigDecimal> cur;
    if (t.distinct.size() > kTail)
        cur.assign(t.distinct.end() - kTail, t.distinct.end());
    else
        cur = t.distinct;
    for (int level = 0; level < 10 && cur.size() >= 3; ++level) {
        std::vector<BigDecimal> next = aitken_pass(cur);
        const BigDecimal est = next.back();
        const BigDecimal err = (est - t.best_value).abs();
        if (!(err < t.best_err))
            break;
        t.best_value = est;
        t.best_err = err;
        cur = std::move(next);
    }
}

} // namespace

AimResult aim_eigenvalues(const Potential &V, const AimConfig &cfg, long count) {
    if (count < 1)
        throw std::invalid_argument("aim_eigenvalues: count must be >= 1");
    cfg.validate();
    const long work = cfg.effective_precision();
    const BigDecimal tol = cfg.effective_tol();
    const long root_digits = std::min(work - 10, cfg.digits + 15);

    AimState state = aim_init(V, cfg);
    std::vector<Track> tracks;
    AimResult result;
    bool any_root_ever = false;

    const BigDecimal window_lo = cfg.window_low, window_hi = cfg.window_high;

    for (long iter = 1; iter <= cfg.max_iters; ++iter) {
        state = aim_step(state);
        UniPoly<BigDecimal> delta = aim_delta(state);
        result.iterations_used = iter;
        if (delta.is_zero())
            continue; // exact termination certificate; roots carry over

        // normalize to tame the dynamic range before isolation
        BigDecimal max_c = BigDecimal::from_long(0, work);
        for (const auto &c : delta.coeffs()) {
            BigDecimal m = c.abs();
            if (m > max_c)
                max_c = m;
        }
        delta = delta * (BigDecimal::from_long(1, work) / max_c);

        std::vector<RealRoot> roots;
        try {
            roots = real_roots(delta, window_lo, window_hi, root_digits);
        } catch (const PrecisionExhaustion &) {
            break;
        }
        if (!roots.empty())
            any_root_ever = true;

        for (Track &t : tracks)
            t.seen_this_iter = false;

        // With x0 = 0 and an even potential, delta_n and delta_{n+1} share a
        // parity factor, so the same root value reappears verbatim and each
        // approximant family surfaces on a period-4 cycle. Matching therefore
        // uses a modest radius (to keep the interleaved families apart),
        // tolerates appearance gaps, and ignores bit-level repeats when
        // judging convergence.
        const BigDecimal resolution = BigDecimal::pow10(-root_digits + 3, work);
        for (const RealRoot &r : roots) {
            Track *best = nullptr;
            BigDecimal best_dist;
            for (Track &t : tracks) {
                if (t.seen_this_iter)
                    continue;
                const BigDecimal dist = (t.value - r.value).abs();
                if (!best || dist < best_dist) {
                    best = &t;
                    best_dist = dist;
                }
            }
            BigDecimal scale = r.value.abs();
            const BigDecimal one = BigDecimal::from_long(1, work);
            if (scale < one)
                scale = one;
            const BigDecimal radius = scale * BigDecimal::from_rational(rational(1, 20), work) +
                                      BigDecimal::from_rational(rational(1, 8), work);
            if (best && best_dist < radius) {
                best->seen_this_iter = true;
                best->last_seen = iter;
                BigDecimal accel_step = best->prev_delta;
                if (best_dist < scale * resolution) {
                    best->stable_repeats += 1;
                } else {
                    const BigDecimal prev_best = best->best_value;
                    best->prev_delta = best_dist;
                    best->value = r.value;
                    best->distinct.push_back(r.value);
                    best->matches += 1;
                    best->stable_repeats = 0;
                    accelerate(*best);
                    accel_step = (best->best_value - prev_best).abs();
                }
                const long appearances = best->matches + best->stable_repeats;
                if (appearances >= 3)
                    best->history.emplace_back(iter, r.value);
                // converged only when the accelerated estimate itself is
                // stable across updates and its level-agreement bound is met
                const bool tol_hit = best->matches >= 6 && appearances >= 6 &&
                                     best->best_err < tol * scale &&
                                     accel_step < tol * scale;
                const bool pinned = appearances >= 3 && best->stable_repeats >= 6;
                if ((tol_hit || pinned) && !best->converged) {
                    best->converged = true;
                    best->converged_at = iter;
                }
                if (tol_hit || pinned) {
                    // the level-agreement bound tends to flatter the true
                    // error; report two digits fewer
                    const long haircut =
                        pinned ? root_digits - 3
                               : agreed_digits(best->best_err, best->best_value) - 2;
                    best->digits_agreed = haircut > 0 ? haircut : 0;
                }
            } else {
                Track t;
                t.value = r.value;
                t.best_value = r.value;
                t.distinct.push_back(r.value);
                t.matches = 1;
                t.last_seen = iter;
                t.seen_this_iter = true;
                tracks.push_back(std::move(t));
            }
        }
        // drop tracks not seen for several iterations unless converged
        std::vector<Track> kept;
        for (Track &t : tracks)
            if (t.converged || iter - t.last_seen <= 3)
                kept.push_back(std::move(t));
        tracks = std::move(kept);

        std::sort(tracks.begin(), tracks.end(),
                  [](const Track &x, const Track &y) { return x.value < y.value; });

        // cluster established tracks (the two approximant families meet at
        // the same eigenvalue); stop once the lowest `count` clusters have
        // all converged
        long clusters_converged = 0, clusters_seen = 0;
        bool blocked = false;
        std::optional<BigDecimal> cluster_value;
        bool cluster_ok = false;
        auto flush = [&]() {
            if (!cluster_value)
                return;
            ++clusters_seen;
            if (cluster_ok && clusters_converged == clusters_seen - 1)
                ++clusters_converged;
            else if (!cluster_ok)
                blocked = true;
        };
        for (const Track &t : tracks) {
            if (t.matches + t.stable_repeats < 3)
                continue;
            BigDecimal scale = t.value.abs();
            const BigDecimal one = BigDecimal::from_long(1, work);
            if (scale < one)
                scale = one;
            const BigDecimal near = scale * BigDecimal::from_rational(rational(1, 20), work) +
                                    BigDecimal::from_rational(rational(1, 8), work);
            if (cluster_value && (t.value - *cluster_value).abs() < near) {
                cluster_ok = cluster_ok || t.converged;
            } else {
                flush();
                if (blocked || clusters_seen >= count)
                    break;
                cluster_value = t.value;
                cluster_ok = t.converged;
            }
        }
        flush();
        if (!blocked && clusters_converged >= count)
            break;
    }

    std::sort(tracks.begin(), tracks.end(),
              [](const Track &x, const Track &y) { return x.value < y.value; });
    // emit one eigenvalue per cluster, preferring the converged member
    std::size_t i = 0;
    while (i < tracks.size() && static_cast<long>(result.eigenvalues.size()) < count) {
        if (tracks[i].matches + tracks[i].stable_repeats < 3) {
            ++i;
            continue;
        }
        BigDecimal scale = tracks[i].value.abs();
        const BigDecimal one = BigDecimal::from_long(1, work);
        if (scale < one)
            scale = one;
        const BigDecimal near = scale * BigDecimal::from_rational(rational(1, 20), work) +
                                BigDecimal::from_rational(rational(1, 8), work);
        std::size_t best = i, j = i + 1;
        for (; j < tracks.size(); ++j) {
            if (tracks[j].matches + tracks[j].stable_repeats < 3)
                continue;
            if ((tracks[j].value - tracks[i].value).abs() >= near)
                break;
            if ((tracks[j].converged && !tracks[best].converged) ||
                (tracks[j].converged == tracks[best].converged &&
                 tracks[j].digits_agreed > tracks[best].digits_agreed))
                best = j;
        }
        const Track &t = tracks[best];
        if (!t.history.empty()) {
            AimEigenvalue ev;
            ev.value = t.matches >= 4 ? t.best_value : t.value;
            ev.trace.estimates = t.history;
            ev.trace.converged = t.converged;
            ev.trace.digits_agreed = t.digits_agreed;
            ev.trace.iterations = t.converged ? t.converged_at : result.iterations_used;
            result.eigenvalues.push_back(std::move(ev));
        }
        i = j;
    }
    result.window_empty = !any_root_ever;
    result.all_converged =
        static_cast<long>(result.eigenvalues.size()) == count &&
        std::all_of(result.eigenvalues.begin(), result.eigenvalues.end(),
                    [](const AimEigenvalue &e) { return e.trace.converged; });
    return result;
}

// ---------------------------------------------------------------------------
// certificates
// ---------------------------------------------------------------------------

Certificate qes_certificate(const Potential &V, const ExtendedScalar &E, long depth) {
    if (depth < 1)
        throw std::invalid_argument("qes_certificate: depth must be >= 1");
    const ReducedOde ode = reduce(V);
    const UniPoly<ExtendedScalar> lambda0 = ode.lambda0;
    const UniPoly<ExtendedScalar> s0 = ode.s0.eval_v(E);

    Certificate cert;
    UniPoly<ExtendedScalar> lambda = lambda0, s = s0;
    for (long m = 1; m <= depth; ++m) {
        UniPoly<ExtendedScalar> lambda_next = lambda.derivative() + s + lambda0 * lambda;
        UniPoly<ExtendedScalar> s_next = s.derivative() + s0 * lambda;
        const UniPoly<ExtendedScalar> delta = s_next * lambda - s * lambda_next;
        if (delta.is_zero()) {
            cert.certified = true;
            cert.witness = m;
            return cert;
        }
        lambda = std::move(lambda_next);
        s = std::move(s_next);
    }
    return cert;
}

Certificate qes_certificate_decimal(const Rational &a, const Rational &b, const Rational &c,
                                    const BigDecimal &d, const BigDecimal &e, const BigDecimal &E,
                                    long depth, long digits, const BigDecimal &threshold) {
    if (depth < 1)
        throw std::invalid_argument("qes_certificate: depth must be >= 1");
    const long work = digits;
    // assemble lambda0, s0 with decimal d, e, E
    const ReducedOde base =
        reduce_extended(a, ExtendedScalar(b), ExtendedScalar(c), ExtendedScalar(0),
                        ExtendedScalar(0));
    UniPoly<BigDecimal> lambda0 = to_decimal(base.lambda0, work);
    UniPoly<BigDecimal> s0 = to_decimal(base.s0.eval_v(ExtendedScalar(0)), work);
    s0.set_coeff(0, s0.coeff(0) - E);
    s0.set_coeff(2, s0.coeff(2) + e);
    s0.set_coeff(4, s0.coeff(4) + d); // the d and e dependences are +d x^4, +e x^2

    auto max_abs = [](const UniPoly<BigDecimal> &p) {
        BigDecimal m = BigDecimal::from_long(0);
        for (const auto &cc : p.coeffs()) {
            BigDecimal v = cc.abs();
            if (v > m)
                m = v;
        }
        return m;
    };

    Certificate cert;
    UniPoly<BigDecimal> lambda = lambda0, s = s0;
    for (long m = 1; m <= depth; ++m) {
        UniPoly<BigDecimal> lambda_next = lambda.derivative() + s + lambda0 * lambda;
        UniPoly<BigDecimal> s_next = s.derivative() + s0 * lambda;
        const UniPoly<BigDecimal> left = s_next * lambda;
        const UniPoly<BigDecimal> right = s * lambda_next;
        const UniPoly<BigDecimal> delta = left - right;
        BigDecimal scale = max_abs(left) + max_abs(right) + BigDecimal::from_long(1, work);
        if (max_abs(delta) < threshold * scale) {
            cert.certified = true;
            cert.witness = m;
            return cert;
        }
        lambda = std::move(lambda_next);
        s = std::move(s_next);
    }
    return cert;
}

} // namespace decatic
