#include "hgc/bounds.hpp"

#include "hgc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hgc::bounds {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kGolden = 0.6180339887498948482; // (sqrt(5) - 1) / 2

// Golden-section minimization of a unimodal f on [lo, hi].
template <class F>
double golden_min(F&& f, double lo, double hi, double tol) {
    double x1 = hi - kGolden * (hi - lo);
    double x2 = lo + kGolden * (hi - lo);
    double f1 = f(x1);
    double f2 = f(x2);
    while (hi - lo > tol) {
        // Ties move right: for small p the objective rounds to a constant
        // plateau, and the minimizer lies to its right.
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - kGolden * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + kGolden * (hi - lo);
            f2 = f(x2);
        }
    }
    return f1 <= f2 ? x1 : x2;
}

// Largest k with pred(k) true, assuming pred is monotone (true then false)
// and pred(k) holds for small k. Relative tolerance `tol`.
template <class Pred>
double largest_true(Pred&& pred, double start, double tol) {
    double lo = 0.0;
    double hi = start;
    while (pred(hi)) {
        lo = hi;
        hi *= 2.0;
        if (!std::isfinite(hi)) throw numeric_range_error("bracketing search overflowed");
    }
    if (lo == 0.0) {
        lo = hi;
        while (!pred(lo)) {
            hi = lo;
            lo /= 2.0;
            if (lo < std::numeric_limits<double>::min()) return 0.0;
        }
    }
    while (hi - lo > tol * std::max(1.0, lo)) {
        const double mid = 0.5 * (lo + hi);
        (pred(mid) ? lo : hi) = mid;
    }
    return lo;
}

double log1m_exp_neg(double log_u) {
    // log(1 - e^{-u}) for u = e^{log_u}
    const double u = std::exp(log_u);
    if (log_u < -20.0) return log_u - 0.5 * u;
    return std::log(-std::expm1(-u));
}

void require_rcol(double n, int r) {
    if (!(n >= 2.0)) throw invalid_input("n must be >= 2");
    if (r < 2) throw invalid_input("r must be >= 2");
}

} // namespace

void AnalysisParams::validate() const {
    if (!(n >= 2.0)) throw invalid_input("n must be >= 2");
    if (r < 2) throw invalid_input("r must be >= 2");
    if (!(k > 0.0)) throw invalid_input("k must be positive");
    if (!(p > 0.0 && p < 1.0)) throw invalid_input("p must lie in (0,1)");
    if (!(c > 0.0)) throw invalid_input("c must be positive");
}

double rs_bound(double k, double p, double n) {
    const double first = std::exp(std::log(k) + n * std::log1p(-p));
    return first + k * k * p;
}

PChoice optimize_p(double k, double n) {
    if (!(k > 0.0)) throw invalid_input("k must be positive");
    PChoice out;
    if (k < n) {
        const double p = std::log(n / k) / n;
        if (p > 0.0 && p < 1.0) {
            out.closed_form_p = p;
            out.closed_form_value = rs_bound(k, p, n);
        }
    }
    // unimodal in p (convex), hence in s = log p
    auto objective = [&](double s) { return rs_bound(k, std::exp(s), n); };
    const double s_lo = std::log(std::numeric_limits<double>::min());
    const double s = golden_min(objective, s_lo, 0.0, 1e-12);
    out.numeric_p = std::exp(s);
    out.numeric_value = rs_bound(k, out.numeric_p, n);

    out.best_p = out.numeric_p;
    out.best_value = out.numeric_value;
    if (out.closed_form_value && *out.closed_form_value < out.best_value) {
        out.best_p = *out.closed_form_p;
        out.best_value = *out.closed_form_value;
    }
    return out;
}

double max_k_2col(double n) {
    if (!(n >= 2.0)) throw invalid_input("n must be >= 2");
    const double start = std::max(1.0, std::sqrt(n / std::log(n)));
    return largest_true([&](double k) { return optimize_p(k, n).best_value < 1.0; }, start, 1e-9);
}

double reference_k(double c, double n) { return c * std::sqrt(n / std::log(n)); }

double reference_p(double c, double n) { return std::log(n / reference_k(c, n)) / n; }

double default_rcol_p(double n) { return 2.0 * std::log(n) / n; }

double log_short_edge_probability_bound(double n, int r, double p) {
    return std::log(n) + (n - 1.0) * (std::log1p(-p) - std::log(static_cast<double>(r)));
}

double log_chain_conflict_probability_bound(double n, int r, double p) {
    const double rr = r;
    return (rr - 1.0) * std::log(p) - rr * (n - 2.0) * std::log(rr);
}

double chain_conflict_probability_bound(double n, int r, double p) {
    return std::exp(log_chain_conflict_probability_bound(n, r, p));
}

double log_expected_short_edges(double k, double n, int r, double p) {
    // the r^(n-2) edge factor and r^-(n-1) cancel to 1/r; folding them first
    // avoids losing everything to cancellation at large n
    return std::log(k) - std::log(static_cast<double>(r)) + std::log(n) + (n - 1.0) * std::log1p(-p);
}

double expected_short_edges(double k, double n, int r, double p) {
    return std::exp(log_expected_short_edges(k, n, r, p));
}

double prob_edge_short_exact(unsigned n, double L) {
    if (n < 1) throw invalid_input("n must be >= 1");
    if (!(L >= 0.0 && L <= 1.0)) throw invalid_input("L must lie in [0,1]");
    const double nn = n;
    return std::pow(L, nn - 1.0) * (nn - (nn - 1.0) * L);
}

double log_expected_conflicting_chains(double k, double n, int r, double p) {
    (void)n; // the r^(n-2) factors cancel exactly
    const double rr = r;
    return std::log(2.0) - std::lgamma(rr + 1.0) + rr * std::log(k) + (rr - 1.0) * std::log(p);
}

double expected_conflicting_chains(double k, double n, int r, double p) {
    return std::exp(log_expected_conflicting_chains(k, n, r, p));
}

double max_k_rcol(double n, int r, std::optional<double> p_override) {
    require_rcol(n, r);
    if (!(n >= 3.0)) throw invalid_input("max_k_rcol needs n >= 3");
    const double p = p_override.value_or(default_rcol_p(n));
    if (!(p > 0.0 && p < 1.0)) throw invalid_input("p must lie in (0,1)");
    auto total = [&](double k) { return expected_short_edges(k, n, r, p) + expected_conflicting_chains(k, n, r, p); };
    const double start = std::max(1.0, std::pow(n / std::log(n), (r - 1.0) / r));
    return largest_true([&](double k) { return total(k) < 1.0; }, start, 1e-9);
}

// ---------------------------------------------------------------- local lemma

LogWeight LogWeight::from_value(double w) {
    if (!(w >= 0.0 && w < 1.0)) throw invalid_input("weight must lie in [0,1)");
    if (w == 0.0) return {-kInf, -kInf};
    return {std::log(w), std::log(-std::log1p(-w))};
}

LogWeight LogWeight::from_exponent(double log_u) {
    if (log_u == -kInf) return {-kInf, -kInf};
    return {log1m_exp_neg(log_u), log_u};
}

double LogWeight::value() const { return std::exp(log_w); }

LllCheck lll_feasible_log(double log_P1, double log_P2, double log_D, int r, LogWeight x, LogWeight y) {
    const double log_r = std::log(static_cast<double>(r));
    const double rr = r;
    // exp(-inf) terms vanish; a zero weight contributes log 0 = -inf
    const double rhs_short = x.log_w - std::exp(log_D + x.log_neg_log1m) -
                             std::exp(log_r + rr * log_D + y.log_neg_log1m);
    const double rhs_chain = y.log_w - std::exp(log_r + log_D + x.log_neg_log1m) -
                             std::exp(2.0 * log_r + rr * log_D + y.log_neg_log1m);
    auto slack = [](double rhs, double log_p) {
        if (log_p == -kInf) return kInf;
        return rhs - log_p;
    };
    LllCheck out;
    out.log_slack_short = slack(rhs_short, log_P1);
    out.log_slack_chain = slack(rhs_chain, log_P2);
    out.feasible = out.log_slack_short >= 0.0 && out.log_slack_chain >= 0.0;
    return out;
}

LllCheck lll_feasible(double P1, double P2, double D, int r, double x, double y) {
    if (!(P1 >= 0.0 && P1 <= 1.0 && P2 >= 0.0 && P2 <= 1.0)) throw invalid_input("probabilities must lie in [0,1]");
    if (!(D >= 0.0)) throw invalid_input("D must be non-negative");
    if (r < 2) throw invalid_input("r must be >= 2");
    const double log_D = std::log(D);
    const double log_scale = 2.0 * std::log(static_cast<double>(r)) + r * log_D;
    if (!std::isfinite(D) || log_scale >= std::log(std::numeric_limits<double>::max())) {
        throw numeric_range_error("r^2 D^r is not representable");
    }
    return lll_feasible_log(std::log(P1), std::log(P2), log_D, r, LogWeight::from_value(x), LogWeight::from_value(y));
}

LogWeight lll_x(double a, double log_D) { return LogWeight::from_exponent(std::log(a) - log_D); }

LogWeight lll_y(double b, double log_D, int r) {
    return LogWeight::from_exponent(std::log(b) - std::log(static_cast<double>(r)) - r * log_D);
}

AbSearch search_ab(double log_P1, double log_P2, double log_D, int r) {
    auto margin = [&](double a, double b) {
        return lll_feasible_log(log_P1, log_P2, log_D, r, lll_x(a, log_D), lll_y(b, log_D, r)).min_slack();
    };
    AbSearch best{-kInf, 1.0, 1.0};
    for (int i = -6; i <= 4; ++i) {
        for (int j = -6; j <= 4; ++j) {
            const double a = std::ldexp(1.0, i);
            const double b = std::ldexp(1.0, j);
            const double m = margin(a, b);
            if (m > best.margin) best = {m, a, b};
        }
    }
    // coordinate descent with multiplicative steps
    constexpr double lo_bound = 0x1p-40;
    constexpr double hi_bound = 0x1p8;
    double step = 2.0;
    for (int iter = 0; iter < 400 && step > 1.0 + 1e-9; ++iter) {
        bool moved = false;
        for (auto [da, db] : {std::pair{step, 1.0}, {1.0 / step, 1.0}, {1.0, step}, {1.0, 1.0 / step}}) {
            const double a = best.a * da;
            const double b = best.b * db;
            if (a < lo_bound || a > hi_bound || b < lo_bound || b > hi_bound) continue;
            const double m = margin(a, b);
            if (m > best.margin) {
                best = {m, a, b};
                moved = true;
            }
        }
        if (!moved) step = std::sqrt(step);
    }
    return best;
}

LllParams max_degree_lll(double n, int r, std::optional<double> p_override) {
    require_rcol(n, r);
    if (!(n >= 3.0)) throw invalid_input("max_degree_lll needs n >= 3");
    LllParams out;
    out.n = n;
    out.r = r;
    out.p = p_override.value_or(default_rcol_p(n));
    if (!(out.p > 0.0 && out.p < 1.0)) throw invalid_input("p must lie in (0,1)");
    out.log_P1 = log_short_edge_probability_bound(n, r, out.p);
    out.log_P2 = log_chain_conflict_probability_bound(n, r, out.p);
    // bound probabilities at 1
    out.log_P1 = std::min(out.log_P1, 0.0);
    out.log_P2 = std::min(out.log_P2, 0.0);

    auto feasible = [&](double log_D) {
        const AbSearch s = search_ab(out.log_P1, out.log_P2, log_D, r);
        return s.margin > 0.0;
    };
    double lo = 0.0;
    if (!feasible(lo)) throw numeric_range_error("local lemma conditions fail already at D = 1");
    // y <= b/(r D^r) with b <= 2^8 makes the chain condition fail beyond this
    const double rr = r;
    double hi = (8.0 * std::log(2.0) - std::log(rr) - out.log_P2) / rr + 1.0;
    hi = std::max(hi, 1.0);
    while (feasible(hi)) hi *= 2.0;
    while (hi - lo > 1e-9 * std::max(1.0, lo)) {
        const double mid = 0.5 * (lo + hi);
        (feasible(mid) ? lo : hi) = mid;
    }
    const AbSearch s = search_ab(out.log_P1, out.log_P2, lo, r);
    out.log_D = lo;
    out.D = std::exp(lo);
    out.a = s.a;
    out.b = s.b;
    out.x = lll_x(s.a, lo);
    out.y = lll_y(s.b, lo, r);
    out.check = lll_feasible_log(out.log_P1, out.log_P2, lo, r, out.x, out.y);
    return out;
}

} // namespace hgc::bounds
