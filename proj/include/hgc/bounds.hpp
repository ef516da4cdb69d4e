#pragma once

// Analytic bounds for random greedy coloring.
//
// Quantities with exponents of order n or D^r are carried as logarithms.
// Parameters n and D are doubles so that the asymptotic regime (n up to
// ~1e300) can be evaluated; integer-only routines say so.

#include <optional>

namespace hgc::bounds {

/// Symbols of the edge-count analysis: an n-uniform hypergraph with
/// k * 2^(n-1) edges (r = 2) or k * r^(n-2) edges (general r).
struct AnalysisParams {
    double n = 2;
    int r = 2;
    double k = 1;
    double p = 0.5;
    double c = 1;

    /// Throws invalid_input unless n >= 2, r >= 2, k > 0, 0 < p < 1, c > 0.
    void validate() const;
};

// ---------------------------------------------------------------- 2-coloring

/// k (1-p)^n + k^2 p. The first term is evaluated as exp(log k + n log1p(-p)).
double rs_bound(double k, double p, double n);

struct PChoice {
    std::optional<double> closed_form_p;      ///< ln(n/k)/n, absent unless it lies in (0,1)
    std::optional<double> closed_form_value;  ///< rs_bound at closed_form_p
    double numeric_p = 0;                     ///< golden-section minimizer over (0,1)
    double numeric_value = 0;
    double best_p = 0;                        ///< whichever of the two gives the smaller bound
    double best_value = 0;
};

/// Minimize rs_bound over p. The search runs on log p, where the objective is
/// still unimodal, so it resolves minimizers near 0 for huge n.
PChoice optimize_p(double k, double n);

/// Largest k (relative tolerance 1e-9) with min_p rs_bound(k, p, n) < 1.
double max_k_2col(double n);

/// k_n = c sqrt(n / ln n) and p_n = ln(n / k_n) / n.
double reference_k(double c, double n);
double reference_p(double c, double n);

/// integral over [lo, hi] of x^(n-1) (1-x)^(n-1) dx by adaptive Gauss-Kronrod
/// (7/15 points, relative tolerance 1e-12).
double pair_conflict_probability(unsigned n, double lo, double hi);

/// Same integral through the incomplete Beta function B(n,n) [I_hi - I_lo].
double pair_conflict_probability_closed_form(unsigned n, double lo, double hi);

// ---------------------------------------------------------------- r-coloring

/// p = 2 ln(n) / n, the interval parameter used for r-coloring.
double default_rcol_p(double n);

/// n ((1-p)/r)^(n-1): bound on the probability that a fixed edge is short.
double log_short_edge_probability_bound(double n, int r, double p);

/// p^(r-1) r^(-r(n-2)): bound on the probability that a fixed r-chain is
/// conflicting while none of its edges is short.
double log_chain_conflict_probability_bound(double n, int r, double p);
double chain_conflict_probability_bound(double n, int r, double p);

/// k r^(n-2) n ((1-p)/r)^(n-1).
double log_expected_short_edges(double k, double n, int r, double p);
double expected_short_edges(double k, double n, int r, double p);

/// Exact P(range of n iid uniforms < L) = n L^(n-1) - (n-1) L^n.
double prob_edge_short_exact(unsigned n, double L);

/// (2/r!) (k r^(n-2))^r p^(r-1) r^(-r(n-2)) = (2/r!) k^r p^(r-1).
double log_expected_conflicting_chains(double k, double n, int r, double p);
double expected_conflicting_chains(double k, double n, int r, double p);

/// Largest k with expected_short_edges + expected_conflicting_chains < 1,
/// at p = default_rcol_p(n) unless overridden. Requires n >= 3.
double max_k_rcol(double n, int r, std::optional<double> p = std::nullopt);

// ---------------------------------------------------------------- local lemma

/// A weight w in [0,1) kept as log w and log(-log(1-w)), so that
/// (1-w)^C = exp(-exp(log C + log_neg_log1m)) never forms C or w directly.
struct LogWeight {
    double log_w;
    double log_neg_log1m;

    static LogWeight from_value(double w);
    /// w = 1 - exp(-u) with u = exp(log_u).
    static LogWeight from_exponent(double log_u);
    double value() const;
};

struct LllCheck {
    bool feasible = false;
    double log_slack_short = 0; ///< log RHS_1 - log P1
    double log_slack_chain = 0; ///< log RHS_2 - log P2
    double min_slack() const { return log_slack_short < log_slack_chain ? log_slack_short : log_slack_chain; }
};

/// P1 <= x (1-x)^D (1-y)^(r D^r) and P2 <= y (1-x)^(rD) (1-y)^(r^2 D^r).
/// Throws numeric_range_error if r^2 D^r is not representable as a double.
LllCheck lll_feasible(double P1, double P2, double D, int r, double x, double y);

/// Log-space form; never overflows.
LllCheck lll_feasible_log(double log_P1, double log_P2, double log_D, int r, LogWeight x, LogWeight y);

/// Weights x = 1 - e^(-a/D) and y = 1 - e^(-b/(r D^r)).
LogWeight lll_x(double a, double log_D);
LogWeight lll_y(double b, double log_D, int r);

/// Parameters and certificate of the local-lemma search.
struct LllParams {
    double n = 0;
    int r = 2;
    double p = 0;
    double log_P1 = 0;
    double log_P2 = 0;
    double log_D = 0;     ///< natural log of the certified degree
    double D = 0;         ///< exp(log_D); +inf when not representable
    double a = 0;
    double b = 0;
    LogWeight x{};
    LogWeight y{};
    LllCheck check{};
};

/// Largest D (bisection on log D) for which a grid over a, b in {2^-6..2^4}
/// refined by coordinate descent makes lll_feasible_log hold with positive
/// slack. Uses the per-edge and per-chain bounds at p = default_rcol_p(n)
/// unless overridden. Requires n >= 3, r >= 2. Throws numeric_range_error if
/// not even D = 1 can be certified.
LllParams max_degree_lll(double n, int r, std::optional<double> p = std::nullopt);

/// Best min-slack over (a, b) at a fixed log D, and where it is attained.
struct AbSearch {
    double margin;
    double a;
    double b;
};
AbSearch search_ab(double log_P1, double log_P2, double log_D, int r);

} // namespace hgc::bounds
