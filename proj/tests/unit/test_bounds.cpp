#include "hgc/bounds.hpp"
#include "hgc/errors.hpp"
#include "hgc/rng.hpp"
#include "hgc/workbench/report.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>

using namespace hgc;
using namespace hgc::bounds;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }

// x^(n-1)(1-x)^(n-1) integrated term by term from the binomial expansion.
double poly_integral(unsigned n, double lo, double hi) {
    double sum = 0;
    double binom = 1;
    for (unsigned j = 0; j < n; ++j) {
        const double e = n + j;
        sum += (j % 2 ? -1.0 : 1.0) * binom * (std::pow(hi, e) - std::pow(lo, e)) / e;
        binom = binom * (n - 1 - j) / (j + 1);
    }
    return sum;
}

double beta_nn(unsigned n) { return std::exp(2 * std::lgamma(n) - std::lgamma(2.0 * n)); }

// root of k^2 - k^3/4 = 1: the two-coloring bound at n = 2 minimized over p
// by hand (p = 1 - k/2).
double n2_root() {
    double lo = 0.5, hi = 2.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (mid * mid - mid * mid * mid / 4 < 1 ? lo : hi) = mid;
    }
    return lo;
}

} // namespace

TEST_CASE("parameter validation") {
    CHECK_NOTHROW(AnalysisParams{}.validate());
    CHECK_THROWS_AS((AnalysisParams{1, 2, 1, 0.5, 1}.validate()), invalid_input);
    CHECK_THROWS_AS((AnalysisParams{3, 1, 1, 0.5, 1}.validate()), invalid_input);
    CHECK_THROWS_AS((AnalysisParams{3, 2, 0, 0.5, 1}.validate()), invalid_input);
    CHECK_THROWS_AS((AnalysisParams{3, 2, 1, 1.0, 1}.validate()), invalid_input);
    CHECK_THROWS_AS((AnalysisParams{3, 2, 1, 0.5, 0}.validate()), invalid_input);
}

TEST_CASE("rs bound arithmetic") {
    CHECK(rs_bound(1, 0, 5) == doctest::Approx(1.0));
    CHECK(rs_bound(2, 0.5, 2) == doctest::Approx(2.5));
    Rng rng(1);
    for (int i = 0; i < 200; ++i) {
        const double k = 0.1 + 5 * rng.uniform01();
        const double p = rng.uniform01();
        const double n = 2 + static_cast<double>(rng.below(40));
        const double direct = k * std::pow(1 - p, n) + k * k * p;
        CHECK(rel(rs_bound(k, p, n), direct) < 1e-12);
        CHECK(rs_bound(k, p, n) >= k * k * p);
        CHECK(rs_bound(k, p, n) >= k * std::pow(1 - p, n) * (1 - 1e-12));
    }
}

TEST_CASE("two-coloring reference sequence at c = 1.4") {
    const double v4 = rs_bound(reference_k(1.4, 1e4), reference_p(1.4, 1e4), 1e4);
    const double v5 = rs_bound(reference_k(1.4, 1e5), reference_p(1.4, 1e5), 1e5);
    const double v6 = rs_bound(reference_k(1.4, 1e6), reference_p(1.4, 1e6), 1e6);
    CHECK(v4 > v5);
    CHECK(v5 > v6);
    // the limit c^2/2 = 0.98 is approached only slowly: 1.26 at n = 1e6
    CHECK(v6 == doctest::Approx(1.2604).epsilon(1e-3));
    const double far = rs_bound(reference_k(1.4, 1e300), reference_p(1.4, 1e300), 1e300);
    CHECK(far == doctest::Approx(0.98).epsilon(0.015));
}

TEST_CASE("optimize_p") {
    Rng rng(2);
    for (int i = 0; i < 100; ++i) {
        const double n = 2 + static_cast<double>(rng.below(2000));
        const double k = 0.05 + 30 * rng.uniform01();
        const auto c = optimize_p(k, n);
        CHECK(c.numeric_p > 0);
        CHECK(c.numeric_p < 1);
        if (c.closed_form_value) CHECK(c.numeric_value <= *c.closed_form_value * (1 + 1e-12));
        CHECK(c.best_value <= c.numeric_value);
        // no point of a coarse grid beats the optimum
        for (int g = 1; g < 1000; ++g) {
            CHECK(c.numeric_value <= rs_bound(k, g / 1000.0, n) * (1 + 1e-12));
        }
    }
    SUBCASE("stationarity at n = 100, k = 5") {
        const auto c = optimize_p(5, 100);
        const double p = c.numeric_p;
        const double deriv = -5.0 * 100 * std::pow(1 - p, 99) + 25.0;
        CHECK(std::abs(deriv) < 1e-4);
        const double h = 1e-6;
        const double fd = (rs_bound(5, p + h, 100) - rs_bound(5, p - h, 100)) / (2 * h);
        CHECK(std::abs(fd) < 1e-4);
    }
    SUBCASE("closed form absent when k >= n") {
        const auto c = optimize_p(10, 5);
        CHECK_FALSE(c.closed_form_p.has_value());
        CHECK(c.best_p == c.numeric_p);
    }
    SUBCASE("bound at the closed-form p for c = 1.4, n = 1e6") {
        const auto c = optimize_p(reference_k(1.4, 1e6), 1e6);
        REQUIRE(c.closed_form_value.has_value());
        CHECK(*c.closed_form_value == doctest::Approx(1.2604).epsilon(1e-3));
    }
}

TEST_CASE("max_k_2col") {
    CHECK(max_k_2col(2) == doctest::Approx(n2_root()).epsilon(1e-8));
    CHECK(max_k_2col(2) >= 1.0);
    double prev = 0;
    for (double n = 10; n <= 1000; n += 10) {
        const double k = max_k_2col(n);
        CHECK(k >= prev);
        prev = k;
        // defining inequality holds at k and fails just above
        CHECK(optimize_p(k, n).best_value < 1.0);
        CHECK(optimize_p(k * (1 + 1e-6), n).best_value >= 1.0);
    }
    for (double n : {1e3, 1e4, 1e5, 1e6}) {
        const double ratio = max_k_2col(n) / std::sqrt(n / std::log(n));
        CHECK(ratio >= 1.0);
        CHECK(ratio <= 1.5);
    }
    // the ratio climbs to sqrt(2) only at astronomic n
    CHECK(max_k_2col(1e6) / std::sqrt(1e6 / std::log(1e6)) < 1.4);
    const double far = max_k_2col(1e300) / std::sqrt(1e300 / std::log(1e300));
    CHECK(far > 1.4);
    CHECK(far < std::sqrt(2.0));
}

TEST_CASE("pair conflict probability") {
    CHECK(pair_conflict_probability(1, 0, 1) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(pair_conflict_probability(2, 0, 1) == doctest::Approx(1.0 / 6).epsilon(1e-14));
    for (unsigned n = 1; n <= 20; ++n) {
        CHECK(rel(pair_conflict_probability(n, 0, 1), beta_nn(n)) < 1e-10);
        CHECK(rel(pair_conflict_probability_closed_form(n, 0, 1), beta_nn(n)) < 1e-10);
    }
    Rng rng(3);
    for (int i = 0; i < 100; ++i) {
        const auto n = static_cast<unsigned>(1 + rng.below(50));
        double lo = rng.uniform01(), hi = rng.uniform01();
        if (lo > hi) std::swap(lo, hi);
        const double q = pair_conflict_probability(n, lo, hi);
        const double c = pair_conflict_probability_closed_form(n, lo, hi);
        CHECK(std::abs(q - c) <= 1e-9 * std::max(std::abs(c), 1e-300) + 1e-300);
        if (n <= 8) CHECK(std::abs(q - poly_integral(n, lo, hi)) < 1e-12);
        const double p = rng.uniform01();
        CHECK(pair_conflict_probability(n, (1 - p) / 2, (1 + p) / 2) <= p);
    }
    CHECK(pair_conflict_probability(5, 0.3, 0.3) == 0.0);
    CHECK_THROWS_AS(pair_conflict_probability(3, 0.5, 0.4), invalid_input);
    CHECK_THROWS_AS(pair_conflict_probability(3, -0.1, 0.4), invalid_input);
}

TEST_CASE("short-edge expectation") {
    CHECK(expected_short_edges(1, 2, 2, 0) == doctest::Approx(1.0));
    for (double n : {1e3, 1e4, 1e5, 1e6}) {
        for (int r : {2, 3}) {
            const double k = 3.0;
            const double scaled = expected_short_edges(k, n, r, default_rcol_p(n)) * r * n / k;
            CHECK(std::abs(scaled - 1.0) < 0.1);
        }
    }
    CHECK(expected_short_edges(2, 20, 3, 0.2) < expected_short_edges(2, 20, 3, 0.1));
    // log form against direct evaluation in the representable range
    for (double n = 2; n <= 30; ++n) {
        for (int r : {2, 3, 4}) {
            const double p = 0.3;
            const double direct = 1.5 * std::pow(r, n - 2) * n * std::pow((1 - p) / r, n - 1);
            CHECK(rel(expected_short_edges(1.5, n, r, p), direct) < 1e-10);
            CHECK(rel(std::exp(log_short_edge_probability_bound(n, r, p)), n * std::pow((1 - p) / r, n - 1)) < 1e-10);
            CHECK(rel(chain_conflict_probability_bound(n, r, p), std::pow(p, r - 1) * std::pow(r, -r * (n - 2))) < 1e-10);
        }
    }
}

TEST_CASE("exact short-edge probability") {
    CHECK(prob_edge_short_exact(1, 0.3) == 1.0);
    CHECK(prob_edge_short_exact(2, 0.5) == doctest::Approx(0.75));
    for (unsigned n = 1; n <= 12; ++n) {
        for (double L = 0; L <= 1.0; L += 0.05) CHECK(prob_edge_short_exact(n, L) <= n * std::pow(L, n - 1.0) + 1e-15);
    }
    // uniform pairs: range below 1/2
    Rng rng(4);
    const std::uint64_t trials = 1'000'000;
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < trials; ++i) hits += std::abs(rng.uniform01() - rng.uniform01()) < 0.5 ? 1 : 0;
    CHECK(workbench::wilson_interval(hits, trials, workbench::kZ99).contains(prob_edge_short_exact(2, 0.5)));
    CHECK_THROWS_AS(prob_edge_short_exact(0, 0.5), invalid_input);
    CHECK_THROWS_AS(prob_edge_short_exact(3, 1.5), invalid_input);
}

TEST_CASE("conflicting-chain expectation") {
    CHECK(expected_conflicting_chains(1, 10, 3, 0.1) == doctest::Approx(1.0 / 300));
    for (double k : {0.5, 2.0, 7.0}) {
        CHECK(expected_conflicting_chains(k, 50, 2, 0.2) == doctest::Approx(k * k * 0.2).epsilon(1e-12));
    }
    // the n-dependence cancels: same value for any n
    CHECK(expected_conflicting_chains(3, 10, 4, 0.1) == doctest::Approx(expected_conflicting_chains(3, 1e6, 4, 0.1)));
}

TEST_CASE("max_k_rcol") {
    for (int r : {2, 3, 4}) {
        double prev = 0;
        for (double n : {10.0, 30.0, 100.0, 300.0, 1e3, 1e4, 1e5, 1e6, 1e10, 1e50}) {
            const double k = max_k_rcol(n, r);
            CHECK(k > prev);
            prev = k;
            const double p = default_rcol_p(n);
            CHECK(expected_short_edges(k, n, r, p) + expected_conflicting_chains(k, n, r, p) < 1.0);
        }
        // asymptotically (r!/2)^(1/r) (n / (2 ln n))^((r-1)/r)
        const double n = 1e300;
        const double rr = r;
        const double asym = std::pow(std::tgamma(rr + 1) / 2, 1 / rr) * std::pow(n / (2 * std::log(n)), (rr - 1) / rr);
        CHECK(max_k_rcol(n, r) / asym == doctest::Approx(1.0).epsilon(1e-3));
    }
    // against the plain reference (n / ln n)^((r-1)/r): only r = 4 clears it
    for (double n : {1e3, 1e6}) {
        CHECK(max_k_rcol(n, 4) >= std::pow(n / std::log(n), 0.75));
        CHECK(max_k_rcol(n, 2) < std::pow(n / std::log(n), 0.5));
    }
    for (double n : {100.0, 1e3, 1e4, 1e5}) {
        const double ratio = max_k_rcol(n, 2) / max_k_2col(n);
        CHECK(ratio > 0.25);
        CHECK(ratio < 4.0);
    }
    CHECK_THROWS_AS(max_k_rcol(2, 2), invalid_input);
    CHECK(max_k_rcol(100, 3, 0.2) > 0);
}

TEST_CASE("local-lemma feasibility") {
    CHECK(lll_feasible(0, 0, 10, 2, 0.1, 0.1).feasible);
    CHECK_FALSE(lll_feasible(1e-3, 0, 10, 2, 0, 0).feasible);
    CHECK_THROWS_AS(lll_feasible(0.1, 0.1, 1e200, 2, 0.1, 0.1), numeric_range_error);
    CHECK_THROWS_AS(lll_feasible(1.5, 0.1, 10, 2, 0.1, 0.1), invalid_input);

    Rng rng(5);
    for (int i = 0; i < 300; ++i) {
        const double D = 1 + static_cast<double>(rng.below(1000));
        const int r = 2 + static_cast<int>(rng.below(3));
        if (r * std::log(D) > 200) continue;
        const double x = 0.5 * rng.uniform01(), y = 0.5 * rng.uniform01();
        const double P1 = rng.uniform01() * 1e-3, P2 = rng.uniform01() * 1e-6;
        const double rhs1 = x * std::pow(1 - x, D) * std::pow(1 - y, r * std::pow(D, r));
        const double rhs2 = y * std::pow(1 - x, r * D) * std::pow(1 - y, r * r * std::pow(D, r));
        const auto c = lll_feasible(P1, P2, D, r, x, y);
        if (rhs1 > 1e-300 && rhs2 > 1e-300) {
            CHECK(std::abs(c.log_slack_short - std::log(rhs1 / P1)) < 1e-10 * std::max(1.0, std::abs(std::log(rhs1))));
            CHECK(std::abs(c.log_slack_chain - std::log(rhs2 / P2)) < 1e-10 * std::max(1.0, std::abs(std::log(rhs2))));
            CHECK(c.feasible == (P1 <= rhs1 && P2 <= rhs2));
        }
    }
}

TEST_CASE("weights from exponents") {
    for (double u : {1e-30, 1e-8, 0.01, 0.5, 3.0, 40.0}) {
        const auto w = LogWeight::from_exponent(std::log(u));
        CHECK(rel(w.value(), -std::expm1(-u)) < 1e-12);
        CHECK(rel(std::exp(w.log_neg_log1m), u) < 1e-12);
    }
    const auto z = LogWeight::from_value(0);
    CHECK(z.value() == 0.0);
    CHECK_THROWS_AS(LogWeight::from_value(1.0), invalid_input);
}

TEST_CASE("parametrized weights give x e^-(a+b) exactly") {
    for (int r : {2, 3, 5}) {
        for (double log_D : {0.0, 1.0, 5.0, 50.0, 700.0, 1e4}) {
            for (double a : {0.01, 0.5, 3.0}) {
                for (double b : {0.02, 1.0}) {
                    const auto x = lll_x(a, log_D);
                    const auto y = lll_y(b, log_D, r);
                    // P = 1 makes the slack equal log RHS
                    const auto c = lll_feasible_log(0, 0, log_D, r, x, y);
                    CHECK(std::abs(c.log_slack_short - (x.log_w - (a + b))) < 1e-9);
                    CHECK(std::abs(c.log_slack_chain - (y.log_w - r * (a + b))) < 1e-9);
                }
            }
        }
    }
}

TEST_CASE("max_degree_lll") {
    for (int r : {2, 3}) {
        double band_lo = std::numeric_limits<double>::infinity(), band_hi = 0;
        for (double n = 50; n <= 500; n += 50) {
            const auto L = max_degree_lll(n, r);
            CHECK(L.check.feasible);
            CHECK(L.check.min_slack() > 0);
            const auto again = lll_feasible_log(L.log_P1, L.log_P2, L.log_D, r, lll_x(L.a, L.log_D), lll_y(L.b, L.log_D, r));
            CHECK(again.min_slack() > 0);
            // slightly larger D is not certified
            CHECK(search_ab(L.log_P1, L.log_P2, L.log_D + 1e-6, r).margin <= 0);
            const double rr = r;
            const double log_ref = (rr - 1) / rr * std::log(n / std::log(n)) + n * std::log(rr);
            const double ratio = std::exp(L.log_D - log_ref);
            band_lo = std::min(band_lo, ratio);
            band_hi = std::max(band_hi, ratio);
            // degree stays below the edge-count threshold times n
            const double log_count = std::log(max_k_rcol(n, r)) + (n - 2) * std::log(rr) + std::log(n);
            CHECK(L.log_D < log_count);
        }
        CHECK(band_hi / band_lo <= 4.0);
    }
    const auto big = max_degree_lll(1e5, 3);
    CHECK(std::isinf(big.D));
    CHECK(std::isfinite(big.log_D));
    CHECK_THROWS_AS(max_degree_lll(2, 2), invalid_input);
}
