#include "hgc/bounds.hpp"
#include "hgc/errors.hpp"
#include "hgc/kernels.hpp"

#include <boost/math/special_functions/beta.hpp>

#include <array>
#include <cmath>

namespace hgc::bounds {
namespace {

// Gauss-Kronrod 7/15 nodes on [-1,1] (positive half, centre last).
constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for the odd-indexed Kronrod nodes (1, 3, 5) and the centre.
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double kronrod;
    double gauss;
};

Panel gk15(unsigned exponent, double lo, double hi) {
    const double centre = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    std::array<double, 15> xs{};
    for (std::size_t i = 0; i < 7; ++i) {
        xs[2 * i] = centre - half * kKronrodNodes[i];
        xs[2 * i + 1] = centre + half * kKronrodNodes[i];
    }
    xs[14] = centre;
    std::array<double, 15> fx{};
    kernels::beta_integrand(xs, exponent, fx);

    double k = kKronrodWeights[7] * fx[14];
    double g = kGaussWeights[3] * fx[14];
    for (std::size_t i = 0; i < 7; ++i) {
        const double pair = fx[2 * i] + fx[2 * i + 1];
        k += kKronrodWeights[i] * pair;
        if (i % 2 == 1) g += kGaussWeights[i / 2] * pair;
    }
    return {k * half, g * half};
}

double adaptive(unsigned exponent, double lo, double hi, double rel_tol, int depth) {
    const Panel panel = gk15(exponent, lo, hi);
    const double err = std::abs(panel.kronrod - panel.gauss);
    if (err <= rel_tol * std::abs(panel.kronrod) || panel.kronrod == 0.0 || depth >= 60) {
        return panel.kronrod;
    }
    const double mid = 0.5 * (lo + hi);
    return adaptive(exponent, lo, mid, rel_tol, depth + 1) + adaptive(exponent, mid, hi, rel_tol, depth + 1);
}

void require_interval(unsigned n, double lo, double hi) {
    if (n < 1) throw invalid_input("pair_conflict_probability needs n >= 1");
    if (!(0.0 <= lo && lo <= hi && hi <= 1.0)) throw invalid_input("need 0 <= lo <= hi <= 1");
}

} // namespace

double pair_conflict_probability(unsigned n, double lo, double hi) {
    require_interval(n, lo, hi);
    if (lo == hi) return 0.0;
    return adaptive(n - 1, lo, hi, 1e-12, 0);
}

double pair_conflict_probability_closed_form(unsigned n, double lo, double hi) {
    require_interval(n, lo, hi);
    const double a = n;
    const double whole = boost::math::beta(a, a);
    // stay on the side of 1/2 where the regularized function is small
    if (lo >= 0.5) {
        return whole * (boost::math::ibetac(a, a, lo) - boost::math::ibetac(a, a, hi));
    }
    if (hi <= 0.5) {
        return whole * (boost::math::ibeta(a, a, hi) - boost::math::ibeta(a, a, lo));
    }
    return whole * (boost::math::ibetac(a, a, 0.5) - boost::math::ibetac(a, a, hi) +
                    boost::math::ibeta(a, a, 0.5) - boost::math::ibeta(a, a, lo));
}

} // namespace hgc::bounds
