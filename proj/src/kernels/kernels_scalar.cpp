#include "hgc/kernels.hpp"

#include <algorithm>

namespace hgc::kernels::scalar {

void uniform_edge_spans(std::span<const Vertex> flat, std::size_t n, std::span<const double> times,
                        std::span<double> out) {
    for (std::size_t e = 0; e < out.size(); ++e) {
        const Vertex* f = flat.data() + e * n;
        double lo = times[f[0]];
        double hi = lo;
        for (std::size_t j = 1; j < n; ++j) {
            lo = std::min(lo, times[f[j]]);
            hi = std::max(hi, times[f[j]]);
        }
        out[e] = hi - lo;
    }
}

void beta_integrand(std::span<const double> x, unsigned exponent, std::span<double> out) {
    for (std::size_t i = 0; i < x.size(); ++i) {
        double base = x[i] * (1.0 - x[i]);
        double acc = 1.0;
        for (unsigned k = exponent; k != 0; k >>= 1) {
            if (k & 1u) acc *= base;
            base *= base;
        }
        out[i] = acc;
    }
}

} // namespace hgc::kernels::scalar
