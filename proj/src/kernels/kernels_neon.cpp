#include "hgc/kernels.hpp"

#if defined(__aarch64__)
#include <arm_neon.h>
#define HGC_HAVE_NEON_KERNELS 1
#endif

namespace hgc::kernels::neon {

#ifdef HGC_HAVE_NEON_KERNELS

// NEON has no gather; lanes are loaded pairwise.
void uniform_edge_spans(std::span<const Vertex> flat, std::size_t n, std::span<const double> times,
                        std::span<double> out) {
    const std::size_t edges = out.size();
    std::size_t e = 0;
    for (; e + 2 <= edges; e += 2) {
        const Vertex* f0 = flat.data() + e * n;
        const Vertex* f1 = f0 + n;
        float64x2_t lo = {times[f0[0]], times[f1[0]]};
        float64x2_t hi = lo;
        for (std::size_t j = 1; j < n; ++j) {
            const float64x2_t v = {times[f0[j]], times[f1[j]]};
            lo = vminq_f64(lo, v);
            hi = vmaxq_f64(hi, v);
        }
        vst1q_f64(out.data() + e, vsubq_f64(hi, lo));
    }
    if (e < edges) scalar::uniform_edge_spans(flat.subspan(e * n), n, times, out.subspan(e));
}

void beta_integrand(std::span<const double> x, unsigned exponent, std::span<double> out) {
    const float64x2_t one = vdupq_n_f64(1.0);
    std::size_t i = 0;
    for (; i + 2 <= x.size(); i += 2) {
        const float64x2_t v = vld1q_f64(x.data() + i);
        float64x2_t base = vmulq_f64(v, vsubq_f64(one, v));
        float64x2_t acc = one;
        for (unsigned k = exponent; k != 0; k >>= 1) {
            if (k & 1u) acc = vmulq_f64(acc, base);
            base = vmulq_f64(base, base);
        }
        vst1q_f64(out.data() + i, acc);
    }
    if (i < x.size()) scalar::beta_integrand(x.subspan(i), exponent, out.subspan(i));
}

#else

void uniform_edge_spans(std::span<const Vertex> flat, std::size_t n, std::span<const double> times,
                        std::span<double> out) {
    scalar::uniform_edge_spans(flat, n, times, out);
}

void beta_integrand(std::span<const double> x, unsigned exponent, std::span<double> out) {
    scalar::beta_integrand(x, exponent, out);
}

#endif

} // namespace hgc::kernels::neon
