#include "hgc/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#define HGC_HAVE_AVX2_KERNELS 1
#endif

namespace hgc::kernels::avx2 {

#ifdef HGC_HAVE_AVX2_KERNELS

__attribute__((target("avx2"))) void uniform_edge_spans(std::span<const Vertex> flat, std::size_t n,
                                                        std::span<const double> times, std::span<double> out) {
    const std::size_t edges = out.size();
    const auto stride = static_cast<int>(n);
    const __m128i lane_offsets = _mm_setr_epi32(0, stride, 2 * stride, 3 * stride);
    const auto* base = reinterpret_cast<const int*>(flat.data());
    std::size_t e = 0;
    for (; e + 4 <= edges; e += 4) {
        const int* block = base + e * n;
        __m128i idx = _mm_i32gather_epi32(block, lane_offsets, 4);
        __m256d lo = _mm256_i32gather_pd(times.data(), idx, 8);
        __m256d hi = lo;
        for (std::size_t j = 1; j < n; ++j) {
            idx = _mm_i32gather_epi32(block + j, lane_offsets, 4);
            const __m256d v = _mm256_i32gather_pd(times.data(), idx, 8);
            lo = _mm256_min_pd(lo, v);
            hi = _mm256_max_pd(hi, v);
        }
        _mm256_storeu_pd(out.data() + e, _mm256_sub_pd(hi, lo));
    }
    if (e < edges) {
        scalar::uniform_edge_spans(flat.subspan(e * n), n, times, out.subspan(e));
    }
}

__attribute__((target("avx2"))) void beta_integrand(std::span<const double> x, unsigned exponent,
                                                    std::span<double> out) {
    const __m256d one = _mm256_set1_pd(1.0);
    std::size_t i = 0;
    for (; i + 4 <= x.size(); i += 4) {
        const __m256d v = _mm256_loadu_pd(x.data() + i);
        __m256d base = _mm256_mul_pd(v, _mm256_sub_pd(one, v));
        __m256d acc = one;
        for (unsigned k = exponent; k != 0; k >>= 1) {
            if (k & 1u) acc = _mm256_mul_pd(acc, base);
            base = _mm256_mul_pd(base, base);
        }
        _mm256_storeu_pd(out.data() + i, acc);
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

} // namespace hgc::kernels::avx2
