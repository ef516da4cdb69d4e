#pragma once

// Data-parallel inner loops. Each kernel has a scalar reference and SIMD
// variants (AVX2 on x86-64, NEON on AArch64); the dispatching entry points
// pick one at runtime. Variants are required to agree bit-for-bit with the
// scalar reference.

#include "hgc/hypergraph.hpp"

#include <span>
#include <string_view>

namespace hgc::kernels {

enum class Isa { scalar, avx2, neon };

std::string_view isa_name(Isa isa) noexcept;

/// Whether the variant was compiled in and the running CPU supports it.
bool isa_available(Isa isa) noexcept;

/// Best available variant, unless overridden by force_isa() or by the
/// environment variable HGC_KERNELS=scalar|avx2|neon.
Isa active_isa() noexcept;

/// Override dispatch (tests, benchmarks). Throws invalid_input if unavailable.
void force_isa(Isa isa);
void reset_isa() noexcept;

/// out[e] = max - min of times over the n vertices flat[e*n .. e*n+n).
void uniform_edge_spans(std::span<const Vertex> flat, std::size_t n, std::span<const double> times,
                        std::span<double> out);

/// out[i] = (x[i] * (1 - x[i]))^exponent, by binary powering.
void beta_integrand(std::span<const double> x, unsigned exponent, std::span<double> out);

namespace scalar {
void uniform_edge_spans(std::span<const Vertex> flat, std::size_t n, std::span<const double> times,
                        std::span<double> out);
void beta_integrand(std::span<const double> x, unsigned exponent, std::span<double> out);
} // namespace scalar

namespace avx2 {
void uniform_edge_spans(std::span<const Vertex> flat, std::size_t n, std::span<const double> times,
                        std::span<double> out);
void beta_integrand(std::span<const double> x, unsigned exponent, std::span<double> out);
} // namespace avx2

namespace neon {
void uniform_edge_spans(std::span<const Vertex> flat, std::size_t n, std::span<const double> times,
                        std::span<double> out);
void beta_integrand(std::span<const double> x, unsigned exponent, std::span<double> out);
} // namespace neon

} // namespace hgc::kernels
