#include "hgc/errors.hpp"
#include "hgc/kernels.hpp"

#include <atomic>
#include <climits>
#include <cstdlib>
#include <string>

namespace hgc::kernels {
namespace {

// -1: not yet resolved
std::atomic<int> forced{-1};

Isa detect() noexcept {
    if (const char* env = std::getenv("HGC_KERNELS")) {
        const std::string_view want(env);
        for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon}) {
            if (want == isa_name(isa) && isa_available(isa)) return isa;
        }
    }
    if (isa_available(Isa::avx2)) return Isa::avx2;
    if (isa_available(Isa::neon)) return Isa::neon;
    return Isa::scalar;
}

} // namespace

std::string_view isa_name(Isa isa) noexcept {
    switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
    }
    return "unknown";
}

bool isa_available(Isa isa) noexcept {
    switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2:
#if defined(__x86_64__) || defined(_M_X64)
        return __builtin_cpu_supports("avx2");
#else
        return false;
#endif
    case Isa::neon:
#if defined(__aarch64__)
        return true;
#else
        return false;
#endif
    }
    return false;
}

Isa active_isa() noexcept {
    int current = forced.load(std::memory_order_relaxed);
    if (current < 0) {
        current = static_cast<int>(detect());
        forced.store(current, std::memory_order_relaxed);
    }
    return static_cast<Isa>(current);
}

void force_isa(Isa isa) {
    if (!isa_available(isa)) throw invalid_input("kernel variant not available: " + std::string(isa_name(isa)));
    forced.store(static_cast<int>(isa), std::memory_order_relaxed);
}

void reset_isa() noexcept { forced.store(-1, std::memory_order_relaxed); }

void uniform_edge_spans(std::span<const Vertex> flat, std::size_t n, std::span<const double> times,
                        std::span<double> out) {
    if (n == 0 || out.empty()) {
        for (double& x : out) x = 0.0;
        return;
    }
    switch (active_isa()) {
    case Isa::avx2:
        // 32-bit gather indices
        if (times.size() <= static_cast<std::size_t>(INT_MAX) && n <= static_cast<std::size_t>(INT_MAX / 4)) {
            avx2::uniform_edge_spans(flat, n, times, out);
            return;
        }
        break;
    case Isa::neon: neon::uniform_edge_spans(flat, n, times, out); return;
    case Isa::scalar: break;
    }
    scalar::uniform_edge_spans(flat, n, times, out);
}

void beta_integrand(std::span<const double> x, unsigned exponent, std::span<double> out) {
    switch (active_isa()) {
    case Isa::avx2: avx2::beta_integrand(x, exponent, out); return;
    case Isa::neon: neon::beta_integrand(x, exponent, out); return;
    case Isa::scalar: break;
    }
    scalar::beta_integrand(x, exponent, out);
}

} // namespace hgc::kernels
