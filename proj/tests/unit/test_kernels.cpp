#include "hgc/conflicts.hpp"
#include "hgc/errors.hpp"
#include "hgc/greedy.hpp"
#include "hgc/kernels.hpp"
#include "hgc/rng.hpp"
#include "hgc/workbench/generators.hpp"

#include <doctest.h>

#include <cmath>
#include <cstring>
#include <vector>

using namespace hgc;
namespace k = hgc::kernels;

namespace {

bool bit_equal(const std::vector<double>& a, const std::vector<double>& b) {
    return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

using SpanFn = void (*)(std::span<const Vertex>, std::size_t, std::span<const double>, std::span<double>);
using BetaFn = void (*)(std::span<const double>, unsigned, std::span<double>);

std::vector<std::pair<k::Isa, std::pair<SpanFn, BetaFn>>> variants() {
    std::vector<std::pair<k::Isa, std::pair<SpanFn, BetaFn>>> out;
    if (k::isa_available(k::Isa::avx2)) out.push_back({k::Isa::avx2, {&k::avx2::uniform_edge_spans, &k::avx2::beta_integrand}});
    if (k::isa_available(k::Isa::neon)) out.push_back({k::Isa::neon, {&k::neon::uniform_edge_spans, &k::neon::beta_integrand}});
    return out;
}

} // namespace

TEST_CASE("scalar spans against a direct loop") {
    const auto h = workbench::gen_random_uniform(30, 5, 100, 1);
    const auto t = sample_birth_times(30, 2);
    std::vector<double> out(h.edge_count());
    k::scalar::uniform_edge_spans(h.flat_vertices(), 5, t.values(), out);
    for (EdgeId e = 0; e < h.edge_count(); ++e) CHECK(out[e] == edge_length(h.edge(e), t));
}

TEST_CASE("scalar beta integrand against pow") {
    std::vector<double> x{0.0, 0.1, 0.25, 0.5, 0.75, 0.999, 1.0};
    std::vector<double> out(x.size());
    for (unsigned e : {0u, 1u, 2u, 7u, 30u}) {
        k::scalar::beta_integrand(x, e, out);
        for (std::size_t i = 0; i < x.size(); ++i) {
            CHECK(out[i] == doctest::Approx(std::pow(x[i] * (1 - x[i]), e)).epsilon(1e-13));
        }
    }
}

TEST_CASE("SIMD variants agree bit for bit with scalar") {
    Rng rng(11);
    for (const auto& [isa, fns] : variants()) {
        CAPTURE(k::isa_name(isa));
        for (int round = 0; round < 50; ++round) {
            const std::size_t n = 2 + rng.below(9);
            const std::size_t m = n + 3 + rng.below(40);
            const std::size_t edges = rng.below(std::min<std::uint64_t>(workbench::binomial(m, n), 67) + 1);
            const auto h = workbench::gen_random_uniform(m, n, edges, rng());
            const auto t = sample_birth_times(m, rng());
            std::vector<double> a(edges), b(edges);
            k::scalar::uniform_edge_spans(h.flat_vertices(), n, t.values(), a);
            fns.first(h.flat_vertices(), n, t.values(), b);
            CHECK(bit_equal(a, b));

            std::vector<double> x(rng.below(37));
            for (auto& v : x) v = rng.uniform01();
            const auto e = static_cast<unsigned>(rng.below(60));
            std::vector<double> c(x.size()), d(x.size());
            k::scalar::beta_integrand(x, e, c);
            fns.second(x, e, d);
            CHECK(bit_equal(c, d));
        }
    }
}

TEST_CASE("dispatch override") {
    k::force_isa(k::Isa::scalar);
    CHECK(k::active_isa() == k::Isa::scalar);
    const auto h = workbench::gen_complete_uniform(9, 4);
    const auto t = sample_birth_times(9, 4);
    const auto scalar_short = short_edges(h, t, 2, 0.3);
    for (const auto& [isa, fns] : variants()) {
        k::force_isa(isa);
        CHECK(k::active_isa() == isa);
        CHECK(short_edges(h, t, 2, 0.3) == scalar_short);
    }
    k::reset_isa();
    CHECK(k::isa_available(k::active_isa()));
    if (!k::isa_available(k::Isa::neon)) CHECK_THROWS_AS(k::force_isa(k::Isa::neon), invalid_input);
}
