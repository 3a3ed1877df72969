#include <benchmark/benchmark.h>

#include "esym/concave.hpp"
#include "esym/hyperb.hpp"
#include "esym/rng.hpp"
#include "esym/rootcrit.hpp"

using namespace esym;

namespace {

Point rational_point(int n, std::uint64_t seed) {
    SplitRng rng(seed);
    Point x(static_cast<size_t>(n));
    for (auto& c : x) c = rng.next_rational(10);
    return x;
}

UniPoly rooted_poly(int deg, std::uint64_t seed) {
    SplitRng rng(seed);
    std::vector<Scalar> roots(static_cast<size_t>(deg));
    for (auto& r : roots) r = rng.next_rational(10);
    return UniPoly::from_roots(roots);
}

void BM_sigma_all_exact(benchmark::State& state) {
    Point x = rational_point(static_cast<int>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(sigma_all(x));
}
BENCHMARK(BM_sigma_all_exact)->Arg(4)->Arg(8)->Arg(16);

void BM_f_derivatives_float(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    PointF a{1.0, 2.0, 0.5, 0.25};
    PointF x(static_cast<size_t>(n), 1.5);
    for (auto _ : state) benchmark::DoNotOptimize(f_derivatives(a, x));
}
BENCHMARK(BM_f_derivatives_float)->Arg(4)->Arg(6)->Arg(10);

void BM_sturm_count(benchmark::State& state) {
    UniPoly p = rooted_poly(static_cast<int>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(sturm_real_root_count(p));
}
BENCHMARK(BM_sturm_count)->Arg(4)->Arg(6)->Arg(8);

void BM_battery(benchmark::State& state) {
    SplitRng rng(3);
    std::vector<Scalar> c(static_cast<size_t>(state.range(0)) + 1);
    for (auto& q : c) q = rng.next_rational_nonneg(10);
    while (sign(c.back()) == 0) c.back() = rng.next_rational_nonneg(10);
    UniPoly p(std::move(c));
    for (auto _ : state) benchmark::DoNotOptimize(battery(p));
}
BENCHMARK(BM_battery)->Arg(4)->Arg(6)->Arg(8);

void BM_scan_sample(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    CoeffVec a = CoeffVec::parse("1,1,1");
    PointF af = a.to_doubles();
    GammaSample pts = sample_gamma(n, n, 64, 4);
    size_t i = 0;
    for (auto _ : state) {
        const PointF& x = pts.points[i++ % pts.points.size()];
        SymDerivatives<double> d = f_derivatives(af, x);
        std::vector<double> m(x.size() * x.size());
        for (size_t r = 0; r < x.size(); ++r)
            for (size_t c2 = 0; c2 < x.size(); ++c2)
                m[r * x.size() + c2] =
                    d.value * d.hessian[r * x.size() + c2] - 0.5 * d.gradient[r] * d.gradient[c2];
        benchmark::DoNotOptimize(nsd_verdict(m, n, 1e-9));
    }
}
BENCHMARK(BM_scan_sample)->Arg(3)->Arg(5);

void BM_pi_p_direct(benchmark::State& state) {
    int p = static_cast<int>(state.range(0));
    SplitRng rng(5);
    Point mu(static_cast<size_t>(p)), lambda(static_cast<size_t>(p));
    for (auto& c : mu) c = rng.next_rational(10);
    for (auto& c : lambda) c = rng.next_rational(10);
    for (auto _ : state) benchmark::DoNotOptimize(pi_p_direct(mu, lambda));
}
BENCHMARK(BM_pi_p_direct)->Arg(3)->Arg(5)->Arg(6);

void BM_conjecture4_trial_block(benchmark::State& state) {
    TrialParams prm;
    prm.p = static_cast<int>(state.range(0));
    prm.trials = 64;
    prm.jobs = 1;
    std::uint64_t seed = 1;
    for (auto _ : state) {
        prm.seed = seed++;
        benchmark::DoNotOptimize(conjecture_trial(4, prm));
    }
}
BENCHMARK(BM_conjecture4_trial_block)->Arg(2)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
