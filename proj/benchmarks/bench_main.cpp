#include <benchmark/benchmark.h>

#include "crcert/bounds.hpp"
#include "crcert/certifier.hpp"
#include "crcert/sign_certificate.hpp"
#include "crcert/sturm.hpp"
#include "crcert/theorems.hpp"

using namespace crcert;

namespace {

void BM_TableRows(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(build_table(15, 26));
}
// rows build on worker threads, so wall time is the honest number
BENCHMARK(BM_TableRows)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_SingleRow(benchmark::State& state) {
    const std::int64_t r = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(build_table_row(r, default_probability(r)));
}
BENCHMARK(BM_SingleRow)->Arg(15)->Arg(26)->Unit(benchmark::kMillisecond);

void BM_SturmQuartic(benchmark::State& state) {
    const UniPoly c4 = collect_by_degree(middle_order_poly(19))[4];
    const ClosedRatInterval window{Rational::parse("61/40"), Rational::parse("17689/10000")};
    for (auto _ : state) benchmark::DoNotOptimize(sturm_root_count(c4, window));
}
BENCHMARK(BM_SturmQuartic);

void BM_CertifyQuartic(benchmark::State& state) {
    const UniPoly f = large_order_margin(40);
    const ClosedRatInterval window{Rational::parse("3.21"), Rational::parse("3.5")};
    for (auto _ : state) {
        const auto cert = certify_sign(f, window, SignClaim::strictly_positive);
        benchmark::DoNotOptimize(verify(cert));
    }
}
BENCHMARK(BM_CertifyQuartic);

void BM_Exclusion(benchmark::State& state) {
    const BoundSpec spec = SamplingBound{24, EdgeBound::kostochka_stiebitz};
    for (auto _ : state) benchmark::DoNotOptimize(exclude(state.range(0), spec));
}
BENCHMARK(BM_Exclusion)->Arg(15)->Arg(26)->Arg(200);

void BM_VerifyMiddleOrder(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(verify_theorem4());
}
BENCHMARK(BM_VerifyMiddleOrder)->Unit(benchmark::kMillisecond);

void BM_VerifyLargeOrder(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(verify_theorem2());
}
BENCHMARK(BM_VerifyLargeOrder)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
