// OpenMP kernels against their serial twins.

#include "ncg/random.hpp"
#include "ncg/verify.hpp"
#include "ncg/ymh.hpp"

#include <benchmark/benchmark.h>

using namespace ncg;

namespace {

ConnectionForm random_point(ParameterSpace const &space, std::uint64_t seed)
{
	Rng rng(seed, 0);
	std::vector<double> p(space.size());
	for (auto &v : p)
		v = rng.uniform(-0.5, 0.5);
	return space.assemble(p);
}

template <auto Gradient>
void gradient(benchmark::State &state)
{
	ActionConfig cfg;
	cfg.n = static_cast<int>(state.range(0));
	cfg.d = static_cast<int>(state.range(1));
	ParameterSpace space(cfg);
	auto w = random_point(space, 1);
	for (auto _ : state)
		benchmark::DoNotOptimize(Gradient(w, space));
	state.counters["params"] = static_cast<double>(space.size());
}

template <auto SupNorm>
void sup_norm(benchmark::State &state)
{
	Rng rng(2, 0);
	RandomShape s{3, 2, 2, 4, 1.0};
	std::vector<AlgElement> elems;
	for (int i = 0; i < 32; ++i)
		elems.push_back(random_element(rng, s));
	int per_axis = static_cast<int>(state.range(0));
	for (auto _ : state)
		benchmark::DoNotOptimize(SupNorm(elems, per_axis));
}

template <auto Verify>
void verify(benchmark::State &state)
{
	for (auto _ : state)
		benchmark::DoNotOptimize(Verify(2, 1, 7, static_cast<int>(state.range(0))));
}

constexpr double (*grid_sup_norm_parallel)(std::span<AlgElement const>, int) = grid_sup_norm;

} // namespace

BENCHMARK(gradient<ymh_gradient>)->Args({2, 1})->Args({2, 2})->Args({3, 1})->Unit(benchmark::kMillisecond);
BENCHMARK(gradient<ymh_gradient_serial>)->Args({2, 1})->Args({2, 2})->Args({3, 1})->Unit(benchmark::kMillisecond);
BENCHMARK(sup_norm<grid_sup_norm_parallel>)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(sup_norm<grid_sup_norm_serial>)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(verify<run_verify>)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(verify<run_verify_serial>)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
