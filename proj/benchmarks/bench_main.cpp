#include "varbico/descent.hpp"
#include "varbico/lagcmp.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace varbico;

namespace {

MultiIndex mi(std::initializer_list<int> indices) {
    MultiIndex out;
    for (int i : indices) out = out.plus(i);
    return out;
}

JetPoly pv(const JetVar& v) { return JetPoly::jet_var(v); }

// small deterministic polynomial soup in 2 independent / 2 dependent variables
std::vector<JetPoly> sample_polys() {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coeff(-3, 3), var(0, 1), ord(0, 3), deg(1, 3);
    std::vector<JetPoly> out;
    for (int k = 0; k < 32; ++k) {
        JetPoly p;
        for (int t = 0; t < 4; ++t) {
            Monomial m;
            for (int d = 0, dd = deg(rng); d < dd; ++d) {
                MultiIndex idx;
                for (int o = 0, oo = ord(rng); o < oo; ++o) idx = idx.plus(var(rng));
                m = m.times(Monomial::jet_var(jet(var(rng), idx)));
            }
            p += JetPoly::monomial(coeff(rng), m);
        }
        out.push_back(p);
    }
    return out;
}

const Signature& sig2() {
    static const Signature sig{{"t", "x"}, {"u", "v"}};
    return sig;
}

BiForm wave_lagrangian(const Signature& sig) {
    JetPoly p = pv(jet(0, mi({0}))) * pv(jet(0, mi({0}))).scaled(Rational(1, 2)) -
                pv(jet(0, mi({1}))) * pv(jet(0, mi({1}))).scaled(Rational(1, 2));
    return wedge(BiForm(p), volume_form(sig));
}

void BM_TotalDerivative(benchmark::State& state) {
    auto polys = sample_polys();
    size_t k = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(total_derivative(polys[k++ % polys.size()], 0));
    }
}
BENCHMARK(BM_TotalDerivative);

void BM_HorizontalDifferential(benchmark::State& state) {
    auto polys = sample_polys();
    std::vector<BiForm> forms;
    for (size_t k = 0; k < polys.size(); ++k)
        forms.push_back(BiForm::term(polys[k], {static_cast<int>(k) % 2},
                                     {jet(0, mi({0})), jet(1, {})}));
    size_t k = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(d_h(forms[k++ % forms.size()], sig2()));
    }
}
BENCHMARK(BM_HorizontalDifferential);

void BM_WedgeProducts(benchmark::State& state) {
    auto polys = sample_polys();
    std::vector<BiForm> forms;
    for (size_t k = 0; k < polys.size(); ++k)
        forms.push_back(BiForm::term(polys[k], {}, {jet(k % 2, mi({0}))}) +
                        BiForm::term(polys[(k + 1) % polys.size()], {0}, {}));
    size_t k = 0;
    for (auto _ : state) {
        const BiForm& a = forms[k % forms.size()];
        const BiForm& b = forms[(k + 5) % forms.size()];
        benchmark::DoNotOptimize(wedge(a, b));
        ++k;
    }
}
BENCHMARK(BM_WedgeProducts);

void BM_ReduceProlongedWave(benchmark::State& state) {
    Signature sig{{"t", "x"}, {"u"}};
    auto wave = OrthonomicSystem::make(
        sig, {{jet(0, mi({0, 0})), pv(jet(0, mi({1, 1})))}});
    MultiIndex deep = mi({0, 0});
    for (int k = 0; k < static_cast<int>(state.range(0)); ++k) deep = deep.plus(0);
    const BiForm input{pv(jet(0, deep))};
    for (auto _ : state) {
        benchmark::DoNotOptimize(reduce(input, wave));
    }
}
BENCHMARK(BM_ReduceProlongedWave)->Arg(2)->Arg(4)->Arg(6);

void BM_FirstVariationWave(benchmark::State& state) {
    Signature sig{{"t", "x"}, {"u"}};
    const BiForm l = wave_lagrangian(sig);
    for (auto _ : state) {
        benchmark::DoNotOptimize(first_variation(l, sig));
    }
}
BENCHMARK(BM_FirstVariationWave);

void BM_ReconstructOscillator(benchmark::State& state) {
    Signature sig{{"t"}, {"u"}};
    auto osc = OrthonomicSystem::make(sig, {{jet(0, mi({0, 0})), -pv(jet(0, {}))}});
    const BiForm omega_hat =
        wedge(BiForm::dv_gen(jet(0, mi({0}))), BiForm::dv_gen(jet(0, {})));
    for (auto _ : state) {
        benchmark::DoNotOptimize(reconstruct(omega_hat, osc));
    }
}
BENCHMARK(BM_ReconstructOscillator);

void BM_ReconstructWave(benchmark::State& state) {
    Signature sig{{"t", "x"}, {"u"}};
    auto wave = OrthonomicSystem::make(
        sig, {{jet(0, mi({0, 0})), pv(jet(0, mi({1, 1})))}});
    const BiForm omega_hat =
        reduce(presymplectic_current(wave_lagrangian(sig), sig), wave).normal;
    for (auto _ : state) {
        benchmark::DoNotOptimize(reconstruct(omega_hat, wave));
    }
}
BENCHMARK(BM_ReconstructWave);

} // namespace

BENCHMARK_MAIN();
