#include "sympdef/deformation.hpp"
#include "sympdef/dgla.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace sympdef;

namespace {

RelForm random_form(const Space &sp, const ArtinPtr &base, int degree,
                    std::mt19937 &rng, int max_exp = 2, int n_terms = 6)
{
	std::uniform_int_distribution<int> expdist(-max_exp, max_exp);
	std::uniform_int_distribution<int> coeff(-3, 3);
	std::uniform_int_distribution<std::size_t> bdist(0, base->dim() - 1);
	const std::size_t n = sp.n_vars();
	RelForm out(sp, base, degree);
	for (int t = 0; t < n_terms; ++t)
	{
		Exps e(n, 0);
		for (std::size_t i = 0; i < n; ++i)
		{
			int k = expdist(rng);
			e[i] = sp.laurent(i) ? k : std::abs(k);
		}
		std::vector<int> idx;
		for (std::size_t i = 0; i < n && static_cast<int>(idx.size()) < degree; ++i)
			if ((rng() & 1u) || n - i == degree - idx.size())
				idx.push_back(static_cast<int>(i));
		if (static_cast<int>(idx.size()) < degree)
			continue;
		int c = coeff(rng);
		if (c != 0)
			out.add_term(FormKey{e, idx, bdist(rng)}, Rational(c));
	}
	return out;
}

void BM_artin_create(benchmark::State &state)
{
	const int order = static_cast<int>(state.range(0));
	for (auto _ : state)
		benchmark::DoNotOptimize(ArtinAlgebra::create({"s", "t"}, {}, order));
}
BENCHMARK(BM_artin_create)->Arg(3)->Arg(4)->Arg(5);

void BM_kahler(benchmark::State &state)
{
	ArtinPtr a = ArtinAlgebra::create({"s", "t"}, {}, static_cast<int>(state.range(0)));
	for (auto _ : state)
		benchmark::DoNotOptimize(KahlerDiff(a).dim());
}
BENCHMARK(BM_kahler)->Arg(3)->Arg(4);

void BM_wedge(benchmark::State &state)
{
	std::mt19937 rng(1u);
	Space sp = Space::parse("torus:2");
	ArtinPtr a3 = ArtinAlgebra::create({"t"}, {}, 3);
	RelForm a = random_form(sp, a3, 1, rng);
	RelForm b = random_form(sp, a3, 1, rng);
	for (auto _ : state)
		benchmark::DoNotOptimize(wedge(a, b).term_count());
}
BENCHMARK(BM_wedge);

void BM_decompose(benchmark::State &state)
{
	std::mt19937 rng(2u);
	Space sp = Space::parse("torus:2");
	ArtinPtr a3 = ArtinAlgebra::create({"t"}, {}, 3);
	RelForm closed = random_form(sp, a3, 1, rng).d() + reference_form(sp, a3);
	for (auto _ : state)
		benchmark::DoNotOptimize(decompose(closed).coords.size());
}
BENCHMARK(BM_decompose);

void BM_raise(benchmark::State &state)
{
	std::mt19937 rng(3u);
	Space sp = Space::parse("torus:1");
	ArtinPtr a3 = ArtinAlgebra::create({"t"}, {}, 3);
	SymplecticForm om(reference_form(sp, a3));
	RelForm alpha = random_form(sp, a3, 1, rng);
	for (auto _ : state)
		benchmark::DoNotOptimize(raise(om, alpha).is_zero());
}
BENCHMARK(BM_raise);

void BM_find_isomorphism(benchmark::State &state)
{
	Space sp = Space::parse("torus:1");
	ArtinPtr a4 = ArtinAlgebra::create({"t"}, {}, 4);
	RelForm omega = reference_form(sp, a4).scaled_base(
	    a4->nf(parse_poly("1 + t", {"t"})));
	Deformation d1 = make_deformation(sp, a4, omega);
	RelForm alpha(sp, a4, 1);
	alpha.add_term(FormKey{{1, 1}, {1}, 0}, Rational(1));
	Deformation d2 = make_deformation(
	    sp, a4,
	    omega + alpha.scaled_base(a4->nf(parse_poly("t + t^2", {"t"}))).d());
	for (auto _ : state)
	{
		auto r = find_isomorphism(d1, d2);
		benchmark::DoNotOptimize(r.iso.has_value());
	}
}
BENCHMARK(BM_find_isomorphism);

void BM_mc_solve(benchmark::State &state)
{
	// nilpotent example: d(c) = b, [a,a] = b
	DglaSpec s;
	s.kmin = 1;
	s.kmax = 2;
	s.dims[1] = 2;
	s.dims[2] = 1;
	QMat d1(1, 2);
	d1.at(0, 1) = Rational(1);
	s.differentials[1] = d1;
	s.brackets[{1, 1}] = {{QVec{Rational(1)}, QVec{Rational(0)}},
	                      {QVec{Rational(0)}, QVec{Rational(0)}}};
	DglaPtr g = Dgla::validate(s);
	const std::size_t order = static_cast<std::size_t>(state.range(0));
	for (auto _ : state)
	{
		auto out = mc_solve(g, {Rational(1), Rational(0)}, order);
		benchmark::DoNotOptimize(out.series.has_value());
	}
}
BENCHMARK(BM_mc_solve)->Arg(8)->Arg(16);

} // namespace

int main(int argc, char **argv)
{
	benchmark::Initialize(&argc, argv);
	if (benchmark::ReportUnrecognizedArguments(argc, argv))
		return 1;
	benchmark::RunSpecifiedBenchmarks();
	benchmark::Shutdown();
	return 0;
}
