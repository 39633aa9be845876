#include "sympdef/derham.hpp"
#include "sympdef/errors.hpp"
#include "sympdef/symplectic.hpp"

#include <doctest.h>
#include <random>

using namespace sympdef;

namespace {

RelForm random_form(const Space &sp, const ArtinPtr &base, int degree,
                    std::mt19937 &rng, int max_exp = 2, int n_terms = 4)
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

} // namespace

TEST_CASE("cohomology bases count dlog products")
{
	ArtinPtr q = ArtinAlgebra::rationals();
	auto torus = Space::parse("torus:1");
	CHECK(cohomology_basis(torus, 2, q).dim() == 1);
	CHECK(cohomology_basis(torus, 1, q).dim() == 2);
	CHECK(cohomology_basis(torus, 0, q).dim() == 1);

	auto affine = Space::parse("affine:1");
	CHECK(cohomology_basis(affine, 1, q).dim() == 0);
	CHECK(cohomology_basis(affine, 2, q).dim() == 0);

	auto mixed = Space::parse("torus:1+affine:1");
	CHECK(cohomology_basis(mixed, 1, q).dim() == 2); // dlog x1, dlog y1

	auto torus2 = Space::parse("torus:2");
	CHECK(cohomology_basis(torus2, 2, q).dim() == 6);

	for (const auto &rep : cohomology_basis(torus2, 2, q).representatives)
		CHECK(rep.is_closed());
}

TEST_CASE("decompose of a basis element is the unit coordinate")
{
	ArtinPtr q = ArtinAlgebra::rationals();
	auto sp = Space::parse("torus:1");
	RelForm omega0 = reference_form(sp, q);
	Decomposition dec = decompose(omega0);
	REQUIRE(dec.coords.size() == 1);
	CHECK(dec.coords[0][0] == Rational(1));
	CHECK(dec.primitive.is_zero());
}

TEST_CASE("cohomology representatives are closed and idempotent under decompose")
{
	ArtinPtr a2 = ArtinAlgebra::create({"t"}, {}, 2);
	for (const char *spec : {"torus:1", "torus:2", "torus:1+affine:1"})
	{
		Space sp = Space::parse(spec);
		for (int degree = 0; degree <= 2; ++degree)
		{
			CohomologyBasis basis = cohomology_basis(sp, degree, a2);
			for (std::size_t h = 0; h < basis.dim(); ++h)
			{
				CHECK(basis.representatives[h].is_closed());
				Decomposition dec = decompose(basis.representatives[h]);
				CHECK(dec.primitive.is_zero());
				for (std::size_t k = 0; k < basis.dim(); ++k)
				{
					QVec expect(a2->dim());
					if (k == h)
						expect[0] = Rational(1);
					CHECK(dec.coords[k] == expect);
				}
			}
		}
	}
}

TEST_CASE("decompose of an exact form re-substitutes")
{
	ArtinPtr q = ArtinAlgebra::rationals();
	auto sp = Space::parse("affine:1");
	RelForm xydy(sp, q, 1);
	xydy.add_term(FormKey{{1, 1}, {1}, 0}, Rational(1));
	RelForm w = xydy.d();
	Decomposition dec = decompose(w);
	for (const auto &c : dec.coords)
		CHECK(is_zero(c));
	CHECK(dec.primitive.d() == w);
}

TEST_CASE("decompose splits class + exact part exactly")
{
	ArtinPtr q = ArtinAlgebra::rationals();
	auto sp = Space::parse("torus:1");
	RelForm omega0 = reference_form(sp, q);
	RelForm xdy(sp, q, 1);
	xdy.add_term(FormKey{{1, 0}, {1}, 0}, Rational(1));
	RelForm w = omega0 + xdy.d();
	Decomposition dec = decompose(w);
	CHECK(dec.coords[0][0] == Rational(1));
	CHECK(dec.primitive.d() == xdy.d());
}

TEST_CASE("decompose rejects non-closed input")
{
	ArtinPtr q = ArtinAlgebra::rationals();
	auto sp = Space::parse("affine:1");
	RelForm xdy(sp, q, 1);
	xdy.add_term(FormKey{{1, 0}, {1}, 0}, Rational(1));
	CHECK_THROWS_AS(decompose(xdy), MathError);
}

TEST_CASE("homotopy identity on random closed forms across spaces")
{
	std::mt19937 rng(101u);
	ArtinPtr a3 = ArtinAlgebra::create({"t"}, {}, 3);
	for (const char *spec : {"torus:1", "affine:1", "torus:1+affine:1", "torus:2"})
	{
		Space sp = Space::parse(spec);
		for (int degree = 1; degree <= 2; ++degree)
			for (int trial = 0; trial < 25; ++trial)
			{
				// closed = d(anything) + random combination of classes
				RelForm closed =
				    random_form(sp, a3, degree - 1, rng).d();
				CohomologyBasis basis = cohomology_basis(sp, degree, a3);
				std::uniform_int_distribution<int> cdist(-2, 2);
				for (const auto &rep : basis.representatives)
					closed = closed + rep.scaled(Rational(cdist(rng)));
				REQUIRE(closed.is_closed());
				Decomposition dec = decompose(closed);
				RelForm rebuilt = dec.primitive.d();
				for (std::size_t h = 0; h < basis.dim(); ++h)
					rebuilt = rebuilt + basis.representatives[h].scaled_base(dec.coords[h]);
				CHECK(rebuilt == closed);
				// F^1 compatibility: the primitive of a 2-form is a 1-form
				CHECK(dec.primitive.degree() == degree - 1);
				if (degree >= 1)
					CHECK(in_filtration_level(dec.primitive, degree - 1));
			}
	}
}

TEST_CASE("decompose is base-linear")
{
	std::mt19937 rng(55u);
	ArtinPtr a3 = ArtinAlgebra::create({"t"}, {}, 3);
	Space sp = Space::parse("torus:1");
	QVec a = a3->nf(parse_poly("1 + 2*t", {"t"}));
	QVec b = a3->nf(parse_poly("t + t^2", {"t"}));
	RelForm w1 = random_form(sp, a3, 1, rng).d() +
	             reference_form(sp, a3).scaled(Rational(2));
	RelForm w2 = random_form(sp, a3, 1, rng).d() + reference_form(sp, a3);
	Decomposition d1 = decompose(w1);
	Decomposition d2 = decompose(w2);
	Decomposition dsum = decompose(w1.scaled_base(a) + w2.scaled_base(b));
	for (std::size_t h = 0; h < d1.coords.size(); ++h)
		CHECK(dsum.coords[h] ==
		      a3->mul(a, d1.coords[h]) + a3->mul(b, d2.coords[h]));
}

TEST_CASE("d^2 = 0 on random forms")
{
	std::mt19937 rng(77u);
	ArtinPtr a2 = ArtinAlgebra::create({"s", "t"}, {}, 2);
	for (const char *spec : {"torus:1", "affine:1", "torus:1+affine:1"})
	{
		Space sp = Space::parse(spec);
		for (int degree = 0; degree <= 2; ++degree)
			for (int trial = 0; trial < 20; ++trial)
			{
				RelForm w = random_form(sp, a2, degree, rng);
				CHECK(w.d().d().is_zero());
			}
	}
}

TEST_CASE("gauss_manin differentiates base coefficients only")
{
	auto sp = Space::parse("torus:1");
	ArtinPtr a2 = ArtinAlgebra::create({"t"}, {}, 2);
	KahlerDiff kd(a2);
	// (1+t) * Omega_0 -> Omega_0 (x) dt
	RelForm w = reference_form(sp, a2).scaled_base(
	    a2->nf(parse_poly("1 + t", {"t"})));
	BaseDerivative gm = gauss_manin(w, kd);
	REQUIRE(gm.components.size() == 1);
	CHECK(gm.components[0] == reference_form(sp, ArtinAlgebra::rationals()));

	// flat sections die
	BaseDerivative flat = gauss_manin(reference_form(sp, a2), kd);
	CHECK(flat.components[0].is_zero());

	// t^2 dx^dy over Q[t]/t^3 -> dx^dy (x) 2t dt
	ArtinPtr a3 = ArtinAlgebra::create({"t"}, {}, 3);
	KahlerDiff kd3(a3);
	Space aff = Space::parse("affine:1");
	RelForm dxdy(aff, a3, 2);
	dxdy.add_term(FormKey{{0, 0}, {0, 1}, 0}, Rational(1));
	RelForm w3 = dxdy.scaled_base(a3->nf(parse_poly("t^2", {"t"})));
	BaseDerivative gm3 = gauss_manin(w3, kd3);
	// components along {dt, t dt}: d(t^2) = 2 t dt
	REQUIRE(gm3.components.size() == 2);
	CHECK(gm3.components[0].is_zero());
	CHECK(gm3.components[1] == dxdy.closed_fiber().scaled(Rational(2)));
}
