#include "sympdef/dgla.hpp"
#include "sympdef/errors.hpp"

#include <doctest.h>

using namespace sympdef;

namespace {

// V^1 = <a>, V^2 = <b>, d = 0, [a,a] = b: every gamma1 = c*a obstructs.
DglaSpec obstructed_spec()
{
	DglaSpec s;
	s.kmin = 1;
	s.kmax = 2;
	s.dims[1] = 1;
	s.dims[2] = 1;
	s.brackets[{1, 1}] = {{QVec{Rational(1)}}};
	s.labels[1] = {"a"};
	s.labels[2] = {"b"};
	return s;
}

// V^1 = <a, c>, V^2 = <b>, d(a) = 0, d(c) = b, [a,a] = b, rest zero.
DglaSpec solvable_spec()
{
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
	s.labels[1] = {"a", "c"};
	s.labels[2] = {"b"};
	return s;
}

DglaSpec abelian_spec(std::size_t n1, std::size_t n2)
{
	DglaSpec s;
	s.kmin = 1;
	s.kmax = 2;
	s.dims[1] = n1;
	s.dims[2] = n2;
	return s;
}

} // namespace

TEST_CASE("validation accepts the fixtures")
{
	CHECK_NOTHROW(Dgla::validate(obstructed_spec()));
	CHECK_NOTHROW(Dgla::validate(solvable_spec()));
	CHECK_NOTHROW(Dgla::validate(abelian_spec(3, 2)));
}

TEST_CASE("validation rejects a broken differential")
{
	DglaSpec s;
	s.kmin = 1;
	s.kmax = 3;
	s.dims[1] = 1;
	s.dims[2] = 1;
	s.dims[3] = 1;
	QMat d1(1, 1), d2(1, 1);
	d1.at(0, 0) = Rational(1);
	d2.at(0, 0) = Rational(1);
	s.differentials[1] = d1;
	s.differentials[2] = d2;
	try
	{
		Dgla::validate(s);
		FAIL("expected NotADifferential");
	}
	catch (const MathError &e)
	{
		CHECK(e.code() == errc::not_a_differential);
	}
}

TEST_CASE("validation rejects a derivation violation")
{
	// d(a) = b, [a,a] = 0, [b,a] = u: Leibniz at (a,a) wants
	// 0 = d[a,a] = [b,a] - [a,b] = 2u
	DglaSpec s;
	s.kmin = 1;
	s.kmax = 3;
	s.dims[1] = 1;
	s.dims[2] = 1;
	s.dims[3] = 1;
	QMat d1(1, 1);
	d1.at(0, 0) = Rational(1);
	s.differentials[1] = d1;
	s.brackets[{2, 1}] = {{QVec{Rational(1)}}};
	try
	{
		Dgla::validate(s);
		FAIL("expected NotADerivation");
	}
	catch (const MathError &e)
	{
		CHECK(e.code() == errc::not_a_derivation);
	}
}

TEST_CASE("validation rejects antisymmetry defects as JacobiFails")
{
	// even-degree element with [u,u] != 0 violates graded antisymmetry
	DglaSpec s;
	s.kmin = 0;
	s.kmax = 0;
	s.dims[0] = 1;
	s.brackets[{0, 0}] = {{QVec{Rational(1)}}};
	try
	{
		Dgla::validate(s);
		FAIL("expected JacobiFails");
	}
	catch (const MathError &e)
	{
		CHECK(e.code() == errc::jacobi_fails);
	}
}

TEST_CASE("abelian solve returns gamma1 only")
{
	DglaPtr g = Dgla::validate(abelian_spec(2, 1));
	QVec gamma1{Rational(3), Rational(-2)};
	McOutcome out = mc_solve(g, gamma1, 10);
	REQUIRE(out.series.has_value());
	CHECK(out.series->order() == 10);
	CHECK(out.series->coefficients[0] == gamma1);
	for (std::size_t k = 1; k < 10; ++k)
		CHECK(is_zero(out.series->coefficients[k]));
	for (const auto &r : check_mc(*out.series))
		CHECK(is_zero(r));
}

TEST_CASE("obstructed at order 2 with class -1/2 b")
{
	DglaPtr g = Dgla::validate(obstructed_spec());
	QVec gamma1{Rational(1)};
	McOutcome out = mc_solve(g, gamma1, 5);
	CHECK_FALSE(out.series.has_value());
	REQUIRE(out.obstructed_at.has_value());
	CHECK(*out.obstructed_at == 2);
	REQUIRE(out.obstruction_class.size() == 1);
	CHECK(out.obstruction_class[0] == Rational(-1, 2));
	CHECK(g->describe(2, out.obstruction_rep) == "-1/2*b");

	// independent confirmation: H^2 is one-dimensional and the reported
	// representative is not exact (the image of d_1 is zero here)
	CHECK(g->h2().representatives.size() == 1);
	QMat d1(g->dim(2), g->dim(1)); // zero map
	CHECK_FALSE(solve(d1, out.obstruction_rep).has_value());
}

TEST_CASE("solvable fixture: gamma2 = -1/2 c, zero residuals to order 8")
{
	DglaPtr g = Dgla::validate(solvable_spec());
	QVec gamma1{Rational(1), Rational(0)}; // a
	McOutcome out = mc_solve(g, gamma1, 8);
	REQUIRE(out.series.has_value());
	CHECK(g->describe(1, out.series->coefficients[1]) == "-1/2*c");
	// d(gamma2) = -1/2 [a,a]
	QVec lhs = g->d(1, out.series->coefficients[1]);
	QVec rhs = Rational(-1, 2) * g->bracket(1, gamma1, 1, gamma1);
	CHECK(lhs == rhs);
	for (const auto &r : check_mc(*out.series))
		CHECK(is_zero(r));
	// truncation of a valid series stays valid
	McSeries trunc = *out.series;
	trunc.coefficients.resize(4);
	for (const auto &r : check_mc(trunc))
		CHECK(is_zero(r));
}

TEST_CASE("obstruction class with a partially exact right-hand side")
{
	// V^1 = <a, c>, V^2 = <b1, b2>, d(c) = b1, [a,a] = b1 + b2:
	// the b1 part of -1/2 [a,a] is exact, the class is -1/2 [b2]
	DglaSpec s;
	s.kmin = 1;
	s.kmax = 2;
	s.dims[1] = 2;
	s.dims[2] = 2;
	QMat d1(2, 2);
	d1.at(0, 1) = Rational(1); // d(c) = b1
	s.differentials[1] = d1;
	s.brackets[{1, 1}] = {
	    {QVec{Rational(1), Rational(1)}, QVec{Rational(0), Rational(0)}},
	    {QVec{Rational(0), Rational(0)}, QVec{Rational(0), Rational(0)}}};
	s.labels[1] = {"a", "c"};
	s.labels[2] = {"b1", "b2"};
	DglaPtr g = Dgla::validate(s);
	CHECK(g->h2().representatives.size() == 1);
	McOutcome out = mc_solve(g, {Rational(1), Rational(0)}, 4);
	CHECK_FALSE(out.series.has_value());
	REQUIRE(out.obstructed_at.has_value());
	CHECK(*out.obstructed_at == 2);
	REQUIRE(out.obstruction_class.size() == 1);
	CHECK(out.obstruction_class[0] == Rational(-1, 2));
	// the representative itself keeps both components
	CHECK(out.obstruction_rep ==
	      QVec{Rational(-1, 2), Rational(-1, 2)});
}

TEST_CASE("corrupting a solution shows in check_mc")
{
	DglaPtr g = Dgla::validate(solvable_spec());
	McOutcome out = mc_solve(g, {Rational(1), Rational(0)}, 5);
	REQUIRE(out.series.has_value());
	McSeries bad = *out.series;
	bad.coefficients[1] = bad.coefficients[1] + QVec{Rational(0), Rational(1)};
	auto residuals = check_mc(bad);
	CHECK_FALSE(is_zero(residuals[1]));
}

TEST_CASE("mc_solve rejects non-closed gamma1")
{
	DglaPtr g = Dgla::validate(solvable_spec());
	// c is not closed: d(c) = b
	CHECK_THROWS_AS(mc_solve(g, {Rational(0), Rational(1)}, 3), MathError);
}

TEST_CASE("two solutions at a step differ by a closed element")
{
	// V^1 = <a, c, z> with d(c) = b, d(z) = 0, [a,a] = b: the solver picks
	// the particular solution with free coordinates zero; any other
	// preimage differs by ker(d) = span{a, z}
	DglaSpec s = solvable_spec();
	s.dims[1] = 3;
	QMat d1(1, 3);
	d1.at(0, 1) = Rational(1);
	s.differentials[1] = d1;
	s.brackets[{1, 1}] = {
	    {QVec{Rational(1)}, QVec{Rational(0)}, QVec{Rational(0)}},
	    {QVec{Rational(0)}, QVec{Rational(0)}, QVec{Rational(0)}},
	    {QVec{Rational(0)}, QVec{Rational(0)}, QVec{Rational(0)}}};
	s.labels[1] = {"a", "c", "z"};
	DglaPtr g = Dgla::validate(s);
	McOutcome out = mc_solve(g, {Rational(1), Rational(0), Rational(0)}, 2);
	REQUIRE(out.series.has_value());
	QVec gamma2 = out.series->coefficients[1];
	QMat dmat(1, 3);
	dmat.at(0, 1) = Rational(1);
	auto kernel = nullspace(dmat);
	CHECK(kernel.size() == 2);
	for (const auto &k : kernel)
	{
		QVec other = gamma2 + k;
		CHECK(g->d(1, other) == g->d(1, gamma2));
		CHECK(is_zero(g->d(1, other - gamma2)));
	}
}
