#include "sympdef/relform.hpp"
#include "sympdef/errors.hpp"

#include <doctest.h>

using namespace sympdef;

namespace {

RelForm fn(const Space &sp, const ArtinPtr &base, const std::string &text)
{
	return RelForm::scalar(LaurentPoly(sp, parse_poly(text, sp.names())), base);
}

} // namespace

TEST_CASE("d is Leibniz on products: d(x*y) = y dx + x dy")
{
	Space sp = Space::parse("affine:1");
	ArtinPtr q = ArtinAlgebra::rationals();
	RelForm xy = fn(sp, q, "x*y");
	RelForm d = xy.d();
	CHECK(d.degree() == 1);
	CHECK(d.str() == "y*dx + x*dy");
}

TEST_CASE("d of dlog x vanishes")
{
	Space sp = Space::parse("torus:1");
	ArtinPtr q = ArtinAlgebra::rationals();
	RelForm dlx = RelForm::pair_one_form(sp, q, 0);
	CHECK(dlx.d().is_zero());
	CHECK(dlx.is_closed());
}

TEST_CASE("d(x y dy) = y dx^dy")
{
	Space sp = Space::parse("affine:1");
	ArtinPtr q = ArtinAlgebra::rationals();
	RelForm xydy(sp, q, 1);
	xydy.add_term(FormKey{{1, 1}, {1}, 0}, Rational(1));
	RelForm d = xydy.d();
	RelForm expect(sp, q, 2);
	expect.add_term(FormKey{{0, 1}, {0, 1}, 0}, Rational(1));
	CHECK(d == expect);
	CHECK_FALSE(xydy.is_closed());
}

TEST_CASE("wedge antisymmetry and unit")
{
	Space sp = Space::parse("affine:1");
	ArtinPtr q = ArtinAlgebra::rationals();
	RelForm dx(sp, q, 1), dy(sp, q, 1);
	dx.add_term(FormKey{{0, 0}, {0}, 0}, Rational(1));
	dy.add_term(FormKey{{0, 0}, {1}, 0}, Rational(1));
	CHECK(wedge(dx, dy) == -wedge(dy, dx));
	CHECK(wedge(dx, dx).is_zero());

	// (x dx) ^ (y dy) = xy dx^dy
	RelForm xdx = dx.scaled_fn(fn(sp, q, "x"));
	RelForm ydy = dy.scaled_fn(fn(sp, q, "y"));
	RelForm expect(sp, q, 2);
	expect.add_term(FormKey{{1, 1}, {0, 1}, 0}, Rational(1));
	CHECK(wedge(xdx, ydy) == expect);

	// unit
	RelForm one = fn(sp, q, "1");
	CHECK(wedge(one, xdx) == xdx);
}

TEST_CASE("wedge graded commutativity on degree pairs")
{
	Space sp = Space::parse("affine:2");
	ArtinPtr q = ArtinAlgebra::rationals();
	RelForm a(sp, q, 1); // odd
	a.add_term(FormKey{{1, 0, 0, 0}, {0}, 0}, Rational(2));
	a.add_term(FormKey{{0, 0, 1, 0}, {2}, 0}, Rational(1));
	RelForm b(sp, q, 1); // odd
	b.add_term(FormKey{{0, 1, 0, 0}, {1}, 0}, Rational(3));
	b.add_term(FormKey{{0, 0, 0, 0}, {3}, 0}, Rational(-1));
	CHECK(wedge(a, b) == -wedge(b, a));
	RelForm c = wedge(a, b); // even
	CHECK(wedge(c, a) == wedge(a, c));
}

TEST_CASE("Leibniz for d over wedge")
{
	Space sp = Space::parse("torus:1");
	ArtinPtr q = ArtinAlgebra::rationals();
	RelForm a(sp, q, 1);
	a.add_term(FormKey{{-1, 2}, {0}, 0}, Rational(1));
	a.add_term(FormKey{{0, 1}, {1}, 0}, Rational(-2));
	RelForm b(sp, q, 0);
	b.add_term(FormKey{{1, -1}, {}, 0}, Rational(1, 2));
	// d(b ^ a) = db ^ a + b ^ da   (b has degree 0)
	CHECK(wedge(b, a).d() == wedge(b.d(), a) + wedge(b, a.d()));
	// d(a ^ a') with both odd: d(a^c) = da^c - a^dc
	RelForm c(sp, q, 1);
	c.add_term(FormKey{{2, 0}, {1}, 0}, Rational(1));
	CHECK(wedge(a, c).d() == wedge(a.d(), c) - wedge(a, c.d()));
}

TEST_CASE("base arithmetic: scaled_base and m-adic order")
{
	Space sp = Space::parse("torus:1");
	ArtinPtr a3 = ArtinAlgebra::create({"t"}, {}, 3);
	RelForm f(sp, a3, 0);
	f.add_term(FormKey{{0, 0}, {}, 0}, Rational(1)); // 1
	QVec t = a3->nf(parse_poly("t", {"t"}));
	RelForm tf = f.scaled_base(t);
	CHECK(tf.madic_order() == 1);
	RelForm t2f = tf.scaled_base(t);
	CHECK(t2f.madic_order() == 2);
	CHECK(tf.scaled_base(t2f.base()->nf(parse_poly("t^2", {"t"}))).is_zero());
	CHECK(f.madic_order() == 0);
	CHECK(RelForm::zero(sp, a3, 0).madic_order() == 3);

	// closed fiber drops the nilpotent part
	RelForm mix = f + tf;
	CHECK(mix.closed_fiber() == f.closed_fiber());
}

TEST_CASE("negative exponents are rejected in plain directions")
{
	Space sp = Space::parse("affine:1");
	ArtinPtr q = ArtinAlgebra::rationals();
	RelForm w(sp, q, 0);
	CHECK_THROWS_AS(w.add_term(FormKey{{-1, 0}, {}, 0}, Rational(1)), MathError);
}

TEST_CASE("space mismatch is caught")
{
	ArtinPtr q = ArtinAlgebra::rationals();
	RelForm a(Space::parse("torus:1"), q, 1);
	RelForm b(Space::parse("affine:1"), q, 1);
	CHECK_THROWS_AS(wedge(a, b), MathError);
	CHECK_THROWS_AS(a + b, MathError);
}
