#include "sympdef/rational.hpp"
#include "sympdef/errors.hpp"

#include <ostream>

namespace sympdef {

Rational::Rational(long num, long den)
{
	if (den == 0)
		fail(errc::invalid_argument, "zero denominator");
	q_ = mpq_class(num, den);
	q_.canonicalize();
}

Rational::Rational(const std::string &s)
{
	if (s.empty() || mpq_set_str(q_.get_mpq_t(), s.c_str(), 10) != 0)
		fail(errc::parse_error, "bad rational '" + s + "'");
	if (sgn(q_.get_den()) == 0)
		fail(errc::parse_error, "zero denominator in '" + s + "'");
	q_.canonicalize();
}

Rational Rational::from_mpq(mpq_class q)
{
	Rational r;
	r.q_ = std::move(q);
	return r;
}

Rational &Rational::operator/=(const Rational &o)
{
	if (o.is_zero())
		fail(errc::invalid_argument, "division by zero");
	q_ /= o.q_;
	return *this;
}

Rational Rational::inv() const
{
	if (is_zero())
		fail(errc::invalid_argument, "inverse of zero");
	return from_mpq(1 / q_);
}

std::ostream &operator<<(std::ostream &os, const Rational &r)
{
	return os << r.q_;
}

const char *errc_name(errc c)
{
	switch (c)
	{
	case errc::not_an_ideal: return "NotAnIdeal";
	case errc::not_square_zero: return "NotSquareZero";
	case errc::not_local: return "NotLocal";
	case errc::not_closed: return "NotClosed";
	case errc::not_closed_input: return "NotClosedInput";
	case errc::wrong_closed_fiber: return "WrongClosedFiber";
	case errc::degenerate: return "Degenerate";
	case errc::space_mismatch: return "SpaceMismatch";
	case errc::base_mismatch: return "BaseMismatch";
	case errc::rank_overflow: return "RankOverflow";
	case errc::not_elementary: return "NotElementary";
	case errc::inconsistent_lift: return "InconsistentLift";
	case errc::not_a_differential: return "NotADifferential";
	case errc::jacobi_fails: return "JacobiFails";
	case errc::not_a_derivation: return "NotADerivation";
	case errc::parse_error: return "ParseError";
	case errc::term_budget_exceeded: return "TermBudgetExceeded";
	case errc::invalid_argument: return "InvalidArgument";
	}
	return "UnknownError";
}

} // namespace sympdef
