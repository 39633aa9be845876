#pragma once

#include "sympdef/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace sympdef {

/// Exponent vector of a monomial; negative entries allowed (Laurent
/// directions validate separately).
using Exps = std::vector<int>;

inline int total_degree(const Exps &e)
{
	int d = 0;
	for (int k : e)
		d += k;
	return d;
}

/// Total degree first, then lexicographic. The one term order used
/// everywhere; keeps all bases and printed output deterministic.
struct GradedLexLess {
	bool operator()(const Exps &a, const Exps &b) const
	{
		int da = total_degree(a), db = total_degree(b);
		if (da != db)
			return da < db;
		return a < b;
	}
};

/// Sparse polynomial with anonymous variables: exponent vector -> coefficient.
/// No zero coefficients stored.
using PolyMap = std::map<Exps, Rational, GradedLexLess>;

void padd_term(PolyMap &p, const Exps &e, const Rational &c);
PolyMap padd(const PolyMap &a, const PolyMap &b);
PolyMap psub(const PolyMap &a, const PolyMap &b);
PolyMap pmul(const PolyMap &a, const PolyMap &b);
PolyMap pscale(const PolyMap &a, const Rational &c);
PolyMap pmonomial(const Exps &e, const Rational &c = Rational(1));
PolyMap pderiv(const PolyMap &a, std::size_t var);
/// Drop all terms of total degree >= bound.
PolyMap ptruncate(const PolyMap &a, int degree_bound);

/// Parse "2/3*s^2*t - t^3 + 1" over the given variable names.
PolyMap parse_poly(const std::string &text, const std::vector<std::string> &names);
std::string poly_str(const PolyMap &p, const std::vector<std::string> &names);
std::string monomial_str(const Exps &e, const std::vector<std::string> &names);

/// All monomials in n variables with total degree <= bound and nonnegative
/// exponents, in graded-lex order.
std::vector<Exps> monomials_up_to(std::size_t n, int bound);

} // namespace sympdef
