#include "sympdef/laurent.hpp"
#include "sympdef/errors.hpp"

namespace sympdef {

LaurentPoly::LaurentPoly(Space space) : space_(std::move(space)) {}

LaurentPoly::LaurentPoly(Space space, PolyMap terms)
    : space_(std::move(space)), terms_(std::move(terms))
{
	validate();
}

void LaurentPoly::validate() const
{
	for (const auto &[e, c] : terms_)
	{
		if (e.size() != space_.n_vars())
			fail(errc::invalid_argument, "exponent vector length mismatch");
		for (std::size_t i = 0; i < e.size(); ++i)
			if (e[i] < 0 && !space_.laurent(i))
				fail(errc::invalid_argument,
				     "negative exponent in plain direction " + space_.name(i));
	}
}

LaurentPoly LaurentPoly::constant(Space space, const Rational &c)
{
	PolyMap t = pmonomial(Exps(space.n_vars(), 0), c);
	return LaurentPoly(std::move(space), std::move(t));
}

LaurentPoly LaurentPoly::monomial(Space space, const Exps &e, const Rational &c)
{
	PolyMap t = pmonomial(e, c);
	return LaurentPoly(std::move(space), std::move(t));
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly &o) const
{
	if (!(space_ == o.space_))
		fail(errc::space_mismatch, "adding Laurent polynomials on different spaces");
	return LaurentPoly(space_, padd(terms_, o.terms_));
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly &o) const
{
	if (!(space_ == o.space_))
		fail(errc::space_mismatch, "subtracting Laurent polynomials on different spaces");
	return LaurentPoly(space_, psub(terms_, o.terms_));
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly &o) const
{
	if (!(space_ == o.space_))
		fail(errc::space_mismatch, "multiplying Laurent polynomials on different spaces");
	return LaurentPoly(space_, pmul(terms_, o.terms_));
}

LaurentPoly LaurentPoly::operator-() const
{
	return LaurentPoly(space_, pscale(terms_, Rational(-1)));
}

LaurentPoly LaurentPoly::scaled(const Rational &c) const
{
	return LaurentPoly(space_, pscale(terms_, c));
}

PolyMap LaurentPoly::map_derivative(const PolyMap &p, std::size_t var)
{
	PolyMap r;
	for (const auto &[e, c] : p)
	{
		if (e[var] == 0)
			continue;
		Exps d(e);
		d[var] -= 1;
		padd_term(r, d, Rational(e[var]) * c);
	}
	return r;
}

LaurentPoly LaurentPoly::derivative(std::size_t var) const
{
	return LaurentPoly(space_, map_derivative(terms_, var));
}

std::optional<std::pair<Exps, Rational>> LaurentPoly::as_unit_monomial() const
{
	if (terms_.size() != 1)
		return std::nullopt;
	const auto &[e, c] = *terms_.begin();
	for (std::size_t i = 0; i < e.size(); ++i)
		if (e[i] != 0 && !space_.laurent(i))
			return std::nullopt;
	return std::make_pair(e, c);
}

std::string LaurentPoly::str() const
{
	return poly_str(terms_, space_.names());
}

LaurentPoly laurent_det(const std::vector<std::vector<LaurentPoly>> &m)
{
	const std::size_t n = m.size();
	if (n == 0)
		fail(errc::invalid_argument, "empty matrix");
	const Space &sp = m[0][0].space();
	if (n == 1)
		return m[0][0];
	LaurentPoly det(sp);
	for (std::size_t j = 0; j < n; ++j)
	{
		if (m[0][j].is_zero())
			continue;
		std::vector<std::vector<LaurentPoly>> minor;
		for (std::size_t i = 1; i < n; ++i)
		{
			std::vector<LaurentPoly> row;
			for (std::size_t k = 0; k < n; ++k)
				if (k != j)
					row.push_back(m[i][k]);
			minor.push_back(std::move(row));
		}
		LaurentPoly cof = m[0][j] * laurent_det(minor);
		det = (j % 2 == 0) ? det + cof : det - cof;
	}
	return det;
}

std::vector<std::vector<LaurentPoly>>
laurent_adjugate(const std::vector<std::vector<LaurentPoly>> &m)
{
	const std::size_t n = m.size();
	const Space &sp = m[0][0].space();
	std::vector<std::vector<LaurentPoly>> adj(n, std::vector<LaurentPoly>(n, LaurentPoly(sp)));
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
		{
			std::vector<std::vector<LaurentPoly>> minor;
			for (std::size_t r = 0; r < n; ++r)
			{
				if (r == i)
					continue;
				std::vector<LaurentPoly> row;
				for (std::size_t c = 0; c < n; ++c)
					if (c != j)
						row.push_back(m[r][c]);
				minor.push_back(std::move(row));
			}
			LaurentPoly d = n == 1 ? LaurentPoly::constant(sp, Rational(1))
			                       : laurent_det(minor);
			// adj_{ji} = (-1)^{i+j} minor_{ij}
			adj[j][i] = ((i + j) % 2 == 0) ? d : -d;
		}
	return adj;
}

} // namespace sympdef
