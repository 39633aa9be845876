#pragma once

#include "sympdef/poly.hpp"
#include "sympdef/space.hpp"

#include <optional>

namespace sympdef {

/// Laurent polynomial on a model space: exact rational coefficients,
/// negative exponents only in laurent directions.
class LaurentPoly {
public:
	explicit LaurentPoly(Space space);
	LaurentPoly(Space space, PolyMap terms);

	static LaurentPoly constant(Space space, const Rational &c);
	static LaurentPoly monomial(Space space, const Exps &e,
	                            const Rational &c = Rational(1));

	const Space &space() const { return space_; }
	const PolyMap &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }

	LaurentPoly operator+(const LaurentPoly &o) const;
	LaurentPoly operator-(const LaurentPoly &o) const;
	LaurentPoly operator*(const LaurentPoly &o) const;
	LaurentPoly operator-() const;
	LaurentPoly scaled(const Rational &c) const;
	LaurentPoly derivative(std::size_t var) const;

	bool operator==(const LaurentPoly &o) const = default;

	/// Laurent monomial derivative: d/dx of x^k is k x^{k-1}, valid for
	/// negative k in laurent directions.
	static PolyMap map_derivative(const PolyMap &p, std::size_t var);

	/// A unit of the coordinate ring is a single term whose exponents are
	/// supported on laurent directions. Returns (exponents, coefficient).
	std::optional<std::pair<Exps, Rational>> as_unit_monomial() const;

	std::string str() const;

private:
	void validate() const;
	Space space_;
	PolyMap terms_;
};

/// Exact determinant of a square matrix of Laurent polynomials (cofactor
/// expansion; fine at the 2n x 2n sizes this engine meets).
LaurentPoly laurent_det(const std::vector<std::vector<LaurentPoly>> &m);

/// Adjugate matrix, same method.
std::vector<std::vector<LaurentPoly>>
laurent_adjugate(const std::vector<std::vector<LaurentPoly>> &m);

} // namespace sympdef
