#pragma once

#include "sympdef/artin.hpp"
#include "sympdef/laurent.hpp"
#include "sympdef/space.hpp"

#include <map>

namespace sympdef {

/// Process-wide cap on stored term counts (env SYMPDEF_MAXTERMS, default 1e6).
std::size_t term_budget();

/// One monomial of a relative p-form on X x S over S: a coefficient times
/// x^exps * dx_{idx[0]} ^ ... ^ dx_{idx[p-1]} (idx strictly increasing)
/// times a base-algebra basis monomial.
struct FormKey {
	Exps exps;
	std::vector<int> idx;
	std::size_t base;

	friend bool operator==(const FormKey &, const FormKey &) = default;
};

struct FormKeyLess {
	bool operator()(const FormKey &a, const FormKey &b) const
	{
		GradedLexLess lt;
		if (a.exps != b.exps)
			return lt(a.exps, b.exps);
		if (a.idx != b.idx)
			return a.idx < b.idx;
		return a.base < b.base;
	}
};

/// Relative algebraic p-form with coefficients in O(X) (x) A, exact rational
/// arithmetic throughout. Immutable value semantics; all operations return
/// new forms.
class RelForm {
public:
	RelForm(Space space, ArtinPtr base, int degree);

	static RelForm zero(Space space, ArtinPtr base, int degree);
	/// 0-form from a scalar Laurent polynomial (constant base coefficient).
	static RelForm scalar(const LaurentPoly &f, ArtinPtr base);
	/// dlog x_i (laurent) or dx_i (plain).
	static RelForm pair_one_form(const Space &space, ArtinPtr base, int var);

	const Space &space() const { return space_; }
	const ArtinPtr &base() const { return base_; }
	int degree() const { return degree_; }
	const std::map<FormKey, Rational, FormKeyLess> &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	std::size_t term_count() const { return terms_.size(); }

	void add_term(FormKey key, const Rational &c);

	RelForm operator+(const RelForm &o) const;
	RelForm operator-(const RelForm &o) const;
	RelForm operator-() const;
	RelForm scaled(const Rational &c) const;
	/// Multiply by an algebra element.
	RelForm scaled_base(const QVec &a) const;
	/// Multiply by a scalar function (a 0-form); for p-forms this is the
	/// wedge with a 0-form, kept separate for clarity at call sites.
	RelForm scaled_fn(const RelForm &f) const;

	/// Exterior derivative in the X directions (the base is inert).
	RelForm d() const;
	bool is_closed() const { return d().is_zero(); }

	/// Interior product with a list of component functions (0-forms),
	/// contracting on the first form index.
	RelForm contract_with(const std::vector<RelForm> &components) const;

	/// Reduction of base coefficients along A -> A/I.
	RelForm base_change(const ArtinQuotient &q) const;
	/// Push constant-coefficient forms into a bigger base.
	RelForm with_base(const ArtinPtr &new_base) const;
	/// The part whose base coefficient is the constant monomial, as a form
	/// over the trivial base.
	RelForm closed_fiber() const;
	/// Smallest m-adic order among base coefficients (nilpotency for 0).
	int madic_order() const;

	/// Extract the coefficient of each base basis monomial as a form over Q.
	std::vector<RelForm> base_components() const;

	bool operator==(const RelForm &o) const;

	std::string str() const;

private:
	void check_key(const FormKey &k) const;
	Space space_;
	ArtinPtr base_;
	int degree_;
	std::map<FormKey, Rational, FormKeyLess> terms_;
};

RelForm wedge(const RelForm &a, const RelForm &b);

/// Sign of merging two disjoint strictly increasing index sets into one;
/// nullopt when they intersect.
std::optional<std::pair<int, std::vector<int>>>
merge_indices(const std::vector<int> &a, const std::vector<int> &b);

} // namespace sympdef
