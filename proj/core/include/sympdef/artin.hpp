#pragma once

#include "sympdef/linalg.hpp"
#include "sympdef/poly.hpp"

#include <memory>
#include <string>
#include <vector>

namespace sympdef {

class ArtinAlgebra;
using ArtinPtr = std::shared_ptr<const ArtinAlgebra>;

/// Finite-dimensional local algebra Q[t_1..t_m]/(ideal + m^order). Elements
/// are coordinate vectors over the standard-monomial basis; the basis, the
/// normal form and the multiplication table are fixed at construction by
/// graded-lex Gaussian elimination of the ideal against all monomials of
/// degree < order.
class ArtinAlgebra {
public:
	static ArtinPtr create(std::vector<std::string> generators,
	                       std::vector<PolyMap> ideal_generators, int order);
	/// The trivial base Q (no generators).
	static ArtinPtr rationals();

	std::size_t dim() const { return basis_.size(); }
	std::size_t gen_count() const { return names_.size(); }
	int order() const { return order_; }
	/// Smallest p with m^p = 0; may be below the declared order.
	int nilpotency() const { return nilpotency_; }
	const std::vector<std::string> &gen_names() const { return names_; }
	const std::vector<Exps> &basis() const { return basis_; }
	const std::vector<PolyMap> &ideal_generators() const { return ideal_gens_; }
	bool is_trivial() const { return dim() == 1; }

	QVec nf(const PolyMap &p) const;
	QVec one() const;
	QVec mul(const QVec &a, const QVec &b) const;
	PolyMap to_poly(const QVec &v) const;

	/// m^k as a subspace of the algebra, k >= 1.
	const Subspace &power(int k) const;
	/// Largest k with v in m^k (nilpotency() for v = 0).
	int madic_order(const QVec &v) const;

	std::string describe(const QVec &v) const;
	bool same_as(const ArtinAlgebra &o) const;

private:
	ArtinAlgebra() = default;

	std::vector<std::string> names_;
	std::vector<PolyMap> ideal_gens_;
	int order_ = 1;
	int nilpotency_ = 1;
	std::vector<Exps> basis_;
	std::vector<std::vector<QVec>> table_; // table_[i][j] = basis_i * basis_j
	std::vector<Subspace> powers_;         // powers_[k-1] = m^k, up to nilpotency
	Subspace zero_space_{0};

	// normal-form data: all monomials of degree < order and the rref'd
	// ideal subspace inside their span
	std::vector<Exps> monos_;
	std::map<Exps, std::size_t, GradedLexLess> mono_index_;
	Subspace ideal_space_{0};

	QVec truncate_to_vec(const PolyMap &p) const;
};

bool same_base(const ArtinPtr &a, const ArtinPtr &b);

/// The basis monomial `basis_idx` of `from`, re-expressed in `to` by
/// matching generator names (the monomial section used by lifts).
QVec transport_monomial(const ArtinAlgebra &from, std::size_t basis_idx,
                        const ArtinAlgebra &to);

/// Ideal of an Artin algebra presented as a subspace closed under
/// multiplication by the generators.
class ArtinIdeal {
public:
	static ArtinIdeal from_polys(const ArtinPtr &a, const std::vector<PolyMap> &gens);
	/// Validates closure under multiplication by the algebra generators;
	/// throws NotAnIdeal otherwise.
	static ArtinIdeal from_vectors(const ArtinPtr &a, const std::vector<QVec> &span);
	static ArtinIdeal maximal_power(const ArtinPtr &a, int k);
	static ArtinIdeal zero(const ArtinPtr &a);

	const ArtinPtr &parent() const { return parent_; }
	const Subspace &span() const { return span_; }
	std::vector<QVec> basis() const { return span_.basis(); }
	std::size_t dim() const { return span_.dim(); }
	bool contains(const QVec &v) const { return span_.contains(v); }
	bool square_zero() const;

private:
	ArtinIdeal(ArtinPtr parent, Subspace span)
	    : parent_(std::move(parent)), span_(std::move(span)) {}
	ArtinPtr parent_;
	Subspace span_;
};

/// A/I together with the quotient map in basis coordinates.
struct ArtinQuotient {
	ArtinPtr algebra;
	QMat map; // dim(A/I) x dim(A)
	QVec reduce(const QVec &v) const { return map.apply(v); }
};

ArtinQuotient artin_quotient(const ArtinPtr &a, const ArtinIdeal &ideal);

/// One elementary step of the m-adic chain: kill m^k inside the current
/// algebra, landing on the next quotient.
struct FiltrationStep {
	ArtinPtr algebra;
	ArtinIdeal ideal;
	ArtinQuotient quotient;
};

/// The chain A -> A/m^{p-1} -> ... -> A/m -> Q, one step per power.
std::vector<FiltrationStep> madic_filtration(const ArtinPtr &a);

/// Ordered basis of V (x) I for an abstract V of dimension v_dim: pairs
/// (V index, ideal basis index).
std::vector<std::pair<std::size_t, std::size_t>>
ideal_tensor_basis(const ArtinIdeal &ideal, std::size_t v_dim);

} // namespace sympdef
