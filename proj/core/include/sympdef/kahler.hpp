#pragma once

#include "sympdef/artin.hpp"

#include <optional>

namespace sympdef {

/// Module of Kahler differentials of an Artin algebra over Q, computed from
/// the presentation: ambient space (+) A dt_i modulo the span of a*dg for
/// all ideal generators g (including the implicit degree-p monomials) and
/// basis elements a.
class KahlerDiff {
public:
	explicit KahlerDiff(ArtinPtr algebra);

	const ArtinPtr &algebra() const { return algebra_; }
	std::size_t dim() const { return basis_.size(); }
	/// Basis element i is the class of (algebra basis index, generator index).
	const std::vector<std::pair<std::size_t, std::size_t>> &basis() const
	{
		return basis_;
	}

	/// Universal derivation d : A -> Omega^1(A).
	QVec d(const QVec &a) const;
	/// Module structure a * w.
	QVec mul(const QVec &a, const QVec &w) const;

	QVec project_ambient(const QVec &ambient) const;
	QVec lift_to_ambient(const QVec &w) const;

	std::string describe(const QVec &w) const;

private:
	ArtinPtr algebra_;
	Subspace relations_{0}; // inside the ambient A^m
	std::vector<std::pair<std::size_t, std::size_t>> basis_;
	std::size_t ambient_dim_ = 0;
	std::size_t coord(std::size_t basis_idx, std::size_t gen_idx) const;
};

/// Omega^1(A) (x)_A A/I, i.e. Omega^1(A) / I*Omega^1(A).
class ReducedKahler {
public:
	ReducedKahler(const KahlerDiff &kd, const ArtinIdeal &ideal);

	std::size_t dim() const;
	/// Class of an Omega^1(A) element.
	QVec project(const QVec &omega1) const;
	/// Indices of the Omega^1 basis elements whose classes form the basis.
	const std::vector<std::size_t> &basis_from() const;
	const Subspace &reduced_out() const { return quotient_; }

private:
	Subspace quotient_; // I * Omega^1 inside Omega^1 coordinates
	std::vector<std::size_t> basis_from_;
};

struct ElementaryResult {
	bool elementary;
	/// A nonzero ideal element killed by d into Omega^1(A)(x)A/I, when not
	/// elementary.
	std::optional<QVec> witness;
};

/// Left-exactness test for the differentials sequence of a square-zero
/// extension: is d : I -> Omega^1(A)(x)A/I injective?
ElementaryResult is_elementary(const ArtinPtr &a, const ArtinIdeal &ideal);

/// The canonical surjection eta : Omega^1(A)(x)A/I -> Omega^1(A/I), as an
/// explicit matrix in the canonical bases.
struct EtaMap {
	KahlerDiff source_full;   // Omega^1(A)
	ReducedKahler source;     // Omega^1(A)(x)A/I
	ArtinQuotient quotient;   // A -> A/I
	KahlerDiff target;        // Omega^1(A/I)
	QMat matrix;              // dim(target) x dim(source)

	QVec apply(const QVec &reduced) const { return matrix.apply(reduced); }
	std::vector<QVec> kernel() const { return nullspace(matrix); }
};

EtaMap restrict_differentials(const ArtinPtr &a, const ArtinIdeal &ideal);

} // namespace sympdef
