#pragma once

#include "sympdef/kahler.hpp"
#include "sympdef/relform.hpp"

namespace sympdef {

/// Closed representatives of H^p(X): all p-fold products of dlog of the
/// laurent coordinates (the constant 1 for p = 0).
struct CohomologyBasis {
	Space space;
	int degree;
	std::vector<std::vector<int>> subsets; // laurent index subsets, sorted
	std::vector<RelForm> representatives;  // over the given base

	std::size_t dim() const { return representatives.size(); }
};

CohomologyBasis cohomology_basis(const Space &space, int degree,
                                 const ArtinPtr &base);

/// Exact splitting of a closed form: w = sum coords_i * basis_i + d(primitive),
/// with coords in the base algebra. The primitive is the canonical output of
/// a variable-by-variable monomial integration homotopy.
struct Decomposition {
	std::vector<QVec> coords; // one algebra element per cohomology basis class
	RelForm primitive;
};

Decomposition decompose(const RelForm &w);

/// Base-direction derivative of a form over A on the trivialized family:
/// one form component (over Q) per Omega^1(A) basis element.
struct BaseDerivative {
	std::vector<RelForm> components;
};

BaseDerivative gauss_manin(const RelForm &w, const KahlerDiff &kd);

/// Hodge (stupid) filtration check: a form lies in F^i iff degree >= i or
/// it vanishes.
bool in_filtration_level(const RelForm &w, int level);

} // namespace sympdef
