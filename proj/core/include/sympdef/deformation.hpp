#pragma once

#include "sympdef/derham.hpp"
#include "sympdef/symplectic.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sympdef {

/// Symplectic deformation of a model space over an Artin base: a closed
/// relative 2-form, nondegenerate, restricting to the reference form at the
/// closed point.
class Deformation {
public:
	const Space &space() const { return omega_.space(); }
	const ArtinPtr &base() const { return omega_.base(); }
	const RelForm &omega() const { return omega_; }
	const RelForm &reference() const { return reference_; }
	SymplecticForm symplectic() const { return SymplecticForm(omega_); }

	friend Deformation make_deformation(const Space &space, const ArtinPtr &base,
	                                    const RelForm &omega);

private:
	Deformation(RelForm omega, RelForm reference)
	    : omega_(std::move(omega)), reference_(std::move(reference)) {}
	RelForm omega_;
	RelForm reference_;
};

/// Validates closedness, the closed fiber, and nondegeneracy; throws
/// NotClosed / WrongClosedFiber / Degenerate.
Deformation make_deformation(const Space &space, const ArtinPtr &base,
                             const RelForm &omega);

Deformation restrict_deformation(const Deformation &d, const ArtinQuotient &q);

/// Class of the base-direction derivative of omega: a matrix of rational
/// coordinates, rows indexed by the degree-2 cohomology basis, columns by
/// the Kahler-differential basis of the base.
struct KsClass {
	std::vector<std::vector<int>> h2_subsets; // cohomology basis labels
	QMat coords;                              // dim(H^2) x dim(Omega^1(A))
	bool operator==(const KsClass &o) const = default;
};

KsClass kodaira_spencer(const Deformation &d, const KahlerDiff &kd);
KsClass kodaira_spencer(const Deformation &d);

/// KS class of a one-step lift, valued in Omega^1(A) (x) A/I coordinates.
struct KsLiftClass {
	std::vector<std::vector<int>> h2_subsets;
	QMat coords; // dim(H^2) x dim(Omega^1(A) (x) A/I)
	bool operator==(const KsLiftClass &o) const = default;
};

/// Cohomology coordinates of omega: one base-algebra element per degree-2
/// cohomology class; reduction at the closed point recovers the reference.
struct PeriodPoint {
	Space space;
	ArtinPtr base;
	std::vector<std::vector<int>> h2_subsets;
	std::vector<QVec> coords;

	bool same_point(const PeriodPoint &o) const;
	/// first differing cohomology coordinate, for NoneExists witnesses
	std::optional<std::size_t> first_difference(const PeriodPoint &o) const;
};

PeriodPoint period_map(const Deformation &d);

/// Canonical deformation with the requested periods: reference plus the
/// (coordinate minus reference-coordinate) multiples of the basis
/// representatives. The constant term must equal the reference class.
Deformation construct_from_period(const Space &space, const ArtinPtr &base,
                                  const PeriodPoint &target);
/// Convenience: period point with given coordinates.
PeriodPoint make_period_point(const Space &space, const ArtinPtr &base,
                              std::vector<QVec> coords);

/// Base-change of a period point along A -> A/I.
PeriodPoint restrict_period(const PeriodPoint &p, const ArtinQuotient &q);

/// Fiberwise automorphism of X x S assembled Moser-style: one vector field
/// with step-ideal coefficients per elementary step walked.
struct DefIsomorphism {
	std::vector<VectorField> steps;
	/// pullback of a form through the composed automorphism
	RelForm apply(const RelForm &w) const;
};

/// Substitution x_i -> x_i + xi_i (the field's coefficients must be
/// nilpotent, i.e. lie in the maximal ideal of the base).
RelForm pullback(const RelForm &w, const VectorField &xi);

struct IsoResult {
	std::optional<DefIsomorphism> iso;
	/// on failure: index of a differing period coordinate and both values
	std::optional<std::size_t> witness_coordinate;
	std::string detail;
};

/// Moser walk along the m-adic filtration; succeeds exactly when the two
/// deformations have equal periods.
IsoResult find_isomorphism(const Deformation &d1, const Deformation &d2);

/// One elementary-step lift datum: the particular lift of the KS class of
/// d0 through A -> A/I, plus the torsor directions H^2 (x) I.
struct KsLiftSet {
	KsLiftClass particular;
	std::size_t h2_dim = 0;
	std::size_t ideal_dim = 0;
	std::size_t torsor_dim = 0; // h2_dim * ideal_dim
	std::vector<std::pair<std::size_t, std::size_t>> torsor_basis;
	/// image in the reduced Kahler module of each ideal basis vector
	/// (the injection whose existence is the elementary condition)
	QMat delta; // dim(Omega^1(A) (x) A/I) x dim(I)

	/// particular + sum over torsor coordinates c[(h,k)] of the translate
	KsLiftClass translate(const QMat &c) const;
};

/// Throws NotSquareZero / NotElementary; d0 must live over A/I.
KsLiftSet ks_lift_set(const Deformation &d0, const ArtinPtr &a,
                      const ArtinIdeal &ideal);

/// Deformation over A restricting to d0 with the given lifted KS class;
/// throws InconsistentLift when eta(theta) differs from the class of d0.
Deformation lift_deformation(const Deformation &d0, const ArtinPtr &a,
                             const ArtinIdeal &ideal, const KsLiftClass &theta);

/// Structured pass/fail report shared by the verification drivers.
struct Report {
	std::size_t round_trips = 0;
	std::size_t isomorphism_checks = 0;
	std::vector<std::size_t> torsor_dims;
	std::vector<std::string> failures;
	bool ok() const { return failures.empty(); }
};

/// Desk-scale bijectivity run: construct from every sampled period point,
/// round-trip the periods, pair up equal/unequal periods (including exact
/// perturbations) and check find_isomorphism agrees.
Report verify_period_bijection(const Space &space, const ArtinPtr &base,
                               const std::vector<PeriodPoint> &sample,
                               std::size_t perturbations_per_point = 1);

/// Checks that contraction with the reference form (or an override) is a
/// bijection between monomial blocks of fields and 1-forms with coefficients
/// in a square-zero ideal, and that isomorphism classes of reference + beta
/// match period coordinates.
Report contraction_bijection_report(const Space &space, const ArtinPtr &base,
                                    const ArtinIdeal &ideal, int max_abs_exp,
                                    const std::optional<RelForm> &reference_override =
                                        std::nullopt);

/// Two-route consistency of the KS data: direct decomposition of the
/// base-derivative versus slice -> raise -> contract -> reassemble through
/// the deformed form.
Report ks_route_comparison(const Deformation &d);

} // namespace sympdef
