#pragma once

#include "sympdef/derham.hpp"
#include "sympdef/relform.hpp"

#include <map>

namespace sympdef {

/// Vector field on X x S over S; each component is a 0-form in O(X) (x) A.
class VectorField {
public:
	VectorField(Space space, ArtinPtr base);
	VectorField(Space space, ArtinPtr base, std::vector<RelForm> components);

	static VectorField zero(Space space, ArtinPtr base);
	/// c * x^e d/dx_var
	static VectorField monomial(const Space &space, const ArtinPtr &base,
	                            std::size_t var, const Exps &e,
	                            const Rational &c = Rational(1));

	const Space &space() const { return space_; }
	const ArtinPtr &base() const { return base_; }
	const std::vector<RelForm> &components() const { return components_; }
	bool is_zero() const;

	VectorField operator+(const VectorField &o) const;
	VectorField operator-(const VectorField &o) const;
	VectorField scaled(const Rational &c) const;
	VectorField scaled_base(const QVec &a) const;

	/// Derivation on functions: xi(f) = sum_i xi_i * df/dx_i.
	RelForm apply(const RelForm &f) const;

	bool operator==(const VectorField &o) const;
	std::string str() const;

private:
	Space space_;
	ArtinPtr base_;
	std::vector<RelForm> components_;
};

VectorField lie_bracket(const VectorField &a, const VectorField &b);

/// Closed nondegenerate 2-form (closedness checked at construction,
/// nondegeneracy via the predicate below).
class SymplecticForm {
public:
	explicit SymplecticForm(RelForm form);
	const RelForm &form() const { return form_; }
	const Space &space() const { return form_.space(); }
	const ArtinPtr &base() const { return form_.base(); }

	/// Coefficient matrix M with M[i][j] = coefficient of dx_i ^ dx_j
	/// (antisymmetric, entries 0-forms).
	std::vector<std::vector<RelForm>> coefficient_matrix() const;

private:
	RelForm form_;
};

/// Reference symplectic structure of a model space: dlog x ^ dlog y per
/// torus pair, dx ^ dy per affine pair.
RelForm reference_form(const Space &space, const ArtinPtr &base);

/// det of the coefficient matrix at the closed fiber is a unit monomial.
bool nondegenerate(const SymplecticForm &omega);

/// Interior product (contraction on the first index): for 1-forms a, b
/// i_xi(a ^ b) = a(xi) b - b(xi) a.
RelForm contract(const SymplecticForm &omega, const VectorField &xi);

/// Unique xi with contract(omega, xi) = alpha; throws Degenerate when the
/// coefficient matrix is not invertible over the coordinate ring.
VectorField raise(const SymplecticForm &omega, const RelForm &alpha);

/// raise(omega, df); its contraction is exact hence closed.
VectorField hamiltonian_field(const SymplecticForm &omega, const RelForm &f);

/// Vector-field-valued form with formal odd markers e_1..e_r standing in
/// for the anti-holomorphic index; the de Rham d and the Hodge-type
/// operator act on the form part only.
class TangentValuedForm {
public:
	TangentValuedForm(Space space, ArtinPtr base, int markers, int rank);

	static TangentValuedForm wrap(const VectorField &x, std::vector<int> marker_set,
	                              int markers);

	const Space &space() const { return space_; }
	const ArtinPtr &base() const { return base_; }
	int markers() const { return markers_; }
	int rank() const { return rank_; }
	const std::map<std::vector<int>, VectorField> &terms() const { return terms_; }

	void add(const std::vector<int> &marker_set, const VectorField &x);
	bool is_zero() const;
	TangentValuedForm operator+(const TangentValuedForm &o) const;

private:
	Space space_;
	ArtinPtr base_;
	int markers_;
	int rank_;
	std::map<std::vector<int>, VectorField> terms_;
};

/// Schouten bracket: [X (x) e_S, Y (x) e_T] = [X,Y] (x) e_S ^ e_T.
TangentValuedForm schouten(const TangentValuedForm &a, const TangentValuedForm &b);

/// Differential-form-valued counterpart (forms tensor odd markers).
class GrassmannForm {
public:
	GrassmannForm(Space space, ArtinPtr base, int markers, int rank, int degree);

	const Space &space() const { return space_; }
	const ArtinPtr &base() const { return base_; }
	int markers() const { return markers_; }
	int rank() const { return rank_; }
	int degree() const { return degree_; }
	const std::map<std::vector<int>, RelForm> &terms() const { return terms_; }

	void add(const std::vector<int> &marker_set, const RelForm &w);
	bool is_zero() const;
	GrassmannForm operator+(const GrassmannForm &o) const;
	GrassmannForm operator-(const GrassmannForm &o) const;

	/// Componentwise de Rham differential; markers are inert.
	GrassmannForm d() const;

	std::string str() const;

private:
	Space space_;
	ArtinPtr base_;
	int markers_;
	int rank_;
	int degree_;
	std::map<std::vector<int>, RelForm> terms_;
};

/// Index lowering: X (x) e_S to (omega contracted with X) (x) e_S.
GrassmannForm lower(const SymplecticForm &omega, const TangentValuedForm &g);

/// Wedge with the Koszul sign (-1)^{rank(a) * degree(b)} for moving the odd
/// markers of a past the form part of b.
GrassmannForm gwedge(const GrassmannForm &a, const GrassmannForm &b);

/// Contraction with the inverse symplectic bivector on the form indices,
/// normalized so lambda_op(omega, omega) = n on a 2n-dimensional space;
/// degree -2, markers untouched. Returns 0 on degrees < 2.
RelForm lambda_op(const SymplecticForm &omega, const RelForm &w);
GrassmannForm lambda_op(const SymplecticForm &omega, const GrassmannForm &w);

struct TianTodorovResult {
	bool holds;
	GrassmannForm residual;
};

/// Checks [g1,g2] = d L(g1^g2) - L(d g1^g2) - L(g1^d g2) after lowering,
/// for rank-1 inputs. The identity is a theorem for inputs whose lowering
/// is closed; the checker evaluates both sides for arbitrary inputs.
TianTodorovResult tian_todorov_check(const SymplecticForm &omega,
                                     const TangentValuedForm &g1,
                                     const TangentValuedForm &g2);

} // namespace sympdef
