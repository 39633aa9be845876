#pragma once

#include "sympdef/linalg.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace sympdef {

/// Raw ingestion data for a finite-dimensional differential graded Lie
/// algebra over Q.
struct DglaSpec {
	int kmin = 0;
	int kmax = 0;
	std::map<int, std::size_t> dims;
	/// d restricted to degree k: matrix dim(k+1) x dim(k).
	std::map<int, QMat> differentials;
	/// bracket[(i,j)][a][b] = [e_a, e_b] in V^{i+j} coordinates.
	std::map<std::pair<int, int>, std::vector<std::vector<QVec>>> brackets;
	/// optional display names per degree
	std::map<int, std::vector<std::string>> labels;
};

class Dgla;
using DglaPtr = std::shared_ptr<const Dgla>;

/// Validated DGLA: d^2 = 0, graded antisymmetry, graded Jacobi, and d a
/// derivation of the bracket, all checked on basis tuples at construction.
class Dgla {
public:
	/// Throws NotADifferential / JacobiFails / NotADerivation with a witness
	/// tuple in the message. Antisymmetry defects report as JacobiFails.
	static DglaPtr validate(DglaSpec spec);

	std::size_t dim(int k) const;
	int kmin() const { return spec_.kmin; }
	int kmax() const { return spec_.kmax; }
	const DglaSpec &spec() const { return spec_; }

	QVec d(int k, const QVec &v) const;
	QVec bracket(int i, const QVec &a, int j, const QVec &b) const;

	std::string describe(int k, const QVec &v) const;

	/// Basis of H^2 = ker(d: V^2 -> V^3) / im(d: V^1 -> V^2), as ambient
	/// representatives, plus the machinery to read off class coordinates.
	struct H2Data {
		std::vector<QVec> representatives;
		/// coordinates of a closed v in the representative basis, after
		/// reduction modulo exact vectors; nullopt if v is not closed.
		std::optional<QVec> coords_of(const QVec &v) const;
		Subspace image{0};   // im(d_1) inside V^2
		QMat closed_check;   // d_2 matrix
		std::vector<QVec> kernel_basis;
	};
	const H2Data &h2() const { return h2_; }

private:
	Dgla() = default;
	DglaSpec spec_;
	H2Data h2_;
};

/// Truncated Maurer-Cartan series gamma(t) = sum t^k gamma_k, gamma_k in V^1.
struct McSeries {
	DglaPtr dgla;
	std::vector<QVec> coefficients; // coefficients[k-1] = gamma_k
	std::size_t order() const { return coefficients.size(); }
};

struct McOutcome {
	/// extended series when solvable
	std::optional<McSeries> series;
	/// at the first unsolvable order: the order and the obstruction class
	/// in H^2 coordinates
	std::optional<std::size_t> obstructed_at;
	QVec obstruction_class;
	QVec obstruction_rep; // the d-closed right-hand side itself
};

/// One order-raising step: solve d(gamma_{n+1}) = -1/2 sum_{i+j=n+1}
/// [gamma_i, gamma_j]. The right side is asserted d-closed; when it is not
/// exact the obstruction class is reported instead.
McOutcome mc_step(const McSeries &g);

/// Iterate mc_step from a d-closed gamma_1 to the requested order.
/// Throws NotClosedInput when d(gamma1) != 0.
McOutcome mc_solve(const DglaPtr &dgla, const QVec &gamma1, std::size_t order);

/// Residuals of the full Maurer-Cartan equation per order, computed by
/// direct expansion (independent of the solver path).
std::vector<QVec> check_mc(const McSeries &g);

} // namespace sympdef
