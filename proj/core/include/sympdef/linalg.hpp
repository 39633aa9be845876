#pragma once

#include "sympdef/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace sympdef {

using QVec = std::vector<Rational>;

bool is_zero(const QVec &v);
QVec operator+(const QVec &a, const QVec &b);
QVec operator-(const QVec &a, const QVec &b);
QVec operator*(const Rational &c, const QVec &v);

/// Dense matrix over the rationals, row major.
class QMat {
public:
	QMat() : rows_(0), cols_(0) {}
	QMat(std::size_t rows, std::size_t cols)
	    : rows_(rows), cols_(cols), a_(rows * cols) {}

	static QMat identity(std::size_t n);
	static QMat from_rows(const std::vector<QVec> &rows, std::size_t cols);

	std::size_t rows() const { return rows_; }
	std::size_t cols() const { return cols_; }

	Rational &at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
	const Rational &at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

	QVec row(std::size_t i) const;
	void append_row(const QVec &r);

	QVec apply(const QVec &v) const; // matrix * column vector
	QMat mul(const QMat &other) const;

	bool operator==(const QMat &o) const = default;

private:
	std::size_t rows_, cols_;
	std::vector<Rational> a_;
};

/// In-place reduced row echelon form; returns the pivot column of each
/// surviving row. Zero rows are removed.
std::vector<std::size_t> rref(QMat &m);

std::size_t rank(QMat m);

/// One solution of M x = b with all free variables set to zero, or nullopt
/// if the system is inconsistent.
std::optional<QVec> solve(const QMat &m, const QVec &b);

/// Canonical basis of the right nullspace (one vector per free column, free
/// coordinate set to 1).
std::vector<QVec> nullspace(const QMat &m);

/// A linear subspace of Q^dim held in reduced row echelon form. Supports
/// membership tests, canonical reduction modulo the subspace, and reading
/// quotient coordinates off the non-pivot positions.
class Subspace {
public:
	explicit Subspace(std::size_t ambient_dim);
	Subspace(std::size_t ambient_dim, const std::vector<QVec> &spanning);

	std::size_t ambient_dim() const { return ambient_; }
	std::size_t dim() const { return mat_.rows(); }

	void insert(const QVec &v); // extend span, re-reduce
	bool contains(const QVec &v) const;

	/// v minus its projection onto the subspace along pivot coordinates;
	/// the result has zero entries at all pivot positions.
	QVec reduce(QVec v) const;

	/// Coordinates of v's class in the quotient, read off the non-pivot
	/// positions of reduce(v).
	QVec quotient_coords(const QVec &v) const;

	/// Ambient representative with the given quotient coordinates (zero at
	/// pivot positions).
	QVec quotient_lift(const QVec &coords) const;

	const std::vector<std::size_t> &pivots() const { return pivots_; }
	const std::vector<std::size_t> &free_positions() const { return free_; }
	QVec basis_vector(std::size_t i) const { return mat_.row(i); }
	std::vector<QVec> basis() const;

	/// Coordinates of v in the rref basis; nullopt if v is not in the span.
	std::optional<QVec> coordinates_of(const QVec &v) const;

private:
	void recompute_free();
	std::size_t ambient_;
	QMat mat_;
	std::vector<std::size_t> pivots_;
	std::vector<std::size_t> free_;
};

} // namespace sympdef
