#include "sympdef/linalg.hpp"
#include "sympdef/errors.hpp"

#include <algorithm>

namespace sympdef {

bool is_zero(const QVec &v)
{
	return std::all_of(v.begin(), v.end(),
	                   [](const Rational &r) { return r.is_zero(); });
}

QVec operator+(const QVec &a, const QVec &b)
{
	QVec r(a);
	for (std::size_t i = 0; i < r.size(); ++i)
		r[i] += b[i];
	return r;
}

QVec operator-(const QVec &a, const QVec &b)
{
	QVec r(a);
	for (std::size_t i = 0; i < r.size(); ++i)
		r[i] -= b[i];
	return r;
}

QVec operator*(const Rational &c, const QVec &v)
{
	QVec r(v);
	for (auto &x : r)
		x *= c;
	return r;
}

QMat QMat::identity(std::size_t n)
{
	QMat m(n, n);
	for (std::size_t i = 0; i < n; ++i)
		m.at(i, i) = Rational(1);
	return m;
}

QMat QMat::from_rows(const std::vector<QVec> &rows, std::size_t cols)
{
	QMat m(rows.size(), cols);
	for (std::size_t i = 0; i < rows.size(); ++i)
		for (std::size_t j = 0; j < cols; ++j)
			m.at(i, j) = rows[i][j];
	return m;
}

QVec QMat::row(std::size_t i) const
{
	QVec r(cols_);
	for (std::size_t j = 0; j < cols_; ++j)
		r[j] = at(i, j);
	return r;
}

void QMat::append_row(const QVec &r)
{
	if (cols_ == 0 && rows_ == 0)
		cols_ = r.size();
	a_.insert(a_.end(), r.begin(), r.end());
	++rows_;
}

QVec QMat::apply(const QVec &v) const
{
	QVec r(rows_);
	for (std::size_t i = 0; i < rows_; ++i)
	{
		Rational s;
		for (std::size_t j = 0; j < cols_; ++j)
			if (!at(i, j).is_zero() && !v[j].is_zero())
				s += at(i, j) * v[j];
		r[i] = s;
	}
	return r;
}

QMat QMat::mul(const QMat &other) const
{
	QMat r(rows_, other.cols_);
	for (std::size_t i = 0; i < rows_; ++i)
		for (std::size_t k = 0; k < cols_; ++k)
			if (!at(i, k).is_zero())
				for (std::size_t j = 0; j < other.cols_; ++j)
					r.at(i, j) += at(i, k) * other.at(k, j);
	return r;
}

std::vector<std::size_t> rref(QMat &m)
{
	std::vector<std::size_t> pivots;
	std::size_t r = 0;
	for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c)
	{
		std::size_t sel = r;
		while (sel < m.rows() && m.at(sel, c).is_zero())
			++sel;
		if (sel == m.rows())
			continue;
		if (sel != r)
			for (std::size_t j = 0; j < m.cols(); ++j)
				std::swap(m.at(sel, j), m.at(r, j));
		Rational inv = m.at(r, c).inv();
		for (std::size_t j = c; j < m.cols(); ++j)
			m.at(r, j) *= inv;
		for (std::size_t i = 0; i < m.rows(); ++i)
		{
			if (i == r || m.at(i, c).is_zero())
				continue;
			Rational f = m.at(i, c);
			for (std::size_t j = c; j < m.cols(); ++j)
				m.at(i, j) -= f * m.at(r, j);
		}
		pivots.push_back(c);
		++r;
	}
	// drop zero rows
	QMat out(r, m.cols());
	for (std::size_t i = 0; i < r; ++i)
		for (std::size_t j = 0; j < m.cols(); ++j)
			out.at(i, j) = m.at(i, j);
	m = out;
	return pivots;
}

std::size_t rank(QMat m)
{
	return rref(m).size();
}

std::optional<QVec> solve(const QMat &m, const QVec &b)
{
	QMat aug(m.rows(), m.cols() + 1);
	for (std::size_t i = 0; i < m.rows(); ++i)
	{
		for (std::size_t j = 0; j < m.cols(); ++j)
			aug.at(i, j) = m.at(i, j);
		aug.at(i, m.cols()) = b[i];
	}
	auto pivots = rref(aug);
	QVec x(m.cols());
	for (std::size_t i = 0; i < pivots.size(); ++i)
	{
		if (pivots[i] == m.cols())
			return std::nullopt; // pivot in the constant column
		x[pivots[i]] = aug.at(i, m.cols());
	}
	return x;
}

std::vector<QVec> nullspace(const QMat &m)
{
	QMat r = m;
	auto pivots = rref(r);
	std::vector<bool> is_pivot(m.cols(), false);
	for (auto p : pivots)
		is_pivot[p] = true;
	std::vector<QVec> basis;
	for (std::size_t c = 0; c < m.cols(); ++c)
	{
		if (is_pivot[c])
			continue;
		QVec v(m.cols());
		v[c] = Rational(1);
		for (std::size_t i = 0; i < pivots.size(); ++i)
			v[pivots[i]] = -r.at(i, c);
		basis.push_back(v);
	}
	return basis;
}

Subspace::Subspace(std::size_t ambient_dim)
    : ambient_(ambient_dim), mat_(0, ambient_dim)
{
	recompute_free();
}

Subspace::Subspace(std::size_t ambient_dim, const std::vector<QVec> &spanning)
    : ambient_(ambient_dim), mat_(0, ambient_dim)
{
	for (const auto &v : spanning)
		mat_.append_row(v);
	pivots_ = rref(mat_);
	recompute_free();
}

void Subspace::recompute_free()
{
	free_.clear();
	std::vector<bool> is_pivot(ambient_, false);
	for (auto p : pivots_)
		is_pivot[p] = true;
	for (std::size_t c = 0; c < ambient_; ++c)
		if (!is_pivot[c])
			free_.push_back(c);
}

void Subspace::insert(const QVec &v)
{
	if (contains(v))
		return;
	mat_.append_row(v);
	pivots_ = rref(mat_);
	recompute_free();
}

QVec Subspace::reduce(QVec v) const
{
	for (std::size_t i = 0; i < mat_.rows(); ++i)
	{
		const Rational &f = v[pivots_[i]];
		if (f.is_zero())
			continue;
		Rational c = f; // copy: v[pivot] mutates below
		for (std::size_t j = 0; j < ambient_; ++j)
			if (!mat_.at(i, j).is_zero())
				v[j] -= c * mat_.at(i, j);
	}
	return v;
}

bool Subspace::contains(const QVec &v) const
{
	return is_zero(reduce(v));
}

QVec Subspace::quotient_coords(const QVec &v) const
{
	QVec red = reduce(v);
	QVec out(free_.size());
	for (std::size_t k = 0; k < free_.size(); ++k)
		out[k] = red[free_[k]];
	return out;
}

QVec Subspace::quotient_lift(const QVec &coords) const
{
	QVec v(ambient_);
	for (std::size_t k = 0; k < free_.size(); ++k)
		v[free_[k]] = coords[k];
	return v;
}

std::vector<QVec> Subspace::basis() const
{
	std::vector<QVec> b;
	for (std::size_t i = 0; i < mat_.rows(); ++i)
		b.push_back(mat_.row(i));
	return b;
}

std::optional<QVec> Subspace::coordinates_of(const QVec &v) const
{
	QVec coeffs(mat_.rows());
	QVec rest = v;
	for (std::size_t i = 0; i < mat_.rows(); ++i)
	{
		coeffs[i] = rest[pivots_[i]];
		if (coeffs[i].is_zero())
			continue;
		for (std::size_t j = 0; j < ambient_; ++j)
			if (!mat_.at(i, j).is_zero())
				rest[j] -= coeffs[i] * mat_.at(i, j);
	}
	if (!is_zero(rest))
		return std::nullopt;
	return coeffs;
}

} // namespace sympdef
