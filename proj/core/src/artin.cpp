#include "sympdef/artin.hpp"
#include "sympdef/errors.hpp"

#include <algorithm>
#include <set>

namespace sympdef {

QVec ArtinAlgebra::truncate_to_vec(const PolyMap &p) const
{
	QVec v(monos_.size());
	for (const auto &[e, c] : p)
	{
		for (int k : e)
			if (k < 0)
				fail(errc::invalid_argument, "negative exponent in algebra element");
		if (total_degree(e) >= order_)
			continue;
		v[mono_index_.at(e)] = c;
	}
	return v;
}

ArtinPtr ArtinAlgebra::create(std::vector<std::string> generators,
                              std::vector<PolyMap> ideal_generators, int order)
{
	if (order < 1)
		fail(errc::invalid_argument, "nilpotency order must be >= 1");
	{
		std::set<std::string> seen;
		for (const auto &n : generators)
			if (n.empty() || !seen.insert(n).second)
				fail(errc::invalid_argument, "generator names must be unique and nonempty");
	}
	auto alg = std::shared_ptr<ArtinAlgebra>(new ArtinAlgebra());
	ArtinAlgebra &a = *alg;
	a.names_ = std::move(generators);
	a.ideal_gens_ = std::move(ideal_generators);
	a.order_ = order;

	const std::size_t m = a.names_.size();
	a.monos_ = monomials_up_to(m, order - 1);
	for (std::size_t i = 0; i < a.monos_.size(); ++i)
		a.mono_index_[a.monos_[i]] = i;

	// span of the ideal inside the truncated monomial space
	std::vector<QVec> rows;
	for (const auto &g : a.ideal_gens_)
	{
		if (g.empty())
			continue;
		for (const auto &u : a.monos_)
		{
			PolyMap ug = pmul(pmonomial(u), g);
			QVec row = a.truncate_to_vec(ug);
			if (!is_zero(row))
				rows.push_back(std::move(row));
		}
	}
	a.ideal_space_ = Subspace(a.monos_.size(), rows);

	for (auto p : a.ideal_space_.pivots())
		if (p == 0)
			fail(errc::not_local, "ideal contains a unit");

	for (auto f : a.ideal_space_.free_positions())
		a.basis_.push_back(a.monos_[f]);

	// multiplication table
	const std::size_t n = a.basis_.size();
	a.table_.assign(n, std::vector<QVec>(n));
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = i; j < n; ++j)
		{
			PolyMap prod = pmul(pmonomial(a.basis_[i]), pmonomial(a.basis_[j]));
			QVec v = a.nf(prod);
			a.table_[i][j] = v;
			a.table_[j][i] = std::move(v);
		}

	// m-adic powers
	std::vector<QVec> gens_in_a;
	for (std::size_t g = 0; g < m; ++g)
	{
		Exps e(m, 0);
		e[g] = 1;
		gens_in_a.push_back(a.nf(pmonomial(e)));
	}
	Subspace current(n);
	{
		std::vector<QVec> first;
		for (std::size_t g = 0; g < m; ++g)
			for (std::size_t b = 0; b < n; ++b)
			{
				QVec v = a.mul(gens_in_a[g], a.nf(pmonomial(a.basis_[b])));
				if (!is_zero(v))
					first.push_back(std::move(v));
			}
		current = Subspace(n, first);
	}
	a.nilpotency_ = 1;
	while (current.dim() > 0)
	{
		a.powers_.push_back(current);
		++a.nilpotency_;
		std::vector<QVec> next;
		for (const auto &v : current.basis())
			for (std::size_t g = 0; g < m; ++g)
			{
				QVec w = a.mul(gens_in_a[g], v);
				if (!is_zero(w))
					next.push_back(std::move(w));
			}
		current = Subspace(n, next);
	}
	a.zero_space_ = Subspace(n);
	return alg;
}

ArtinPtr ArtinAlgebra::rationals()
{
	static ArtinPtr q = create({}, {}, 1);
	return q;
}

QVec ArtinAlgebra::nf(const PolyMap &p) const
{
	return ideal_space_.quotient_coords(truncate_to_vec(p));
}

QVec ArtinAlgebra::one() const
{
	QVec v(dim());
	v[0] = Rational(1);
	return v;
}

QVec ArtinAlgebra::mul(const QVec &a, const QVec &b) const
{
	QVec r(dim());
	for (std::size_t i = 0; i < dim(); ++i)
	{
		if (a[i].is_zero())
			continue;
		for (std::size_t j = 0; j < dim(); ++j)
		{
			if (b[j].is_zero())
				continue;
			Rational c = a[i] * b[j];
			const QVec &t = table_[i][j];
			for (std::size_t k = 0; k < dim(); ++k)
				if (!t[k].is_zero())
					r[k] += c * t[k];
		}
	}
	return r;
}

PolyMap ArtinAlgebra::to_poly(const QVec &v) const
{
	PolyMap p;
	for (std::size_t i = 0; i < dim(); ++i)
		padd_term(p, basis_[i], v[i]);
	return p;
}

const Subspace &ArtinAlgebra::power(int k) const
{
	if (k < 1)
		fail(errc::invalid_argument, "m-adic power wants k >= 1");
	if (static_cast<std::size_t>(k) > powers_.size())
		return zero_space_;
	return powers_[k - 1];
}

int ArtinAlgebra::madic_order(const QVec &v) const
{
	if (is_zero(v))
		return nilpotency_;
	int best = 0;
	for (int k = 1; static_cast<std::size_t>(k) <= powers_.size(); ++k)
		if (powers_[k - 1].contains(v))
			best = k;
		else
			break;
	return best;
}

std::string ArtinAlgebra::describe(const QVec &v) const
{
	return poly_str(to_poly(v), names_);
}

bool ArtinAlgebra::same_as(const ArtinAlgebra &o) const
{
	// every one-dimensional algebra is canonically Q
	if (dim() == 1 && o.dim() == 1)
		return true;
	return names_ == o.names_ && basis_ == o.basis_ && table_ == o.table_;
}

bool same_base(const ArtinPtr &a, const ArtinPtr &b)
{
	return a == b || (a && b && a->same_as(*b));
}

QVec transport_monomial(const ArtinAlgebra &from, std::size_t basis_idx,
                        const ArtinAlgebra &to)
{
	const Exps &e = from.basis()[basis_idx];
	Exps out(to.gen_count(), 0);
	for (std::size_t i = 0; i < e.size(); ++i)
	{
		if (e[i] == 0)
			continue;
		const std::string &name = from.gen_names()[i];
		bool found = false;
		for (std::size_t j = 0; j < to.gen_count(); ++j)
			if (to.gen_names()[j] == name)
			{
				out[j] = e[i];
				found = true;
				break;
			}
		if (!found)
			fail(errc::base_mismatch, "generator '" + name +
			                              "' is absent from the target algebra");
	}
	return to.nf(pmonomial(out));
}

ArtinIdeal ArtinIdeal::from_polys(const ArtinPtr &a, const std::vector<PolyMap> &gens)
{
	std::vector<QVec> span;
	for (const auto &g : gens)
	{
		QVec vg = a->nf(g);
		for (std::size_t b = 0; b < a->dim(); ++b)
		{
			QVec v = a->mul(vg, a->nf(pmonomial(a->basis()[b])));
			if (!is_zero(v))
				span.push_back(std::move(v));
		}
	}
	return ArtinIdeal(a, Subspace(a->dim(), span));
}

ArtinIdeal ArtinIdeal::from_vectors(const ArtinPtr &a, const std::vector<QVec> &span)
{
	Subspace s(a->dim(), span);
	const std::size_t m = a->gen_count();
	for (const auto &v : s.basis())
		for (std::size_t g = 0; g < m; ++g)
		{
			Exps e(m, 0);
			e[g] = 1;
			QVec w = a->mul(a->nf(pmonomial(e)), v);
			if (!s.contains(w))
				fail(errc::not_an_ideal,
				     "span not closed under multiplication by " + a->gen_names()[g]);
		}
	return ArtinIdeal(a, std::move(s));
}

ArtinIdeal ArtinIdeal::maximal_power(const ArtinPtr &a, int k)
{
	return ArtinIdeal(a, a->power(k));
}

ArtinIdeal ArtinIdeal::zero(const ArtinPtr &a)
{
	return ArtinIdeal(a, Subspace(a->dim()));
}

bool ArtinIdeal::square_zero() const
{
	auto b = basis();
	for (const auto &v : b)
		for (const auto &w : b)
			if (!is_zero(parent_->mul(v, w)))
				return false;
	return true;
}

ArtinQuotient artin_quotient(const ArtinPtr &a, const ArtinIdeal &ideal)
{
	if (!same_base(a, ideal.parent()))
		fail(errc::base_mismatch, "ideal of a different algebra");
	std::vector<PolyMap> gens = a->ideal_generators();
	for (const auto &v : ideal.basis())
		gens.push_back(a->to_poly(v));
	ArtinPtr q = ArtinAlgebra::create(a->gen_names(), gens, a->order());
	if (q->dim() + ideal.dim() != a->dim())
		fail(errc::not_an_ideal, "quotient dimension mismatch");
	QMat map(q->dim(), a->dim());
	for (std::size_t b = 0; b < a->dim(); ++b)
	{
		QVec img = q->nf(pmonomial(a->basis()[b]));
		for (std::size_t i = 0; i < q->dim(); ++i)
			map.at(i, b) = img[i];
	}
	return ArtinQuotient{std::move(q), std::move(map)};
}

std::vector<FiltrationStep> madic_filtration(const ArtinPtr &a)
{
	std::vector<FiltrationStep> steps;
	ArtinPtr cur = a;
	for (int k = a->nilpotency() - 1; k >= 1; --k)
	{
		ArtinIdeal ideal = ArtinIdeal::maximal_power(cur, k);
		ArtinQuotient q = artin_quotient(cur, ideal);
		ArtinPtr next = q.algebra;
		steps.push_back(FiltrationStep{cur, std::move(ideal), std::move(q)});
		cur = next;
	}
	return steps;
}

std::vector<std::pair<std::size_t, std::size_t>>
ideal_tensor_basis(const ArtinIdeal &ideal, std::size_t v_dim)
{
	std::vector<std::pair<std::size_t, std::size_t>> out;
	for (std::size_t v = 0; v < v_dim; ++v)
		for (std::size_t k = 0; k < ideal.dim(); ++k)
			out.emplace_back(v, k);
	return out;
}

} // namespace sympdef
