#include "sympdef/kahler.hpp"
#include "sympdef/errors.hpp"

#include <sstream>

namespace sympdef {

std::size_t KahlerDiff::coord(std::size_t basis_idx, std::size_t gen_idx) const
{
	return basis_idx * algebra_->gen_count() + gen_idx;
}

KahlerDiff::KahlerDiff(ArtinPtr algebra) : algebra_(std::move(algebra))
{
	const ArtinAlgebra &a = *algebra_;
	const std::size_t m = a.gen_count();
	const std::size_t n = a.dim();
	ambient_dim_ = n * m;

	// relation generators: the explicit ideal generators plus the degree-p
	// monomials presenting the implicit m^p truncation
	std::vector<PolyMap> gens = a.ideal_generators();
	{
		auto all = monomials_up_to(m, a.order());
		for (const auto &e : all)
			if (total_degree(e) == a.order())
				gens.push_back(pmonomial(e));
	}

	std::vector<QVec> rows;
	for (const auto &g : gens)
	{
		// dg as an ambient vector of A-coefficients per direction
		std::vector<QVec> dg(m);
		for (std::size_t i = 0; i < m; ++i)
			dg[i] = a.nf(pderiv(g, i));
		for (std::size_t b = 0; b < n; ++b)
		{
			QVec bvec = a.nf(pmonomial(a.basis()[b]));
			QVec row(ambient_dim_);
			bool nonzero = false;
			for (std::size_t i = 0; i < m; ++i)
			{
				QVec prod = a.mul(bvec, dg[i]);
				for (std::size_t k = 0; k < n; ++k)
					if (!prod[k].is_zero())
					{
						row[coord(k, i)] = prod[k];
						nonzero = true;
					}
			}
			if (nonzero)
				rows.push_back(std::move(row));
		}
	}
	relations_ = Subspace(ambient_dim_, rows);
	for (auto f : relations_.free_positions())
		basis_.push_back({f / m, f % m});
}

QVec KahlerDiff::project_ambient(const QVec &ambient) const
{
	return relations_.quotient_coords(ambient);
}

QVec KahlerDiff::lift_to_ambient(const QVec &w) const
{
	return relations_.quotient_lift(w);
}

QVec KahlerDiff::d(const QVec &a) const
{
	const ArtinAlgebra &alg = *algebra_;
	const std::size_t m = alg.gen_count();
	QVec ambient(ambient_dim_);
	for (std::size_t b = 0; b < alg.dim(); ++b)
	{
		if (a[b].is_zero())
			continue;
		const Exps &e = alg.basis()[b];
		for (std::size_t i = 0; i < m; ++i)
		{
			if (e[i] == 0)
				continue;
			Exps de(e);
			de[i] -= 1;
			QVec mono = alg.nf(pmonomial(de));
			for (std::size_t k = 0; k < alg.dim(); ++k)
				if (!mono[k].is_zero())
					ambient[coord(k, i)] += a[b] * Rational(e[i]) * mono[k];
		}
	}
	return project_ambient(ambient);
}

QVec KahlerDiff::mul(const QVec &a, const QVec &w) const
{
	const ArtinAlgebra &alg = *algebra_;
	const std::size_t m = alg.gen_count();
	QVec lifted = lift_to_ambient(w);
	QVec ambient(ambient_dim_);
	for (std::size_t b = 0; b < alg.dim(); ++b)
		for (std::size_t i = 0; i < m; ++i)
		{
			const Rational &c = lifted[coord(b, i)];
			if (c.is_zero())
				continue;
			QVec prod = alg.mul(a, c * alg.nf(pmonomial(alg.basis()[b])));
			for (std::size_t k = 0; k < alg.dim(); ++k)
				if (!prod[k].is_zero())
					ambient[coord(k, i)] += prod[k];
		}
	return project_ambient(ambient);
}

std::string KahlerDiff::describe(const QVec &w) const
{
	const ArtinAlgebra &a = *algebra_;
	std::ostringstream os;
	bool any = false;
	for (std::size_t i = 0; i < dim(); ++i)
	{
		if (w[i].is_zero())
			continue;
		auto [b, g] = basis_[i];
		if (any)
			os << " + ";
		os << w[i];
		std::string mono = monomial_str(a.basis()[b], a.gen_names());
		if (mono != "1")
			os << "*" << mono;
		os << "*d" << a.gen_names()[g];
		any = true;
	}
	if (!any)
		return "0";
	return os.str();
}

ReducedKahler::ReducedKahler(const KahlerDiff &kd, const ArtinIdeal &ideal)
    : quotient_(kd.dim())
{
	std::vector<QVec> rows;
	for (const auto &v : ideal.basis())
		for (std::size_t i = 0; i < kd.dim(); ++i)
		{
			QVec unit(kd.dim());
			unit[i] = Rational(1);
			QVec w = kd.mul(v, unit);
			if (!is_zero(w))
				rows.push_back(std::move(w));
		}
	quotient_ = Subspace(kd.dim(), rows);
	basis_from_ = quotient_.free_positions();
}

std::size_t ReducedKahler::dim() const
{
	return basis_from_.size();
}

QVec ReducedKahler::project(const QVec &omega1) const
{
	return quotient_.quotient_coords(omega1);
}

const std::vector<std::size_t> &ReducedKahler::basis_from() const
{
	return basis_from_;
}

ElementaryResult is_elementary(const ArtinPtr &a, const ArtinIdeal &ideal)
{
	if (!same_base(a, ideal.parent()))
		fail(errc::base_mismatch, "ideal of a different algebra");
	if (!ideal.square_zero())
		fail(errc::not_square_zero, "is_elementary wants a square-zero ideal");
	KahlerDiff kd(a);
	ReducedKahler rk(kd, ideal);
	auto ibasis = ideal.basis();
	QMat map(rk.dim(), ibasis.size());
	for (std::size_t j = 0; j < ibasis.size(); ++j)
	{
		QVec img = rk.project(kd.d(ibasis[j]));
		for (std::size_t i = 0; i < rk.dim(); ++i)
			map.at(i, j) = img[i];
	}
	auto kernel = nullspace(map);
	if (kernel.empty())
		return {true, std::nullopt};
	// witness in algebra coordinates, normalized to leading coefficient 1
	QVec w(a->dim());
	for (std::size_t j = 0; j < ibasis.size(); ++j)
		if (!kernel[0][j].is_zero())
			w = w + kernel[0][j] * ibasis[j];
	for (std::size_t k = w.size(); k-- > 0;)
		if (!w[k].is_zero())
		{
			w = w[k].inv() * w;
			break;
		}
	return {false, w};
}

EtaMap restrict_differentials(const ArtinPtr &a, const ArtinIdeal &ideal)
{
	KahlerDiff kd(a);
	ReducedKahler rk(kd, ideal);
	ArtinQuotient q = artin_quotient(a, ideal);
	KahlerDiff target(q.algebra);

	const std::size_t m = a->gen_count();
	QMat matrix(target.dim(), rk.dim());
	for (std::size_t j = 0; j < rk.dim(); ++j)
	{
		// representative of the j-th reduced basis element in Omega^1(A),
		// then in the ambient A^m
		QVec rep(kd.dim());
		rep[rk.basis_from()[j]] = Rational(1);
		QVec ambient = kd.lift_to_ambient(rep);
		// push coefficients through A -> A/I
		QVec target_ambient(q.algebra->dim() * m);
		for (std::size_t b = 0; b < a->dim(); ++b)
			for (std::size_t i = 0; i < m; ++i)
			{
				const Rational &c = ambient[b * m + i];
				if (c.is_zero())
					continue;
				QVec img = q.reduce(c * a->nf(pmonomial(a->basis()[b])));
				for (std::size_t k = 0; k < q.algebra->dim(); ++k)
					if (!img[k].is_zero())
						target_ambient[k * m + i] += img[k];
			}
		QVec out = target.project_ambient(target_ambient);
		for (std::size_t i = 0; i < target.dim(); ++i)
			matrix.at(i, j) = out[i];
	}
	return EtaMap{std::move(kd), std::move(rk), std::move(q), std::move(target),
	              std::move(matrix)};
}

} // namespace sympdef
