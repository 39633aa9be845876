#include "sympdef/derham.hpp"
#include "sympdef/errors.hpp"

#include <algorithm>

namespace sympdef {

namespace {

void enumerate_subsets(const std::vector<std::size_t> &pool, int k,
                       std::vector<int> &cur, std::size_t start,
                       std::vector<std::vector<int>> &out)
{
	if (static_cast<int>(cur.size()) == k)
	{
		out.push_back(cur);
		return;
	}
	for (std::size_t i = start; i < pool.size(); ++i)
	{
		cur.push_back(static_cast<int>(pool[i]));
		enumerate_subsets(pool, k, cur, i + 1, out);
		cur.pop_back();
	}
}

} // namespace

CohomologyBasis cohomology_basis(const Space &space, int degree,
                                 const ArtinPtr &base)
{
	CohomologyBasis out{space, degree, {}, {}};
	auto laurent = space.laurent_indices();
	std::vector<int> cur;
	enumerate_subsets(laurent, degree, cur, 0, out.subsets);
	for (const auto &s : out.subsets)
	{
		RelForm rep(space, base, degree);
		Exps e(space.n_vars(), 0);
		for (int v : s)
			e[v] = -1;
		rep.add_term(FormKey{e, s, 0}, Rational(1));
		out.representatives.push_back(std::move(rep));
	}
	return out;
}

Decomposition decompose(const RelForm &w)
{
	if (!w.d().is_zero())
		fail(errc::not_closed, "decompose wants a closed form");

	const Space &sp = w.space();
	const ArtinPtr &base = w.base();
	const int p = w.degree();
	RelForm rest = w;
	RelForm primitive =
	    RelForm::zero(sp, base, p > 0 ? p - 1 : 0);

	for (std::size_t v = 0; v < sp.n_vars() && p > 0; ++v)
	{
		RelForm h(sp, base, p - 1);
		for (const auto &[k, c] : rest.terms())
		{
			auto pos_it = std::find(k.idx.begin(), k.idx.end(), static_cast<int>(v));
			if (pos_it == k.idx.end())
				continue;
			int kexp = k.exps[v];
			if (kexp == -1)
				continue; // dlog residue, stays for the class readout
			std::size_t pos = static_cast<std::size_t>(pos_it - k.idx.begin());
			int sign = (pos % 2 == 0) ? 1 : -1;
			Exps e(k.exps);
			e[v] += 1;
			std::vector<int> rest_idx;
			for (int i : k.idx)
				if (i != static_cast<int>(v))
					rest_idx.push_back(i);
			h.add_term(FormKey{std::move(e), std::move(rest_idx), k.base},
			           c * Rational(sign) / Rational(kexp + 1));
		}
		if (!h.is_zero())
		{
			primitive = primitive + h;
			rest = rest - h.d();
		}
	}

	// what survives must be a combination of dlog monomials
	CohomologyBasis basis = cohomology_basis(sp, p, base);
	std::vector<QVec> coords(basis.dim(), QVec(base->dim()));
	for (const auto &[k, c] : rest.terms())
	{
		bool dlog_shaped = true;
		for (std::size_t i = 0; i < sp.n_vars() && dlog_shaped; ++i)
		{
			bool in_idx = std::find(k.idx.begin(), k.idx.end(),
			                        static_cast<int>(i)) != k.idx.end();
			if (in_idx)
				dlog_shaped = sp.laurent(i) && k.exps[i] == -1;
			else
				dlog_shaped = k.exps[i] == 0;
		}
		if (!dlog_shaped)
			fail(errc::not_closed, "homotopy left a non-cohomological term; "
			                       "input was not closed");
		auto it = std::find(basis.subsets.begin(), basis.subsets.end(), k.idx);
		if (it == basis.subsets.end())
			fail(errc::not_closed, "residue outside the cohomology basis");
		coords[it - basis.subsets.begin()][k.base] += c;
	}
	return Decomposition{std::move(coords), std::move(primitive)};
}

BaseDerivative gauss_manin(const RelForm &w, const KahlerDiff &kd)
{
	if (!same_base(w.base(), kd.algebra()))
		fail(errc::base_mismatch, "form and Kahler module disagree on the base");
	const ArtinAlgebra &alg = *w.base();
	BaseDerivative out;
	out.components.assign(
	    kd.dim(), RelForm(w.space(), ArtinAlgebra::rationals(), w.degree()));
	for (const auto &[k, c] : w.terms())
	{
		QVec unit(alg.dim());
		unit[k.base] = c;
		QVec da = kd.d(unit);
		for (std::size_t mu = 0; mu < kd.dim(); ++mu)
			if (!da[mu].is_zero())
				out.components[mu].add_term(FormKey{k.exps, k.idx, 0}, da[mu]);
	}
	return out;
}

bool in_filtration_level(const RelForm &w, int level)
{
	return w.is_zero() || w.degree() >= level;
}

} // namespace sympdef
