#include "sympdef/deformation.hpp"
#include "sympdef/errors.hpp"

#include <functional>
#include <random>
#include <sstream>

namespace sympdef {

namespace {

RelForm unit_one_form(const Space &sp, const ArtinPtr &base, int var)
{
	RelForm out(sp, base, 1);
	out.add_term(FormKey{Exps(sp.n_vars(), 0), {var}, 0}, Rational(1));
	return out;
}

std::string coords_str(const ArtinPtr &base, const QVec &v)
{
	return base->describe(v);
}

} // namespace

Deformation make_deformation(const Space &space, const ArtinPtr &base,
                             const RelForm &omega)
{
	if (!(omega.space() == space) || !same_base(omega.base(), base))
		fail(errc::space_mismatch, "omega lives on a different space or base");
	if (omega.degree() != 2)
		fail(errc::invalid_argument, "a symplectic deformation is a 2-form");
	if (!omega.d().is_zero())
		fail(errc::not_closed, "omega is not closed");
	RelForm ref = reference_form(space, ArtinAlgebra::rationals());
	if (!(omega.closed_fiber() == ref))
		fail(errc::wrong_closed_fiber,
		     "omega does not restrict to the reference form at the closed point");
	if (!nondegenerate(SymplecticForm(omega)))
		fail(errc::degenerate, "omega is degenerate");
	return Deformation(omega, reference_form(space, base));
}

Deformation restrict_deformation(const Deformation &d, const ArtinQuotient &q)
{
	return make_deformation(d.space(), q.algebra, d.omega().base_change(q));
}

KsClass kodaira_spencer(const Deformation &d, const KahlerDiff &kd)
{
	BaseDerivative gm = gauss_manin(d.omega(), kd);
	CohomologyBasis h2 =
	    cohomology_basis(d.space(), 2, ArtinAlgebra::rationals());
	QMat coords(h2.dim(), kd.dim());
	for (std::size_t mu = 0; mu < kd.dim(); ++mu)
	{
		Decomposition dec = decompose(gm.components[mu]);
		for (std::size_t h = 0; h < h2.dim(); ++h)
			coords.at(h, mu) = dec.coords[h][0];
	}
	return KsClass{h2.subsets, std::move(coords)};
}

KsClass kodaira_spencer(const Deformation &d)
{
	KahlerDiff kd(d.base());
	return kodaira_spencer(d, kd);
}

bool PeriodPoint::same_point(const PeriodPoint &o) const
{
	return space == o.space && same_base(base, o.base) && coords == o.coords;
}

std::optional<std::size_t> PeriodPoint::first_difference(const PeriodPoint &o) const
{
	for (std::size_t h = 0; h < coords.size(); ++h)
		if (coords[h] != o.coords[h])
			return h;
	return std::nullopt;
}

PeriodPoint period_map(const Deformation &d)
{
	Decomposition dec = decompose(d.omega());
	CohomologyBasis h2 = cohomology_basis(d.space(), 2, d.base());
	return PeriodPoint{d.space(), d.base(), h2.subsets, std::move(dec.coords)};
}

PeriodPoint make_period_point(const Space &space, const ArtinPtr &base,
                              std::vector<QVec> coords)
{
	CohomologyBasis h2 = cohomology_basis(space, 2, base);
	if (coords.size() != h2.dim())
		fail(errc::invalid_argument, "one coordinate per cohomology class expected");
	for (const auto &c : coords)
		if (c.size() != base->dim())
			fail(errc::invalid_argument, "coordinate has wrong base dimension");
	return PeriodPoint{space, base, h2.subsets, std::move(coords)};
}

PeriodPoint restrict_period(const PeriodPoint &p, const ArtinQuotient &q)
{
	std::vector<QVec> coords;
	for (const auto &c : p.coords)
		coords.push_back(q.reduce(c));
	return make_period_point(p.space, q.algebra, std::move(coords));
}

Deformation construct_from_period(const Space &space, const ArtinPtr &base,
                                  const PeriodPoint &target)
{
	if (!(target.space == space) || !same_base(target.base, base))
		fail(errc::base_mismatch, "period point lives elsewhere");
	RelForm ref = reference_form(space, base);
	Decomposition ref_dec = decompose(ref);
	CohomologyBasis h2 = cohomology_basis(space, 2, base);
	for (std::size_t h = 0; h < h2.dim(); ++h)
		if (target.coords[h][0] != ref_dec.coords[h][0])
			fail(errc::wrong_closed_fiber,
			     "period constant term differs from the reference class");
	RelForm omega = ref;
	for (std::size_t h = 0; h < h2.dim(); ++h)
	{
		QVec diff = target.coords[h] - ref_dec.coords[h];
		if (!is_zero(diff))
			omega = omega + h2.representatives[h].scaled_base(diff);
	}
	return make_deformation(space, base, omega);
}

RelForm pullback(const RelForm &w, const VectorField &xi)
{
	const Space &sp = w.space();
	const ArtinPtr &base = w.base();
	if (!(xi.space() == sp) || !same_base(xi.base(), base))
		fail(errc::space_mismatch, "pullback field lives elsewhere");
	const std::size_t n = sp.n_vars();
	for (const auto &c : xi.components())
		if (!c.is_zero() && c.madic_order() < 1)
			fail(errc::invalid_argument,
			     "pullback wants nilpotent field coefficients");

	// substituted coordinates and differentials
	std::vector<RelForm> subst, dsubst;
	for (std::size_t i = 0; i < n; ++i)
	{
		RelForm xi_i = xi.components()[i];
		RelForm coord = RelForm::scalar(
		    LaurentPoly::monomial(sp, [&] { Exps e(n, 0); e[i] = 1; return e; }()),
		    base);
		subst.push_back(coord + xi_i);
		RelForm dbase = unit_one_form(sp, base, static_cast<int>(i));
		dsubst.push_back(dbase + xi_i.d());
	}
	// inverses where needed: (x + xi)^{-1} = x^{-1} sum_k (-x^{-1} xi)^k
	std::vector<std::optional<RelForm>> inv(n);
	auto inverse_of = [&](std::size_t i) -> const RelForm & {
		if (!inv[i])
		{
			RelForm xinv = RelForm::scalar(
			    LaurentPoly::monomial(sp, [&] { Exps e(n, 0); e[i] = -1; return e; }()),
			    base);
			RelForm acc = xinv;
			RelForm step = wedge(xinv, xi.components()[i]).scaled(Rational(-1));
			RelForm power = step;
			while (!power.is_zero())
			{
				acc = acc + wedge(power, xinv);
				power = wedge(power, step);
			}
			inv[i] = acc;
		}
		return *inv[i];
	};

	std::map<std::pair<std::size_t, int>, RelForm> power_cache;
	auto coord_power = [&](std::size_t i, int k) -> const RelForm & {
		auto key = std::make_pair(i, k);
		auto it = power_cache.find(key);
		if (it != power_cache.end())
			return it->second;
		RelForm out = RelForm::scalar(LaurentPoly::constant(sp, Rational(1)), base);
		const RelForm &basepow = k > 0 ? subst[i] : inverse_of(i);
		for (int c = 0; c < std::abs(k); ++c)
			out = wedge(out, basepow);
		return power_cache.emplace(key, std::move(out)).first->second;
	};

	RelForm result(sp, base, w.degree());
	for (const auto &[key, c] : w.terms())
	{
		RelForm term(sp, base, 0);
		QVec bcoeff(base->dim());
		bcoeff[key.base] = c;
		term.add_term(FormKey{Exps(n, 0), {}, 0}, Rational(1));
		term = term.scaled_base(bcoeff);
		for (std::size_t i = 0; i < n; ++i)
			if (key.exps[i] != 0)
				term = wedge(term, coord_power(i, key.exps[i]));
		for (int v : key.idx)
			term = wedge(term, dsubst[v]);
		result = result + term;
	}
	return result;
}

RelForm DefIsomorphism::apply(const RelForm &w) const
{
	RelForm out = w;
	for (const auto &xi : steps)
		out = pullback(out, xi);
	return out;
}

namespace {

IsoResult find_isomorphism_cached(const Deformation &d1, const PeriodPoint &p1,
                                  const Deformation &d2, const PeriodPoint &p2)
{
	if (!(d1.space() == d2.space()))
		fail(errc::space_mismatch, "deformations on different spaces");
	if (!same_base(d1.base(), d2.base()))
		fail(errc::base_mismatch, "deformations over different bases");
	if (!p1.same_point(p2))
	{
		IsoResult out;
		out.witness_coordinate = p1.first_difference(p2);
		std::ostringstream os;
		os << "periods differ at cohomology coordinate " << *out.witness_coordinate
		   << ": " << coords_str(d1.base(), p1.coords[*out.witness_coordinate])
		   << " vs " << coords_str(d2.base(), p2.coords[*out.witness_coordinate]);
		out.detail = os.str();
		return out;
	}

	SymplecticForm ref(reference_form(d1.space(), d1.base()));
	DefIsomorphism iso;
	RelForm cur = d1.omega();
	int guard = d1.base()->nilpotency() + 1;
	while (!(cur == d2.omega()))
	{
		if (guard-- <= 0)
			throw std::logic_error("Moser walk failed to terminate");
		RelForm delta = d2.omega() - cur;
		Decomposition dec = decompose(delta);
		for (const auto &cvec : dec.coords)
			if (!is_zero(cvec))
				throw std::logic_error(
				    "equal periods left a nonzero class in the Moser walk");
		VectorField xi = raise(ref, dec.primitive);
		cur = pullback(cur, xi);
		iso.steps.push_back(std::move(xi));
	}
	if (!(iso.apply(d1.omega()) == d2.omega()))
		throw std::logic_error("isomorphism verification failed");
	IsoResult out;
	out.iso = std::move(iso);
	return out;
}

} // namespace

IsoResult find_isomorphism(const Deformation &d1, const Deformation &d2)
{
	return find_isomorphism_cached(d1, period_map(d1), d2, period_map(d2));
}

namespace {

KsLiftClass ks_lift_class_of(const Deformation &lift, const EtaMap &eta)
{
	KsClass full = kodaira_spencer(lift, eta.source_full);
	QMat coords(full.coords.rows(), eta.source.dim());
	for (std::size_t h = 0; h < full.coords.rows(); ++h)
	{
		QVec omega1(eta.source_full.dim());
		for (std::size_t mu = 0; mu < eta.source_full.dim(); ++mu)
			omega1[mu] = full.coords.at(h, mu);
		QVec reduced = eta.source.project(omega1);
		for (std::size_t q = 0; q < reduced.size(); ++q)
			coords.at(h, q) = reduced[q];
	}
	return KsLiftClass{full.h2_subsets, std::move(coords)};
}

} // namespace

KsLiftClass KsLiftSet::translate(const QMat &c) const
{
	KsLiftClass out = particular;
	for (std::size_t h = 0; h < h2_dim; ++h)
		for (std::size_t k = 0; k < ideal_dim; ++k)
		{
			if (c.at(h, k).is_zero())
				continue;
			for (std::size_t q = 0; q < out.coords.cols(); ++q)
				out.coords.at(h, q) += c.at(h, k) * delta.at(q, k);
		}
	return out;
}

KsLiftSet ks_lift_set(const Deformation &d0, const ArtinPtr &a,
                      const ArtinIdeal &ideal)
{
	ElementaryResult elem = is_elementary(a, ideal);
	if (!elem.elementary)
		fail(errc::not_elementary,
		     "extension is not elementary; witness " +
		         a->describe(*elem.witness));
	EtaMap eta = restrict_differentials(a, ideal);
	if (!same_base(d0.base(), eta.quotient.algebra))
		fail(errc::base_mismatch, "d0 must live over A/I");

	// particular lift through the monomial section A/I -> A
	const ArtinAlgebra &b = *d0.base();
	RelForm lifted(d0.space(), a, 2);
	for (const auto &[key, c] : d0.omega().terms())
	{
		QVec up = transport_monomial(b, key.base, *a);
		for (std::size_t idx = 0; idx < up.size(); ++idx)
			if (!up[idx].is_zero())
				lifted.add_term(FormKey{key.exps, key.idx, idx}, c * up[idx]);
	}
	Deformation section_lift = make_deformation(d0.space(), a, lifted);
	KsLiftClass particular = ks_lift_class_of(section_lift, eta);

	// eta compatibility with the class downstairs
	{
		KsClass theta0 = kodaira_spencer(d0, eta.target);
		for (std::size_t h = 0; h < particular.coords.rows(); ++h)
		{
			QVec row(particular.coords.cols());
			for (std::size_t q = 0; q < row.size(); ++q)
				row[q] = particular.coords.at(h, q);
			QVec mapped = eta.apply(row);
			QVec expect(theta0.coords.cols());
			for (std::size_t m = 0; m < expect.size(); ++m)
				expect[m] = theta0.coords.at(h, m);
			if (!(mapped == expect))
				throw std::logic_error("particular lift fails eta compatibility");
		}
	}

	// the injection I -> Omega^1(A) (x) A/I spanning the torsor directions
	auto ibasis = ideal.basis();
	QMat delta(eta.source.dim(), ibasis.size());
	for (std::size_t k = 0; k < ibasis.size(); ++k)
	{
		QVec img = eta.source.project(eta.source_full.d(ibasis[k]));
		for (std::size_t q = 0; q < img.size(); ++q)
			delta.at(q, k) = img[q];
	}

	KsLiftSet out;
	out.particular = std::move(particular);
	out.h2_dim = out.particular.coords.rows();
	out.ideal_dim = ibasis.size();
	out.torsor_dim = out.h2_dim * out.ideal_dim;
	out.torsor_basis = ideal_tensor_basis(ideal, out.h2_dim);
	out.delta = std::move(delta);
	return out;
}

Deformation lift_deformation(const Deformation &d0, const ArtinPtr &a,
                             const ArtinIdeal &ideal, const KsLiftClass &theta)
{
	ElementaryResult elem = is_elementary(a, ideal);
	if (!elem.elementary)
		fail(errc::not_elementary,
		     "extension is not elementary; witness " +
		         a->describe(*elem.witness));
	EtaMap eta = restrict_differentials(a, ideal);
	if (!same_base(d0.base(), eta.quotient.algebra))
		fail(errc::base_mismatch, "d0 must live over A/I");

	// eta(theta) must be the class of d0
	KsClass theta0 = kodaira_spencer(d0, eta.target);
	for (std::size_t h = 0; h < theta.coords.rows(); ++h)
	{
		QVec row(theta.coords.cols());
		for (std::size_t q = 0; q < row.size(); ++q)
			row[q] = theta.coords.at(h, q);
		QVec mapped = eta.apply(row);
		QVec expect(theta0.coords.cols());
		for (std::size_t m = 0; m < expect.size(); ++m)
			expect[m] = theta0.coords.at(h, m);
		if (!(mapped == expect))
			fail(errc::inconsistent_lift,
			     "eta(theta) differs from the class of d0");
	}

	// solve for period coordinates P_h over A: quotient(P_h) = p0_h and
	// the reduced derivative of P_h equals theta_h
	PeriodPoint p0 = period_map(d0);
	const std::size_t na = a->dim();
	const std::size_t nb = d0.base()->dim();
	const std::size_t nq = eta.source.dim();
	QMat sys(nb + nq, na);
	for (std::size_t col = 0; col < na; ++col)
	{
		QVec unit(na);
		unit[col] = Rational(1);
		QVec down = eta.quotient.reduce(unit);
		for (std::size_t r = 0; r < nb; ++r)
			sys.at(r, col) = down[r];
		QVec dred = eta.source.project(eta.source_full.d(unit));
		for (std::size_t r = 0; r < nq; ++r)
			sys.at(nb + r, col) = dred[r];
	}
	std::vector<QVec> coords;
	for (std::size_t h = 0; h < theta.coords.rows(); ++h)
	{
		QVec rhs(nb + nq);
		for (std::size_t r = 0; r < nb; ++r)
			rhs[r] = p0.coords[h][r];
		for (std::size_t r = 0; r < nq; ++r)
			rhs[nb + r] = theta.coords.at(h, r);
		auto sol = solve(sys, rhs);
		if (!sol)
			fail(errc::inconsistent_lift,
			     "no period coordinates realize the requested class");
		coords.push_back(*sol);
	}
	Deformation lifted = construct_from_period(
	    d0.space(), a, make_period_point(d0.space(), a, std::move(coords)));
	// the construction realizes theta exactly
	if (!(ks_lift_class_of(lifted, eta) == theta))
		throw std::logic_error("lift construction missed the requested class");
	return lifted;
}

Report verify_period_bijection(const Space &space, const ArtinPtr &base,
                               const std::vector<PeriodPoint> &sample,
                               std::size_t perturbations_per_point)
{
	Report rep;
	CohomologyBasis h2 = cohomology_basis(space, 2, base);
	for (const auto &step : madic_filtration(base))
		rep.torsor_dims.push_back(h2.dim() * step.ideal.dim());

	std::mt19937 rng(20240801u);
	auto random_exact = [&](const RelForm &omega) {
		// d(alpha) for a random 1-form with coefficients in m
		const std::size_t n = space.n_vars();
		RelForm alpha(space, base, 1);
		std::uniform_int_distribution<int> expdist(-1, 2);
		std::uniform_int_distribution<int> cdist(-2, 2);
		std::uniform_int_distribution<std::size_t> vardist(0, n - 1);
		std::uniform_int_distribution<std::size_t> bdist(1, base->dim() - 1);
		for (int tries = 0; tries < 3; ++tries)
		{
			Exps e(n, 0);
			for (std::size_t i = 0; i < n; ++i)
			{
				int k = expdist(rng);
				e[i] = space.laurent(i) ? k : std::abs(k);
			}
			int c = cdist(rng);
			if (c == 0)
				c = 1;
			alpha.add_term(FormKey{e, {static_cast<int>(vardist(rng))}, bdist(rng)},
			               Rational(c));
		}
		return omega + alpha.d();
	};

	struct Entry {
		Deformation def;
		PeriodPoint period;
	};
	std::vector<Entry> pool;
	for (const auto &target : sample)
	{
		Deformation d = construct_from_period(space, base, target);
		PeriodPoint p = period_map(d);
		if (p.same_point(target))
			++rep.round_trips;
		else
			rep.failures.push_back("period round-trip failed for a sampled point");
		if (base->dim() > 1)
			for (std::size_t k = 0; k < perturbations_per_point; ++k)
			{
				Deformation dp =
				    make_deformation(space, base, random_exact(d.omega()));
				PeriodPoint pp = period_map(dp);
				if (!pp.same_point(p))
					rep.failures.push_back(
					    "exact perturbation moved the period point");
				pool.push_back(Entry{std::move(dp), std::move(pp)});
			}
		pool.push_back(Entry{std::move(d), std::move(p)});
	}

	for (std::size_t i = 0; i < pool.size(); ++i)
		for (std::size_t j = i + 1; j < pool.size(); ++j)
		{
			bool equal = pool[i].period.same_point(pool[j].period);
			IsoResult r = find_isomorphism_cached(pool[i].def, pool[i].period,
			                                      pool[j].def, pool[j].period);
			++rep.isomorphism_checks;
			if (equal && !r.iso)
				rep.failures.push_back("equal periods but no isomorphism found");
			if (!equal && r.iso)
				rep.failures.push_back("distinct periods admitted an isomorphism");
		}
	return rep;
}

Report contraction_bijection_report(const Space &space, const ArtinPtr &base,
                                    const ArtinIdeal &ideal, int max_abs_exp,
                                    const std::optional<RelForm> &reference_override)
{
	Report rep;
	CohomologyBasis h2 = cohomology_basis(space, 2, base);
	rep.torsor_dims.push_back(h2.dim() * ideal.dim());
	RelForm ref_form = reference_override
	                       ? *reference_override
	                       : reference_form(space, base);
	SymplecticForm ref(ref_form);
	const std::size_t n = space.n_vars();
	const std::size_t max_failures = 12;
	auto note = [&](const std::string &s) {
		if (rep.failures.size() < max_failures)
			rep.failures.push_back(s);
	};

	// monomial box
	std::vector<Exps> box;
	{
		Exps cur(n, 0);
		std::function<void(std::size_t)> rec = [&](std::size_t pos) {
			if (pos == n)
			{
				box.push_back(cur);
				return;
			}
			int lo = space.laurent(pos) ? -max_abs_exp : 0;
			for (int k = lo; k <= max_abs_exp; ++k)
			{
				cur[pos] = k;
				rec(pos + 1);
			}
		};
		rec(0);
	}

	auto ibasis = ideal.basis();
	for (const auto &v : ibasis)
		for (std::size_t dir = 0; dir < n; ++dir)
			for (const auto &e : box)
			{
				VectorField xi =
				    VectorField::monomial(space, base, dir, e).scaled_base(v);
				RelForm alpha = contract(ref, xi);
				++rep.round_trips;
				if (alpha.is_zero())
				{
					note("contraction kernel witness: " + xi.str());
					continue;
				}
				try
				{
					VectorField back = raise(ref, alpha);
					if (!(back == xi))
						note("contract/raise round trip failed at " + xi.str());
				}
				catch (const MathError &err)
				{
					note(std::string("raise failed: ") + err.what());
				}
				// surjectivity from the 1-form side on the same block
				RelForm beta(space, base, 1);
				beta.add_term(FormKey{e, {static_cast<int>(dir)}, 0}, Rational(1));
				beta = beta.scaled_base(v);
				try
				{
					VectorField up = raise(ref, beta);
					if (!(contract(ref, up) == beta))
						note("raise/contract round trip failed at a 1-form block");
				}
				catch (const MathError &err)
				{
					note(std::string("unreachable 1-form ") + beta.str() + ": " +
					     err.what());
				}
			}

	// class invariance on the quotient groupoid: translating a closed
	// 2-form with ideal coefficients by d(contraction) fixes its
	// cohomology coordinates, and those coordinates are the period shift
	if (!reference_override)
	{
		std::mt19937 rng(77u);
		std::uniform_int_distribution<std::size_t> vdist(0, ibasis.empty() ? 0 : ibasis.size() - 1);
		std::uniform_int_distribution<int> edist(-1, 1);
		for (std::size_t trial = 0; trial < 8 && !ibasis.empty(); ++trial)
		{
			const QVec &v = ibasis[vdist(rng)];
			RelForm beta(space, base, 2);
			for (std::size_t h = 0; h < h2.dim(); ++h)
				beta = beta + h2.representatives[h]
				                  .scaled(Rational(edist(rng)))
				                  .scaled_base(v);
			// plus an exact fringe
			RelForm alpha(space, base, 1);
			Exps e(n, 0);
			for (std::size_t i = 0; i < n; ++i)
				e[i] = space.laurent(i) ? edist(rng) : std::abs(edist(rng));
			alpha.add_term(FormKey{e, {0}, 0}, Rational(1));
			beta = beta + alpha.scaled_base(v).d();

			Decomposition before = decompose(beta);
			VectorField xi = VectorField::monomial(space, base, 0, e).scaled_base(v);
			RelForm translated = beta + contract(ref, xi).d();
			Decomposition after = decompose(translated);
			if (!(before.coords == after.coords))
				note("groupoid class moved under the contraction action");
			Deformation d =
			    make_deformation(space, base, ref_form + beta);
			PeriodPoint p = period_map(d);
			Decomposition ref_dec = decompose(ref_form);
			for (std::size_t h = 0; h < h2.dim(); ++h)
				if (!(p.coords[h] - ref_dec.coords[h] == before.coords[h]))
					note("period shift differs from the class coordinates");
			++rep.isomorphism_checks;
		}
	}
	return rep;
}

Report ks_route_comparison(const Deformation &d)
{
	Report rep;
	KahlerDiff kd(d.base());
	SymplecticForm om = d.symplectic();
	const Space &sp = d.space();
	const std::size_t n = sp.n_vars();
	KsClass direct = kodaira_spencer(d, kd);
	BaseDerivative gm = gauss_manin(d.omega(), kd);
	for (std::size_t mu = 0; mu < kd.dim(); ++mu)
	{
		RelForm beta = gm.components[mu].with_base(d.base());
		// column slices alpha_j = sum_i beta_ij dx^i
		std::vector<RelForm> slices(n, RelForm(sp, d.base(), 1));
		for (const auto &[key, c] : beta.terms())
		{
			int i = key.idx[0], j = key.idx[1];
			slices[j].add_term(FormKey{key.exps, {i}, key.base}, c);
			slices[i].add_term(FormKey{key.exps, {j}, key.base}, -c);
		}
		RelForm reassembled(sp, d.base(), 2);
		try
		{
			for (std::size_t j = 0; j < n; ++j)
			{
				if (slices[j].is_zero())
					continue;
				VectorField xi = raise(om, slices[j]);
				RelForm gamma = contract(om, xi);
				reassembled = reassembled +
				              wedge(gamma, unit_one_form(sp, d.base(),
				                                         static_cast<int>(j)))
				                  .scaled(Rational(1, 2));
			}
			Decomposition got = decompose(reassembled);
			bool match = true;
			for (std::size_t h = 0; h < got.coords.size(); ++h)
			{
				QVec expect(d.base()->dim());
				expect[0] = direct.coords.at(h, mu);
				match = match && (got.coords[h] == expect);
			}
			if (match)
				++rep.round_trips;
			else
				rep.failures.push_back(
				    "classical route disagrees with the direct class at "
				    "derivative component " +
				    std::to_string(mu));
		}
		catch (const MathError &err)
		{
			rep.failures.push_back(std::string("classical route failed: ") +
			                       err.what());
		}
	}
	return rep;
}

} // namespace sympdef
