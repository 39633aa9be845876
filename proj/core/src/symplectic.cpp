#include "sympdef/symplectic.hpp"
#include "sympdef/errors.hpp"

#include <sstream>

namespace sympdef {

VectorField::VectorField(Space space, ArtinPtr base)
    : space_(std::move(space)), base_(std::move(base))
{
	components_.assign(space_.n_vars(), RelForm(space_, base_, 0));
}

VectorField::VectorField(Space space, ArtinPtr base, std::vector<RelForm> components)
    : space_(std::move(space)), base_(std::move(base)),
      components_(std::move(components))
{
	if (components_.size() != space_.n_vars())
		fail(errc::invalid_argument, "one component per variable expected");
	for (const auto &c : components_)
		if (c.degree() != 0 || !(c.space() == space_) || !same_base(c.base(), base_))
			fail(errc::invalid_argument, "components must be 0-forms on the same space/base");
}

VectorField VectorField::zero(Space space, ArtinPtr base)
{
	return VectorField(std::move(space), std::move(base));
}

VectorField VectorField::monomial(const Space &space, const ArtinPtr &base,
                                  std::size_t var, const Exps &e, const Rational &c)
{
	VectorField out(space, base);
	RelForm comp(space, base, 0);
	comp.add_term(FormKey{e, {}, 0}, c);
	out.components_[var] = comp;
	return out;
}

bool VectorField::is_zero() const
{
	for (const auto &c : components_)
		if (!c.is_zero())
			return false;
	return true;
}

VectorField VectorField::operator+(const VectorField &o) const
{
	VectorField out(space_, base_);
	for (std::size_t i = 0; i < components_.size(); ++i)
		out.components_[i] = components_[i] + o.components_[i];
	return out;
}

VectorField VectorField::operator-(const VectorField &o) const
{
	VectorField out(space_, base_);
	for (std::size_t i = 0; i < components_.size(); ++i)
		out.components_[i] = components_[i] - o.components_[i];
	return out;
}

VectorField VectorField::scaled(const Rational &c) const
{
	VectorField out(space_, base_);
	for (std::size_t i = 0; i < components_.size(); ++i)
		out.components_[i] = components_[i].scaled(c);
	return out;
}

VectorField VectorField::scaled_base(const QVec &a) const
{
	VectorField out(space_, base_);
	for (std::size_t i = 0; i < components_.size(); ++i)
		out.components_[i] = components_[i].scaled_base(a);
	return out;
}

RelForm VectorField::apply(const RelForm &f) const
{
	if (f.degree() != 0)
		fail(errc::invalid_argument, "vector fields act on 0-forms here");
	return f.d().contract_with(components_);
}

bool VectorField::operator==(const VectorField &o) const
{
	return space_ == o.space_ && same_base(base_, o.base_) &&
	       components_ == o.components_;
}

std::string VectorField::str() const
{
	std::ostringstream os;
	bool any = false;
	for (std::size_t i = 0; i < components_.size(); ++i)
	{
		if (components_[i].is_zero())
			continue;
		if (any)
			os << " + ";
		os << "(" << components_[i].str() << ")*d/d" << space_.name(i);
		any = true;
	}
	return any ? os.str() : "0";
}

VectorField lie_bracket(const VectorField &a, const VectorField &b)
{
	if (!(a.space() == b.space()) || !same_base(a.base(), b.base()))
		fail(errc::space_mismatch, "bracket of fields on different spaces");
	std::vector<RelForm> comps;
	for (std::size_t k = 0; k < a.space().n_vars(); ++k)
		comps.push_back(a.apply(b.components()[k]) - b.apply(a.components()[k]));
	return VectorField(a.space(), a.base(), std::move(comps));
}

SymplecticForm::SymplecticForm(RelForm form) : form_(std::move(form))
{
	if (form_.degree() != 2)
		fail(errc::invalid_argument, "symplectic form must have degree 2");
	if (!form_.d().is_zero())
		fail(errc::not_closed, "symplectic form must be closed");
}

std::vector<std::vector<RelForm>> SymplecticForm::coefficient_matrix() const
{
	const Space &sp = form_.space();
	const std::size_t n = sp.n_vars();
	std::vector<std::vector<RelForm>> m(
	    n, std::vector<RelForm>(n, RelForm(sp, form_.base(), 0)));
	for (const auto &[k, c] : form_.terms())
	{
		int i = k.idx[0], j = k.idx[1];
		m[i][j].add_term(FormKey{k.exps, {}, k.base}, c);
		m[j][i].add_term(FormKey{k.exps, {}, k.base}, -c);
	}
	return m;
}

RelForm reference_form(const Space &space, const ArtinPtr &base)
{
	RelForm out(space, base, 2);
	for (auto [i, j] : space.pairs())
		out = out + wedge(RelForm::pair_one_form(space, base, i),
		                  RelForm::pair_one_form(space, base, j));
	return out;
}

namespace {

LaurentPoly fiber_poly(const RelForm &f)
{
	PolyMap p;
	for (const auto &[k, c] : f.terms())
		if (k.base == 0)
			padd_term(p, k.exps, c);
	return LaurentPoly(f.space(), std::move(p));
}

std::optional<std::vector<std::vector<RelForm>>>
inverse_matrix(const SymplecticForm &omega)
{
	const Space &sp = omega.space();
	const ArtinPtr &base = omega.base();
	const std::size_t n = sp.n_vars();
	auto m = omega.coefficient_matrix();

	// closed-fiber part, inverted exactly via the adjugate (the determinant
	// must be a unit monomial of the coordinate ring)
	std::vector<std::vector<LaurentPoly>> m0(
	    n, std::vector<LaurentPoly>(n, LaurentPoly(sp)));
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			m0[i][j] = fiber_poly(m[i][j]);
	LaurentPoly det = laurent_det(m0);
	auto unit = det.as_unit_monomial();
	if (!unit)
		return std::nullopt;
	auto adj = laurent_adjugate(m0);
	Exps inv_exp(unit->first);
	for (auto &e : inv_exp)
		e = -e;
	LaurentPoly det_inv = LaurentPoly::monomial(sp, inv_exp, unit->second.inv());

	std::vector<std::vector<RelForm>> inv0(
	    n, std::vector<RelForm>(n, RelForm(sp, base, 0)));
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			inv0[i][j] = RelForm::scalar(adj[i][j] * det_inv, base);

	auto matmul = [&](const std::vector<std::vector<RelForm>> &x,
	                  const std::vector<std::vector<RelForm>> &y) {
		std::vector<std::vector<RelForm>> r(
		    n, std::vector<RelForm>(n, RelForm(sp, base, 0)));
		for (std::size_t i = 0; i < n; ++i)
			for (std::size_t k = 0; k < n; ++k)
			{
				if (x[i][k].is_zero())
					continue;
				for (std::size_t j = 0; j < n; ++j)
					if (!y[k][j].is_zero())
						r[i][j] = r[i][j] + wedge(x[i][k], y[k][j]);
			}
		return r;
	};

	// nilpotent part B = M - M0; M^{-1} = sum_k (-inv0 B)^k inv0
	std::vector<std::vector<RelForm>> minus_b(
	    n, std::vector<RelForm>(n, RelForm(sp, base, 0)));
	bool has_nilpotent = false;
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
		{
			RelForm b = m[i][j] - m[i][j].closed_fiber().with_base(base);
			has_nilpotent = has_nilpotent || !b.is_zero();
			minus_b[i][j] = -b;
		}
	if (!has_nilpotent)
		return inv0;

	auto step = matmul(inv0, minus_b);
	auto result = inv0;
	auto power = step;
	while (true)
	{
		bool zero = true;
		for (std::size_t i = 0; i < n && zero; ++i)
			for (std::size_t j = 0; j < n && zero; ++j)
				zero = power[i][j].is_zero();
		if (zero)
			break;
		auto contribution = matmul(power, inv0);
		for (std::size_t i = 0; i < n; ++i)
			for (std::size_t j = 0; j < n; ++j)
				result[i][j] = result[i][j] + contribution[i][j];
		power = matmul(power, step);
	}
	return result;
}

std::vector<RelForm> one_form_components(const RelForm &alpha)
{
	const Space &sp = alpha.space();
	std::vector<RelForm> comps(sp.n_vars(), RelForm(sp, alpha.base(), 0));
	for (const auto &[k, c] : alpha.terms())
		comps[k.idx[0]].add_term(FormKey{k.exps, {}, k.base}, c);
	return comps;
}

} // namespace

bool nondegenerate(const SymplecticForm &omega)
{
	const Space &sp = omega.space();
	const std::size_t n = sp.n_vars();
	auto m = omega.coefficient_matrix();
	std::vector<std::vector<LaurentPoly>> m0(
	    n, std::vector<LaurentPoly>(n, LaurentPoly(sp)));
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			m0[i][j] = fiber_poly(m[i][j]);
	return laurent_det(m0).as_unit_monomial().has_value();
}

RelForm contract(const SymplecticForm &omega, const VectorField &xi)
{
	if (!(omega.space() == xi.space()))
		fail(errc::space_mismatch, "contracting with a field on a different space");
	if (!same_base(omega.base(), xi.base()))
		fail(errc::base_mismatch, "contracting with a field over a different base");
	return omega.form().contract_with(xi.components());
}

VectorField raise(const SymplecticForm &omega, const RelForm &alpha)
{
	if (alpha.degree() != 1)
		fail(errc::invalid_argument, "raise wants a 1-form");
	if (!(omega.space() == alpha.space()))
		fail(errc::space_mismatch, "raising a form on a different space");
	if (!same_base(omega.base(), alpha.base()))
		fail(errc::base_mismatch, "raising a form over a different base");
	auto inv = inverse_matrix(omega);
	if (!inv)
		fail(errc::degenerate, "coefficient matrix is not invertible");
	auto acomp = one_form_components(alpha);
	const std::size_t n = omega.space().n_vars();
	std::vector<RelForm> comps(n, RelForm(omega.space(), omega.base(), 0));
	// contraction acts on the first index, so alpha = M^T xi and
	// xi = -M^{-1} alpha
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			if (!(*inv)[i][j].is_zero() && !acomp[j].is_zero())
				comps[i] = comps[i] - wedge((*inv)[i][j], acomp[j]);
	return VectorField(omega.space(), omega.base(), std::move(comps));
}

VectorField hamiltonian_field(const SymplecticForm &omega, const RelForm &f)
{
	if (f.degree() != 0)
		fail(errc::invalid_argument, "hamiltonian_field wants a function");
	return raise(omega, f.d());
}

TangentValuedForm::TangentValuedForm(Space space, ArtinPtr base, int markers, int rank)
    : space_(std::move(space)), base_(std::move(base)), markers_(markers), rank_(rank)
{
	if (rank_ < 0 || rank_ > markers_)
		fail(errc::rank_overflow, "marker rank out of range");
}

TangentValuedForm TangentValuedForm::wrap(const VectorField &x,
                                          std::vector<int> marker_set, int markers)
{
	TangentValuedForm out(x.space(), x.base(), markers,
	                      static_cast<int>(marker_set.size()));
	out.add(marker_set, x);
	return out;
}

void TangentValuedForm::add(const std::vector<int> &marker_set, const VectorField &x)
{
	if (static_cast<int>(marker_set.size()) != rank_)
		fail(errc::invalid_argument, "marker set size must equal the rank");
	for (std::size_t i = 0; i < marker_set.size(); ++i)
	{
		if (marker_set[i] < 1 || marker_set[i] > markers_)
			fail(errc::rank_overflow, "marker index out of range");
		if (i > 0 && marker_set[i - 1] >= marker_set[i])
			fail(errc::invalid_argument, "marker set must strictly increase");
	}
	if (x.is_zero())
		return;
	auto it = terms_.find(marker_set);
	if (it == terms_.end())
	{
		terms_.emplace(marker_set, x);
		return;
	}
	it->second = it->second + x;
	if (it->second.is_zero())
		terms_.erase(it);
}

bool TangentValuedForm::is_zero() const
{
	return terms_.empty();
}

TangentValuedForm TangentValuedForm::operator+(const TangentValuedForm &o) const
{
	TangentValuedForm out = *this;
	for (const auto &[s, x] : o.terms_)
		out.add(s, x);
	return out;
}

TangentValuedForm schouten(const TangentValuedForm &a, const TangentValuedForm &b)
{
	if (!(a.space() == b.space()) || !same_base(a.base(), b.base()))
		fail(errc::space_mismatch, "bracket of tangent forms on different spaces");
	if (a.markers() != b.markers())
		fail(errc::invalid_argument, "marker pools differ");
	if (a.rank() + b.rank() > a.markers())
		fail(errc::rank_overflow, "bracket rank exceeds available markers");
	TangentValuedForm out(a.space(), a.base(), a.markers(), a.rank() + b.rank());
	for (const auto &[s, x] : a.terms())
		for (const auto &[t, y] : b.terms())
		{
			auto merged = merge_indices(s, t);
			if (!merged)
				continue;
			VectorField br = lie_bracket(x, y);
			if (merged->first < 0)
				br = br.scaled(Rational(-1));
			out.add(merged->second, br);
		}
	return out;
}

GrassmannForm::GrassmannForm(Space space, ArtinPtr base, int markers, int rank,
                             int degree)
    : space_(std::move(space)), base_(std::move(base)), markers_(markers),
      rank_(rank), degree_(degree)
{
	if (rank_ < 0 || rank_ > markers_)
		fail(errc::rank_overflow, "marker rank out of range");
}

void GrassmannForm::add(const std::vector<int> &marker_set, const RelForm &w)
{
	if (static_cast<int>(marker_set.size()) != rank_)
		fail(errc::invalid_argument, "marker set size must equal the rank");
	if (w.degree() != degree_)
		fail(errc::invalid_argument, "form degree mismatch");
	for (std::size_t i = 0; i < marker_set.size(); ++i)
	{
		if (marker_set[i] < 1 || marker_set[i] > markers_)
			fail(errc::rank_overflow, "marker index out of range");
		if (i > 0 && marker_set[i - 1] >= marker_set[i])
			fail(errc::invalid_argument, "marker set must strictly increase");
	}
	if (w.is_zero())
		return;
	auto it = terms_.find(marker_set);
	if (it == terms_.end())
	{
		terms_.emplace(marker_set, w);
		return;
	}
	it->second = it->second + w;
	if (it->second.is_zero())
		terms_.erase(it);
}

bool GrassmannForm::is_zero() const
{
	return terms_.empty();
}

GrassmannForm GrassmannForm::operator+(const GrassmannForm &o) const
{
	GrassmannForm out = *this;
	for (const auto &[s, w] : o.terms_)
		out.add(s, w);
	return out;
}

GrassmannForm GrassmannForm::operator-(const GrassmannForm &o) const
{
	GrassmannForm out = *this;
	for (const auto &[s, w] : o.terms_)
		out.add(s, w.scaled(Rational(-1)));
	return out;
}

GrassmannForm GrassmannForm::d() const
{
	GrassmannForm out(space_, base_, markers_, rank_, degree_ + 1);
	for (const auto &[s, w] : terms_)
		out.add(s, w.d());
	return out;
}

std::string GrassmannForm::str() const
{
	std::ostringstream os;
	bool any = false;
	for (const auto &[s, w] : terms_)
	{
		if (any)
			os << " + ";
		os << "(" << w.str() << ")";
		for (int e : s)
			os << "*e" << e;
		any = true;
	}
	return any ? os.str() : "0";
}

GrassmannForm lower(const SymplecticForm &omega, const TangentValuedForm &g)
{
	GrassmannForm out(g.space(), g.base(), g.markers(), g.rank(), 1);
	for (const auto &[s, x] : g.terms())
		out.add(s, contract(omega, x));
	return out;
}

GrassmannForm gwedge(const GrassmannForm &a, const GrassmannForm &b)
{
	if (a.markers() != b.markers())
		fail(errc::invalid_argument, "marker pools differ");
	if (a.rank() + b.rank() > a.markers())
		fail(errc::rank_overflow, "wedge rank exceeds available markers");
	// Koszul sign for moving the odd markers of a past the form part of b
	bool koszul = (a.rank() * b.degree()) % 2 != 0;
	GrassmannForm out(a.space(), a.base(), a.markers(), a.rank() + b.rank(),
	                  a.degree() + b.degree());
	for (const auto &[s, wa] : a.terms())
		for (const auto &[t, wb] : b.terms())
		{
			auto merged = merge_indices(s, t);
			if (!merged)
				continue;
			int sign = merged->first * (koszul ? -1 : 1);
			out.add(merged->second, wedge(wa, wb).scaled(Rational(sign)));
		}
	return out;
}

RelForm lambda_op(const SymplecticForm &omega, const RelForm &w)
{
	const Space &sp = omega.space();
	if (w.degree() < 2)
		return RelForm::zero(sp, w.base(), 0);
	auto inv = inverse_matrix(omega);
	if (!inv)
		fail(errc::degenerate, "coefficient matrix is not invertible");
	const std::size_t n = sp.n_vars();
	RelForm out(sp, w.base(), w.degree() - 2);
	RelForm unit_fn = RelForm::scalar(LaurentPoly::constant(sp, Rational(1)), w.base());
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
		{
			if ((*inv)[i][j].is_zero())
				continue;
			std::vector<RelForm> ej(n, RelForm(sp, w.base(), 0));
			ej[j] = unit_fn;
			std::vector<RelForm> ei(n, RelForm(sp, w.base(), 0));
			ei[i] = unit_fn;
			RelForm c = w.contract_with(ej).contract_with(ei);
			if (c.is_zero())
				continue;
			out = out + wedge((*inv)[i][j], c).scaled(Rational(1, 2));
		}
	return out;
}

GrassmannForm lambda_op(const SymplecticForm &omega, const GrassmannForm &w)
{
	GrassmannForm out(omega.space(), omega.base(), w.markers(), w.rank(),
	                  std::max(0, w.degree() - 2));
	for (const auto &[s, f] : w.terms())
		out.add(s, lambda_op(omega, f));
	return out;
}

TianTodorovResult tian_todorov_check(const SymplecticForm &omega,
                                     const TangentValuedForm &g1,
                                     const TangentValuedForm &g2)
{
	if (g1.rank() != 1 || g2.rank() != 1)
		fail(errc::invalid_argument, "tian_todorov_check wants rank-1 inputs");
	GrassmannForm lhs = lower(omega, schouten(g1, g2));
	GrassmannForm a = lower(omega, g1);
	GrassmannForm b = lower(omega, g2);
	GrassmannForm rhs = lambda_op(omega, gwedge(a, b)).d() -
	                    lambda_op(omega, gwedge(a.d(), b)) -
	                    lambda_op(omega, gwedge(a, b.d()));
	GrassmannForm residual = lhs - rhs;
	return TianTodorovResult{residual.is_zero(), std::move(residual)};
}

} // namespace sympdef
