#include "sympdef/relform.hpp"
#include "sympdef/errors.hpp"

#include <cstdlib>
#include <sstream>

namespace sympdef {

std::size_t term_budget()
{
	static const std::size_t budget = [] {
		if (const char *env = std::getenv("SYMPDEF_MAXTERMS"))
		{
			long v = std::atol(env);
			if (v > 0)
				return static_cast<std::size_t>(v);
		}
		return static_cast<std::size_t>(1000000);
	}();
	return budget;
}

RelForm::RelForm(Space space, ArtinPtr base, int degree)
    : space_(std::move(space)), base_(std::move(base)), degree_(degree)
{
	// degrees above n_vars are allowed and necessarily hold no terms
	if (degree_ < 0)
		fail(errc::invalid_argument, "form degree out of range");
}

RelForm RelForm::zero(Space space, ArtinPtr base, int degree)
{
	return RelForm(std::move(space), std::move(base), degree);
}

RelForm RelForm::scalar(const LaurentPoly &f, ArtinPtr base)
{
	RelForm out(f.space(), std::move(base), 0);
	for (const auto &[e, c] : f.terms())
		out.add_term(FormKey{e, {}, 0}, c);
	return out;
}

RelForm RelForm::pair_one_form(const Space &space, ArtinPtr base, int var)
{
	RelForm out(space, std::move(base), 1);
	Exps e(space.n_vars(), 0);
	if (space.laurent(var))
		e[var] = -1;
	out.add_term(FormKey{e, {var}, 0}, Rational(1));
	return out;
}

void RelForm::check_key(const FormKey &k) const
{
	if (k.exps.size() != space_.n_vars())
		fail(errc::invalid_argument, "exponent vector length mismatch");
	for (std::size_t i = 0; i < k.exps.size(); ++i)
		if (k.exps[i] < 0 && !space_.laurent(i))
			fail(errc::invalid_argument, "negative exponent in plain direction");
	if (static_cast<int>(k.idx.size()) != degree_)
		fail(errc::invalid_argument, "index set size must equal the degree");
	for (std::size_t i = 0; i < k.idx.size(); ++i)
	{
		if (k.idx[i] < 0 || k.idx[i] >= static_cast<int>(space_.n_vars()))
			fail(errc::invalid_argument, "form index out of range");
		if (i > 0 && k.idx[i - 1] >= k.idx[i])
			fail(errc::invalid_argument, "form indices must strictly increase");
	}
	if (k.base >= base_->dim())
		fail(errc::invalid_argument, "base monomial index out of range");
}

void RelForm::add_term(FormKey key, const Rational &c)
{
	if (c.is_zero())
		return;
	check_key(key);
	auto it = terms_.find(key);
	if (it == terms_.end())
	{
		terms_.emplace(std::move(key), c);
		if (terms_.size() > term_budget())
			fail(errc::term_budget_exceeded,
			     "form exceeds SYMPDEF_MAXTERMS = " + std::to_string(term_budget()));
		return;
	}
	it->second += c;
	if (it->second.is_zero())
		terms_.erase(it);
}

RelForm RelForm::operator+(const RelForm &o) const
{
	if (!(space_ == o.space_))
		fail(errc::space_mismatch, "adding forms on different spaces");
	if (!same_base(base_, o.base_))
		fail(errc::base_mismatch, "adding forms over different bases");
	if (degree_ != o.degree_)
		fail(errc::invalid_argument, "adding forms of different degrees");
	RelForm out = *this;
	for (const auto &[k, c] : o.terms_)
		out.add_term(k, c);
	return out;
}

RelForm RelForm::operator-(const RelForm &o) const
{
	return *this + o.scaled(Rational(-1));
}

RelForm RelForm::operator-() const
{
	return scaled(Rational(-1));
}

RelForm RelForm::scaled(const Rational &c) const
{
	RelForm out(space_, base_, degree_);
	if (c.is_zero())
		return out;
	for (const auto &[k, v] : terms_)
		out.terms_.emplace(k, c * v);
	return out;
}

RelForm RelForm::scaled_base(const QVec &a) const
{
	RelForm out(space_, base_, degree_);
	for (const auto &[k, v] : terms_)
	{
		QVec unit(base_->dim());
		unit[k.base] = v;
		QVec prod = base_->mul(a, unit);
		for (std::size_t b = 0; b < prod.size(); ++b)
			if (!prod[b].is_zero())
				out.add_term(FormKey{k.exps, k.idx, b}, prod[b]);
	}
	return out;
}

RelForm RelForm::scaled_fn(const RelForm &f) const
{
	if (f.degree() != 0)
		fail(errc::invalid_argument, "scaled_fn wants a 0-form");
	return wedge(f, *this);
}

RelForm RelForm::d() const
{
	RelForm out(space_, base_, degree_ + 1);
	for (const auto &[k, c] : terms_)
	{
		for (std::size_t v = 0; v < space_.n_vars(); ++v)
		{
			if (k.exps[v] == 0)
				continue;
			// d/dx_v of x^e, then dx_v wedged in front of dx_idx
			auto merged = merge_indices({static_cast<int>(v)}, k.idx);
			if (!merged)
				continue;
			Exps e(k.exps);
			e[v] -= 1;
			Rational coeff = c * Rational(k.exps[v]) * Rational(merged->first);
			out.add_term(FormKey{std::move(e), merged->second, k.base}, coeff);
		}
	}
	return out;
}

RelForm RelForm::contract_with(const std::vector<RelForm> &components) const
{
	if (degree_ == 0)
		fail(errc::invalid_argument, "cannot contract a 0-form");
	RelForm out(space_, base_, degree_ - 1);
	for (const auto &[k, c] : terms_)
		for (std::size_t pos = 0; pos < k.idx.size(); ++pos)
		{
			int v = k.idx[pos];
			const RelForm &comp = components[v];
			if (comp.is_zero())
				continue;
			std::vector<int> rest;
			for (std::size_t j = 0; j < k.idx.size(); ++j)
				if (j != pos)
					rest.push_back(k.idx[j]);
			int sign = (pos % 2 == 0) ? 1 : -1;
			for (const auto &[ck, cc] : comp.terms())
			{
				Exps e(k.exps);
				for (std::size_t i = 0; i < e.size(); ++i)
					e[i] += ck.exps[i];
				QVec unit(base_->dim());
				unit[k.base] = Rational(1);
				QVec bunit(base_->dim());
				bunit[ck.base] = Rational(1);
				QVec prod = base_->mul(unit, bunit);
				for (std::size_t b = 0; b < prod.size(); ++b)
					if (!prod[b].is_zero())
						out.add_term(FormKey{e, rest, b},
						             Rational(sign) * c * cc * prod[b]);
			}
		}
	return out;
}

RelForm RelForm::base_change(const ArtinQuotient &q) const
{
	RelForm out(space_, q.algebra, degree_);
	for (const auto &[k, c] : terms_)
	{
		QVec unit(base_->dim());
		unit[k.base] = c;
		QVec img = q.reduce(unit);
		for (std::size_t b = 0; b < img.size(); ++b)
			if (!img[b].is_zero())
				out.add_term(FormKey{k.exps, k.idx, b}, img[b]);
	}
	return out;
}

RelForm RelForm::with_base(const ArtinPtr &new_base) const
{
	RelForm out(space_, new_base, degree_);
	for (const auto &[k, c] : terms_)
	{
		if (k.base != 0)
			fail(errc::invalid_argument,
			     "with_base wants constant base coefficients");
		out.add_term(FormKey{k.exps, k.idx, 0}, c);
	}
	return out;
}

RelForm RelForm::closed_fiber() const
{
	RelForm out(space_, ArtinAlgebra::rationals(), degree_);
	for (const auto &[k, c] : terms_)
		if (k.base == 0)
			out.add_term(FormKey{k.exps, k.idx, 0}, c);
	return out;
}

int RelForm::madic_order() const
{
	int best = base_->nilpotency();
	for (const auto &[k, c] : terms_)
	{
		QVec unit(base_->dim());
		unit[k.base] = c;
		best = std::min(best, base_->madic_order(unit));
		if (best == 0)
			break;
	}
	return best;
}

std::vector<RelForm> RelForm::base_components() const
{
	std::vector<RelForm> out(
	    base_->dim(), RelForm(space_, ArtinAlgebra::rationals(), degree_));
	for (const auto &[k, c] : terms_)
		out[k.base].add_term(FormKey{k.exps, k.idx, 0}, c);
	return out;
}

bool RelForm::operator==(const RelForm &o) const
{
	return degree_ == o.degree_ && space_ == o.space_ &&
	       same_base(base_, o.base_) && terms_ == o.terms_;
}

std::string RelForm::str() const
{
	if (terms_.empty())
		return "0";
	std::ostringstream os;
	bool first = true;
	for (const auto &[k, c] : terms_)
	{
		Rational a = c;
		if (first)
		{
			if (a.sign() < 0)
			{
				os << "-";
				a = -a;
			}
		}
		else
		{
			os << (a.sign() < 0 ? " - " : " + ");
			a = a.abs();
		}
		first = false;
		std::string mono = monomial_str(k.exps, space_.names());
		bool printed = false;
		if (!a.is_one() || (mono == "1" && k.idx.empty() && k.base == 0))
		{
			os << a;
			printed = true;
		}
		if (mono != "1")
		{
			if (printed)
				os << "*";
			os << mono;
			printed = true;
		}
		for (int v : k.idx)
		{
			if (printed)
				os << "*";
			os << "d" << space_.name(v);
			printed = true;
		}
		if (k.base != 0)
		{
			std::string bm =
			    monomial_str(base_->basis()[k.base], base_->gen_names());
			if (printed)
				os << "*";
			os << bm;
		}
	}
	return os.str();
}

std::optional<std::pair<int, std::vector<int>>>
merge_indices(const std::vector<int> &a, const std::vector<int> &b)
{
	std::vector<int> out;
	out.reserve(a.size() + b.size());
	std::size_t i = 0, j = 0;
	int inversions = 0;
	while (i < a.size() && j < b.size())
	{
		if (a[i] == b[j])
			return std::nullopt;
		if (a[i] < b[j])
		{
			out.push_back(a[i++]);
		}
		else
		{
			// b[j] moves past the remaining elements of a
			inversions += static_cast<int>(a.size() - i);
			out.push_back(b[j++]);
		}
	}
	while (i < a.size())
		out.push_back(a[i++]);
	while (j < b.size())
		out.push_back(b[j++]);
	return std::make_pair(inversions % 2 == 0 ? 1 : -1, std::move(out));
}

RelForm wedge(const RelForm &a, const RelForm &b)
{
	if (!(a.space() == b.space()))
		fail(errc::space_mismatch, "wedging forms on different spaces");
	if (!same_base(a.base(), b.base()))
		fail(errc::base_mismatch, "wedging forms over different bases");
	const ArtinAlgebra &alg = *a.base();
	RelForm out(a.space(), a.base(), a.degree() + b.degree());
	for (const auto &[ka, ca] : a.terms())
		for (const auto &[kb, cb] : b.terms())
		{
			auto merged = merge_indices(ka.idx, kb.idx);
			if (!merged)
				continue;
			Exps e(ka.exps);
			for (std::size_t i = 0; i < e.size(); ++i)
				e[i] += kb.exps[i];
			QVec ua(alg.dim()), ub(alg.dim());
			ua[ka.base] = Rational(1);
			ub[kb.base] = Rational(1);
			QVec prod = alg.mul(ua, ub);
			Rational coeff = ca * cb * Rational(merged->first);
			for (std::size_t bidx = 0; bidx < prod.size(); ++bidx)
				if (!prod[bidx].is_zero())
					out.add_term(FormKey{e, merged->second, bidx},
					             coeff * prod[bidx]);
		}
	return out;
}

} // namespace sympdef
