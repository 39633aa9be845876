#include "sympdef/serialize.hpp"
#include "sympdef/errors.hpp"

namespace sympdef {

Json to_json(const Space &space)
{
	Json vars = Json::array();
	for (const auto &v : space.variables())
		vars.push_back(Json{{"name", v.name}, {"laurent", v.laurent}});
	Json pairs = Json::array();
	for (auto [a, b] : space.pairs())
		pairs.push_back(Json::array({a, b}));
	return Json{{"variables", vars}, {"pairing", pairs}};
}

Space space_from_json(const Json &j)
{
	std::vector<Space::Variable> vars;
	for (const auto &v : j.at("variables"))
		vars.push_back({v.at("name").get<std::string>(), v.at("laurent").get<bool>()});
	std::vector<std::pair<int, int>> pairs;
	for (const auto &p : j.at("pairing"))
		pairs.push_back({p.at(0).get<int>(), p.at(1).get<int>()});
	return Space(std::move(vars), std::move(pairs));
}

Json to_json(const ArtinPtr &algebra)
{
	Json ideal = Json::array();
	for (const auto &g : algebra->ideal_generators())
		ideal.push_back(poly_str(g, algebra->gen_names()));
	return Json{{"generators", algebra->gen_names()},
	            {"ideal", ideal},
	            {"order", algebra->order()}};
}

ArtinPtr algebra_from_json(const Json &j)
{
	std::vector<std::string> gens =
	    j.at("generators").get<std::vector<std::string>>();
	std::vector<PolyMap> ideal;
	for (const auto &s : j.at("ideal"))
		ideal.push_back(parse_poly(s.get<std::string>(), gens));
	return ArtinAlgebra::create(std::move(gens), std::move(ideal),
	                            j.at("order").get<int>());
}

Json to_json(const RelForm &form)
{
	const Space &sp = form.space();
	const ArtinAlgebra &base = *form.base();
	Json terms = Json::array();
	for (const auto &[k, c] : form.terms())
	{
		Json exps = Json::object();
		for (std::size_t i = 0; i < sp.n_vars(); ++i)
			if (k.exps[i] != 0)
				exps[sp.name(i)] = k.exps[i];
		Json idx = Json::array();
		for (int v : k.idx)
			idx.push_back("d" + sp.name(v));
		Json bm = Json::object();
		const Exps &be = base.basis()[k.base];
		for (std::size_t i = 0; i < be.size(); ++i)
			if (be[i] != 0)
				bm[base.gen_names()[i]] = be[i];
		terms.push_back(Json{{"coeff", c.str()},
		                     {"exponents", exps},
		                     {"form", idx},
		                     {"base_monomial", bm}});
	}
	return Json{{"space", to_json(sp)},
	            {"base", to_json(form.base())},
	            {"degree", form.degree()},
	            {"terms", terms}};
}

RelForm form_from_json(const Json &j)
{
	Space sp = space_from_json(j.at("space"));
	ArtinPtr base = algebra_from_json(j.at("base"));
	RelForm out(sp, base, j.at("degree").get<int>());
	for (const auto &t : j.at("terms"))
	{
		Exps e(sp.n_vars(), 0);
		for (auto it = t.at("exponents").begin(); it != t.at("exponents").end(); ++it)
		{
			int v = sp.var_index(it.key());
			if (v < 0)
				fail(errc::parse_error, "unknown variable '" + it.key() + "'");
			e[v] = it.value().get<int>();
		}
		std::vector<int> idx;
		for (const auto &dname : t.at("form"))
		{
			std::string s = dname.get<std::string>();
			if (s.empty() || s[0] != 'd')
				fail(errc::parse_error, "form entries look like 'dx'");
			int v = sp.var_index(s.substr(1));
			if (v < 0)
				fail(errc::parse_error, "unknown differential '" + s + "'");
			idx.push_back(v);
		}
		Exps bexp(base->gen_count(), 0);
		for (auto it = t.at("base_monomial").begin();
		     it != t.at("base_monomial").end(); ++it)
		{
			int g = -1;
			for (std::size_t k = 0; k < base->gen_count(); ++k)
				if (base->gen_names()[k] == it.key())
					g = static_cast<int>(k);
			if (g < 0)
				fail(errc::parse_error, "unknown base generator '" + it.key() + "'");
			bexp[g] = it.value().get<int>();
		}
		QVec bvec = base->nf(pmonomial(bexp));
		Rational c(t.at("coeff").get<std::string>());
		for (std::size_t b = 0; b < bvec.size(); ++b)
			if (!bvec[b].is_zero())
				out.add_term(FormKey{e, idx, b}, c * bvec[b]);
	}
	return out;
}

Json to_json(const Deformation &d)
{
	return Json{{"space", to_json(d.space())},
	            {"base", to_json(d.base())},
	            {"omega", to_json(d.omega())}};
}

Deformation deformation_from_json(const Json &j)
{
	Space sp = space_from_json(j.at("space"));
	ArtinPtr base = algebra_from_json(j.at("base"));
	RelForm omega = form_from_json(j.at("omega"));
	return make_deformation(sp, base, omega);
}

namespace {

std::string subset_label(const Space &sp, const std::vector<int> &subset)
{
	std::string s;
	for (int v : subset)
	{
		if (!s.empty())
			s += "^";
		s += "dlog " + sp.name(v);
	}
	return s.empty() ? "1" : s;
}

} // namespace

Json to_json(const PeriodPoint &p)
{
	Json coords = Json::array();
	for (std::size_t h = 0; h < p.coords.size(); ++h)
		coords.push_back(Json{{"class", subset_label(p.space, p.h2_subsets[h])},
		                      {"value", p.base->describe(p.coords[h])}});
	return Json{{"space", to_json(p.space)},
	            {"base", to_json(p.base)},
	            {"coordinates", coords}};
}

Json to_json(const KsClass &ks, const ArtinPtr &base)
{
	KahlerDiff kd(base);
	Json rows = Json::array();
	for (std::size_t h = 0; h < ks.coords.rows(); ++h)
	{
		QVec row(ks.coords.cols());
		for (std::size_t c = 0; c < row.size(); ++c)
			row[c] = ks.coords.at(h, c);
		rows.push_back(Json{{"class_index", h}, {"value", kd.describe(row)}});
	}
	return Json{{"coordinates", rows}};
}

Json to_json(const Report &report)
{
	return Json{{"round_trips", report.round_trips},
	            {"isomorphism_checks", report.isomorphism_checks},
	            {"torsor_dims", report.torsor_dims},
	            {"failures", report.failures}};
}

DglaSpec dgla_from_json(const Json &j)
{
	DglaSpec spec;
	spec.kmin = j.at("range").at(0).get<int>();
	spec.kmax = j.at("range").at(1).get<int>();
	for (auto it = j.at("dims").begin(); it != j.at("dims").end(); ++it)
		spec.dims[std::stoi(it.key())] = it.value().get<std::size_t>();
	if (j.contains("d"))
		for (const auto &entry : j.at("d"))
		{
			int k = entry.at("from_deg").get<int>();
			const auto &rows = entry.at("matrix");
			std::size_t nrows = rows.size();
			std::size_t ncols = nrows ? rows.at(0).size() : 0;
			QMat m(nrows, ncols);
			for (std::size_t r = 0; r < nrows; ++r)
				for (std::size_t c = 0; c < ncols; ++c)
					m.at(r, c) = Rational(rows.at(r).at(c).get<std::string>());
			spec.differentials[k] = std::move(m);
		}
	if (j.contains("bracket"))
		for (const auto &entry : j.at("bracket"))
		{
			int i = entry.at("i").get<int>();
			int jj = entry.at("j").get<int>();
			std::vector<std::vector<QVec>> tensor;
			for (const auto &row : entry.at("tensor"))
			{
				std::vector<QVec> r;
				for (const auto &vec : row)
				{
					QVec v;
					for (const auto &x : vec)
						v.push_back(Rational(x.get<std::string>()));
					r.push_back(std::move(v));
				}
				tensor.push_back(std::move(r));
			}
			spec.brackets[{i, jj}] = std::move(tensor);
		}
	if (j.contains("labels"))
		for (auto it = j.at("labels").begin(); it != j.at("labels").end(); ++it)
			spec.labels[std::stoi(it.key())] =
			    it.value().get<std::vector<std::string>>();
	return spec;
}

Json to_json(const DglaSpec &spec)
{
	Json dims = Json::object();
	for (const auto &[k, n] : spec.dims)
		dims[std::to_string(k)] = n;
	Json d = Json::array();
	for (const auto &[k, m] : spec.differentials)
	{
		Json rows = Json::array();
		for (std::size_t r = 0; r < m.rows(); ++r)
		{
			Json row = Json::array();
			for (std::size_t c = 0; c < m.cols(); ++c)
				row.push_back(m.at(r, c).str());
			rows.push_back(row);
		}
		d.push_back(Json{{"from_deg", k}, {"matrix", rows}});
	}
	Json brackets = Json::array();
	for (const auto &[key, tensor] : spec.brackets)
	{
		Json t = Json::array();
		for (const auto &row : tensor)
		{
			Json r = Json::array();
			for (const auto &vec : row)
			{
				Json v = Json::array();
				for (const auto &x : vec)
					v.push_back(x.str());
				r.push_back(v);
			}
			t.push_back(r);
		}
		brackets.push_back(Json{{"i", key.first}, {"j", key.second}, {"tensor", t}});
	}
	Json out{{"range", Json::array({spec.kmin, spec.kmax})},
	         {"dims", dims},
	         {"d", d},
	         {"bracket", brackets}};
	if (!spec.labels.empty())
	{
		Json labels = Json::object();
		for (const auto &[k, names] : spec.labels)
			labels[std::to_string(k)] = names;
		out["labels"] = labels;
	}
	return out;
}

ArtinPtr parse_base(const std::string &spec)
{
	if (spec.empty())
		fail(errc::parse_error, "empty base spec");
	if (spec[0] == '{')
		return algebra_from_json(Json::parse(spec));
	auto caret = spec.find('^');
	if (caret == std::string::npos)
		fail(errc::parse_error, "base spec looks like t^k or m^k(s,t)");
	std::string head = spec.substr(0, caret);
	std::string tail = spec.substr(caret + 1);
	if (head == "t")
	{
		int k = 0;
		try
		{
			k = std::stoi(tail);
		}
		catch (...)
		{
			fail(errc::parse_error, "bad exponent in '" + spec + "'");
		}
		if (k < 1)
			fail(errc::parse_error, "exponent must be >= 1");
		return ArtinAlgebra::create({"t"}, {}, k);
	}
	if (head == "m")
	{
		auto open = tail.find('(');
		auto close = tail.find(')');
		if (open == std::string::npos || close == std::string::npos || close < open)
			fail(errc::parse_error, "m^k wants a generator list: m^k(s,t)");
		int k = 0;
		try
		{
			k = std::stoi(tail.substr(0, open));
		}
		catch (...)
		{
			fail(errc::parse_error, "bad exponent in '" + spec + "'");
		}
		if (k < 1)
			fail(errc::parse_error, "exponent must be >= 1");
		std::vector<std::string> gens;
		std::string inner = tail.substr(open + 1, close - open - 1);
		std::size_t pos = 0;
		while (pos <= inner.size())
		{
			auto comma = inner.find(',', pos);
			std::string name = inner.substr(
			    pos, comma == std::string::npos ? std::string::npos : comma - pos);
			if (!name.empty())
				gens.push_back(name);
			if (comma == std::string::npos)
				break;
			pos = comma + 1;
		}
		if (gens.empty())
			fail(errc::parse_error, "empty generator list in '" + spec + "'");
		return ArtinAlgebra::create(std::move(gens), {}, k);
	}
	fail(errc::parse_error, "unknown base spec '" + spec + "'");
}

} // namespace sympdef
