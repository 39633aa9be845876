// sympdef: exact-arithmetic workbench for symplectic deformations over
// Artin bases. Subcommands: verify, lift, period, ks, iso, mc, ttcheck,
// elementary, filtration.
//
// Exit codes: 0 success, 1 mathematical failure or obstruction, 2 usage
// error.

#include "sympdef/errors.hpp"
#include "sympdef/serialize.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <set>

using namespace sympdef;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_math = 1;
constexpr int exit_usage = 2;

struct OutputSink {
	std::string path;
	std::string format = "text";

	void emit(const std::string &text, const Json &json) const
	{
		const std::string &payload =
		    format == "json" ? json.dump(2) + "\n" : text;
		if (path.empty())
		{
			std::cout << payload;
			return;
		}
		std::ofstream out(path);
		if (!out)
			fail(errc::invalid_argument, "cannot write " + path);
		out << payload;
	}
};

Json read_json_file(const std::string &path)
{
	std::ifstream in(path);
	if (!in)
		fail(errc::invalid_argument, "cannot read " + path);
	Json j;
	in >> j;
	return j;
}

std::pair<int, int> parse_grid(const std::string &grid)
{
	auto dots = grid.find("..");
	if (dots == std::string::npos)
		fail(errc::parse_error, "grid looks like lo..hi");
	try
	{
		int lo = std::stoi(grid.substr(0, dots));
		int hi = std::stoi(grid.substr(dots + 2));
		if (lo > hi)
			fail(errc::parse_error, "grid is empty");
		return {lo, hi};
	}
	catch (const MathError &)
	{
		throw;
	}
	catch (...)
	{
		fail(errc::parse_error, "grid looks like lo..hi");
	}
}

std::string report_text(const Report &rep)
{
	std::ostringstream os;
	os << "round_trips: " << rep.round_trips << "\n";
	os << "isomorphism_checks: " << rep.isomorphism_checks << "\n";
	os << "torsor_dims:";
	for (auto d : rep.torsor_dims)
		os << " " << d;
	os << "\n";
	if (rep.failures.empty())
		os << "failures: none\n";
	else
	{
		os << "failures: " << rep.failures.size() << "\n";
		for (const auto &f : rep.failures)
			os << "  - " << f << "\n";
	}
	return os.str();
}

/// Period points over the base whose free coordinates range over [lo, hi]
/// integers; the constant coordinate is pinned to the reference. When the
/// full grid exceeds the cap, a deterministic evenly-strided sample of cap
/// points is taken instead.
std::vector<PeriodPoint> period_grid(const Space &space, const ArtinPtr &base,
                                     int lo, int hi, std::size_t cap)
{
	Decomposition ref = decompose(reference_form(space, base));
	CohomologyBasis h2 = cohomology_basis(space, 2, base);
	const std::size_t free_coords = h2.dim() * (base->dim() - 1);
	const int width = hi - lo + 1;
	bool exhaustive = true;
	std::size_t total = 1;
	for (std::size_t i = 0; i < free_coords; ++i)
	{
		total *= static_cast<std::size_t>(width);
		if (total > cap)
		{
			exhaustive = false;
			break;
		}
	}

	std::set<std::vector<int>> digit_sets;
	if (exhaustive)
	{
		for (std::size_t n = 0; n < total; ++n)
		{
			std::size_t rest = n;
			std::vector<int> digits(free_coords);
			for (std::size_t i = 0; i < free_coords; ++i)
			{
				digits[i] = lo + static_cast<int>(rest % width);
				rest /= width;
			}
			digit_sets.insert(std::move(digits));
		}
	}
	else
	{
		std::mt19937 rng(9001u); // fixed seed: identical config, identical output
		std::uniform_int_distribution<int> digit(lo, hi);
		for (std::size_t tries = 0; digit_sets.size() < cap && tries < 16 * cap;
		     ++tries)
		{
			std::vector<int> digits(free_coords);
			for (auto &d : digits)
				d = digit(rng);
			digit_sets.insert(std::move(digits));
		}
	}

	std::vector<PeriodPoint> out;
	for (const auto &digits : digit_sets)
	{
		std::vector<QVec> coords = ref.coords;
		std::size_t i = 0;
		for (std::size_t h = 0; h < h2.dim(); ++h)
			for (std::size_t b = 1; b < base->dim(); ++b)
				coords[h][b] += Rational(digits[i++]);
		out.push_back(make_period_point(space, base, coords));
	}
	return out;
}

int cmd_verify(const std::string &space_spec, const std::string &base_spec,
               const std::string &grid, std::size_t perturb,
               std::size_t max_points, const OutputSink &sink)
{
	Space space = Space::parse(space_spec);
	ArtinPtr base = parse_base(base_spec);
	auto [lo, hi] = parse_grid(grid);
	if (max_points == 0)
		fail(errc::invalid_argument, "--max-points must be positive");
	auto sample = period_grid(space, base, lo, hi, max_points);
	Report rep = verify_period_bijection(space, base, sample, perturb);
	std::ostringstream os;
	os << "sampled period points: " << sample.size() << "\n" << report_text(rep);
	sink.emit(os.str(), to_json(rep));
	return rep.ok() ? exit_ok : exit_math;
}

int cmd_period(const std::string &input, const OutputSink &sink)
{
	Deformation d = deformation_from_json(read_json_file(input));
	PeriodPoint p = period_map(d);
	std::ostringstream os;
	for (std::size_t h = 0; h < p.coords.size(); ++h)
	{
		os << "[";
		for (std::size_t k = 0; k < p.h2_subsets[h].size(); ++k)
			os << (k ? "^" : "") << "dlog " << d.space().name(p.h2_subsets[h][k]);
		os << "] : " << d.base()->describe(p.coords[h]) << "\n";
	}
	sink.emit(os.str(), to_json(p));
	return exit_ok;
}

int cmd_ks(const std::string &input, const OutputSink &sink)
{
	Deformation d = deformation_from_json(read_json_file(input));
	KahlerDiff kd(d.base());
	KsClass ks = kodaira_spencer(d, kd);
	std::ostringstream os;
	for (std::size_t h = 0; h < ks.coords.rows(); ++h)
	{
		QVec row(ks.coords.cols());
		for (std::size_t c = 0; c < row.size(); ++c)
			row[c] = ks.coords.at(h, c);
		os << "class " << h << " : " << kd.describe(row) << "\n";
	}
	sink.emit(os.str(), to_json(ks, d.base()));
	return exit_ok;
}

int cmd_iso(const std::string &left, const std::string &right,
            const OutputSink &sink)
{
	Deformation d1 = deformation_from_json(read_json_file(left));
	Deformation d2 = deformation_from_json(read_json_file(right));
	IsoResult r = find_isomorphism(d1, d2);
	if (!r.iso)
	{
		sink.emit("no isomorphism: " + r.detail + "\n",
		          Json{{"isomorphic", false}, {"witness", r.detail}});
		return exit_math;
	}
	Json steps = Json::array();
	std::ostringstream os;
	os << "isomorphic via " << r.iso->steps.size() << " step(s)\n";
	for (const auto &xi : r.iso->steps)
	{
		os << "  xi = " << xi.str() << "\n";
		Json comps = Json::array();
		for (const auto &c : xi.components())
			comps.push_back(to_json(c));
		steps.push_back(comps);
	}
	sink.emit(os.str(), Json{{"isomorphic", true}, {"steps", steps}});
	return exit_ok;
}

int cmd_lift(const std::string &input, const std::string &target_spec,
             const std::string &torsor, const OutputSink &sink)
{
	Deformation d0 = deformation_from_json(read_json_file(input));
	ArtinPtr target = parse_base(target_spec);

	if (target->same_as(*d0.base()))
	{
		sink.emit("deformation already lives over the target base\n",
		          to_json(d0));
		return exit_ok;
	}

	// locate the input base inside the m-adic chain of the target
	auto chain = madic_filtration(target);
	std::size_t at = chain.size();
	for (std::size_t k = 0; k < chain.size(); ++k)
		if (chain[k].quotient.algebra->same_as(*d0.base()))
			at = k;
	if (at == chain.size())
		fail(errc::base_mismatch,
		     "input base is not a quotient in the target's m-adic chain");

	Deformation cur = d0;
	for (std::size_t k = at + 1; k-- > 0;)
	{
		const auto &step = chain[k];
		KsLiftSet lifts = ks_lift_set(cur, step.algebra, step.ideal);
		QMat c(lifts.h2_dim, lifts.ideal_dim);
		if (k == 0 && !torsor.empty())
		{
			std::size_t pos = 0, idx = 0;
			while (pos <= torsor.size() && idx < lifts.torsor_dim)
			{
				auto comma = torsor.find(',', pos);
				std::string piece = torsor.substr(
				    pos, comma == std::string::npos ? std::string::npos
				                                    : comma - pos);
				if (!piece.empty())
				{
					auto [h, kk] = lifts.torsor_basis[idx];
					c.at(h, kk) = Rational(piece);
					++idx;
				}
				if (comma == std::string::npos)
					break;
				pos = comma + 1;
			}
		}
		cur = lift_deformation(cur, step.algebra, step.ideal,
		                       lifts.translate(c));
	}
	std::ostringstream os;
	os << "lifted omega = " << cur.omega().str() << "\n";
	sink.emit(os.str(), to_json(cur));
	return exit_ok;
}

int cmd_mc(const std::string &dgla_file, const std::string &gamma1_name,
           const std::string &gamma1_coords, std::size_t order,
           const OutputSink &sink)
{
	DglaSpec spec = dgla_from_json(read_json_file(dgla_file));
	DglaPtr g = Dgla::validate(spec);
	QVec gamma1(g->dim(1));
	if (!gamma1_name.empty())
	{
		auto it = spec.labels.find(1);
		bool found = false;
		if (it != spec.labels.end())
			for (std::size_t i = 0; i < it->second.size(); ++i)
				if (it->second[i] == gamma1_name)
				{
					gamma1[i] = Rational(1);
					found = true;
				}
		if (!found)
			fail(errc::invalid_argument,
			     "no degree-1 basis element named '" + gamma1_name + "'");
	}
	else
	{
		std::size_t pos = 0, idx = 0;
		while (idx < gamma1.size() && pos <= gamma1_coords.size())
		{
			auto comma = gamma1_coords.find(',', pos);
			std::string piece = gamma1_coords.substr(
			    pos, comma == std::string::npos ? std::string::npos : comma - pos);
			if (!piece.empty())
				gamma1[idx++] = Rational(piece);
			if (comma == std::string::npos)
				break;
			pos = comma + 1;
		}
	}
	McOutcome out = mc_solve(g, gamma1, order);
	if (!out.series)
	{
		std::ostringstream os;
		os << "Obstructed at order " << *out.obstructed_at << ", class "
		   << g->describe(2, out.obstruction_rep) << "\n";
		Json j{{"obstructed_at", *out.obstructed_at},
		       {"class", g->describe(2, out.obstruction_rep)}};
		sink.emit(os.str(), j);
		return exit_math;
	}
	std::ostringstream os;
	Json coeffs = Json::array();
	for (std::size_t k = 0; k < out.series->order(); ++k)
	{
		os << "gamma_" << (k + 1) << " = "
		   << g->describe(1, out.series->coefficients[k]) << "\n";
		Json vec = Json::array();
		for (const auto &x : out.series->coefficients[k])
			vec.push_back(x.str());
		coeffs.push_back(vec);
	}
	bool clean = true;
	for (const auto &r : check_mc(*out.series))
		clean = clean && is_zero(r);
	os << (clean ? "residuals zero through the requested order\n"
	             : "nonzero residual detected\n");
	sink.emit(os.str(), Json{{"coefficients", coeffs}, {"residuals_zero", clean}});
	return clean ? exit_ok : exit_math;
}

int cmd_ttcheck(const std::string &space_spec, std::size_t trials, int maxdeg,
                unsigned seed, const OutputSink &sink)
{
	Space space = Space::parse(space_spec);
	ArtinPtr q = ArtinAlgebra::rationals();
	SymplecticForm om(reference_form(space, q));
	std::mt19937 rng(seed);
	std::uniform_int_distribution<int> expdist(-maxdeg, maxdeg);
	std::uniform_int_distribution<int> coeff(-2, 2);
	CohomologyBasis h1 = cohomology_basis(space, 1, q);

	auto random_closed_gamma = [&](int marker) {
		RelForm f(space, q, 0);
		for (int t = 0; t < 3; ++t)
		{
			Exps e(space.n_vars(), 0);
			for (std::size_t i = 0; i < space.n_vars(); ++i)
			{
				int k = expdist(rng);
				e[i] = space.laurent(i) ? k : std::abs(k);
			}
			int c = coeff(rng);
			if (c != 0)
				f.add_term(FormKey{e, {}, 0}, Rational(c));
		}
		RelForm alpha = f.d();
		for (const auto &rep : h1.representatives)
			alpha = alpha + rep.scaled(Rational(coeff(rng)));
		return TangentValuedForm::wrap(raise(om, alpha), {marker}, 2);
	};

	std::size_t zero = 0;
	for (std::size_t t = 0; t < trials; ++t)
	{
		auto res = tian_todorov_check(om, random_closed_gamma(1),
		                              random_closed_gamma(2));
		if (res.holds)
			++zero;
	}
	std::ostringstream os;
	os << zero << "/" << trials << " residual zero\n";
	sink.emit(os.str(), Json{{"trials", trials}, {"zero_residuals", zero}});
	return zero == trials ? exit_ok : exit_math;
}

int cmd_elementary(const std::string &base_spec, const std::string &ideal_spec,
                   const OutputSink &sink)
{
	ArtinPtr a = parse_base(base_spec);
	std::vector<PolyMap> gens;
	std::size_t pos = 0;
	while (pos <= ideal_spec.size())
	{
		auto semi = ideal_spec.find(';', pos);
		std::string piece = ideal_spec.substr(
		    pos, semi == std::string::npos ? std::string::npos : semi - pos);
		if (!piece.empty())
			gens.push_back(parse_poly(piece, a->gen_names()));
		if (semi == std::string::npos)
			break;
		pos = semi + 1;
	}
	ArtinIdeal ideal = ArtinIdeal::from_polys(a, gens);
	ElementaryResult r = is_elementary(a, ideal);
	if (r.elementary)
	{
		sink.emit("elementary\n", Json{{"elementary", true}});
		return exit_ok;
	}
	std::string w = a->describe(*r.witness);
	sink.emit("not elementary; witness " + w + "\n",
	          Json{{"elementary", false}, {"witness", w}});
	return exit_math;
}

int cmd_filtration(const std::string &base_spec, const OutputSink &sink)
{
	ArtinPtr a = parse_base(base_spec);
	auto steps = madic_filtration(a);
	std::ostringstream os;
	Json arr = Json::array();
	bool all_elementary = true;
	for (std::size_t k = 0; k < steps.size(); ++k)
	{
		ElementaryResult r = is_elementary(steps[k].algebra, steps[k].ideal);
		all_elementary = all_elementary && r.elementary;
		os << "step " << k << ": dim " << steps[k].algebra->dim() << " -> "
		   << steps[k].quotient.algebra->dim() << ", ideal dim "
		   << steps[k].ideal.dim() << ", "
		   << (r.elementary ? "elementary" : "NOT elementary") << "\n";
		arr.push_back(Json{{"from_dim", steps[k].algebra->dim()},
		                   {"to_dim", steps[k].quotient.algebra->dim()},
		                   {"ideal_dim", steps[k].ideal.dim()},
		                   {"elementary", r.elementary}});
	}
	if (steps.empty())
		os << "trivial chain\n";
	sink.emit(os.str(), Json{{"steps", arr}});
	return all_elementary ? exit_ok : exit_math;
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"exact symplectic deformation workbench"};
	app.require_subcommand(1);
	app.fallthrough(); // --out/--format may follow the subcommand

	OutputSink sink;
	app.add_option("--out", sink.path, "write output to a file");
	app.add_option("--format", sink.format, "text or json")
	    ->check(CLI::IsMember({"text", "json"}));

	std::string space_spec = "torus:1", base_spec = "t^2", grid = "0..1";
	std::string input, left, right, target, torsor;
	std::string dgla_file, gamma1_name, gamma1_coords, ideal_spec;
	std::size_t trials = 100, order = 5, perturb = 1, max_points = 96;
	int maxdeg = 2;
	unsigned seed = 2024u;

	auto *verify = app.add_subcommand("verify", "period bijection run on a grid");
	verify->add_option("--space", space_spec)->required();
	verify->add_option("--base", base_spec)->required();
	verify->add_option("--grid", grid, "lo..hi integer range")->required();
	verify->add_option("--perturb", perturb, "exact perturbations per point");
	verify->add_option("--max-points", max_points,
	                   "sample cap when the full grid is larger");

	auto *period = app.add_subcommand("period", "period coordinates of a deformation");
	period->add_option("--input", input)->required();

	auto *ks = app.add_subcommand("ks", "Kodaira-Spencer class of a deformation");
	ks->add_option("--input", input)->required();

	auto *iso = app.add_subcommand("iso", "find an isomorphism between deformations");
	iso->add_option("--left", left)->required();
	iso->add_option("--right", right)->required();

	auto *lift = app.add_subcommand("lift", "lift a deformation along the m-adic chain");
	lift->add_option("--input", input)->required();
	lift->add_option("--target", target)->required();
	lift->add_option("--torsor", torsor, "comma-separated torsor coordinates");

	auto *mc = app.add_subcommand("mc", "Maurer-Cartan series solver");
	mc->add_option("--dgla", dgla_file)->required();
	mc->add_option("--gamma1", gamma1_name, "degree-1 basis element by label");
	mc->add_option("--gamma1-coords", gamma1_coords, "comma-separated coordinates");
	mc->add_option("--order", order);

	auto *tt = app.add_subcommand("ttcheck", "Tian-Todorov residual sampling");
	tt->add_option("--space", space_spec)->required();
	tt->add_option("--trials", trials);
	tt->add_option("--maxdeg", maxdeg);
	tt->add_option("--seed", seed);

	auto *elem = app.add_subcommand("elementary", "left-exactness of a square-zero extension");
	elem->add_option("--algebra", base_spec)->required();
	elem->add_option("--ideal", ideal_spec, "semicolon-separated generators")->required();

	auto *filt = app.add_subcommand("filtration", "m-adic chain with elementary flags");
	filt->add_option("--algebra", base_spec)->required();

	try
	{
		app.parse(argc, argv);
	}
	catch (const CLI::ParseError &e)
	{
		int rc = app.exit(e);
		return rc == 0 ? exit_ok : exit_usage; // --help stays 0
	}

	try
	{
		if (*verify)
			return cmd_verify(space_spec, base_spec, grid, perturb, max_points,
			                  sink);
		if (*period)
			return cmd_period(input, sink);
		if (*ks)
			return cmd_ks(input, sink);
		if (*iso)
			return cmd_iso(left, right, sink);
		if (*lift)
			return cmd_lift(input, target, torsor, sink);
		if (*mc)
		{
			if (gamma1_name.empty() && gamma1_coords.empty())
			{
				std::cerr << "mc wants --gamma1 or --gamma1-coords\n";
				return exit_usage;
			}
			return cmd_mc(dgla_file, gamma1_name, gamma1_coords, order, sink);
		}
		if (*tt)
			return cmd_ttcheck(space_spec, trials, maxdeg, seed, sink);
		if (*elem)
			return cmd_elementary(base_spec, ideal_spec, sink);
		if (*filt)
			return cmd_filtration(base_spec, sink);
	}
	catch (const MathError &e)
	{
		std::cerr << e.what() << "\n";
		return e.code() == errc::parse_error || e.code() == errc::invalid_argument
		           ? exit_usage
		           : exit_math;
	}
	catch (const std::exception &e)
	{
		std::cerr << "internal error: " << e.what() << "\n";
		return exit_math;
	}
	return exit_usage;
}
