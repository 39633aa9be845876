#include "sympdef/space.hpp"
#include "sympdef/errors.hpp"

#include <set>

namespace sympdef {

Space::Space(std::vector<Variable> vars, std::vector<std::pair<int, int>> pairs)
    : vars_(std::move(vars)), pairs_(std::move(pairs))
{
	if (vars_.size() % 2 != 0)
		fail(errc::invalid_argument, "variable count must be even");
	std::set<std::string> names;
	for (const auto &v : vars_)
		if (!names.insert(v.name).second)
			fail(errc::invalid_argument, "duplicate variable '" + v.name + "'");
	std::vector<bool> used(vars_.size(), false);
	for (auto [a, b] : pairs_)
	{
		if (a < 0 || b < 0 || a >= static_cast<int>(vars_.size()) ||
		    b >= static_cast<int>(vars_.size()) || a == b)
			fail(errc::invalid_argument, "bad pairing entry");
		if (used[a] || used[b])
			fail(errc::invalid_argument, "variable paired twice");
		used[a] = used[b] = true;
	}
	for (bool u : used)
		if (!u)
			fail(errc::invalid_argument, "unpaired variable");
}

int Space::var_index(const std::string &name) const
{
	for (std::size_t i = 0; i < vars_.size(); ++i)
		if (vars_[i].name == name)
			return static_cast<int>(i);
	return -1;
}

std::vector<std::string> Space::names() const
{
	std::vector<std::string> out;
	for (const auto &v : vars_)
		out.push_back(v.name);
	return out;
}

std::vector<std::size_t> Space::laurent_indices() const
{
	std::vector<std::size_t> out;
	for (std::size_t i = 0; i < vars_.size(); ++i)
		if (vars_[i].laurent)
			out.push_back(i);
	return out;
}

Space Space::parse(const std::string &spec)
{
	struct Factor {
		bool laurent;
		int pairs;
	};
	std::vector<Factor> factors;
	std::size_t pos = 0;
	while (pos < spec.size())
	{
		std::size_t next = spec.find('+', pos);
		std::string piece = spec.substr(pos, next == std::string::npos
		                                         ? std::string::npos
		                                         : next - pos);
		std::size_t colon = piece.find(':');
		if (colon == std::string::npos)
			fail(errc::parse_error, "space factor '" + piece + "' needs kind:count");
		std::string kind = piece.substr(0, colon);
		int count = 0;
		try
		{
			count = std::stoi(piece.substr(colon + 1));
		}
		catch (...)
		{
			fail(errc::parse_error, "bad pair count in '" + piece + "'");
		}
		if (count <= 0)
			fail(errc::parse_error, "pair count must be positive in '" + piece + "'");
		if (kind == "torus")
			factors.push_back({true, count});
		else if (kind == "affine")
			factors.push_back({false, count});
		else
			fail(errc::parse_error, "unknown space kind '" + kind + "'");
		if (next == std::string::npos)
			break;
		pos = next + 1;
	}
	if (factors.empty())
		fail(errc::parse_error, "empty space spec");

	int total_pairs = 0;
	for (const auto &f : factors)
		total_pairs += f.pairs;

	std::vector<Variable> vars;
	std::vector<std::pair<int, int>> pairs;
	int pair_no = 0;
	for (const auto &f : factors)
		for (int k = 0; k < f.pairs; ++k)
		{
			++pair_no;
			std::string suffix =
			    total_pairs == 1 ? "" : std::to_string(pair_no);
			int i = static_cast<int>(vars.size());
			vars.push_back({"x" + suffix, f.laurent});
			vars.push_back({"y" + suffix, f.laurent});
			pairs.push_back({i, i + 1});
		}
	return Space(std::move(vars), std::move(pairs));
}

} // namespace sympdef
