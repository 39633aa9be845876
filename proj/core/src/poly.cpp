#include "sympdef/poly.hpp"
#include "sympdef/errors.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace sympdef {

void padd_term(PolyMap &p, const Exps &e, const Rational &c)
{
	if (c.is_zero())
		return;
	auto it = p.find(e);
	if (it == p.end())
	{
		p.emplace(e, c);
		return;
	}
	it->second += c;
	if (it->second.is_zero())
		p.erase(it);
}

PolyMap padd(const PolyMap &a, const PolyMap &b)
{
	PolyMap r = a;
	for (const auto &[e, c] : b)
		padd_term(r, e, c);
	return r;
}

PolyMap psub(const PolyMap &a, const PolyMap &b)
{
	PolyMap r = a;
	for (const auto &[e, c] : b)
		padd_term(r, e, -c);
	return r;
}

PolyMap pmul(const PolyMap &a, const PolyMap &b)
{
	PolyMap r;
	for (const auto &[ea, ca] : a)
		for (const auto &[eb, cb] : b)
		{
			Exps e(ea);
			for (std::size_t i = 0; i < e.size(); ++i)
				e[i] += eb[i];
			padd_term(r, e, ca * cb);
		}
	return r;
}

PolyMap pscale(const PolyMap &a, const Rational &c)
{
	PolyMap r;
	if (c.is_zero())
		return r;
	for (const auto &[e, v] : a)
		r.emplace(e, c * v);
	return r;
}

PolyMap pmonomial(const Exps &e, const Rational &c)
{
	PolyMap r;
	if (!c.is_zero())
		r.emplace(e, c);
	return r;
}

PolyMap pderiv(const PolyMap &a, std::size_t var)
{
	PolyMap r;
	for (const auto &[e, c] : a)
	{
		if (e[var] == 0)
			continue;
		Exps d(e);
		d[var] -= 1;
		padd_term(r, d, Rational(e[var]) * c);
	}
	return r;
}

PolyMap ptruncate(const PolyMap &a, int degree_bound)
{
	PolyMap r;
	for (const auto &[e, c] : a)
		if (total_degree(e) < degree_bound)
			r.emplace(e, c);
	return r;
}

namespace {

struct Lexer {
	const std::string &s;
	std::size_t i = 0;
	void skip_ws()
	{
		while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
			++i;
	}
	bool done()
	{
		skip_ws();
		return i >= s.size();
	}
	char peek()
	{
		skip_ws();
		return s[i];
	}
};

int find_var(const std::string &name, const std::vector<std::string> &names)
{
	for (std::size_t k = 0; k < names.size(); ++k)
		if (names[k] == name)
			return static_cast<int>(k);
	return -1;
}

// term := [rational] {'*' factor} | factor {'*' factor}
// factor := name ['^' int]
PolyMap parse_term(Lexer &lx, const std::vector<std::string> &names)
{
	Exps e(names.size(), 0);
	Rational coeff(1);
	bool saw_factor = false;
	bool expect_factor = true;
	while (!lx.done())
	{
		char c = lx.peek();
		if (c == '+' || c == '-')
			break;
		if (c == '*')
		{
			++lx.i;
			expect_factor = true;
			continue;
		}
		if (!expect_factor)
			fail(errc::parse_error, "missing '*' in polynomial near position " +
			                            std::to_string(lx.i));
		if (std::isdigit(static_cast<unsigned char>(c)))
		{
			std::size_t j = lx.i;
			while (j < lx.s.size() &&
			       (std::isdigit(static_cast<unsigned char>(lx.s[j])) || lx.s[j] == '/'))
				++j;
			coeff *= Rational(lx.s.substr(lx.i, j - lx.i));
			lx.i = j;
		}
		else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
		{
			std::size_t j = lx.i;
			while (j < lx.s.size() &&
			       (std::isalnum(static_cast<unsigned char>(lx.s[j])) || lx.s[j] == '_'))
				++j;
			std::string name = lx.s.substr(lx.i, j - lx.i);
			lx.i = j;
			int v = find_var(name, names);
			if (v < 0)
				fail(errc::parse_error, "unknown variable '" + name + "'");
			int power = 1;
			lx.skip_ws();
			if (lx.i < lx.s.size() && lx.s[lx.i] == '^')
			{
				++lx.i;
				lx.skip_ws();
				std::size_t j2 = lx.i;
				if (j2 < lx.s.size() && lx.s[j2] == '-')
					++j2;
				while (j2 < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[j2])))
					++j2;
				if (j2 == lx.i)
					fail(errc::parse_error, "bad exponent");
				power = std::stoi(lx.s.substr(lx.i, j2 - lx.i));
				lx.i = j2;
			}
			e[v] += power;
		}
		else
		{
			fail(errc::parse_error, std::string("unexpected character '") + c + "'");
		}
		saw_factor = true;
		expect_factor = false;
	}
	if (!saw_factor)
		fail(errc::parse_error, "empty term");
	return pmonomial(e, coeff);
}

} // namespace

PolyMap parse_poly(const std::string &text, const std::vector<std::string> &names)
{
	Lexer lx{text};
	PolyMap out;
	bool first = true;
	while (!lx.done())
	{
		Rational sign(1);
		char c = lx.peek();
		if (c == '+' || c == '-')
		{
			if (c == '-')
				sign = Rational(-1);
			++lx.i;
		}
		else if (!first)
		{
			fail(errc::parse_error, "expected '+' or '-'");
		}
		PolyMap term = parse_term(lx, names);
		for (const auto &[e, v] : term)
			padd_term(out, e, sign * v);
		first = false;
	}
	if (first)
		fail(errc::parse_error, "empty polynomial");
	return out;
}

std::string monomial_str(const Exps &e, const std::vector<std::string> &names)
{
	std::ostringstream os;
	bool any = false;
	for (std::size_t k = 0; k < e.size(); ++k)
	{
		if (e[k] == 0)
			continue;
		if (any)
			os << "*";
		os << names[k];
		if (e[k] != 1)
			os << "^" << e[k];
		any = true;
	}
	if (!any)
		return "1";
	return os.str();
}

std::string poly_str(const PolyMap &p, const std::vector<std::string> &names)
{
	if (p.empty())
		return "0";
	std::ostringstream os;
	bool first = true;
	for (const auto &[e, c] : p)
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
		std::string mono = monomial_str(e, names);
		if (mono == "1")
			os << a;
		else if (a.is_one())
			os << mono;
		else
			os << a << "*" << mono;
		first = false;
	}
	return os.str();
}

std::vector<Exps> monomials_up_to(std::size_t n, int bound)
{
	std::vector<Exps> out;
	Exps cur(n, 0);
	// depth-first enumeration, then sort graded-lex
	std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int left) {
		if (pos == n)
		{
			out.push_back(cur);
			return;
		}
		for (int k = 0; k <= left; ++k)
		{
			cur[pos] = k;
			rec(pos + 1, left - k);
		}
		cur[pos] = 0;
	};
	rec(0, bound);
	std::sort(out.begin(), out.end(), GradedLexLess{});
	return out;
}

} // namespace sympdef
