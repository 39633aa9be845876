#pragma once

#include <stdexcept>
#include <string>

namespace sympdef {

// Every checked failure mode of the engine. Obstructions and negative
// verdicts that are ordinary results (a non-elementary extension, an
// obstructed Maurer-Cartan step) are returned as values, not thrown.
enum class errc {
	not_an_ideal,
	not_square_zero,
	not_local,
	not_closed,
	not_closed_input,
	wrong_closed_fiber,
	degenerate,
	space_mismatch,
	base_mismatch,
	rank_overflow,
	not_elementary,
	inconsistent_lift,
	not_a_differential,
	jacobi_fails,
	not_a_derivation,
	parse_error,
	term_budget_exceeded,
	invalid_argument,
};

const char *errc_name(errc c);

class MathError : public std::runtime_error {
public:
	MathError(errc code, const std::string &what)
	    : std::runtime_error(std::string(errc_name(code)) + ": " + what),
	      code_(code)
	{}
	errc code() const { return code_; }

private:
	errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string &what)
{
	throw MathError(code, what);
}

} // namespace sympdef
