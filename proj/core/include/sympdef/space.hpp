#pragma once

#include <string>
#include <utility>
#include <vector>

namespace sympdef {

/// Coordinate model space: a product of one-dimensional factors, each either
/// C* (laurent, the coordinate is invertible) or C (plain). Variables come
/// paired: the reference symplectic form pairs (x_i, y_i).
class Space {
public:
	struct Variable {
		std::string name;
		bool laurent;
		bool operator==(const Variable &) const = default;
	};

	Space(std::vector<Variable> vars, std::vector<std::pair<int, int>> pairs);

	/// Mini grammar: "torus:k" is (C*)^2k with dlog pairs, "affine:k" is
	/// C^2k, products like "torus:1+affine:2" concatenate.
	static Space parse(const std::string &spec);

	std::size_t n_vars() const { return vars_.size(); }
	const std::vector<Variable> &variables() const { return vars_; }
	const std::vector<std::pair<int, int>> &pairs() const { return pairs_; }
	bool laurent(std::size_t i) const { return vars_[i].laurent; }
	const std::string &name(std::size_t i) const { return vars_[i].name; }
	int var_index(const std::string &name) const; // -1 if absent

	std::vector<std::string> names() const;
	std::vector<std::size_t> laurent_indices() const;

	bool operator==(const Space &) const = default;

private:
	std::vector<Variable> vars_;
	std::vector<std::pair<int, int>> pairs_;
};

} // namespace sympdef
