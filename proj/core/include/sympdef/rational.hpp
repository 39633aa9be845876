#pragma once

#include <gmpxx.h>
#include <iosfwd>
#include <string>

namespace sympdef {

/// Exact rational number. Always canonical: gcd(|num|, den) = 1, den > 0.
class Rational {
public:
	Rational() : q_(0) {}
	Rational(long n) : q_(n) {}
	Rational(long num, long den);
	explicit Rational(const std::string &s); // "num" or "num/den"

	static Rational from_mpq(mpq_class q);

	bool is_zero() const { return sgn(q_) == 0; }
	bool is_one() const { return q_ == 1; }
	int sign() const { return sgn(q_); }

	Rational &operator+=(const Rational &o) { q_ += o.q_; return *this; }
	Rational &operator-=(const Rational &o) { q_ -= o.q_; return *this; }
	Rational &operator*=(const Rational &o) { q_ *= o.q_; return *this; }
	Rational &operator/=(const Rational &o);

	Rational operator-() const { return from_mpq(-q_); }
	Rational inv() const;
	Rational abs() const { return from_mpq(::abs(q_)); }

	friend Rational operator+(Rational a, const Rational &b) { return a += b; }
	friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
	friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
	friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

	friend bool operator==(const Rational &a, const Rational &b) { return a.q_ == b.q_; }
	friend bool operator!=(const Rational &a, const Rational &b) { return a.q_ != b.q_; }
	friend bool operator<(const Rational &a, const Rational &b) { return a.q_ < b.q_; }
	friend bool operator>(const Rational &a, const Rational &b) { return a.q_ > b.q_; }
	friend bool operator<=(const Rational &a, const Rational &b) { return a.q_ <= b.q_; }
	friend bool operator>=(const Rational &a, const Rational &b) { return a.q_ >= b.q_; }

	std::string str() const { return q_.get_str(); }
	std::string num_str() const { return q_.get_num().get_str(); }
	std::string den_str() const { return q_.get_den().get_str(); }

	friend std::ostream &operator<<(std::ostream &os, const Rational &r);

private:
	mpq_class q_;
};

} // namespace sympdef
