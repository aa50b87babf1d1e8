#pragma once

#include <gmpxx.h>
#include <boost/container/small_vector.hpp>

#include <string>
#include <vector>
#include <stdexcept>

namespace webcurv {

using Rational = mpq_class;
using Integer = mpz_class;

struct AlgebraError : std::runtime_error
{
	using std::runtime_error::runtime_error;
};

// Q(alpha) presented by a monic minimal polynomial. Instances are interned and never freed,
// so a Field handle is a plain pointer and equality of fields is pointer equality.
class NumberField
{
public:
	std::string label;
	std::string symbol;           // name of the generator in printed output
	std::vector<Rational> minpoly; // low to high, monic, size degree()+1

	int degree() const { return int(minpoly.size()) - 1; }
	bool is_rational() const { return degree() == 1; }

	// alpha^m in the power basis for m in [0, 2d-2]
	std::vector<std::vector<Rational>> powers;
};

using Field = const NumberField *;

Field rationals();
// caller obligation: minpoly irreducible over Q
Field make_field(const std::string &label, const std::string &symbol, std::vector<Rational> minpoly);
Field cyclotomic(int k); // Q(xi_k), xi_k = exp(2 pi i/k); Q for k = 1, 2
Field gaussian();        // Q(i)
Field eisenstein();      // Q(xi3)
Field find_field(const std::string &label);

class FieldScalar;
// xi_k^e; rational for k <= 2
FieldScalar root_of_unity(int k, long e);

class FieldScalar
{
public:
	using Coords = boost::container::small_vector<Rational, 2>;

	FieldScalar() : K_(rationals()), c_(1) {}
	FieldScalar(int v) : K_(rationals()), c_(1, Rational(v)) {}
	FieldScalar(long v) : K_(rationals()), c_(1, Rational(v)) {}
	FieldScalar(const Rational &v) : K_(rationals()), c_(1, v) {}
	explicit FieldScalar(Field K) : K_(K), c_(K->degree()) {}
	FieldScalar(Field K, const Rational &v) : K_(K), c_(K->degree()) { c_[0] = v; }
	FieldScalar(Field K, Coords c);

	static FieldScalar generator(Field K);

	Field field() const { return K_; }
	const Coords &coords() const { return c_; }
	const Rational &coord(int k) const { return c_[k]; }

	bool is_zero() const;
	bool is_one() const;
	bool is_rational() const; // all non-constant coordinates vanish
	Rational to_rational() const;

	FieldScalar &operator+=(const FieldScalar &o);
	FieldScalar &operator-=(const FieldScalar &o);
	FieldScalar &operator*=(const FieldScalar &o);
	FieldScalar &operator/=(const FieldScalar &o);
	FieldScalar operator-() const;
	FieldScalar inverse() const;
	FieldScalar pow(long e) const;

	// this += a*b
	void addmul(const FieldScalar &a, const FieldScalar &b);
	void mul_rational(const Rational &q);

	// lift into a field containing this one (Q into anything)
	FieldScalar in(Field K) const;

	bool operator==(const FieldScalar &o) const;
	bool operator!=(const FieldScalar &o) const { return !(*this == o); }

	// lcm of coordinate denominators
	Integer denominator() const;
	// total order used only for canonical sorting, not a field order
	int compare(const FieldScalar &o) const;
	std::string str() const;
	size_t hash() const;

private:
	Field K_;
	Coords c_;
	friend Field common_field(const FieldScalar &, const FieldScalar &);
};

Field common_field(Field a, Field b);
Field common_field(const FieldScalar &a, const FieldScalar &b);

inline FieldScalar operator+(FieldScalar a, const FieldScalar &b) { return a += b; }
inline FieldScalar operator-(FieldScalar a, const FieldScalar &b) { return a -= b; }
inline FieldScalar operator*(FieldScalar a, const FieldScalar &b) { return a *= b; }
inline FieldScalar operator/(FieldScalar a, const FieldScalar &b) { return a /= b; }

std::ostream &operator<<(std::ostream &os, const FieldScalar &s);

// parse "p/q" or "p"
Rational parse_rational(const std::string &s);
std::string rational_str(const Rational &q);

} // namespace webcurv
