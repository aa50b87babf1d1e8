#pragma once

#include "webcurv/poly.hpp"

#include <map>

namespace webcurv {

// Reduced quotient num/den with gcd 1 and normalized denominator.
class RatFunc
{
public:
	RatFunc() : num_(), den_(1) {}
	RatFunc(const MultiPoly &p) : num_(p), den_(MultiPoly(FieldScalar(p.field(), 1))) {}
	RatFunc(const FieldScalar &c) : RatFunc(MultiPoly(c)) {}
	RatFunc(int c) : RatFunc(MultiPoly(c)) {}
	RatFunc(const MultiPoly &num, const MultiPoly &den);
	// num and den already coprime; only the scalar normalization is applied
	static RatFunc coprime(const MultiPoly &num, const MultiPoly &den);

	const MultiPoly &num() const { return num_; }
	const MultiPoly &den() const { return den_; }
	Field field() const { return common_field(num_.field(), den_.field()); }
	bool is_zero() const { return num_.is_zero(); }
	bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
	bool is_polynomial() const { return den_.is_constant(); }

	RatFunc &operator+=(const RatFunc &o);
	RatFunc &operator-=(const RatFunc &o);
	RatFunc &operator*=(const RatFunc &o);
	RatFunc &operator/=(const RatFunc &o);
	RatFunc operator-() const;
	bool operator==(const RatFunc &o) const { return num_ == o.num_ && den_ == o.den_; }
	bool operator!=(const RatFunc &o) const { return !(*this == o); }

	RatFunc dx() const;
	RatFunc dy() const;
	FieldScalar eval(const FieldScalar &x, const FieldScalar &y) const;
	RatFunc substitute_affine(const FieldScalar &a, const FieldScalar &b, const FieldScalar &e,
	                          const FieldScalar &c, const FieldScalar &d, const FieldScalar &f) const;
	RatFunc in(Field K) const;
	std::string str() const;

private:
	MultiPoly num_, den_;
	void fix_scalar();
};

inline RatFunc operator+(RatFunc a, const RatFunc &b) { return a += b; }
inline RatFunc operator-(RatFunc a, const RatFunc &b) { return a -= b; }
inline RatFunc operator*(RatFunc a, const RatFunc &b) { return a *= b; }
inline RatFunc operator/(RatFunc a, const RatFunc &b) { return a /= b; }
RatFunc pow(const RatFunc &r, long e);

// Truncated Taylor expansion in X = x - x0, Y = y - y0, total degree <= N.
class JetSeries
{
public:
	JetSeries() = default;
	JetSeries(Field K, FieldScalar x0, FieldScalar y0, int N);
	static JetSeries constant(Field K, const FieldScalar &x0, const FieldScalar &y0, int N, const FieldScalar &c);

	Field field() const { return K_; }
	int order() const { return N_; }
	const FieldScalar &base_x() const { return x0_; }
	const FieldScalar &base_y() const { return y0_; }
	FieldScalar &at(int i, int j) { return c_[index(i, j)]; }
	const FieldScalar &at(int i, int j) const { return c_[index(i, j)]; }

	JetSeries &operator+=(const JetSeries &o);
	JetSeries &operator-=(const JetSeries &o);
	JetSeries operator*(const JetSeries &o) const;
	JetSeries operator*(const FieldScalar &s) const;
	JetSeries inverse() const; // needs nonzero constant term
	JetSeries truncate(int M) const;
	JetSeries dX() const; // derivative, order drops by one
	JetSeries dY() const;
	bool operator==(const JetSeries &o) const;
	// exact polynomial in X, Y
	MultiPoly to_poly() const;

	static int index(int i, int j) { int d = i + j; return d * (d + 1) / 2 + j; }

private:
	Field K_ = rationals();
	FieldScalar x0_, y0_;
	int N_ = 0;
	std::vector<FieldScalar> c_;
};

inline JetSeries operator+(JetSeries a, const JetSeries &b) { return a += b; }
inline JetSeries operator-(JetSeries a, const JetSeries &b) { return a -= b; }

// Taylor expansion of a polynomial at (x0, y0): exact shift, truncated at N
JetSeries poly_jet(const MultiPoly &p, const FieldScalar &x0, const FieldScalar &y0, int N);
JetSeries taylor_jet(const RatFunc &r, const FieldScalar &x0, const FieldScalar &y0, int N);

} // namespace webcurv
