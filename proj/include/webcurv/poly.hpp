#pragma once

#include "webcurv/field.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace webcurv {

// Univariate polynomial over a number field, coefficients low to high, no trailing zeros.
class UPoly
{
public:
	UPoly() : K_(rationals()) {}
	explicit UPoly(Field K) : K_(K) {}
	UPoly(Field K, std::vector<FieldScalar> c);
	static UPoly constant(const FieldScalar &c);
	static UPoly variable(Field K);

	Field field() const { return K_; }
	int degree() const { return int(c_.size()) - 1; } // -1 for zero
	bool is_zero() const { return c_.empty(); }
	const std::vector<FieldScalar> &coeffs() const { return c_; }
	FieldScalar coeff(int k) const;
	const FieldScalar &lc() const { return c_.back(); }

	FieldScalar eval(const FieldScalar &t) const;
	UPoly derivative() const;
	UPoly monic() const;

	UPoly &operator+=(const UPoly &o);
	UPoly &operator-=(const UPoly &o);
	UPoly &operator*=(const UPoly &o);
	UPoly &operator*=(const FieldScalar &s);
	UPoly operator-() const;
	bool operator==(const UPoly &o) const;
	bool operator!=(const UPoly &o) const { return !(*this == o); }

	std::string str(const std::string &var = "t") const;

private:
	Field K_;
	std::vector<FieldScalar> c_;
	void trim();
	friend void udivmod(const UPoly &, const UPoly &, UPoly &, UPoly &);
};

inline UPoly operator+(UPoly a, const UPoly &b) { return a += b; }
inline UPoly operator-(UPoly a, const UPoly &b) { return a -= b; }
inline UPoly operator*(UPoly a, const UPoly &b) { return a *= b; }
inline UPoly operator*(UPoly a, const FieldScalar &b) { return a *= b; }

void udivmod(const UPoly &a, const UPoly &b, UPoly &q, UPoly &r);
UPoly urem(const UPoly &a, const UPoly &b);
std::optional<UPoly> udivide_exact(const UPoly &a, const UPoly &b);
UPoly ugcd(UPoly a, UPoly b); // monic
UPoly usquarefree(const UPoly &a); // a / gcd(a, a'), monic
// Yun decomposition: factors[m-1] is the product of roots of multiplicity m (monic)
std::vector<UPoly> usquarefree_decomposition(const UPoly &a);
// Sylvester determinant with formal degrees taken from the coefficient lists
FieldScalar uresultant(const UPoly &a, const UPoly &b);
// Newton interpolation through (xs[i], ys[i])
UPoly uinterpolate(const std::vector<FieldScalar> &xs, const std::vector<FieldScalar> &ys);

// Sparse bivariate polynomial in x, y. Terms sorted by graded lex order with x > y, leading term first.
class MultiPoly
{
public:
	struct Term
	{
		uint32_t i, j;
		FieldScalar c;
	};

	MultiPoly() : K_(rationals()) {}
	explicit MultiPoly(Field K) : K_(K) {}
	MultiPoly(const FieldScalar &c);
	MultiPoly(int c) : MultiPoly(FieldScalar(c)) {}
	static MultiPoly monomial(const FieldScalar &c, uint32_t i, uint32_t j);
	static MultiPoly x(Field K = rationals());
	static MultiPoly y(Field K = rationals());
	// sorts, merges duplicate exponents, drops zeros
	static MultiPoly from_terms(Field K, std::vector<Term> terms);

	Field field() const { return K_; }
	const std::vector<Term> &terms() const { return t_; }
	size_t size() const { return t_.size(); }
	bool is_zero() const { return t_.empty(); }
	bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].i == 0 && t_[0].j == 0); }
	int total_degree() const;
	int degree_x() const;
	int degree_y() const;
	int min_degree_x() const;
	int min_degree_y() const;
	FieldScalar coeff(uint32_t i, uint32_t j) const;
	FieldScalar constant_term() const { return coeff(0, 0); }
	const Term &leading() const { return t_.front(); }
	bool is_homogeneous() const;

	MultiPoly &operator+=(const MultiPoly &o);
	MultiPoly &operator-=(const MultiPoly &o);
	MultiPoly &operator*=(const MultiPoly &o);
	MultiPoly &operator*=(const FieldScalar &s);
	MultiPoly operator-() const;
	bool operator==(const MultiPoly &o) const;
	bool operator!=(const MultiPoly &o) const { return !(*this == o); }

	MultiPoly dx() const;
	MultiPoly dy() const;
	FieldScalar eval(const FieldScalar &x, const FieldScalar &y) const;
	// eval_x substitutes x = c and returns a polynomial in y; eval_y substitutes y = c
	UPoly eval_x(const FieldScalar &c) const;
	UPoly eval_y(const FieldScalar &c) const;
	MultiPoly homogeneous_part(int d) const;
	MultiPoly in(Field K) const;
	// p(a x + b y + e, c x + d y + f)
	MultiPoly substitute_affine(const FieldScalar &a, const FieldScalar &b, const FieldScalar &e,
	                            const FieldScalar &c, const FieldScalar &d, const FieldScalar &f) const;
	MultiPoly swap_xy() const;

	std::string str() const;

private:
	Field K_;
	std::vector<Term> t_;
};

inline MultiPoly operator+(MultiPoly a, const MultiPoly &b) { return a += b; }
inline MultiPoly operator-(MultiPoly a, const MultiPoly &b) { return a -= b; }
MultiPoly operator*(const MultiPoly &a, const MultiPoly &b);
inline MultiPoly operator*(MultiPoly a, const FieldScalar &b) { return a *= b; }
inline MultiPoly operator*(const FieldScalar &b, MultiPoly a) { return a *= b; }

MultiPoly pow(const MultiPoly &p, unsigned e);
std::optional<MultiPoly> divide_exact(const MultiPoly &p, const MultiPoly &q);
bool divides(const MultiPoly &q, const MultiPoly &p);
// unique representative up to a nonzero scalar: monic leading term, then primitive integer coordinates
MultiPoly normalize(const MultiPoly &p);
// scalar s with normalize(p) = s * p
FieldScalar normalizing_factor(const MultiPoly &p);
MultiPoly poly_gcd(const MultiPoly &p, const MultiPoly &q);
MultiPoly squarefree_part(const MultiPoly &p);
bool is_squarefree(const MultiPoly &p);
// coprime square-free normalized base such that every input is a unit times a product of base powers
std::vector<MultiPoly> coprime_base(const std::vector<MultiPoly> &inputs);

// valuation(0, h) is infinite
struct Valuation
{
	bool infinite = false;
	long value = 0;
	static Valuation inf() { return {true, 0}; }
	bool operator==(const Valuation &o) const { return infinite == o.infinite && (infinite || value == o.value); }
};
Valuation valuation(const MultiPoly &p, const MultiPoly &h);
// unchecked: repeated exact division, h assumed non-constant
long raw_valuation(MultiPoly &p, const MultiPoly &h);

// coefficients of p as a polynomial in y (index = power of y), each a polynomial in x
std::vector<UPoly> coeffs_in_y(const MultiPoly &p);
std::vector<UPoly> coeffs_in_x(const MultiPoly &p);
MultiPoly from_coeffs_in_y(Field K, const std::vector<UPoly> &c);
MultiPoly from_upoly_x(const UPoly &p);
MultiPoly from_upoly_y(const UPoly &p);

enum class Var { X, Y };
// resultant eliminating v; the result is a polynomial in the other variable, returned as a MultiPoly
MultiPoly resultant(const MultiPoly &p, const MultiPoly &q, Var v);

// Homogeneous binary form of degree n: coeffs[m] multiplies x^(n-m) y^m.
class BinaryForm
{
public:
	BinaryForm() : K_(rationals()), n_(0), c_(1, FieldScalar(0)) {}
	BinaryForm(Field K, int n, std::vector<FieldScalar> c);
	static BinaryForm from_poly(const MultiPoly &p, int n); // p homogeneous of degree n (or zero)
	static BinaryForm linear(const FieldScalar &a, const FieldScalar &b); // a x + b y
	// the linear form vanishing at [u:v], monic in its first nonzero coefficient
	static BinaryForm vanishing_at(const FieldScalar &u, const FieldScalar &v);

	Field field() const { return K_; }
	int degree() const { return n_; }
	const std::vector<FieldScalar> &coeffs() const { return c_; }
	const FieldScalar &coeff(int m) const { return c_[m]; }
	bool is_zero() const;

	MultiPoly to_poly() const;
	FieldScalar eval(const FieldScalar &u, const FieldScalar &v) const;
	BinaryForm dx() const;
	BinaryForm dy() const;
	BinaryForm operator*(const BinaryForm &o) const;
	BinaryForm operator*(const FieldScalar &s) const;
	BinaryForm operator+(const BinaryForm &o) const;
	BinaryForm operator-(const BinaryForm &o) const;
	bool operator==(const BinaryForm &o) const;
	// equal up to a nonzero scalar
	bool proportional(const BinaryForm &o) const;
	BinaryForm normalized() const;
	BinaryForm in(Field K) const;
	// f(a x + b y, c x + d y)
	BinaryForm substitute(const FieldScalar &a, const FieldScalar &b, const FieldScalar &c, const FieldScalar &d) const;
	// f(t, 1)
	UPoly dehomogenize() const;
	std::string str() const;

private:
	Field K_;
	int n_;
	std::vector<FieldScalar> c_;
};

FieldScalar resultant(const BinaryForm &f, const BinaryForm &g);

struct LinearFactorization
{
	std::vector<std::pair<BinaryForm, int>> factors; // linear forms, normalized
	BinaryForm residual;                              // no root in the field
	FieldScalar unit;                                 // f = unit * prod factors^m * residual
};
LinearFactorization linear_factors(const BinaryForm &f);

// roots in the coefficient field with multiplicities
std::vector<std::pair<FieldScalar, int>> roots_in_field(const UPoly &f);

// point of P^1 as [u:v], normalized with last nonzero coordinate 1
struct P1Point
{
	FieldScalar u, v;
	static P1Point make(const FieldScalar &u, const FieldScalar &v);
	static P1Point affine(const FieldScalar &z) { return make(z, FieldScalar(1)); }
	static P1Point infinity() { return make(FieldScalar(1), FieldScalar(0)); }
	bool is_infinity() const { return v.is_zero(); }
	bool operator==(const P1Point &o) const;
	bool operator!=(const P1Point &o) const { return !(*this == o); }
	std::string str() const;
};

// root point of a linear form a x + b y: [-b : a]
P1Point root_of_linear(const BinaryForm &l);

} // namespace webcurv
