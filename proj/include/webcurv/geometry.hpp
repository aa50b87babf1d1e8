#pragma once

#include "webcurv/linalg.hpp"
#include "webcurv/ratfunc.hpp"

#include <optional>
#include <stdexcept>

namespace webcurv {

struct GeometryError : std::runtime_error
{
	using std::runtime_error::runtime_error;
};

// a dx + b dy
struct OneForm
{
	RatFunc a, b;
	bool is_zero() const { return a.is_zero() && b.is_zero(); }
	bool operator==(const OneForm &o) const { return a == o.a && b == o.b; }
	OneForm operator+(const OneForm &o) const { return {a + o.a, b + o.b}; }
	OneForm operator-(const OneForm &o) const { return {a - o.a, b - o.b}; }
	OneForm operator*(const RatFunc &r) const { return {a * r, b * r}; }
	std::string str() const;
};

// c dx^dy
struct TwoForm
{
	RatFunc c;
	bool is_zero() const { return c.is_zero(); }
	bool operator==(const TwoForm &o) const { return c == o.c; }
	std::string str() const;
};

// u d/dx + v d/dy
struct VectorField
{
	RatFunc u, v;
};

OneForm differential(const RatFunc &r);
TwoForm exterior_d(const OneForm &w);
TwoForm wedge(const OneForm &w1, const OneForm &w2);
RatFunc contract(const VectorField &X, const OneForm &w);
VectorField radial_field(Field K = rationals());

// Polynomial 1-form a dx + b dy up to multiplication by a nonzero function: a, b coprime,
// the leading coefficient of a (of b when a = 0) is 1 and then all coordinates are coprime integers.
class Foliation
{
public:
	Foliation(MultiPoly a, MultiPoly b);
	static Foliation from_form(const OneForm &w);
	// foliation with first integral r
	static Foliation level_sets(const RatFunc &r);

	const MultiPoly &a() const { return a_; }
	const MultiPoly &b() const { return b_; }
	Field field() const { return common_field(a_.field(), b_.field()); }
	OneForm form() const { return {RatFunc(a_), RatFunc(b_)}; }
	Foliation in(Field K) const { return Foliation(a_.in(K), b_.in(K)); }
	bool operator==(const Foliation &o) const { return a_ == o.a_ && b_ == o.b_; }
	bool operator!=(const Foliation &o) const { return !(*this == o); }
	std::string str() const;

private:
	MultiPoly a_, b_;
};

// point [X:Y:Z] of P^2, scaled so that the last nonzero coordinate is 1
struct ProjPoint
{
	FieldScalar X, Y, Z;
	static ProjPoint make(const FieldScalar &X, const FieldScalar &Y, const FieldScalar &Z);
	static ProjPoint affine(const FieldScalar &x, const FieldScalar &y) { return make(x, y, FieldScalar(1)); }
	bool at_infinity() const { return Z.is_zero(); }
	bool operator==(const ProjPoint &o) const { return X == o.X && Y == o.Y && Z == o.Z; }
	std::string str() const;
};

// lines through p: Y dx - X dy when p = [X:Y:0], else (y - y0) dx - (x - x0) dy
Foliation pencil(const ProjPoint &p);

class Web
{
public:
	Web() = default;
	explicit Web(std::vector<Foliation> f);
	size_t size() const { return f_.size(); }
	const Foliation &operator[](size_t i) const { return f_[i]; }
	const std::vector<Foliation> &foliations() const { return f_; }
	Field field() const;
	Web without(size_t i) const;
	Web with(const Foliation &F) const;

private:
	std::vector<Foliation> f_;
};

// k pencils of lines plus one nonlinear foliation
struct CDQLWeb
{
	std::vector<ProjPoint> linear_points;
	Foliation nonlinear;
	std::string label;
	std::optional<int> expected_rank;

	// the pencils in order, then the nonlinear foliation
	Web web() const;
};

struct Divisor
{
	std::vector<std::pair<MultiPoly, int>> components;
	// multiplicities of the supplied candidate factors in p; fails when p is not exhausted up to a constant
	static std::optional<Divisor> from_candidates(const MultiPoly &p, const std::vector<MultiPoly> &candidates);
};

// (x, y) -> (a x + b y + e, c x + d y + f)
struct AffineMap
{
	FieldScalar a, b, e, c, d, f;
	static AffineMap identity();
	static AffineMap linear(const FieldScalar &a, const FieldScalar &b, const FieldScalar &c, const FieldScalar &d);
	FieldScalar det() const { return a * d - b * c; }
	// (this o psi)(p) = this(psi(p))
	AffineMap compose(const AffineMap &psi) const;
	AffineMap inverse() const;
};

MultiPoly pullback(const AffineMap &phi, const MultiPoly &p);
RatFunc pullback(const AffineMap &phi, const RatFunc &r);
OneForm pullback(const AffineMap &phi, const OneForm &w);
TwoForm pullback(const AffineMap &phi, const TwoForm &t);
Foliation pullback(const AffineMap &phi, const Foliation &F);
Web pullback(const AffineMap &phi, const Web &W);

// normalized a_F b_G - a_G b_F, multiplicities kept
MultiPoly tangency(const Foliation &F, const Foliation &G);
// normalized square-free part of the product of pairwise tangencies
MultiPoly discriminant(const Web &W);
bool is_invariant(const MultiPoly &h, const Foliation &F);
bool is_first_integral(const RatFunc &r, const Foliation &F);
int foliation_degree(const Foliation &F);
// foliation of F dG - G dF with the common factor removed
Foliation pencil_foliation(const MultiPoly &F, const MultiPoly &G);

struct AffinePoint
{
	FieldScalar x, y;
	bool operator==(const AffinePoint &o) const { return x == o.x && y == o.y; }
};

struct SingularSet
{
	std::vector<AffinePoint> points;
	bool complete = true;          // every common zero has coordinates in the field
	MultiPoly resultant_x, resultant_y; // Res_y(a, b) in x and Res_x(a, b) in y, kept as certificate
};
SingularSet singular_points(const Foliation &F);

struct LinearPart
{
	Matrix jacobian;  // of (b, -a)
	UPoly charpoly;   // t^2 - tr t + det
	// r with r + 1/r = tr^2/det - 2, present when det != 0 and r lies in the field
	std::optional<std::pair<FieldScalar, FieldScalar>> eigenvalue_ratios;
};
LinearPart linear_part(const Foliation &F, const AffinePoint &p);

} // namespace webcurv
