#pragma once

#include "webcurv/geometry.hpp"

namespace webcurv {

struct CurvatureReport
{
	// eta = (eta_x dx + eta_y dy) / eta_den, not reduced
	MultiPoly eta_x, eta_y, eta_den;
	TwoForm K;
	bool is_flat = false;
	int triple_count = 0;

	OneForm eta() const;
};

// eta with d(alpha) = alpha ^ eta for alpha = delta_st w_r and alpha = delta_tr w_s
OneForm eta_triple(const Foliation &r, const Foliation &s, const Foliation &t);
// threads <= 0 reads WEBCURV_THREADS, falling back to the hardware concurrency
CurvatureReport curvature(const Web &W, int threads = 0);

struct PoleOrder
{
	bool minus_infinity = false; // the form vanishes identically
	long value = 0;
	bool holomorphic() const { return minus_infinity || value <= 0; }
};
PoleOrder pole_order_along(const TwoForm &T, const MultiPoly &h);

struct TTCheck
{
	bool hypotheses_hold = false; // C divides tang(F, F1) and not the discriminant of W
	bool holomorphic = false;
	bool C_invariant_by_F = false;
	bool C_invariant_by_F1 = false;
	bool C_invariant_by_barycenter = false;
	bool consistent = false; // holomorphic == (F1-invariant or barycenter-invariant)
	PoleOrder pole;
};
TTCheck check_TT(const Foliation &F, const Web &W, const MultiPoly &C);

// projective transformation [u:v] -> [a u + b v : c u + d v]
struct Mobius
{
	FieldScalar a, b, c, d;
	static Mobius identity() { return {1, 0, 0, 1}; }
	// g with g(q1) = [1:0], g(q2) = [0:1], g(q3) = [1:-1]
	static Mobius normalizing(const P1Point &q1, const P1Point &q2, const P1Point &q3);
	FieldScalar det() const { return a * d - b * c; }
	Mobius inverse() const;
	Mobius compose(const Mobius &h) const; // this o h
	P1Point operator()(const P1Point &p) const;
	// the form whose zeros are the images of the zeros of f
	BinaryForm operator()(const BinaryForm &f) const;
};

// barycenter of pts in the affine chart P^1 minus v
P1Point barycenter_point(const P1Point &v, const std::vector<P1Point> &pts);

// sum_m c[m] s^(k-m) t^m = prod (a_i s + b_i t) for the foliations [a_i dx + b_i dy]
struct ImplicitWeb
{
	Field K = rationals();
	std::vector<MultiPoly> c;

	int order() const { return int(c.size()) - 1; }
	static ImplicitWeb from_web(const Web &W);
	// constant directions: f(s, t) as a binary form
	static ImplicitWeb from_binary_form(const BinaryForm &f);
	ImplicitWeb operator*(const ImplicitWeb &o) const;
	// W(A, B) as a polynomial
	MultiPoly eval(const MultiPoly &A, const MultiPoly &B) const;
};

Foliation barycenter_foliation(const Foliation &F, const ImplicitWeb &W);
Foliation barycenter_foliation(const Foliation &F, const Web &W);
// each member replaced by its barycenter with respect to the others
Web barycenter_web(const Web &W);

// prod (v_i X - u_i Y)
BinaryForm configuration(const std::vector<P1Point> &pts);
// points of a configuration that splits over its field; throws otherwise
std::vector<std::pair<P1Point, int>> configuration_points(const BinaryForm &c);
// multiplicities of the zeros (over the algebraic closure), largest first
std::vector<int> configuration_multiplicities(const BinaryForm &c);
// the barycenter transform of a configuration of k >= 2 distinct points
BinaryForm barycenter_config(const BinaryForm &c);

// j = 6912 I^3 / (4 I^3 - J^2) for the binary quartic; harmonic -> 1728, equianharmonic -> 0
FieldScalar j_invariant(const BinaryForm &quartic);
// j = 256 (l^2 - l + 1)^3 / (l^2 (l - 1)^2) for the cross-ratio l
FieldScalar j_invariant_cross_ratio(const std::vector<P1Point> &pts);

struct CriticalOrbit
{
	P1Point point;
	std::vector<P1Point> orbit; // forward orbit up to the first repetition
	int preperiod = 0, period = 0;
	bool finite = false;
};

struct BetaStarEvidence
{
	int pairs = 0;
	int equal_j_pairs = 0; // pairs with j(c1) = j(c2)
	int semiconjugate = 0; // among those, pairs with j(beta(c1)) = j(beta(c2))
	int map_degree = 0;
	int critical_count = 0; // with multiplicity, should be 2 deg - 2
	std::vector<CriticalOrbit> critical;
	bool post_critically_finite = false;
};
// z^2 (z + 540)^3 / (5 z - 216)^4
BetaStarEvidence beta_star_probe(unsigned seed, int pairs = 20, int max_steps = 50);

struct PolarMap
{
	BinaryForm P, Q;
	int degree() const { return P.degree(); }
	P1Point operator()(const P1Point &p) const;
	// g o f o g^-1
	PolarMap conjugate(const Mobius &g) const;
	bool proportional(const PolarMap &o) const;
	std::string str() const;
};

// f = (B_d : -A_d) for the line at infinity, which must be invariant
PolarMap ell_polar_map(const Foliation &F);

struct Fiber
{
	std::vector<std::pair<P1Point, int>> points;
	BinaryForm residual;
};
Fiber polar_fiber(const PolarMap &f, const P1Point &q);
// zeros of Y P - X Q
Fiber polar_fixed_points(const PolarMap &f);

} // namespace webcurv
