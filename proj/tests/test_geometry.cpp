#include <doctest.h>

#include "webcurv/expr.hpp"
#include "webcurv/geometry.hpp"

#include <random>

using namespace webcurv;

namespace {

MultiPoly P(const std::string &s, Field K = rationals()) { return parse_poly(s, K); }
RatFunc R(const std::string &s, Field K = rationals()) { return parse_ratfunc(s, K); }
OneForm form(const std::string &a, const std::string &b, Field K = rationals()) { return {R(a, K), R(b, K)}; }
Foliation fol(const std::string &a, const std::string &b, Field K = rationals()) { return Foliation(P(a, K), P(b, K)); }

RatFunc random_ratfunc(std::mt19937 &rng)
{
	std::uniform_int_distribution<int> c(-3, 3);
	auto poly = [&](int deg) {
		std::vector<MultiPoly::Term> t;
		for (int i = 0; i <= deg; i++)
			for (int j = 0; i + j <= deg; j++)
				t.push_back({uint32_t(i), uint32_t(j), FieldScalar(c(rng))});
		return MultiPoly::from_terms(rationals(), t);
	};
	MultiPoly d = poly(1);
	if (d.is_zero())
		d = MultiPoly(1);
	return RatFunc(poly(2), d);
}

AffineMap random_linear(std::mt19937 &rng)
{
	std::uniform_int_distribution<int> c(-3, 3);
	while (true) {
		AffineMap phi = AffineMap::linear(c(rng), c(rng), c(rng), c(rng));
		if (!phi.det().is_zero())
			return phi;
	}
}

} // namespace

TEST_CASE("exterior derivative and wedge")
{
	CHECK(exterior_d(form("0", "x")).c == RatFunc(1));
	CHECK(exterior_d(differential(R("x*y"))).is_zero());
	CHECK(exterior_d(form("y", "-(x-y)")).c == RatFunc(-2));
	CHECK(wedge(form("1", "0"), form("0", "1")).c == RatFunc(1));
	OneForm w = form("x^2+y", "1/(x-y)");
	CHECK(wedge(w, w).is_zero());
	CHECK(wedge(form("1", "3"), form("1", "7")).c == RatFunc(4));

	std::mt19937 rng(5);
	for (int n = 0; n < 10; n++) {
		RatFunc r = random_ratfunc(rng);
		CHECK(exterior_d(differential(r)).is_zero());
		OneForm a{random_ratfunc(rng), random_ratfunc(rng)}, b{random_ratfunc(rng), random_ratfunc(rng)};
		CHECK(wedge(a, b).c == -wedge(b, a).c);
	}
}

TEST_CASE("contraction with the radial field")
{
	VectorField Rad = radial_field();
	CHECK(contract(Rad, form("1", "0")) == R("x"));
	CHECK(contract(Rad, form("-y", "x")).is_zero());
	CHECK(contract(Rad, form("y", "x")) == R("2*x*y"));
}

TEST_CASE("pullback")
{
	AffineMap swap = AffineMap::linear(0, 1, 1, 0);
	CHECK(pullback(swap, form("1", "0")) == form("0", "1"));
	AffineMap id = AffineMap::identity();
	OneForm w = form("x*y", "x-1/y");
	CHECK(pullback(id, w) == w);
	CHECK(pullback(AffineMap::linear(2, 0, 0, 1), TwoForm{RatFunc(1)}).c == RatFunc(2));
	CHECK_THROWS_AS(pullback(AffineMap::linear(1, 2, 2, 4), w), GeometryError);

	std::mt19937 rng(9);
	for (int n = 0; n < 10; n++) {
		AffineMap phi = random_linear(rng), psi = random_linear(rng);
		phi.e = FieldScalar(n);
		CHECK(pullback(phi.compose(psi), w) == pullback(psi, pullback(phi, w)));
		Foliation F = fol("x^2+y", "x*y-1"), G = fol("y", "x+1");
		CHECK(tangency(pullback(phi, F), pullback(phi, G)) == normalize(pullback(phi, tangency(F, G))));
		CHECK(foliation_degree(pullback(phi, F)) == foliation_degree(F));
	}
}

TEST_CASE("foliation normalization")
{
	Foliation F = Foliation(P("2*x*(x+y)"), P("4*y*(x+y)"));
	CHECK(F == fol("x", "2*y"));
	CHECK(Foliation::from_form(form("1/x", "1/y")) == fol("y", "x"));
	CHECK(Foliation::level_sets(R("x*y")) == fol("y", "x"));
	CHECK_THROWS_AS(Foliation(MultiPoly(), MultiPoly()), GeometryError);
	CHECK_THROWS_AS(Web({fol("1", "0"), fol("2", "0")}), GeometryError);
}

TEST_CASE("tangency and discriminant")
{
	Field E = eisenstein();
	Foliation F0 = Foliation::level_sets(R("x*y*(x-y)*(xi3*x+y)", E));
	MultiPoly t = tangency(F0, fol("1", "0", E));
	CHECK(t == normalize(P("x*(x+(xi3^2-1)*y)^2", E)));
	CHECK(tangency(fol("1", "0"), fol("0", "1")) == MultiPoly(1));
	CHECK(tangency(Foliation::level_sets(R("x^3+y^3")), fol("0", "1")) == P("x^2"));
	CHECK(tangency(fol("x", "y^2"), fol("x+y", "1")) == tangency(fol("x+y", "1"), fol("x", "y^2")));
	CHECK_THROWS_AS(tangency(fol("x", "y"), fol("x", "y")), GeometryError);

	CHECK(discriminant(Web({fol("1", "0"), fol("0", "1"), fol("1", "-1")})) == MultiPoly(1));
	CHECK(discriminant(Web({fol("1", "0"), Foliation::level_sets(R("x*y"))})) == P("x"));
	Web bol({pencil(ProjPoint::make(0, 1, 0)), pencil(ProjPoint::make(1, 0, 0)), pencil(ProjPoint::affine(0, 1)),
	         pencil(ProjPoint::affine(1, 0))});
	CHECK(discriminant(bol) == normalize(P("x*y*(x-1)*(y-1)*(x+y-1)")));
}

TEST_CASE("invariant curves and first integrals")
{
	CHECK(is_invariant(P("x"), Foliation::level_sets(R("x*y"))));
	CHECK(is_invariant(P("y"), fol("y", "1")));
	CHECK(!is_invariant(P("x+y"), fol("1", "0")));
	CHECK(is_first_integral(R("x*y*(x+y)*(x^2+x*y+y^2)^3"), fol("y*(2*x+y)^3", "x*(2*y+x)^3")));
	CHECK(is_first_integral(R("x*y"), fol("y", "x")));
	CHECK(!is_first_integral(R("x"), Foliation::level_sets(R("x*y"))));
	CHECK(is_first_integral(R("(x^3+y^3+1)/(x*y)"), pencil_foliation(P("x*y"), P("x^3+y^3+1"))));
}

TEST_CASE("foliation degree")
{
	CHECK(foliation_degree(fol("y*(y-1)", "x*(x-1)")) == 2);
	CHECK(foliation_degree(fol("1", "0")) == 0);
	CHECK(foliation_degree(fol("x^2", "y^2")) == 2);
	CHECK(foliation_degree(fol("-y", "x")) == 0);
	CHECK(foliation_degree(fol("y*(2*x+y)^3", "x*(2*y+x)^3")) == 4);
}

TEST_CASE("pencils of curves")
{
	CHECK(pencil_foliation(P("x"), P("y")) == fol("y", "-x"));
	Foliation bol = pencil_foliation(P("x^2-1"), P("y^2-1"));
	CHECK(is_first_integral(R("(y^2-1)/(x^2-1)"), bol));
	CHECK(bol == fol("x*(y^2-1)", "-y*(x^2-1)"));
	CHECK_THROWS_AS(pencil_foliation(P("x*y"), P("x^2")), GeometryError);
	CHECK(pencil(ProjPoint::make(1, -1, 0)) == fol("1", "1"));
	CHECK(pencil(ProjPoint::affine(2, 3)) == fol("y-3", "2-x"));
}

TEST_CASE("singular points")
{
	auto s1 = singular_points(fol("x^2", "y^2"));
	REQUIRE(s1.points.size() == 1);
	CHECK(s1.points[0] == AffinePoint{0, 0});
	auto s2 = singular_points(fol("y*(y-1)", "x*(x-1)"));
	CHECK(s2.complete);
	CHECK(s2.points.size() == 4);
	for (auto p : {AffinePoint{0, 0}, AffinePoint{1, 1}, AffinePoint{0, 1}, AffinePoint{1, 0}})
		CHECK(std::find(s2.points.begin(), s2.points.end(), p) != s2.points.end());
	CHECK(singular_points(fol("1", "0")).points.empty());
	auto s3 = singular_points(fol("x^2+y^2-1", "x-y"));
	CHECK(s3.points.empty());
	CHECK(!s3.complete);
}

TEST_CASE("linear part")
{
	auto L = linear_part(fol("-y", "x"), {0, 0});
	REQUIRE(L.eigenvalue_ratios);
	CHECK(L.eigenvalue_ratios->first == FieldScalar(1));
	auto M = linear_part(fol("x", "y"), {0, 0});
	REQUIRE(M.eigenvalue_ratios);
	CHECK(M.eigenvalue_ratios->first == FieldScalar(-1));
	CHECK_THROWS_AS(linear_part(fol("x", "y"), {1, 0}), GeometryError);
}
