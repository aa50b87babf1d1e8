#include <doctest.h>

#include "webcurv/catalog.hpp"
#include "webcurv/expr.hpp"

using namespace webcurv;

namespace {

RatFunc R(const std::string &s, Field K = rationals()) { return parse_ratfunc(s, K); }

P1Point pt(int u, int v) { return P1Point::make(FieldScalar(u), FieldScalar(v)); }

} // namespace

TEST_CASE("sporadic webs are flat")
{
	for (auto &id : sporadic_ids()) {
		CatalogEntry e = sporadic(id);
		CHECK(e.expected_flat);
		CHECK_MESSAGE(curvature(e.web()).is_flat, id);
	}
}

TEST_CASE("family webs are flat up to k = 6")
{
	std::vector<std::pair<std::string, int>> names{{"A_I", 4}, {"A_II", 3}, {"A_III", 2}, {"A_IV", 1}};
	for (auto &[name, k0] : names)
		for (int k = k0; k <= 6; k++) {
			CatalogEntry e = family(name, k);
			CHECK_MESSAGE(curvature(e.web()).is_flat, name << "^" << k);
		}
}

TEST_CASE("family constructors")
{
	CatalogEntry a = family("A_I", 4);
	CHECK(a.web().size() == 5);
	CHECK(a.expected_rank == 6);
	CHECK(a.field == cyclotomic(4));
	CatalogEntry b = family("A_III", 2);
	CHECK(b.web().size() == 5);
	CHECK(b.expected_rank == 6);
	// dx - dy, dx + dy, dy, dx, then d(xy)
	CHECK(b.cdql.nonlinear == Foliation::level_sets(R("x*y")));
	// the smallest A_IV already has the radial pencil and both axes
	CHECK(family("A_IV", 1).web().size() == 5);

	CHECK_THROWS_AS(family("A_I", 3), CatalogError);
	CHECK_THROWS_AS(family("A_II", 2), CatalogError);
	CHECK_THROWS_AS(family("A_III", 1), CatalogError);
	CHECK_THROWS_AS(family("A_IV", 0), CatalogError);
	CHECK_THROWS_AS(family("A_V", 4), CatalogError);
	CHECK_THROWS_AS(family_guarded("A_I", 7), CatalogError);
	CHECK_NOTHROW(family_guarded("A_I", 7, 7));

	for (int k = 4; k <= 6; k++) {
		CatalogEntry e = family("A_I", k);
		CHECK(e.expected_rank == k * (k - 1) / 2);
	}
}

TEST_CASE("ids")
{
	CHECK(sporadic_ids().size() == 13);
	CHECK(flat_nonexceptional_ids().size() == 3);
	for (auto id : {"E_tau", "E5", "E6", "E7"}) {
		try {
			catalog_entry(id);
			FAIL("tori entry accepted");
		} catch (const CatalogError &e) {
			CHECK(std::string(e.what()).find("not supported: requires theta functions") != std::string::npos);
		}
	}
	CHECK_THROWS_AS(sporadic("B9"), CatalogError);
	CHECK_THROWS_AS(catalog_entry("nonsense"), CatalogError);
	CHECK(catalog_entry("A_III^2").web().size() == 5);
	for (auto &id : catalog_ids())
		CHECK_NOTHROW(catalog_entry(id));
}

TEST_CASE("expected ranks respect the Castelnuovo bound")
{
	for (auto &id : catalog_ids()) {
		CatalogEntry e = catalog_entry(id);
		int k = int(e.web().size());
		if (e.expected_rank)
			CHECK_MESSAGE(*e.expected_rank <= pi_bound(2, k), id);
		if (e.rank_strictly_below)
			CHECK(*e.rank_strictly_below <= pi_bound(2, k));
		CHECK(e.integrals.size() == e.web().size());
	}
	CHECK(sporadic("B5").expected_rank == 6);
	CHECK(sporadic("A6b").expected_rank == 10);
	CHECK(sporadic("H10").expected_rank == 36);
}

TEST_CASE("first integrals")
{
	for (auto &id : catalog_ids()) {
		CatalogEntry e = catalog_entry(id);
		Web W = e.web();
		if (e.first_integral)
			CHECK_MESSAGE(is_first_integral(*e.first_integral, e.cdql.nonlinear), id);
		for (size_t i = 0; i < W.size(); i++)
			if (e.integrals[i])
				CHECK_MESSAGE(is_first_integral(*e.integrals[i], W[i]), id << " " << i);
	}
	CHECK(flat_nonexceptional("deg2_a3h").first_integral == R("(4*y^2+x*y+4*x^2)^3*(x+y)"));
	CHECK(flat_nonexceptional("deg4_a").first_integral == R("x*y*(x+y)*(x^2+x*y+y^2)^3"));
	CHECK(sporadic("A6b").first_integral == R("x^3+y^3"));
	CHECK(sporadic("H5").first_integral == R("(x^3+y^3+1)/(x*y)"));
	CHECK(is_first_integral(R("x*(x^3+y^3)"), Foliation::level_sets(R("x^4+x*y^3"))));
	CHECK(!is_first_integral(R("x*y"), Foliation::level_sets(R("x+y"))));
	ProjPoint p = ProjPoint::make(FieldScalar(1), FieldScalar(2), FieldScalar(0));
	CHECK(is_first_integral(pencil_integral(p), pencil(p)));
	CHECK(pencil_integral(p).num().total_degree() == 1);
	CHECK(pencil_integral(ProjPoint::affine(FieldScalar(1), FieldScalar(0))) == R("y/(x-1)"));
}

TEST_CASE("attached relations verify")
{
	int count = 0;
	for (auto &id : catalog_ids()) {
		CatalogEntry e = catalog_entry(id);
		for (auto &r : e.relations) {
			RelationVerdict v = verify_relation(r);
			CHECK_MESSAGE(v.passed, id << " " << r.name << " " << v.detail);
			if (v.constant_checked)
				CHECK(v.constant_residual < 1e-30);
			count++;
		}
	}
	CHECK(count >= 20);
	CHECK(sporadic("A6b").relations.size() == 4);
	CHECK(sporadic("H5").relations.size() == 3);
}

TEST_CASE("Table 1 rows")
{
	CHECK(table1_labels().size() == 7);
	Table1Row a4 = table1_row("a4");
	CHECK(a4.map.P == BinaryForm::from_poly(R("y^2").num(), 2));
	CHECK(a4.map.Q == BinaryForm::from_poly(R("-x^2").num(), 2));
	Table1Row c2 = table1_row("c2");
	CHECK(c2.map.P == BinaryForm::from_poly(R("x^3*(2*y+x)").num(), 4));
	CHECK(c2.map.Q == BinaryForm::from_poly(R("-y^3*(2*x+y)").num(), 4));
	Table1Row a1 = table1_row("a1");
	CHECK(a1.map.P == BinaryForm::from_poly(R("x*(2*y+x)").num(), 2));
	CHECK(table1_row("b1").fiber(0).at_q == 1);
	CHECK(table1_row("b1").fiber(0).at_hat == 2);
	CHECK_THROWS(table1_row("d1"));
}

TEST_CASE("polar maps of the catalog match their rows")
{
	// the three foliations of the criterion, with the q's of the webs they belong to
	struct Case
	{
		const char *label;
		Foliation F;
		CatalogEntry e;
	};
	std::vector<Case> cases{
		{"a4", Foliation::level_sets(R("x^3+y^3")), sporadic("A6b")},
		{"c1", Foliation::from_form(OneForm{R("y*(2*x+y)^3"), R("x*(2*y+x)^3")}), flat_nonexceptional("deg4_a")},
		{"a2", Foliation::from_form(OneForm{R("y*(y-1)"), R("x*(x-1)")}), sporadic("B6")},
	};
	for (auto &c : cases) {
		CHECK(c.F == c.e.cdql.nonlinear);
		PolarMap f = ell_polar_map(c.F);
		auto m = match_table1(f, c.e.points_at_infinity());
		REQUIRE_MESSAGE(m, c.label);
		CHECK(m->label == c.label);
		CHECK(fibers_match(table1_row(c.label), m->normalized_map, m->q));
	}

	for (auto &id : catalog_ids()) {
		CatalogEntry e = catalog_entry(id);
		if (!e.polar_row)
			continue;
		PolarMap f = ell_polar_map(e.cdql.nonlinear);
		auto m = match_table1(f, e.points_at_infinity());
		REQUIRE_MESSAGE(m, id);
		CHECK_MESSAGE(m->label == *e.polar_row, id);
		CHECK(fibers_match(table1_row(*e.polar_row), m->normalized_map, m->q));
	}

	// a wrong row is rejected by the fiber comparison
	PolarMap a2 = ell_polar_map(cases[2].F);
	auto m = match_table1(a2, cases[2].e.points_at_infinity());
	REQUIRE(m);
	CHECK(!fibers_match(table1_row("b1"), m->normalized_map, m->q));
}

TEST_CASE("flat non-exceptional webs")
{
	for (auto &id : flat_nonexceptional_ids()) {
		CatalogEntry e = flat_nonexceptional(id);
		CHECK(e.web().size() == 5);
		CHECK(!e.expected_rank);
		CHECK(e.rank_strictly_below == 6);
		CHECK_MESSAGE(curvature(e.web()).is_flat, id);
	}

	// the linear pencils of deg3_a sit at singular points of F on the line x = y
	CatalogEntry d3 = flat_nonexceptional("deg3_a");
	CHECK(d3.first_integral == std::nullopt);
	for (auto &p : d3.cdql.linear_points) {
		if (p.at_infinity()) {
			CHECK(p.X == p.Y);
			continue;
		}
		CHECK(p.X == p.Y);
		FieldScalar x = p.X / p.Z;
		CHECK(d3.cdql.nonlinear.a().eval(x, x).is_zero());
		CHECK(d3.cdql.nonlinear.b().eval(x, x).is_zero());
	}

	CatalogEntry d2 = flat_nonexceptional("deg2_a3h");
	for (auto &p : d2.cdql.linear_points)
		if (!p.at_infinity()) {
			FieldScalar x = p.X / p.Z, y = p.Y / p.Z;
			CHECK(d2.cdql.nonlinear.a().eval(x, y).is_zero());
			CHECK(d2.cdql.nonlinear.b().eval(x, y).is_zero());
		}
}
