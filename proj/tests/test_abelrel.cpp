#include <doctest.h>

#include "webcurv/catalog.hpp"
#include "webcurv/expr.hpp"

#include <random>

using namespace webcurv;

namespace {

RatFunc R(const std::string &s, Field K = rationals()) { return parse_ratfunc(s, K); }
MultiPoly P(const std::string &s, Field K = rationals()) { return parse_poly(s, K); }

RelationCandidate relation(std::vector<std::string> gs)
{
	RelationCandidate r;
	std::vector<Foliation> f;
	for (auto &g : gs) {
		r.first_integrals.push_back(R(g));
		f.push_back(Foliation::level_sets(r.first_integrals.back()));
	}
	r.web = Web(f);
	return r;
}

void term(RelationCandidate &r, size_t i, int c, RelationTerm::Kind k, const std::string &A)
{
	r.terms.push_back({i, FieldScalar(c), k, R(A), R(A)});
}

int rank_of(const CatalogEntry &e, int N)
{
	Web W = e.web();
	return jet_rank(W, e.integrals, choose_base_point(W, e.integrals), N, N).kernel_dimension;
}

} // namespace

TEST_CASE("differentials of log expressions")
{
	LogBasis B({P("x"), P("y"), P("x+y")});
	LogExpression L1;
	L1.linear[0] = 1;
	LogOneForm d1 = d_log_expression(L1, B);
	CHECK(d1.rational == OneForm{R("1/x"), R("0")});
	CHECK(d1.by_symbol.empty());

	LogExpression L1sq;
	L1sq.quadratic[{0, 0}] = 1;
	LogOneForm d2 = d_log_expression(L1sq, B);
	CHECK(d2.rational.is_zero());
	REQUIRE(d2.by_symbol.count(0) == 1);
	CHECK(d2.by_symbol.at(0) == OneForm{R("2/x"), R("0")});

	// ln(xy(x+y)) - ln x - ln y - ln(x+y)
	auto D = decompose_log(R("x*y*(x+y)"), B);
	REQUIRE(D);
	LogExpression e;
	for (auto &[k, v] : D->exponents)
		e.linear[k] = FieldScalar(v);
	for (int k = 0; k < 3; k++)
		e.linear[k] -= FieldScalar(1);
	std::erase_if(e.linear, [](auto &kv) { return kv.second.is_zero(); });
	CHECK(d_log_expression(e, B).is_zero());

	CHECK_THROWS_AS(LogBasis({P("x"), P("x*y")}), AlgebraError);
	CHECK_THROWS_AS(LogBasis({P("x^2")}), AlgebraError);
	CHECK(!decompose_log(R("x-1"), B));
	auto c = decompose_log(R("6*x^2/y"), B);
	REQUIRE(c);
	CHECK(c->constant == FieldScalar(6));
	CHECK(c->exponents.at(0) == 2);
	CHECK(c->exponents.at(1) == -1);
}

TEST_CASE("composition with a first integral")
{
	CHECK(compose(R("x^2+1"), R("x/y")) == R("(x^2+y^2)/y^2"));
	CHECK(compose(R("1/x+1"), R("x*y")) == R("(1+x*y)/(x*y)"));
	CHECK_THROWS(compose(R("x*y"), R("x")));
}

TEST_CASE("polynomial relations are exact")
{
	RelationCandidate r = relation({"x*y*(x+y)", "x", "y", "x+y"});
	term(r, 0, 3, RelationTerm::Rational, "x");
	term(r, 1, 1, RelationTerm::Rational, "x^3");
	term(r, 2, 1, RelationTerm::Rational, "x^3");
	term(r, 3, -1, RelationTerm::Rational, "x^3");
	RelationVerdict v = verify_relation(r);
	CHECK(v.passed);
	CHECK(v.exact);
	CHECK(!v.constant_checked);

	r.terms[0].coeff = FieldScalar(2);
	v = verify_relation(r);
	CHECK(!v.passed);
	CHECK(v.exact);

	// the family coefficients are solved for, then checked
	CatalogEntry e = family("A_I", 4);
	REQUIRE(e.relations.size() == 1);
	v = verify_relation(e.relations[0]);
	CHECK(v.passed);
	CHECK(v.exact);
}

TEST_CASE("logarithmic relations: symbolic differential and numeric constant")
{
	RelationCandidate r = relation({"x*y*(x+y)", "x", "y", "x+y", "x/y"});
	term(r, 0, 1, RelationTerm::LogProduct, "x");
	for (size_t i = 1; i <= 3; i++)
		term(r, i, -3, RelationTerm::LogProduct, "x");
	term(r, 4, 1, RelationTerm::LogProduct, "x");
	term(r, 4, 1, RelationTerm::LogProduct, "x+1");
	term(r, 4, 1, RelationTerm::LogProduct, "1/x+1");
	RelationVerdict v = verify_relation(r);
	CHECK(v.symbolic_d_zero);
	CHECK(v.constant_checked);
	CHECK(v.constant_residual < 1e-30);
	CHECK(v.passed);
	CHECK(v.base.x.to_rational() > 0);
	CHECK(v.base.y.to_rational() > 0);

	// a relation that holds only up to a nonzero constant fails the constant check
	RelationCandidate s = relation({"2*x*y", "x", "y"});
	term(s, 0, 1, RelationTerm::Log, "x");
	term(s, 1, -1, RelationTerm::Log, "x");
	term(s, 2, -1, RelationTerm::Log, "x");
	v = verify_relation(s);
	CHECK(v.symbolic_d_zero);
	CHECK(!v.passed);
	CHECK(v.constant_residual == doctest::Approx(std::log(2.0)));

	// wrong coefficient: the differential does not vanish
	RelationCandidate t = relation({"x*y", "x", "y"});
	term(t, 0, 1, RelationTerm::Log, "x");
	term(t, 1, -2, RelationTerm::Log, "x");
	term(t, 2, -1, RelationTerm::Log, "x");
	CHECK(!verify_relation(t).symbolic_d_zero);

	// ill-formed: a term on a function that is not a first integral
	RelationCandidate bad = relation({"x*y", "x"});
	bad.first_integrals[1] = R("y");
	CHECK(!verify_relation(bad).well_formed);
}

TEST_CASE("relations survive linear changes of coordinates")
{
	std::mt19937 rng(7);
	std::uniform_int_distribution<int> c(-4, 4);
	for (auto id : {"A5a", "A5b", "A5c", "A6b"}) {
		CatalogEntry e = sporadic(id);
		for (int it = 0; it < 2; it++) {
			AffineMap phi;
			do
				phi = AffineMap::linear(c(rng), c(rng), c(rng), c(rng));
			while (phi.det().is_zero());
			for (auto r : e.relations) {
				for (auto &u : r.first_integrals)
					u = pullback(phi, u);
				r.web = pullback(phi, r.web);
				r.basis.reset();
				{ auto v = verify_relation(r); CHECK_MESSAGE(v.passed, std::string(id) << " " << r.name << " " << v.detail << " " << v.constant_residual << " " << v.base.x << "," << v.base.y); }
			}
		}
	}
}

TEST_CASE("Castelnuovo numbers")
{
	CHECK(pi_bound(2, 3) == 1);
	CHECK(pi_bound(2, 5) == 6);
	CHECK(pi_bound(2, 10) == 36);
	for (int n = 2; n <= 4; n++)
		for (int k = 1; k <= 12; k++) {
			int s = 0;
			for (int j = 1; j <= 50; j++)
				s += std::max(0, k - j * (n - 1) - 1);
			CHECK(pi_bound(n, k) == s);
		}
	CHECK(pi_bound(3, 6) == 4);
	for (int k = 1; k <= 12; k++)
		CHECK(pi_bound(2, k) == (k - 1) * (k - 2) / 2);
	CHECK_THROWS(pi_bound(1, 3));
	CHECK_THROWS(pi_bound(2, 0));
}

TEST_CASE("jet ranks")
{
	Web par({Foliation::level_sets(R("x")), Foliation::level_sets(R("y")), Foliation::level_sets(R("x+y"))});
	std::vector<std::optional<RatFunc>> u{R("x"), R("y"), R("x+y")};
	JetRelationSpace s = jet_rank(par, u, {FieldScalar(1), FieldScalar(2)}, 6, 6);
	CHECK(s.kernel_dimension == 1);
	CHECK(s.stabilized);

	CHECK(rank_of(sporadic("B5"), 12) == 6);
	CHECK(rank_of(family("A_I", 4), 12) == 6);

	// permutation invariance
	CatalogEntry b = sporadic("B5");
	Web W = b.web();
	std::vector<Foliation> f = W.foliations();
	std::vector<std::optional<RatFunc>> ig = b.integrals;
	std::rotate(f.begin(), f.begin() + 2, f.end());
	std::rotate(ig.begin(), ig.begin() + 2, ig.end());
	AffinePoint base = choose_base_point(W, b.integrals);
	CHECK(jet_rank(Web(f), ig, base, 12, 12).kernel_dimension == 6);

	// affine pullback with the base point transported
	AffineMap phi{FieldScalar(2), FieldScalar(1), FieldScalar(1), FieldScalar(-1), FieldScalar(1), FieldScalar(0)};
	AffineMap inv = phi.inverse();
	std::vector<std::optional<RatFunc>> pig;
	for (auto &v : b.integrals)
		pig.push_back(pullback(phi, *v));
	AffinePoint moved{inv.a * base.x + inv.b * base.y + inv.e, inv.c * base.x + inv.d * base.y + inv.f};
	CHECK(jet_rank(pullback(phi, W), pig, moved, 12, 12).kernel_dimension == 6);

	CHECK_THROWS(jet_rank(W, b.integrals, {FieldScalar(0), FieldScalar(0)}, 8, 8));
	std::vector<std::optional<RatFunc>> critical = b.integrals;
	critical.back() = pow(*b.integrals.back(), 2);
	AffinePoint zero_of_integral{FieldScalar(Rational(1, 2)), FieldScalar(0)};
	CHECK_THROWS(jet_rank(W, critical, zero_of_integral, 8, 8));
}

TEST_CASE("rank additivity under the radial foliation")
{
	int aI = rank_of(family("A_I", 3, true), 12), aII = rank_of(family("A_II", 3), 12);
	CHECK(aI == 3);
	CHECK(aII == 6);
	// the increment is the number of foliations of the smaller web minus one
	CHECK(aII - aI == int(family("A_I", 3, true).web().size()) - 1);
	int aIII = rank_of(family("A_III", 2), 12), aIV = rank_of(family("A_IV", 2), 12);
	CHECK(aIII == 6);
	CHECK(aIV - aIII == int(family("A_III", 2).web().size()) - 1);
}

TEST_CASE("formal first integrals")
{
	CatalogEntry e = flat_nonexceptional("deg4_a");
	Web W = e.web();
	AffinePoint b = choose_base_point(W, e.integrals);
	std::vector<std::optional<RatFunc>> formal = e.integrals;
	formal.back().reset();
	CHECK(jet_rank(W, formal, b, 12, 12).kernel_dimension == jet_rank(W, e.integrals, b, 12, 12).kernel_dimension);

	// du ^ w vanishes to the order the truncation allows
	const Foliation &F = W[W.size() - 1];
	int N = 10;
	JetSeries u = formal_first_integral(F, b, N);
	JetSeries a = poly_jet(F.a(), b.x, b.y, N - 1), bb = poly_jet(F.b(), b.x, b.y, N - 1);
	JetSeries wedge = u.dX() * bb - u.dY() * a;
	for (int d = 0; d <= N - 1; d++)
		for (int q = 0; q <= d; q++)
			CHECK(wedge.at(d - q, q).is_zero());
	CHECK(u.at(1, 0) == FieldScalar(1));
	for (int i = 2; i <= N; i++)
		CHECK(u.at(i, 0).is_zero());
}

TEST_CASE("ranks of the flat non-exceptional webs stay below the bound")
{
	for (auto id : flat_nonexceptional_ids()) {
		CatalogEntry e = flat_nonexceptional(id);
		Web W = e.web();
		JetRelationSpace s = jet_rank(W, e.integrals, choose_base_point(W, e.integrals), 12, 12);
		CHECK_MESSAGE(s.kernel_dimension < 6, id);
		CHECK(s.stabilized);
	}
}
