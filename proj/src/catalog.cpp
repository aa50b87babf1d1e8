#include "webcurv/catalog.hpp"
#include "webcurv/expr.hpp"
#include "webcurv/linalg.hpp"

#include <algorithm>

namespace webcurv {

namespace {

FieldScalar xi3(long e = 1) { return root_of_unity(3, e); }

ProjPoint inf(const FieldScalar &X, const FieldScalar &Y) { return ProjPoint::make(X, Y, FieldScalar(0)); }
ProjPoint fin(const FieldScalar &x, const FieldScalar &y) { return ProjPoint::affine(x, y); }
ProjPoint origin() { return fin(0, 0); }

// the pencils of the linear factors of x^3 + y^3, i.e. dx + xi^i dy
std::vector<ProjPoint> cube_sum_points()
{
	return {inf(-xi3(0), 1), inf(-xi3(1), 1), inf(-xi3(2), 1)};
}

template <class... V>
std::vector<ProjPoint> cat(std::vector<ProjPoint> a, V... more)
{
	(a.push_back(more), ...);
	return a;
}

// builds a relation web from the first integrals g_i themselves
struct RelationBuilder
{
	RelationCandidate r;
	Field K;

	RelationBuilder(std::string name, RelationCandidate::Kind kind, Field K_, const std::vector<std::string> &gs) : K(K_)
	{
		r.name = std::move(name);
		r.declared_kind = kind;
		std::vector<Foliation> fols;
		for (auto &g : gs) {
			r.first_integrals.push_back(parse_ratfunc(g, K));
			fols.push_back(Foliation::level_sets(r.first_integrals.back()).in(K));
		}
		r.web = Web(fols);
	}
	RelationBuilder &power(size_t i, const FieldScalar &c, long e)
	{
		RatFunc t(MultiPoly::x(K));
		r.terms.push_back({i, c, RelationTerm::Rational, pow(t, e), RatFunc()});
		return *this;
	}
	RelationBuilder &log(size_t i, const FieldScalar &c, const std::string &A = "x")
	{
		r.terms.push_back({i, c, RelationTerm::Log, parse_ratfunc(A, K), RatFunc()});
		return *this;
	}
	RelationBuilder &log2(size_t i, const FieldScalar &c, const std::string &A = "x")
	{
		RatFunc a = parse_ratfunc(A, K);
		r.terms.push_back({i, c, RelationTerm::LogProduct, a, a});
		return *this;
	}
	RelationCandidate done() { return r; }
};

const std::vector<std::string> &A5_gs_tail()
{
	static const std::vector<std::string> g = {"x", "y", "x+y", "x/y"};
	return g;
}

std::vector<std::string> with_g0(const std::string &g0, std::vector<std::string> rest)
{
	rest.insert(rest.begin(), g0);
	return rest;
}

std::vector<RelationCandidate> relations_A5a()
{
	Field Q = rationals();
	auto gs = with_g0("x*y*(x+y)", A5_gs_tail());
	using K = RelationCandidate;
	std::vector<RelationCandidate> out;
	out.push_back(RelationBuilder("log", K::Logarithmic, Q, gs).log(0, 1).log(1, -1).log(2, -1).log(3, -1).done());
	// ln^2 g0 = 3 ln^2 g1 + 3 ln^2 g2 + 3 ln^2 g3 - phi(g4), phi(t) = ln^2 t + ln^2(t+1) + ln^2(1/t+1)
	out.push_back(RelationBuilder("log-squared", K::LogSquared, Q, gs)
	                  .log2(0, 1).log2(1, -3).log2(2, -3).log2(3, -3)
	                  .log2(4, 1).log2(4, 1, "x+1").log2(4, 1, "1/x+1")
	                  .done());
	out.push_back(RelationBuilder("cubic", K::Polynomial, Q, gs).power(0, 3, 1).power(1, 1, 3).power(2, 1, 3).power(3, -1, 3).done());
	return out;
}

std::vector<RelationCandidate> relations_A5b()
{
	Field Q = rationals();
	auto gs = with_g0("x*y/(x+y)", A5_gs_tail());
	using K = RelationCandidate;
	std::vector<RelationCandidate> out;
	out.push_back(RelationBuilder("log", K::Logarithmic, Q, gs).log(0, 1).log(1, -1).log(2, -1).log(3, 1).done());
	// ln^2 g0 = ln^2 g1 + ln^2 g2 - ln^2 g3 - phi(g4), phi(t) = ln^2 t - ln^2(t+1) - ln^2(1/t+1)
	out.push_back(RelationBuilder("log-squared", K::LogSquared, Q, gs)
	                  .log2(0, 1).log2(1, -1).log2(2, -1).log2(3, 1)
	                  .log2(4, 1).log2(4, -1, "x+1").log2(4, -1, "1/x+1")
	                  .done());
	out.push_back(RelationBuilder("reciprocal", K::Polynomial, Q, gs).power(0, 1, -1).power(1, -1, -1).power(2, -1, -1).done());
	return out;
}

std::vector<RelationCandidate> relations_A5c()
{
	Field Q = rationals();
	auto gs = with_g0("(x^2+x*y+y^2)/(x*y*(x+y))", A5_gs_tail());
	using K = RelationCandidate;
	std::vector<RelationCandidate> out;
	// ln g0 = -ln g3 + ln(g4 + 1/g4 + 1)
	out.push_back(RelationBuilder("log", K::Logarithmic, Q, gs).log(0, 1).log(3, 1).log(4, -1, "x+1/x+1").done());
	out.push_back(RelationBuilder("reciprocal", K::Polynomial, Q, gs)
	                  .power(0, 1, 1).power(1, -1, -1).power(2, -1, -1).power(3, 1, -1).done());
	// g0^2 = g1^-2 + g2^-2 + g3^-2
	out.push_back(RelationBuilder("reciprocal-squared", K::Polynomial, Q, gs)
	                  .power(0, 1, 2).power(1, -1, -2).power(2, -1, -2).power(3, -1, -2).done());
	return out;
}

// relations of the model [dx dy (dx+dy)(dx - xi dy)] x [d(xy(x+y)(x - xi y))]
std::vector<RelationCandidate> relations_A5d(bool radial)
{
	Field K3 = eisenstein();
	std::vector<std::string> gs = {"x*y*(x+y)*(x-xi3*y)", "x", "y", "x+y", "x-xi3*y"};
	if (radial)
		gs.push_back("x/y");
	using K = RelationCandidate;
	FieldScalar w = xi3();
	std::vector<RelationCandidate> out;
	out.push_back(RelationBuilder("log", K::Logarithmic, K3, gs).log(0, 1).log(1, -1).log(2, -1).log(3, -1).log(4, -1).done());
	out.push_back(RelationBuilder("quartic", K::Polynomial, K3, gs)
	                  .power(0, 12, 1)
	                  .power(1, FieldScalar(2) + w, 4)
	                  .power(2, -(FieldScalar(1) + w * FieldScalar(2)), 4)
	                  .power(3, -(FieldScalar(1) - w), 4)
	                  .power(4, -(FieldScalar(1) + w * FieldScalar(2)), 4)
	                  .done());
	out.push_back(RelationBuilder("octic", K::Polynomial, K3, gs)
	                  .power(0, 28, 2)
	                  .power(1, -(FieldScalar(1) + w), 8)
	                  .power(2, 1, 8)
	                  .power(3, w, 8)
	                  .power(4, 1, 8)
	                  .done());
	return out;
}

std::vector<RelationCandidate> relations_A6b(bool radial)
{
	Field K3 = eisenstein();
	std::vector<std::string> gs = {"x^3+y^3", "x", "y", "x+y", "x+xi3*y", "x+xi3^2*y"};
	if (radial)
		gs.push_back("x/y");
	using K = RelationCandidate;
	std::vector<RelationCandidate> out;
	out.push_back(RelationBuilder("cubic", K::Polynomial, K3, gs).power(0, 1, 1).power(1, -1, 3).power(2, -1, 3).done());
	out.push_back(RelationBuilder("log", K::Logarithmic, K3, gs).log(0, 1).log(3, -1).log(4, -1).log(5, -1).done());
	out.push_back(RelationBuilder("sextic", K::Polynomial, K3, gs)
	                  .power(0, 30, 2).power(1, -27, 6).power(2, -27, 6).power(3, -1, 6).power(4, -1, 6).power(5, -1, 6)
	                  .done());
	out.push_back(RelationBuilder("nonic", K::Polynomial, K3, gs)
	                  .power(0, 84, 3).power(1, -81, 9).power(2, -81, 9).power(3, -1, 9).power(4, -1, 9).power(5, -1, 9)
	                  .done());
	return out;
}

std::vector<RelationCandidate> relations_H5()
{
	Field K3 = eisenstein();
	std::vector<std::string> gs = {"(x^3+y^3+1)/(x*y)", "xi3*x+y", "x+y", "x+xi3*y", "x/y+y/x"};
	using K = RelationCandidate;
	std::vector<RelationCandidate> out;
	out.push_back(RelationBuilder("log-1", K::Logarithmic, K3, gs)
	                  .log(0, 1, "(x-3)/(x-3*xi3)")
	                  .log(1, -1, "(x+xi3^2)/(x+1)")
	                  .log(2, -1, "(x+1)/(x+xi3)")
	                  .log(3, -1, "(x+xi3^2)/(x+1)")
	                  .done());
	out.push_back(RelationBuilder("log-2", K::Logarithmic, K3, gs)
	                  .log(0, 1, "(x-3*xi3)/(x-3*xi3^2)")
	                  .log(1, -1, "(x+1)/(x+xi3)")
	                  .log(2, -1, "(x+xi3)/(x+xi3^2)")
	                  .log(3, -1, "(x+1)/(x+xi3)")
	                  .done());
	// ln(xi (g0 - 3)) = ln(g1 + xi^2) + ln((1 + g2)/g2^2) + ln(g3 + xi^2) + ln(g4 + 2)
	out.push_back(RelationBuilder("log-3", K::Logarithmic, K3, gs)
	                  .log(0, 1, "xi3*(x-3)")
	                  .log(1, -1, "x+xi3^2")
	                  .log(2, -1, "(1+x)/x^2")
	                  .log(3, -1, "x+xi3^2")
	                  .log(4, -1, "x+2")
	                  .done());
	return out;
}

// (xy)^(k-1) = sum mu_i (x - xi^i y)^(2k-2), the mu_i solved for exactly
RelationCandidate family_relation(int k, const Web &W, const std::vector<std::optional<RatFunc>> &integrals)
{
	Field K = cyclotomic(k);
	int n = 2 * k - 2;
	Matrix M(K, n + 1, k);
	std::vector<FieldScalar> rhs(n + 1, FieldScalar(K));
	rhs[k - 1] = FieldScalar(K, 1);
	for (int i = 0; i < k; i++) {
		// (x - w y)^n = sum_m C(n,m) (-w)^m x^(n-m) y^m
		FieldScalar w = root_of_unity(k, i).in(K), p(K, 1);
		Integer binom = 1;
		for (int m = 0; m <= n; m++) {
			M(m, i) = p * FieldScalar(K, Rational(binom));
			p *= -w;
			binom = binom * (n - m) / (m + 1);
		}
	}
	std::vector<FieldScalar> mu;
	if (!solve(M, rhs, mu))
		throw CatalogError("family relation: no solution for the coefficients");
	RelationCandidate r;
	r.name = "power";
	r.declared_kind = RelationCandidate::Polynomial;
	r.web = W;
	for (auto &u : integrals)
		r.first_integrals.push_back(*u);
	RatFunc t(MultiPoly::x(K));
	size_t F = W.size() - 1;
	r.terms.push_back({F, FieldScalar(K, 1), RelationTerm::Rational, pow(t, k - 1), RatFunc()});
	// pencils k..: the first k pencils are [xi^i : 1 : 0] with integral x - xi^i y
	for (int i = 0; i < k; i++)
		r.terms.push_back({size_t(i), -mu[i], RelationTerm::Rational, pow(t, n), RatFunc()});
	return r;
}

CatalogEntry assemble(const std::string &id, std::vector<ProjPoint> pts, const std::string &F, Field K)
{
	RatFunc f = parse_ratfunc(F, K);
	CatalogEntry e{id, CDQLWeb{std::move(pts), Foliation::level_sets(f), id, std::nullopt}, K};
	e.first_integral = f;
	for (auto &p : e.cdql.linear_points)
		e.integrals.push_back(pencil_integral(p));
	e.integrals.push_back(f);
	e.field = common_field(K, e.web().field());
	return e;
}

void maximal(CatalogEntry &e)
{
	e.expected_rank = pi_bound(2, int(e.cdql.linear_points.size()) + 1);
	e.cdql.expected_rank = e.expected_rank;
}

int family_threshold(const std::string &name)
{
	if (name == "A_I")
		return 4;
	if (name == "A_II")
		return 3;
	if (name == "A_III")
		return 2;
	if (name == "A_IV")
		return 1;
	throw CatalogError("unknown family " + name);
}

} // namespace

RatFunc pencil_integral(const ProjPoint &p)
{
	Field K = common_field(common_field(p.X, p.Y), p.Z.field());
	MultiPoly x = MultiPoly::x(K), y = MultiPoly::y(K);
	if (p.at_infinity())
		return RatFunc(x * p.Y - y * p.X);
	return RatFunc(y - MultiPoly(p.Y.in(K)), x - MultiPoly(p.X.in(K)));
}

std::vector<P1Point> CatalogEntry::points_at_infinity() const
{
	std::vector<P1Point> q;
	for (auto &p : cdql.linear_points)
		if (p.at_infinity())
			q.push_back(P1Point::make(p.X, p.Y));
	return q;
}

CatalogEntry family(const std::string &name, int k, bool allow_small)
{
	int t = family_threshold(name);
	if (k < 1 || (!allow_small && k < t))
		throw CatalogError(name + " needs k >= " + std::to_string(t));
	Field K = cyclotomic(k);
	std::vector<ProjPoint> pts;
	for (int i = 0; i < k; i++)
		pts.push_back(inf(root_of_unity(k, i).in(K), FieldScalar(K, 1)));
	if (name == "A_III" || name == "A_IV") {
		pts.push_back(inf(0, 1));
		pts.push_back(inf(1, 0));
	}
	if (name == "A_II" || name == "A_IV")
		pts.push_back(origin());
	std::string id = name + "^" + std::to_string(k);
	CatalogEntry e = assemble(id, pts, "x*y", K);
	maximal(e);
	if (k >= 2) {
		auto r = family_relation(k, e.web(), e.integrals);
		e.relations.push_back(r);
	}
	return e;
}

CatalogEntry family_guarded(const std::string &name, int k, int max_k)
{
	if (k > max_k)
		throw CatalogError("family member above the configured bound k <= " + std::to_string(max_k));
	return family(name, k);
}

CatalogEntry sporadic(const std::string &id)
{
	Field Q = rationals(), K3 = eisenstein();
	std::vector<ProjPoint> A5 = {inf(0, 1), inf(1, 0), inf(-1, 1), origin()};
	std::vector<ProjPoint> A5d = cat({inf(0, 1)}, cube_sum_points()[0], cube_sum_points()[1], cube_sum_points()[2]);
	std::vector<ProjPoint> A6b = cat({inf(0, 1), inf(1, 0)}, cube_sum_points()[0], cube_sum_points()[1], cube_sum_points()[2]);
	std::vector<ProjPoint> B5 = {inf(0, 1), inf(1, 0), fin(0, 1), fin(1, 0)};
	std::vector<ProjPoint> H5 = cat(cube_sum_points(), origin());
	const char *bol = "x*y/((1-x)*(1-y))";
	const char *hesse = "(x^3+y^3+1)/(x*y)";
	std::optional<CatalogEntry> o;
	auto set = [&](CatalogEntry v) -> CatalogEntry & { return *(o = std::move(v)); };
	if (id == "A5a") {
		set(assemble(id, A5, "x*y*(x+y)", Q));
		o->relations = relations_A5a();
		o->polar_row = "a1";
	} else if (id == "A5b") {
		set(assemble(id, A5, "x*y/(x+y)", Q));
		o->relations = relations_A5b();
		o->polar_row = "a2";
	} else if (id == "A5c") {
		set(assemble(id, A5, "(x^2+x*y+y^2)/(x*y*(x+y))", Q));
		o->relations = relations_A5c();
		o->polar_row = "c2";
	} else if (id == "A5d") {
		set(assemble(id, A5d, "x*(x^3+y^3)", K3));
		o->relations = relations_A5d(false);
		o->polar_row = "b1";
	} else if (id == "A6a") {
		set(assemble(id, cat(A5d, origin()), "x*(x^3+y^3)", K3));
		o->relations = relations_A5d(true);
		o->polar_row = "b1";
	} else if (id == "A6b") {
		set(assemble(id, A6b, "x^3+y^3", K3));
		o->relations = relations_A6b(false);
		o->polar_row = "a4";
	} else if (id == "A7") {
		set(assemble(id, cat(A6b, origin()), "x^3+y^3", K3));
		o->relations = relations_A6b(true);
		o->polar_row = "a4";
	} else if (id == "B5") {
		set(assemble(id, B5, bol, Q));
	} else if (id == "B6") {
		set(assemble(id, cat(B5, inf(-1, 1)), bol, Q)).polar_row = "a2";
	} else if (id == "B7") {
		set(assemble(id, cat(B5, inf(-1, 1), origin()), bol, Q)).polar_row = "a2";
	} else if (id == "B8") {
		set(assemble(id, cat(B5, inf(-1, 1), origin(), fin(1, 1)), bol, Q)).polar_row = "a2";
	} else if (id == "H5") {
		set(assemble(id, H5, hesse, K3));
		o->relations = relations_H5();
		o->polar_row = "c2";
	} else if (id == "H10") {
		// the nine base points of the pencil spanned by xy and x^3 + y^3 + 1
		std::vector<ProjPoint> pts = cube_sum_points();
		for (int i = 0; i < 3; i++)
			pts.push_back(fin(FieldScalar(K3), -xi3(i)));
		for (int i = 0; i < 3; i++)
			pts.push_back(fin(-xi3(i), FieldScalar(K3)));
		set(assemble(id, pts, hesse, K3)).polar_row = "c2";
	} else if (id == "E_tau" || id == "E5" || id == "E6" || id == "E7") {
		throw CatalogError(id + ": not supported: requires theta functions (exceptional webs on complex tori)");
	} else {
		throw CatalogError("unknown catalog id " + id);
	}
	maximal(*o);
	return *o;
}

CatalogEntry flat_nonexceptional(const std::string &id)
{
	std::optional<CatalogEntry> o;
	if (id == "deg2_a3h") {
		// the line at infinity meets the configuration in [1:0], [0:1], [1:-1]
		o = assemble(id, {inf(1, 0), inf(0, 1), inf(1, -1), origin()}, "(4*y^2+x*y+4*x^2)^3*(x+y)", rationals());
		o->polar_row = "a3";
	} else if (id == "deg3_a") {
		Field K3 = eisenstein();
		FieldScalar h = FieldScalar(K3, Rational(-1, 2));
		std::vector<ProjPoint> pts = {fin(h, h), fin(h * xi3(1), h * xi3(1)), fin(h * xi3(2), h * xi3(2)), inf(1, 1)};
		MultiPoly a = parse_poly("x^3+y^3+1+6*x*y^2", K3), b = parse_poly("-(x^3+y^3+1+6*x^2*y)", K3);
		o = CatalogEntry{id, CDQLWeb{pts, Foliation(a, b), id, std::nullopt}, K3};
		for (auto &p : pts)
			o->integrals.push_back(pencil_integral(p));
		o->integrals.push_back(std::nullopt);
	} else if (id == "deg4_a") {
		o = assemble(id, {inf(1, -1), inf(1, 0), inf(0, 1), origin()}, "x*y*(x+y)*(x^2+x*y+y^2)^3", rationals());
		o->polar_row = "c1";
	} else {
		throw CatalogError("unknown flat web id " + id);
	}
	o->rank_strictly_below = pi_bound(2, 5);
	return *o;
}

std::vector<std::string> sporadic_ids()
{
	return {"A5a", "A5b", "A5c", "A5d", "A6a", "A6b", "A7", "B5", "B6", "B7", "B8", "H5", "H10"};
}

std::vector<std::string> flat_nonexceptional_ids() { return {"deg2_a3h", "deg3_a", "deg4_a"}; }

std::vector<std::string> catalog_ids()
{
	std::vector<std::string> ids = sporadic_ids();
	for (auto &f : flat_nonexceptional_ids())
		ids.push_back(f);
	for (std::string name : {"A_I", "A_II", "A_III", "A_IV"})
		for (int k = family_threshold(name); k <= 6; k++)
			ids.push_back(name + "^" + std::to_string(k));
	return ids;
}

CatalogEntry catalog_entry(const std::string &id)
{
	auto caret = id.find('^');
	if (caret != std::string::npos) {
		std::string name = id.substr(0, caret);
		int k;
		try {
			size_t used;
			k = std::stoi(id.substr(caret + 1), &used);
			if (used != id.size() - caret - 1)
				throw CatalogError("");
		} catch (const std::exception &) {
			throw CatalogError("malformed family id " + id);
		}
		return family(name, k);
	}
	auto flat = flat_nonexceptional_ids();
	if (std::find(flat.begin(), flat.end(), id) != flat.end())
		return flat_nonexceptional(id);
	return sporadic(id);
}

Table1Row table1_row(const std::string &label)
{
	Field Q = rationals();
	auto bf = [](const std::string &s, Field K) {
		MultiPoly p = parse_poly(s, K);
		return BinaryForm::from_poly(p, p.total_degree());
	};
	Table1Row r;
	r.label = label;
	if (label == "a1") {
		r.map = {bf("x*(2*y+x)", Q), bf("-y*(2*x+y)", Q)};
		r.pattern = {{1, 1}};
	} else if (label == "a2") {
		r.map = {bf("x^2", Q), bf("-y^2", Q)};
		r.pattern = {{2, 0}, {2, 0}, {1, 1}};
	} else if (label == "a3") {
		r.map = {bf("(x+2*y)^2", Q), bf("-(2*x+y)^2", Q)};
		r.pattern = {{0, 2}, {0, 2}, {1, 1}};
	} else if (label == "c1") {
		r.map = {bf("x*(2*y+x)^3", Q), bf("-y*(2*x+y)^3", Q)};
		r.pattern = {{1, 3}};
	} else if (label == "c2") {
		r.map = {bf("x^3*(2*y+x)", Q), bf("-y^3*(2*x+y)", Q)};
		r.pattern = {{3, 1}};
	} else if (label == "b1") {
		Field K3 = eisenstein();
		r.map = {bf("3*x*(x+y*(1-xi3^2))^2", K3), bf("-y*(3*x+y*(1-xi3^2))^2", K3)};
		r.k_ell = 4;
		r.pattern = {{1, 2}};
	} else if (label == "a4") {
		r.map = {bf("y^2", Q), bf("-x^2", Q)};
		r.k_ell = 5;
		r.pattern = {{0, 2}, {0, 2}, {1, 1}, {1, 1}, {1, 1}};
	} else {
		throw CatalogError("unknown table row " + label);
	}
	return r;
}

std::vector<std::string> table1_labels() { return {"a1", "a2", "a3", "a4", "b1", "c1", "c2"}; }

bool fibers_match(const Table1Row &row, const PolarMap &f, const std::vector<P1Point> &q)
{
	if (int(q.size()) != row.k_ell)
		return false;
	for (size_t i = 0; i < q.size(); i++) {
		std::vector<P1Point> others;
		for (size_t j = 0; j < q.size(); j++)
			if (j != i)
				others.push_back(q[j]);
		P1Point hat = barycenter_point(q[i], others);
		std::vector<std::pair<P1Point, int>> want;
		if (row.fiber(i).at_q)
			want.push_back({q[i], row.fiber(i).at_q});
		if (row.fiber(i).at_hat)
			want.push_back({hat, row.fiber(i).at_hat});
		Fiber got = polar_fiber(f, q[i]);
		if (got.residual.degree() != 0 || got.points.size() != want.size())
			return false;
		for (auto &w : want) {
			bool found = false;
			for (auto &g : got.points)
				found = found || (g.first == w.first && g.second == w.second);
			if (!found)
				return false;
		}
	}
	return true;
}

std::optional<RowMatch> match_table1(const PolarMap &f, const std::vector<P1Point> &qs)
{
	size_t n = qs.size();
	for (auto &label : table1_labels()) {
		Table1Row row = table1_row(label);
		if (size_t(row.k_ell) != n || row.map.degree() != f.degree())
			continue;
		for (size_t a = 0; a < n; a++)
			for (size_t b = 0; b < n; b++)
				for (size_t c = 0; c < n; c++) {
					if (a == b || b == c || a == c)
						continue;
					Mobius g = Mobius::normalizing(qs[a], qs[b], qs[c]);
					PolarMap h = f.conjugate(g);
					if (!h.proportional(row.map))
						continue;
					RowMatch m{label, g, {}, h};
					for (size_t i : {a, b, c})
						m.q.push_back(g(qs[i]));
					for (size_t i = 0; i < n; i++)
						if (i != a && i != b && i != c)
							m.q.push_back(g(qs[i]));
					if (fibers_match(row, h, m.q))
						return m;
				}
	}
	return std::nullopt;
}

} // namespace webcurv
