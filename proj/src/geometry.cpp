#include "webcurv/geometry.hpp"

namespace webcurv {

std::string OneForm::str() const { return "(" + a.str() + ")*dx + (" + b.str() + ")*dy"; }
std::string TwoForm::str() const { return "(" + c.str() + ")*dx^dy"; }

OneForm differential(const RatFunc &r) { return {r.dx(), r.dy()}; }

TwoForm exterior_d(const OneForm &w) { return {w.b.dx() - w.a.dy()}; }

TwoForm wedge(const OneForm &w1, const OneForm &w2) { return {w1.a * w2.b - w2.a * w1.b}; }

RatFunc contract(const VectorField &X, const OneForm &w) { return w.a * X.u + w.b * X.v; }

VectorField radial_field(Field K) { return {RatFunc(MultiPoly::x(K)), RatFunc(MultiPoly::y(K))}; }

Foliation::Foliation(MultiPoly a, MultiPoly b)
{
	if (a.is_zero() && b.is_zero())
		throw GeometryError("foliation from the zero form");
	Field K = common_field(a.field(), b.field());
	a = a.in(K);
	b = b.in(K);
	MultiPoly g = poly_gcd(a, b);
	if (!g.is_constant()) {
		a = *divide_exact(a, g);
		b = *divide_exact(b, g);
	}
	FieldScalar inv = (a.is_zero() ? b : a).leading().c.inverse();
	a *= inv;
	b *= inv;
	Integer den = 1, num = 0;
	for (const MultiPoly *p : {&a, &b})
		for (auto &t : p->terms())
			for (auto &q : t.c.coords()) {
				if (q == 0)
					continue;
				mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
				mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), q.get_num_mpz_t());
			}
	FieldScalar s(K, Rational(den, num));
	a_ = a * s;
	b_ = b * s;
}

Foliation Foliation::from_form(const OneForm &w)
{
	if (w.is_zero())
		throw GeometryError("foliation from the zero form");
	const MultiPoly &da = w.a.den(), &db = w.b.den();
	MultiPoly g = poly_gcd(da, db);
	MultiPoly ca = *divide_exact(db, g), cb = *divide_exact(da, g);
	return Foliation(w.a.num() * ca, w.b.num() * cb);
}

Foliation Foliation::level_sets(const RatFunc &r)
{
	if (r.is_constant())
		throw GeometryError("constant function has no level foliation");
	const MultiPoly &n = r.num(), &d = r.den();
	return Foliation(n.dx() * d - n * d.dx(), n.dy() * d - n * d.dy());
}

std::string Foliation::str() const { return "[(" + a_.str() + ")*dx + (" + b_.str() + ")*dy]"; }

ProjPoint ProjPoint::make(const FieldScalar &X, const FieldScalar &Y, const FieldScalar &Z)
{
	FieldScalar s;
	if (!Z.is_zero())
		s = Z;
	else if (!Y.is_zero())
		s = Y;
	else if (!X.is_zero())
		s = X;
	else
		throw GeometryError("projective point with all coordinates zero");
	FieldScalar inv = s.inverse();
	Field K = common_field(common_field(X, Y), Z.field());
	return {(X * inv).in(K), (Y * inv).in(K), (Z * inv).in(K)};
}

std::string ProjPoint::str() const { return "[" + X.str() + ":" + Y.str() + ":" + Z.str() + "]"; }

Foliation pencil(const ProjPoint &p)
{
	Field K = p.X.field();
	MultiPoly x = MultiPoly::x(K), y = MultiPoly::y(K);
	if (p.at_infinity())
		return Foliation(MultiPoly(p.Y), -MultiPoly(p.X));
	FieldScalar x0 = p.X / p.Z, y0 = p.Y / p.Z;
	return Foliation(y - MultiPoly(y0), -(x - MultiPoly(x0)));
}

Web::Web(std::vector<Foliation> f) : f_(std::move(f))
{
	for (size_t i = 0; i < f_.size(); i++)
		for (size_t j = i + 1; j < f_.size(); j++)
			if (f_[i].in(common_field(f_[i].field(), f_[j].field())) == f_[j].in(common_field(f_[i].field(), f_[j].field())))
				throw GeometryError("web with repeated foliation " + f_[i].str());
}

Field Web::field() const
{
	Field K = rationals();
	for (auto &F : f_)
		K = common_field(K, F.field());
	return K;
}

Web Web::without(size_t i) const
{
	std::vector<Foliation> f = f_;
	f.erase(f.begin() + i);
	return Web(f);
}

Web Web::with(const Foliation &F) const
{
	std::vector<Foliation> f = f_;
	f.push_back(F);
	return Web(f);
}

Web CDQLWeb::web() const
{
	std::vector<Foliation> f;
	for (auto &p : linear_points)
		f.push_back(pencil(p));
	f.push_back(nonlinear);
	Web W(f);
	Field K = W.field();
	std::vector<Foliation> g;
	for (auto &F : W.foliations())
		g.push_back(F.in(K));
	return Web(g);
}

std::optional<Divisor> Divisor::from_candidates(const MultiPoly &p, const std::vector<MultiPoly> &candidates)
{
	Divisor D;
	MultiPoly r = p;
	for (auto &h : candidates) {
		long m = raw_valuation(r, h);
		if (m > 0)
			D.components.push_back({normalize(h), int(m)});
	}
	if (!r.is_constant())
		return std::nullopt;
	return D;
}

AffineMap AffineMap::identity() { return linear(1, 0, 0, 1); }

AffineMap AffineMap::linear(const FieldScalar &a, const FieldScalar &b, const FieldScalar &c, const FieldScalar &d)
{
	return {a, b, FieldScalar(0), c, d, FieldScalar(0)};
}

AffineMap AffineMap::compose(const AffineMap &p) const
{
	return {a * p.a + b * p.c, a * p.b + b * p.d, a * p.e + b * p.f + e,
	        c * p.a + d * p.c, c * p.b + d * p.d, c * p.e + d * p.f + f};
}

AffineMap AffineMap::inverse() const
{
	FieldScalar D = det();
	if (D.is_zero())
		throw GeometryError("singular affine map");
	FieldScalar ia = d / D, ib = -b / D, ic = -c / D, id = a / D;
	return {ia, ib, -(ia * e + ib * f), ic, id, -(ic * e + id * f)};
}

namespace {

void check_invertible(const AffineMap &phi)
{
	if (phi.det().is_zero())
		throw GeometryError("singular affine map");
}

} // namespace

MultiPoly pullback(const AffineMap &phi, const MultiPoly &p)
{
	check_invertible(phi);
	return p.substitute_affine(phi.a, phi.b, phi.e, phi.c, phi.d, phi.f);
}

RatFunc pullback(const AffineMap &phi, const RatFunc &r)
{
	check_invertible(phi);
	return r.substitute_affine(phi.a, phi.b, phi.e, phi.c, phi.d, phi.f);
}

OneForm pullback(const AffineMap &phi, const OneForm &w)
{
	RatFunc A = pullback(phi, w.a), B = pullback(phi, w.b);
	return {A * RatFunc(phi.a) + B * RatFunc(phi.c), A * RatFunc(phi.b) + B * RatFunc(phi.d)};
}

TwoForm pullback(const AffineMap &phi, const TwoForm &t) { return {pullback(phi, t.c) * RatFunc(phi.det())}; }

Foliation pullback(const AffineMap &phi, const Foliation &F)
{
	MultiPoly A = pullback(phi, F.a()), B = pullback(phi, F.b());
	return Foliation(A * phi.a + B * phi.c, A * phi.b + B * phi.d);
}

Web pullback(const AffineMap &phi, const Web &W)
{
	std::vector<Foliation> f;
	for (auto &F : W.foliations())
		f.push_back(pullback(phi, F));
	return Web(f);
}

MultiPoly tangency(const Foliation &F, const Foliation &G)
{
	MultiPoly t = F.a() * G.b() - G.a() * F.b();
	if (t.is_zero())
		throw GeometryError("tangency of a foliation with itself");
	return normalize(t);
}

MultiPoly discriminant(const Web &W)
{
	if (W.size() < 2)
		throw GeometryError("discriminant needs at least two foliations");
	MultiPoly D(FieldScalar(W.field(), 1));
	for (size_t i = 0; i < W.size(); i++)
		for (size_t j = i + 1; j < W.size(); j++) {
			MultiPoly t = squarefree_part(tangency(W[i], W[j]));
			if (t.is_constant())
				continue;
			MultiPoly g = poly_gcd(D, t);
			D = D * *divide_exact(t, g);
		}
	return normalize(D);
}

bool is_invariant(const MultiPoly &h, const Foliation &F)
{
	if (h.is_constant())
		throw GeometryError("invariance of a constant");
	MultiPoly Xh = F.b() * h.dx() - F.a() * h.dy();
	return Xh.is_zero() || divides(h, Xh);
}

bool is_first_integral(const RatFunc &r, const Foliation &F)
{
	if (r.is_constant())
		throw GeometryError("constant first integral");
	const MultiPoly &n = r.num(), &d = r.den();
	MultiPoly rx = n.dx() * d - n * d.dx(), ry = n.dy() * d - n * d.dy();
	return (rx * F.b() - ry * F.a()).is_zero();
}

int foliation_degree(const Foliation &F)
{
	int n = std::max(F.a().total_degree(), F.b().total_degree());
	MultiPoly top = MultiPoly::x(F.field()) * F.a().homogeneous_part(n) + MultiPoly::y(F.field()) * F.b().homogeneous_part(n);
	return top.is_zero() ? n - 1 : n;
}

Foliation pencil_foliation(const MultiPoly &F, const MultiPoly &G)
{
	if (F.is_zero() || G.is_zero() || !poly_gcd(F, G).is_constant())
		throw GeometryError("pencil generators must be nonzero and coprime");
	return Foliation(F * G.dx() - G * F.dx(), F * G.dy() - G * F.dy());
}

SingularSet singular_points(const Foliation &F)
{
	SingularSet S;
	const MultiPoly &a = F.a(), &b = F.b();
	Field K = F.field();
	if ((a.is_constant() && !a.is_zero()) || (b.is_constant() && !b.is_zero())) {
		S.resultant_x = S.resultant_y = MultiPoly(FieldScalar(K, 1));
		return S;
	}
	S.resultant_x = resultant(a, b, Var::Y);
	S.resultant_y = resultant(a, b, Var::X);
	UPoly rx = S.resultant_x.eval_y(FieldScalar(K));
	auto xs = roots_in_field(rx);
	int found_x = 0;
	for (auto &[x0, m] : xs) {
		found_x++;
		UPoly g = ugcd(a.eval_x(x0), b.eval_x(x0));
		if (g.degree() <= 0)
			continue;
		auto ys = roots_in_field(g);
		int cnt = 0;
		for (auto &[y0, my] : ys) {
			S.points.push_back({x0, y0});
			cnt++;
		}
		if (cnt < usquarefree(g).degree())
			S.complete = false;
	}
	if (found_x < usquarefree(rx).degree())
		S.complete = false;
	return S;
}

LinearPart linear_part(const Foliation &F, const AffinePoint &p)
{
	Field K = common_field(common_field(F.field(), p.x.field()), p.y.field());
	if (!F.a().eval(p.x, p.y).is_zero() || !F.b().eval(p.x, p.y).is_zero())
		throw GeometryError("linear part at a regular point");
	LinearPart L;
	L.jacobian = Matrix(K, 2, 2);
	L.jacobian(0, 0) = F.b().dx().eval(p.x, p.y).in(K);
	L.jacobian(0, 1) = F.b().dy().eval(p.x, p.y).in(K);
	L.jacobian(1, 0) = (-F.a().dx().eval(p.x, p.y)).in(K);
	L.jacobian(1, 1) = (-F.a().dy().eval(p.x, p.y)).in(K);
	FieldScalar tr = L.jacobian(0, 0) + L.jacobian(1, 1);
	FieldScalar det = L.jacobian(0, 0) * L.jacobian(1, 1) - L.jacobian(0, 1) * L.jacobian(1, 0);
	L.charpoly = UPoly(K, {det, -tr, FieldScalar(K, 1)});
	if (!det.is_zero()) {
		FieldScalar s = tr * tr / det - FieldScalar(K, 2);
		UPoly q(K, {FieldScalar(K, 1), -s, FieldScalar(K, 1)});
		auto r = roots_in_field(q);
		if (!r.empty())
			L.eigenvalue_ratios = std::make_pair(r.front().first, r.front().first.inverse());
	}
	return L;
}

} // namespace webcurv
