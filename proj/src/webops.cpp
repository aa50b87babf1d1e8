#include "webcurv/webops.hpp"

#include <cstdlib>
#include <map>
#include <random>
#include <thread>

namespace webcurv {

namespace {

MultiPoly d_scalar(const MultiPoly &a1, const MultiPoly &a2) { return a2.dx() - a1.dy(); }

struct TripleTerms
{
	MultiPoly P, Q;
};

// alpha = delta_st w_r, beta = delta_tr w_s; P, Q with eta = -(P dx + Q dy) / sigma
TripleTerms triple_terms(const Foliation &r, const Foliation &s, const Foliation &t, const MultiPoly &d_rs,
                         const MultiPoly &d_st, const MultiPoly &d_tr)
{
	MultiPoly al1 = d_st * r.a(), al2 = d_st * r.b();
	MultiPoly be1 = d_tr * s.a(), be2 = d_tr * s.b();
	MultiPoly dal = d_scalar(al1, al2), dbe = d_scalar(be1, be2);
	TripleTerms T{al1 * dbe - be1 * dal, al2 * dbe - be2 * dal};
	MultiPoly ga1 = d_rs * t.a(), ga2 = d_rs * t.b();
	MultiPoly sigma = d_rs * d_st * d_tr;
	if (sigma * d_scalar(ga1, ga2) != ga2 * T.P - ga1 * T.Q)
		throw GeometryError("third structure equation fails");
	return T;
}

MultiPoly delta(const Foliation &i, const Foliation &j) { return i.a() * j.b() - j.a() * i.b(); }

int thread_count(int requested, size_t work)
{
	int n = requested;
	if (n <= 0) {
		if (const char *e = std::getenv("WEBCURV_THREADS"))
			n = std::atoi(e);
		if (n <= 0)
			n = int(std::thread::hardware_concurrency());
	}
	n = std::max(1, n);
	return int(std::min<size_t>(n, std::max<size_t>(work, 1)));
}

struct Factored
{
	FieldScalar unit;
	std::vector<int> e;
};

Factored factor_over(const MultiPoly &p, const std::vector<MultiPoly> &base)
{
	Factored F;
	MultiPoly r = p;
	for (auto &f : base)
		F.e.push_back(int(raw_valuation(r, f)));
	if (!r.is_constant())
		throw AlgebraError("factor base does not cover the input");
	F.unit = r.constant_term();
	return F;
}

} // namespace

OneForm CurvatureReport::eta() const { return {RatFunc(eta_x, eta_den), RatFunc(eta_y, eta_den)}; }

OneForm eta_triple(const Foliation &r, const Foliation &s, const Foliation &t)
{
	Field K = common_field(common_field(r.field(), s.field()), t.field());
	Foliation R = r.in(K), S = s.in(K), T = t.in(K);
	MultiPoly d_rs = delta(R, S), d_st = delta(S, T), d_tr = delta(T, R);
	if (d_rs.is_zero() || d_st.is_zero() || d_tr.is_zero())
		throw GeometryError("degenerate triple: coincident foliations");
	TripleTerms tt = triple_terms(R, S, T, d_rs, d_st, d_tr);
	MultiPoly sigma = d_rs * d_st * d_tr;
	return {RatFunc(-tt.P, sigma), RatFunc(-tt.Q, sigma)};
}

CurvatureReport curvature(const Web &W0, int threads)
{
	size_t k = W0.size();
	if (k < 3)
		throw GeometryError("curvature needs at least three foliations");
	Field K = W0.field();
	std::vector<Foliation> f;
	for (auto &F : W0.foliations())
		f.push_back(F.in(K));
	Web W(f);

	std::vector<std::vector<MultiPoly>> dl(k, std::vector<MultiPoly>(k));
	std::vector<MultiPoly> all;
	for (size_t i = 0; i < k; i++)
		for (size_t j = i + 1; j < k; j++) {
			dl[i][j] = delta(f[i], f[j]);
			dl[j][i] = -dl[i][j];
			all.push_back(dl[i][j]);
		}
	std::vector<MultiPoly> base = coprime_base(all);
	size_t nb = base.size();
	std::vector<std::vector<Factored>> fd(k, std::vector<Factored>(k));
	for (size_t i = 0; i < k; i++)
		for (size_t j = i + 1; j < k; j++) {
			fd[i][j] = factor_over(dl[i][j], base);
			fd[j][i] = fd[i][j];
			fd[j][i].unit = -fd[j][i].unit;
		}

	struct Triple
	{
		size_t r, s, t;
		std::vector<int> e;
		FieldScalar unit;
	};
	std::vector<Triple> triples;
	std::vector<int> emax(nb, 0);
	for (size_t r = 0; r < k; r++)
		for (size_t s = r + 1; s < k; s++)
			for (size_t t = s + 1; t < k; t++) {
				Triple T{r, s, t, std::vector<int>(nb), fd[r][s].unit * fd[s][t].unit * fd[t][r].unit};
				for (size_t b = 0; b < nb; b++) {
					T.e[b] = fd[r][s].e[b] + fd[s][t].e[b] + fd[t][r].e[b];
					emax[b] = std::max(emax[b], T.e[b]);
				}
				triples.push_back(std::move(T));
			}

	std::vector<std::map<int, MultiPoly>> powers(nb);
	for (size_t b = 0; b < nb; b++) {
		MultiPoly p(FieldScalar(K, 1));
		powers[b][0] = p;
		for (int m = 1; m <= emax[b]; m++) {
			p = p * base[b];
			powers[b][m] = p;
		}
	}
	MultiPoly L(FieldScalar(K, 1));
	for (size_t b = 0; b < nb; b++)
		L = L * powers[b].at(emax[b]);

	int nt = thread_count(threads, triples.size());
	std::vector<MultiPoly> N1(nt, MultiPoly(K)), N2(nt, MultiPoly(K));
	std::vector<std::exception_ptr> errors(nt);
	auto work = [&](int id) {
		try {
			for (size_t n = id; n < triples.size(); n += nt) {
				const Triple &T = triples[n];
				TripleTerms tt = triple_terms(f[T.r], f[T.s], f[T.t], dl[T.r][T.s], dl[T.s][T.t], dl[T.t][T.r]);
				MultiPoly cof(-T.unit.inverse());
				for (size_t b = 0; b < nb; b++)
					if (emax[b] > T.e[b])
						cof = cof * powers[b].at(emax[b] - T.e[b]);
				N1[id] += tt.P * cof;
				N2[id] += tt.Q * cof;
			}
		} catch (...) {
			errors[id] = std::current_exception();
		}
	};
	if (nt == 1) {
		work(0);
	} else {
		std::vector<std::thread> pool;
		for (int id = 0; id < nt; id++)
			pool.emplace_back(work, id);
		for (auto &th : pool)
			th.join();
	}
	for (auto &e : errors)
		if (e)
			std::rethrow_exception(e);

	CurvatureReport R;
	R.eta_x = MultiPoly(K);
	R.eta_y = MultiPoly(K);
	for (int id = 0; id < nt; id++) {
		R.eta_x += N1[id];
		R.eta_y += N2[id];
	}
	R.eta_den = L;
	R.triple_count = int(triples.size());
	MultiPoly num = (R.eta_y.dx() - R.eta_x.dy()) * L - R.eta_y * L.dx() + R.eta_x * L.dy();
	if (num.is_zero()) {
		R.K = TwoForm{RatFunc(MultiPoly(K))};
		R.is_flat = true;
		return R;
	}
	MultiPoly den(FieldScalar(K, 1));
	for (size_t b = 0; b < nb; b++) {
		int m = 2 * emax[b];
		while (m > 0) {
			auto q = divide_exact(num, base[b]);
			if (!q)
				break;
			num = std::move(*q);
			m--;
		}
		if (m > 0)
			den = den * pow(base[b], unsigned(m));
	}
	R.K = TwoForm{RatFunc(num, den)};
	R.is_flat = false;
	return R;
}

PoleOrder pole_order_along(const TwoForm &T, const MultiPoly &h)
{
	if (T.c.is_zero()) {
		valuation(MultiPoly(1), h);
		return {true, 0};
	}
	return {false, valuation(T.c.den(), h).value - valuation(T.c.num(), h).value};
}

TTCheck check_TT(const Foliation &F, const Web &W, const MultiPoly &C)
{
	if (W.size() < 2)
		throw GeometryError("check_TT needs a web with at least two foliations");
	TTCheck r;
	bool in_tangency = divides(C, tangency(F, W[0]));
	bool in_discriminant = divides(C, discriminant(W));
	r.hypotheses_hold = in_tangency && !in_discriminant;
	std::vector<Foliation> all{F};
	for (auto &G : W.foliations())
		all.push_back(G);
	CurvatureReport K = curvature(Web(all));
	r.pole = pole_order_along(K.K, C);
	r.holomorphic = r.pole.holomorphic();
	r.C_invariant_by_F = is_invariant(C, F);
	r.C_invariant_by_F1 = is_invariant(C, W[0]);
	Foliation beta = barycenter_foliation(W[0], W.without(0));
	r.C_invariant_by_barycenter = is_invariant(C, beta);
	r.consistent = r.holomorphic == (r.C_invariant_by_F1 || r.C_invariant_by_barycenter);
	return r;
}

Mobius Mobius::normalizing(const P1Point &q1, const P1Point &q2, const P1Point &q3)
{
	// columns l q1 and m q2 with l q1 - m q2 = q3
	FieldScalar D = q1.u * (-q2.v) - (-q2.u) * q1.v;
	if (D.is_zero())
		throw GeometryError("normalizing points must be distinct");
	FieldScalar l = (q3.u * (-q2.v) - (-q2.u) * q3.v) / D;
	FieldScalar m = (q1.u * q3.v - q3.u * q1.v) / D;
	if (l.is_zero() || m.is_zero())
		throw GeometryError("normalizing points must be distinct");
	Mobius A{l * q1.u, m * q2.u, l * q1.v, m * q2.v};
	return A.inverse();
}

Mobius Mobius::inverse() const
{
	if (det().is_zero())
		throw GeometryError("singular projective transformation");
	return {d, -b, -c, a};
}

Mobius Mobius::compose(const Mobius &h) const
{
	return {a * h.a + b * h.c, a * h.b + b * h.d, c * h.a + d * h.c, c * h.b + d * h.d};
}

P1Point Mobius::operator()(const P1Point &p) const { return P1Point::make(a * p.u + b * p.v, c * p.u + d * p.v); }

BinaryForm Mobius::operator()(const BinaryForm &f) const
{
	Mobius h = inverse();
	return f.substitute(h.a, h.b, h.c, h.d);
}

P1Point barycenter_point(const P1Point &v, const std::vector<P1Point> &pts)
{
	size_t k = pts.size();
	if (k == 0)
		throw GeometryError("barycenter of an empty set");
	std::vector<FieldScalar> s(k);
	for (size_t i = 0; i < k; i++)
		s[i] = v.u * pts[i].v - v.v * pts[i].u;
	FieldScalar U(0), V(0);
	for (size_t i = 0; i < k; i++) {
		FieldScalar w(1);
		for (size_t j = 0; j < k; j++)
			if (j != i)
				w *= s[j];
		U += w * pts[i].u;
		V += w * pts[i].v;
	}
	if (U.is_zero() && V.is_zero())
		throw GeometryError("barycenter undefined: two points coincide with the direction of v");
	return P1Point::make(U, V);
}

ImplicitWeb ImplicitWeb::from_web(const Web &W)
{
	ImplicitWeb r;
	r.K = W.field();
	r.c = {MultiPoly(FieldScalar(r.K, 1))};
	for (auto &F : W.foliations()) {
		ImplicitWeb l;
		l.K = r.K;
		l.c = {F.a().in(r.K), F.b().in(r.K)};
		r = r * l;
	}
	return r;
}

ImplicitWeb ImplicitWeb::from_binary_form(const BinaryForm &f)
{
	ImplicitWeb r;
	r.K = f.field();
	for (auto &c : f.coeffs())
		r.c.push_back(MultiPoly(c.in(r.K)));
	return r;
}

ImplicitWeb ImplicitWeb::operator*(const ImplicitWeb &o) const
{
	ImplicitWeb r;
	r.K = common_field(K, o.K);
	r.c.assign(c.size() + o.c.size() - 1, MultiPoly(r.K));
	for (size_t i = 0; i < c.size(); i++)
		for (size_t j = 0; j < o.c.size(); j++)
			r.c[i + j] += c[i].in(r.K) * o.c[j].in(r.K);
	return r;
}

MultiPoly ImplicitWeb::eval(const MultiPoly &A, const MultiPoly &B) const
{
	int k = order();
	MultiPoly r(K);
	for (int m = 0; m <= k; m++)
		r += c[m] * pow(A, unsigned(k - m)) * pow(B, unsigned(m));
	return r;
}

Foliation barycenter_foliation(const Foliation &F, const ImplicitWeb &W)
{
	int k = W.order();
	if (k < 1)
		throw GeometryError("barycenter with respect to an empty web");
	Field K = common_field(F.field(), W.K);
	MultiPoly s = F.b().in(K), t = -F.a().in(K);
	if (W.eval(s, t).is_zero())
		throw GeometryError("the foliation belongs to the web");
	std::vector<MultiPoly> sp(k + 1), tp(k + 1);
	sp[0] = tp[0] = MultiPoly(FieldScalar(K, 1));
	for (int m = 1; m <= k; m++) {
		sp[m] = sp[m - 1] * s;
		tp[m] = tp[m - 1] * t;
	}
	MultiPoly Ws(K), Wt(K);
	for (int m = 0; m <= k; m++) {
		if (k - m > 0)
			Ws += W.c[m].in(K) * sp[k - m - 1] * tp[m] * FieldScalar(K, k - m);
		if (m > 0)
			Wt += W.c[m].in(K) * sp[k - m] * tp[m - 1] * FieldScalar(K, m);
	}
	if (Ws.is_zero() && Wt.is_zero())
		throw GeometryError("degenerate barycenter");
	return Foliation(Ws, Wt);
}

Foliation barycenter_foliation(const Foliation &F, const Web &W) { return barycenter_foliation(F, ImplicitWeb::from_web(W)); }

Web barycenter_web(const Web &W)
{
	std::vector<Foliation> f;
	for (size_t i = 0; i < W.size(); i++)
		f.push_back(barycenter_foliation(W[i], W.without(i)));
	return Web(f);
}

BinaryForm configuration(const std::vector<P1Point> &pts)
{
	Field K = rationals();
	for (auto &p : pts)
		K = common_field(K, common_field(p.u, p.v));
	BinaryForm c(K, 0, {FieldScalar(K, 1)});
	for (auto &p : pts)
		c = c * BinaryForm::linear(p.v.in(K), -p.u.in(K));
	return c;
}

std::vector<std::pair<P1Point, int>> configuration_points(const BinaryForm &c)
{
	auto lf = linear_factors(c);
	if (lf.residual.degree() > 0)
		throw AlgebraError("configuration does not split over its field");
	std::vector<std::pair<P1Point, int>> out;
	for (auto &[l, m] : lf.factors)
		out.push_back({root_of_linear(l), m});
	return out;
}

std::vector<int> configuration_multiplicities(const BinaryForm &c)
{
	std::vector<int> out;
	UPoly p = c.dehomogenize();
	int inf = c.degree() - p.degree();
	if (inf > 0)
		out.push_back(inf);
	auto dec = usquarefree_decomposition(p);
	for (size_t m = 0; m < dec.size(); m++)
		for (int r = 0; r < dec[m].degree(); r++)
			out.push_back(int(m) + 1);
	std::sort(out.rbegin(), out.rend());
	return out;
}

BinaryForm barycenter_config(const BinaryForm &c0)
{
	int k = c0.degree();
	if (k < 2)
		throw GeometryError("barycenter configuration needs k >= 2");
	Field K = c0.field();
	// move every point off infinity
	Mobius M = Mobius::identity();
	BinaryForm c = c0;
	if (c0.coeff(0).is_zero()) {
		long c1 = 0;
		while (c0.eval(FieldScalar(K, c1), FieldScalar(K, 1)).is_zero())
			c1 = c1 >= 0 ? -(c1 + 1) : -c1;
		// D(X, Y) = C(c1 X + Y, X)
		M = Mobius{FieldScalar(K, c1), FieldScalar(K, 1), FieldScalar(K, 1), FieldScalar(K)};
		c = c0.substitute(M.a, M.b, M.c, M.d);
	}
	UPoly p = c.dehomogenize();
	if (p.degree() != k || usquarefree(p).degree() != k)
		throw GeometryError("barycenter configuration needs distinct points");
	MultiPoly z = MultiPoly::x(K), t = MultiPoly::y(K);
	MultiPoly P = from_upoly_x(p), P1 = from_upoly_x(p.derivative()), P2 = from_upoly_x(p.derivative().derivative());
	MultiPoly q = (t - z) * P2 + P1 * FieldScalar(K, 2 * (k - 1));
	MultiPoly R = resultant(P, q, Var::X);
	std::vector<FieldScalar> co(k + 1, FieldScalar(K));
	for (auto &term : R.terms()) {
		if (int(term.j) > k)
			throw GeometryError("barycenter resultant of unexpected degree");
		co[k - term.j] = term.c;
	}
	BinaryForm E(K, k, co);
	if (E.is_zero())
		throw GeometryError("degenerate barycenter configuration");
	// points of c are M^-1 of the points of c0
	return M(E).normalized();
}

namespace {

FieldScalar cross_ratio(const std::vector<P1Point> &z)
{
	auto br = [&](int i, int j) { return z[i].u * z[j].v - z[j].u * z[i].v; };
	FieldScalar den = br(1, 2) * br(0, 3);
	if (den.is_zero() || br(0, 2).is_zero() || br(1, 3).is_zero())
		throw GeometryError("cross-ratio of repeated points");
	return br(0, 2) * br(1, 3) / den;
}

} // namespace

FieldScalar j_invariant(const BinaryForm &f)
{
	if (f.degree() != 4)
		throw GeometryError("j-invariant needs a binary quartic");
	const auto &a = f.coeffs();
	FieldScalar I = FieldScalar(12) * a[0] * a[4] - FieldScalar(3) * a[1] * a[3] + a[2] * a[2];
	FieldScalar J = FieldScalar(72) * a[0] * a[2] * a[4] + FieldScalar(9) * a[1] * a[2] * a[3] - FieldScalar(27) * a[0] * a[3] * a[3] -
	                FieldScalar(27) * a[4] * a[1] * a[1] - FieldScalar(2) * a[2] * a[2] * a[2];
	FieldScalar I3 = I * I * I;
	FieldScalar disc = FieldScalar(4) * I3 - J * J;
	if (disc.is_zero())
		throw GeometryError("j-invariant of a configuration with repeated points");
	return FieldScalar(6912) * I3 / disc;
}

FieldScalar j_invariant_cross_ratio(const std::vector<P1Point> &pts)
{
	if (pts.size() != 4)
		throw GeometryError("j-invariant needs four points");
	FieldScalar l = cross_ratio(pts);
	FieldScalar one(1);
	FieldScalar q = l * l - l + one;
	FieldScalar d = l * l * (l - one) * (l - one);
	if (d.is_zero())
		throw GeometryError("j-invariant of a configuration with repeated points");
	return FieldScalar(256) * q * q * q / d;
}

namespace {

Integer squarefree_kernel(Integer n)
{
	Integer r = 1;
	if (n < 0) {
		r = -1;
		n = -n;
	}
	for (Integer p = 2; p * p <= n && p < 1000000; p++) {
		int e = 0;
		while (n % p == 0) {
			n /= p;
			e++;
		}
		if (e % 2)
			r *= p;
	}
	return r * n;
}

// splitting field of a rational quadratic and its roots there
std::vector<FieldScalar> quadratic_roots(const BinaryForm &q)
{
	UPoly p = q.dehomogenize().monic();
	Rational b = p.coeff(1).to_rational(), c = p.coeff(0).to_rational();
	Rational disc = b * b - 4 * c;
	Integer num = disc.get_num() * disc.get_den();
	Integer m = squarefree_kernel(num);
	// disc = m s^2 with s rational
	Rational s2 = disc / Rational(m);
	Integer sn, sd;
	mpz_sqrt(sn.get_mpz_t(), s2.get_num_mpz_t());
	mpz_sqrt(sd.get_mpz_t(), s2.get_den_mpz_t());
	Rational s(sn, sd);
	s.canonicalize();
	std::string sym = "r" + (m < 0 ? "m" + Integer(-m).get_str() : m.get_str());
	Field K = make_field("Q(" + sym + ")", sym, {Rational(-m), Rational(0), Rational(1)});
	FieldScalar root = FieldScalar::generator(K) * FieldScalar(K, s);
	FieldScalar half(K, Rational(1, 2));
	return {(FieldScalar(K, -b) + root) * half, (FieldScalar(K, -b) - root) * half};
}

} // namespace

BetaStarEvidence beta_star_probe(unsigned seed, int pairs, int max_steps)
{
	BetaStarEvidence ev;
	std::mt19937 rng(seed);
	std::uniform_int_distribution<int> small(-9, 9), pos(1, 9);
	auto rand_lambda = [&] {
		while (true) {
			Rational l(small(rng), pos(rng));
			l.canonicalize();
			if (l != 0 && l != 1)
				return l;
		}
	};
	auto rand_mobius = [&] {
		while (true) {
			Mobius g{small(rng), small(rng), small(rng), small(rng)};
			if (!g.det().is_zero())
				return g;
		}
	};
	for (int n = 0; n < pairs; n++) {
		Rational l = rand_lambda();
		Rational orbit[6] = {l, 1 / l, 1 - l, 1 / (1 - l), l / (l - 1), (l - 1) / l};
		Rational l2 = orbit[1 + n % 5];
		auto quad = [](const Rational &t) {
			return std::vector<P1Point>{P1Point::affine(0), P1Point::affine(1), P1Point::infinity(), P1Point::affine(t)};
		};
		Mobius g1 = rand_mobius(), g2 = rand_mobius();
		BinaryForm c1 = g1(configuration(quad(l))), c2 = g2(configuration(quad(l2)));
		ev.pairs++;
		if (j_invariant(c1) != j_invariant(c2))
			continue;
		ev.equal_j_pairs++;
		BinaryForm b1 = barycenter_config(c1), b2 = barycenter_config(c2);
		auto safe_j = [](const BinaryForm &b) -> std::optional<FieldScalar> {
			try {
				return j_invariant(b);
			} catch (const GeometryError &) {
				return std::nullopt;
			}
		};
		if (safe_j(b1) == safe_j(b2))
			ev.semiconjugate++;
	}

	// homogeneous form of z^2 (z + 540)^3 / (5z - 216)^4
	MultiPoly u = MultiPoly::x(), v = MultiPoly::y();
	MultiPoly N = pow(u, 2) * pow(u + v * FieldScalar(540), 3);
	MultiPoly D = v * pow(u * FieldScalar(5) - v * FieldScalar(216), 4);
	ev.map_degree = 5;
	PolarMap f{BinaryForm::from_poly(N, 5), BinaryForm::from_poly(D, 5)};
	BinaryForm jac = BinaryForm::from_poly(N.dx() * D.dy() - N.dy() * D.dx(), 8);
	auto lf = linear_factors(jac);
	std::vector<P1Point> crit;
	for (auto &[l, m] : lf.factors) {
		crit.push_back(root_of_linear(l));
		ev.critical_count += m;
	}
	auto rest = lf.residual;
	if (rest.degree() == 2) {
		for (auto &r : quadratic_roots(rest)) {
			crit.push_back(P1Point::affine(r));
			ev.critical_count++;
		}
	}
	ev.post_critically_finite = ev.critical_count == 2 * ev.map_degree - 2;
	for (auto &c : crit) {
		Field K = c.u.field();
		PolarMap fk{f.P.in(K), f.Q.in(K)};
		CriticalOrbit co;
		co.point = c;
		P1Point z = c;
		for (int step = 0; step <= max_steps; step++) {
			auto it = std::find(co.orbit.begin(), co.orbit.end(), z);
			if (it != co.orbit.end()) {
				co.preperiod = int(it - co.orbit.begin());
				co.period = int(co.orbit.size()) - co.preperiod;
				co.finite = true;
				break;
			}
			co.orbit.push_back(z);
			z = fk(z);
		}
		ev.post_critically_finite = ev.post_critically_finite && co.finite;
		ev.critical.push_back(co);
	}
	return ev;
}

P1Point PolarMap::operator()(const P1Point &p) const
{
	FieldScalar a = P.eval(p.u, p.v), b = Q.eval(p.u, p.v);
	if (a.is_zero() && b.is_zero())
		throw GeometryError("polar map undefined at " + p.str());
	return P1Point::make(a, b);
}

PolarMap PolarMap::conjugate(const Mobius &g) const
{
	Mobius h = g.inverse();
	BinaryForm Ph = P.substitute(h.a, h.b, h.c, h.d), Qh = Q.substitute(h.a, h.b, h.c, h.d);
	return {Ph * g.a + Qh * g.b, Ph * g.c + Qh * g.d};
}

bool PolarMap::proportional(const PolarMap &o) const
{
	if (degree() != o.degree())
		return false;
	// (P, Q) = s (P', Q')
	BinaryForm lhs = P * o.Q, rhs = Q * o.P;
	if (!(lhs - rhs).is_zero())
		return false;
	return !(P.is_zero() && Q.is_zero()) && !(o.P.is_zero() && o.Q.is_zero());
}

std::string PolarMap::str() const { return "(" + P.str() + " : " + Q.str() + ")"; }

PolarMap ell_polar_map(const Foliation &F)
{
	int d = foliation_degree(F);
	int n = std::max(F.a().total_degree(), F.b().total_degree());
	if (d != n)
		throw GeometryError("the line at infinity is not invariant");
	return {BinaryForm::from_poly(F.b().homogeneous_part(d), d), BinaryForm::from_poly(-F.a().homogeneous_part(d), d)};
}

namespace {

Fiber fiber_of(const BinaryForm &g)
{
	Fiber fb;
	auto lf = linear_factors(g);
	for (auto &[l, m] : lf.factors)
		fb.points.push_back({root_of_linear(l), m});
	fb.residual = lf.residual;
	return fb;
}

} // namespace

Fiber polar_fiber(const PolarMap &f, const P1Point &q)
{
	Field K = common_field(f.P.field(), common_field(q.u, q.v));
	return fiber_of(f.P.in(K) * q.v.in(K) - f.Q.in(K) * q.u.in(K));
}

Fiber polar_fixed_points(const PolarMap &f)
{
	Field K = f.P.field();
	BinaryForm X = BinaryForm::linear(FieldScalar(K, 1), FieldScalar(K)), Y = BinaryForm::linear(FieldScalar(K), FieldScalar(K, 1));
	return fiber_of(Y * f.P - X * f.Q.in(K));
}

} // namespace webcurv
