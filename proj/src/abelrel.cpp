#include "webcurv/abelrel.hpp"
#include "webcurv/linalg.hpp"
#include "webcurv/numeric.hpp"

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <numeric>

namespace webcurv {

LogBasis::LogBasis(std::vector<MultiPoly> g) : gens(std::move(g))
{
	for (auto &p : gens) {
		if (p.is_constant())
			throw AlgebraError("log basis: constant generator");
		if (!is_squarefree(p))
			throw AlgebraError("log basis: generator not square-free: " + p.str());
		p = normalize(p);
	}
	for (size_t i = 0; i < gens.size(); i++)
		for (size_t j = i + 1; j < gens.size(); j++)
			if (!poly_gcd(gens[i], gens[j]).is_constant())
				throw AlgebraError("log basis: generators " + gens[i].str() + " and " + gens[j].str() + " share a factor");
}

namespace {

void add_to(std::map<int, FieldScalar> &m, int k, const FieldScalar &c)
{
	if (c.is_zero())
		return;
	auto it = m.find(k);
	if (it == m.end()) {
		m.emplace(k, c);
		return;
	}
	it->second += c;
	if (it->second.is_zero())
		m.erase(it);
}

void add_to(std::map<std::pair<int, int>, FieldScalar> &m, int i, int j, const FieldScalar &c)
{
	if (c.is_zero())
		return;
	auto key = std::minmax(i, j);
	auto it = m.find(key);
	if (it == m.end()) {
		m.emplace(key, c);
		return;
	}
	it->second += c;
	if (it->second.is_zero())
		m.erase(it);
}

} // namespace

int LogExpression::constant_symbol(const FieldScalar &c, size_t basis_size)
{
	for (size_t i = 0; i < constants.size(); i++)
		if (constants[i] == c)
			return int(basis_size + i);
	constants.push_back(c);
	return int(basis_size + constants.size() - 1);
}

LogExpression &LogExpression::operator+=(const LogExpression &o)
{
	rational += o.rational;
	if (!o.constants.empty() && !constants.empty() && constants != o.constants)
		throw AlgebraError("log expression: differing constant tables");
	for (auto &[k, c] : o.linear)
		add_to(linear, k, c);
	for (auto &[k, c] : o.quadratic)
		add_to(quadratic, k.first, k.second, c);
	if (constants.empty())
		constants = o.constants;
	return *this;
}

LogExpression LogExpression::operator*(const FieldScalar &s) const
{
	LogExpression r;
	r.constants = constants;
	if (s.is_zero())
		return r;
	r.rational = rational * RatFunc(s);
	for (auto &[k, c] : linear)
		r.linear.emplace(k, c * s);
	for (auto &[k, c] : quadratic)
		r.quadratic.emplace(k, c * s);
	return r;
}

bool LogOneForm::is_zero() const
{
	if (!rational.is_zero())
		return false;
	for (auto &[k, w] : by_symbol)
		if (!w.is_zero())
			return false;
	return true;
}

LogOneForm d_log_expression(const LogExpression &e, const LogBasis &B)
{
	int n = int(B.size());
	std::map<int, OneForm> dL;
	auto dlog = [&](int k) -> const OneForm * {
		if (k >= n)
			return nullptr;
		auto it = dL.find(k);
		if (it == dL.end()) {
			RatFunc g(B.gens[k]);
			it = dL.emplace(k, differential(g) * (RatFunc(1) / g)).first;
		}
		return &it->second;
	};
	LogOneForm r;
	r.rational = differential(e.rational);
	for (auto &[k, c] : e.linear)
		if (auto w = dlog(k))
			r.rational = r.rational + *w * RatFunc(c);
	auto acc = [&](int sym, const OneForm &w) {
		auto it = r.by_symbol.find(sym);
		if (it == r.by_symbol.end())
			r.by_symbol.emplace(sym, w);
		else
			it->second = it->second + w;
	};
	for (auto &[ij, c] : e.quadratic) {
		auto [i, j] = ij;
		if (i == j) {
			if (auto w = dlog(i))
				acc(i, *w * RatFunc(c * FieldScalar(2)));
			continue;
		}
		if (auto w = dlog(j))
			acc(i, *w * RatFunc(c));
		if (auto w = dlog(i))
			acc(j, *w * RatFunc(c));
	}
	for (auto it = r.by_symbol.begin(); it != r.by_symbol.end();)
		it = it->second.is_zero() ? r.by_symbol.erase(it) : std::next(it);
	return r;
}

std::optional<LogDecomposition> decompose_log(const RatFunc &r, const LogBasis &B)
{
	if (r.is_zero())
		return std::nullopt;
	LogDecomposition D;
	MultiPoly num = r.num(), den = r.den();
	for (size_t k = 0; k < B.size(); k++) {
		long e = raw_valuation(num, B.gens[k]) - raw_valuation(den, B.gens[k]);
		if (e != 0)
			D.exponents[int(k)] = e;
	}
	if (!num.is_constant() || !den.is_constant())
		return std::nullopt;
	D.constant = num.constant_term() / den.constant_term();
	return D;
}

RatFunc compose(const RatFunc &A, const RatFunc &u)
{
	if (A.num().degree_y() > 0 || A.den().degree_y() > 0)
		throw AlgebraError("compose: outer function must be univariate in x");
	Field K = common_field(A.field(), u.field());
	auto coeffs = [&](const MultiPoly &p) {
		std::vector<FieldScalar> c(std::max(p.degree_x(), 0) + 1, FieldScalar(K));
		for (auto &t : p.terms())
			c[t.i] = t.c.in(K);
		return c;
	};
	auto a = coeffs(A.num()), b = coeffs(A.den());
	int m = int(std::max(a.size(), b.size())) - 1;
	MultiPoly N = u.num().in(K), D = u.den().in(K);
	std::vector<MultiPoly> Np(m + 1), Dp(m + 1);
	Np[0] = MultiPoly(FieldScalar(K, 1));
	Dp[0] = Np[0];
	for (int k = 1; k <= m; k++) {
		Np[k] = Np[k - 1] * N;
		Dp[k] = Dp[k - 1] * D;
	}
	MultiPoly num(K), den(K);
	for (int k = 0; k <= m; k++) {
		MultiPoly mono = Np[k] * Dp[m - k];
		if (k < int(a.size()) && !a[k].is_zero())
			num += mono * a[k];
		if (k < int(b.size()) && !b[k].is_zero())
			den += mono * b[k];
	}
	return RatFunc(num, den);
}

namespace {

using num::Complex;
using num::Real;

// the argument polynomials of every log term, used to build the basis when none is supplied
std::vector<MultiPoly> log_arguments(const RelationCandidate &r, std::vector<RatFunc> &composedA,
                                     std::vector<RatFunc> &composedB)
{
	std::vector<MultiPoly> out;
	for (auto &t : r.terms) {
		const RatFunc &u = r.first_integrals.at(t.foliation);
		composedA.push_back(compose(t.A, u));
		composedB.push_back(t.kind == RelationTerm::LogProduct ? compose(t.B, u) : RatFunc());
		if (t.kind == RelationTerm::Rational)
			continue;
		out.push_back(composedA.back().num());
		out.push_back(composedA.back().den());
		if (t.kind == RelationTerm::LogProduct) {
			out.push_back(composedB.back().num());
			out.push_back(composedB.back().den());
		}
	}
	return out;
}

// constants up to torsion: rationals split into primes with the sign dropped, roots of unity vanish
std::vector<std::pair<FieldScalar, long>> constant_factors(const FieldScalar &c)
{
	std::vector<std::pair<FieldScalar, long>> out;
	if (!c.is_rational()) {
		FieldScalar p = c;
		for (int n = 1; n <= 24; n++, p *= c)
			if (p.is_one())
				return out;
		out.emplace_back(c, 1);
		return out;
	}
	Rational q = c.to_rational();
	auto split = [&](Integer n, long sign) {
		n = abs(n);
		for (Integer p = 2; p * p <= n && p < 100000; p++) {
			long k = 0;
			while (n % p == 0) {
				n /= p;
				k++;
			}
			if (k)
				out.emplace_back(FieldScalar(Rational(p)), sign * k);
		}
		if (n > 1)
			out.emplace_back(FieldScalar(Rational(n)), sign);
	};
	split(q.get_num(), 1);
	split(q.get_den(), -1);
	return out;
}

std::map<int, FieldScalar> log_linear(const RatFunc &arg, const LogBasis &B, LogExpression &e)
{
	auto D = decompose_log(arg, B);
	if (!D)
		throw AlgebraError("log basis insufficient for " + arg.str());
	std::map<int, FieldScalar> m;
	for (auto &[k, v] : D->exponents)
		m.emplace(k, FieldScalar(v));
	for (auto &[c, k] : constant_factors(D->constant))
		add_to(m, e.constant_symbol(c, B.size()), FieldScalar(k));
	return m;
}

std::vector<std::pair<FieldScalar, FieldScalar>> base_candidates()
{
	std::vector<Rational> vals;
	for (int q = 1; q <= 8; q++)
		for (int p = -8; p <= 8; p++)
			if (std::gcd(p, q) == 1)
				vals.push_back(Rational(p, q));
	auto height = [](const Rational &v) {
		return std::max(Integer(abs(v.get_num())), Integer(v.get_den())).get_ui();
	};
	std::sort(vals.begin(), vals.end(), [&](const Rational &a, const Rational &b) {
		auto ha = height(a), hb = height(b);
		if (ha != hb)
			return ha < hb;
		return a < b;
	});
	std::vector<std::pair<FieldScalar, FieldScalar>> out;
	std::vector<std::tuple<unsigned long, size_t, size_t>> order;
	for (size_t i = 0; i < vals.size(); i++)
		for (size_t j = 0; j < vals.size(); j++)
			order.emplace_back(std::max(height(vals[i]), height(vals[j])), i, j);
	std::stable_sort(order.begin(), order.end(),
	                 [](auto &a, auto &b) { return std::get<0>(a) < std::get<0>(b); });
	for (auto &[h, i, j] : order)
		out.emplace_back(FieldScalar(vals[i]), FieldScalar(vals[j]));
	return out;
}

const std::vector<std::pair<FieldScalar, FieldScalar>> &cached_candidates()
{
	static const auto c = base_candidates();
	return c;
}

std::optional<FieldScalar> eval_safe(const RatFunc &r, const FieldScalar &x, const FieldScalar &y)
{
	FieldScalar d = r.den().eval(x, y);
	if (d.is_zero())
		return std::nullopt;
	return r.num().eval(x, y) / d;
}

bool transverse_at(const Web &W, const FieldScalar &x, const FieldScalar &y)
{
	std::vector<std::pair<FieldScalar, FieldScalar>> v;
	for (auto &F : W.foliations())
		v.emplace_back(F.a().eval(x, y), F.b().eval(x, y));
	for (size_t i = 0; i < v.size(); i++)
		for (size_t j = i + 1; j < v.size(); j++)
			if ((v[i].first * v[j].second - v[j].first * v[i].second).is_zero())
				return false;
	return true;
}

} // namespace

RelationVerdict verify_relation(const RelationCandidate &r)
{
	const Web &W = r.web;
	RelationVerdict V;
	if (r.first_integrals.size() != W.size())
		throw AlgebraError("relation: one first integral per foliation required");
	V.well_formed = true;
	for (size_t i = 0; i < W.size(); i++)
		if (!is_first_integral(r.first_integrals[i], W[i]))
			V.well_formed = false;
	for (auto &t : r.terms)
		if (t.foliation >= W.size())
			throw AlgebraError("relation: foliation index out of range");
	if (!V.well_formed) {
		V.detail = "a first integral is not constant along its foliation";
		return V;
	}

	std::vector<RatFunc> cA, cB;
	auto args = log_arguments(r, cA, cB);
	bool has_log = !args.empty();
	bool has_product = std::any_of(r.terms.begin(), r.terms.end(),
	                               [](auto &t) { return t.kind == RelationTerm::LogProduct; });

	if (!has_log) {
		RatFunc sum;
		for (size_t k = 0; k < r.terms.size(); k++)
			sum += cA[k] * RatFunc(r.terms[k].coeff);
		V.symbolic_d_zero = differential(sum).is_zero();
		V.exact = true;
		V.passed = sum.is_zero();
		V.detail = V.passed ? "exact identity" : "sum equals " + sum.str();
		return V;
	}

	LogBasis B = r.basis ? *r.basis : LogBasis(coprime_base(args));
	LogExpression E;
	for (size_t k = 0; k < r.terms.size(); k++) {
		auto &t = r.terms[k];
		switch (t.kind) {
		case RelationTerm::Rational:
			E.rational += cA[k] * RatFunc(t.coeff);
			break;
		case RelationTerm::Log:
			for (auto &[s, c] : log_linear(cA[k], B, E))
				add_to(E.linear, s, c * t.coeff);
			break;
		case RelationTerm::LogProduct: {
			auto la = log_linear(cA[k], B, E), lb = log_linear(cB[k], B, E);
			for (auto &[i, ci] : la)
				for (auto &[j, cj] : lb)
					add_to(E.quadratic, i, j, ci * cj * t.coeff);
			break;
		}
		}
	}
	V.symbolic_d_zero = d_log_expression(E, B).is_zero();

	// integration constant: direct evaluation with principal logs
	auto value_at = [&](const FieldScalar &x, const FieldScalar &y, bool &positive) -> std::optional<Complex> {
		positive = true;
		Complex total(0);
		for (size_t k = 0; k < r.terms.size(); k++) {
			auto &t = r.terms[k];
			auto u = eval_safe(r.first_integrals[t.foliation], x, y);
			if (!u)
				return std::nullopt;
			auto a = eval_safe(t.A, *u, FieldScalar(0));
			if (!a)
				return std::nullopt;
			Complex va = num::embed(*a), term;
			if (t.kind == RelationTerm::Rational) {
				term = va;
			} else {
				if (a->is_zero())
					return std::nullopt;
				positive = positive && a->is_rational() && a->to_rational() > 0;
				term = log(va);
				if (t.kind == RelationTerm::LogProduct) {
					auto b = eval_safe(t.B, *u, FieldScalar(0));
					if (!b || b->is_zero())
						return std::nullopt;
					positive = positive && b->is_rational() && b->to_rational() > 0;
					term *= log(num::embed(*b));
				}
			}
			total += num::embed(t.coeff) * term;
		}
		return total;
	};
	const auto &cands = cached_candidates();
	std::optional<Complex> best;
	size_t limit = std::min<size_t>(cands.size(), 4000);
	for (size_t i = 0; i < cands.size(); i++) {
		auto &[x, y] = cands[i];
		if (!transverse_at(W, x, y))
			continue;
		bool positive;
		auto v = value_at(x, y, positive);
		if (!v)
			continue;
		if (!best) {
			best = v;
			V.base = {x, y};
		}
		if (positive) {
			best = v;
			V.base = {x, y};
			break;
		}
		if (i >= limit)
			break;
	}
	if (!best)
		throw AlgebraError("relation: no admissible base point");
	Complex res = *best;
	if (!has_product) {
		const Real two_pi = 2 * boost::math::constants::pi<Real>();
		Real im = res.imag();
		im -= two_pi * round(im / two_pi);
		res = Complex(res.real(), im);
	}
	V.constant_checked = true;
	V.constant_residual = abs(res).convert_to<double>();
	V.passed = V.symbolic_d_zero && abs(res) < Real("1e-30");
	V.detail = V.symbolic_d_zero ? "d vanishes" : "d does not vanish";
	return V;
}

int pi_bound(int n, int k)
{
	if (n < 2 || k < 1)
		throw AlgebraError("pi bound: need n >= 2 and k >= 1");
	int s = 0;
	for (int j = 1; k - j * (n - 1) - 1 > 0; j++)
		s += k - j * (n - 1) - 1;
	return s;
}

namespace {

// kernel of the jet system at order N; nullopt-free, returns dimension and basis
int jet_kernel(const std::vector<JetSeries> &jets, int N, int D, std::vector<std::vector<FieldScalar>> *basis, bool &overdetermined)
{
	size_t k = jets.size();
	Field K = jets[0].field();
	int Dc = std::min(D, N);
	int rows = JetSeries::index(0, N + 1) - 1;
	int cols = int(k) * Dc;
	overdetermined = rows >= cols;
	Matrix M(K, rows, cols);
	for (size_t i = 0; i < k; i++) {
		JetSeries v = jets[i].truncate(N);
		v.at(0, 0) = FieldScalar(K);
		JetSeries p = v;
		for (int m = 1; m <= Dc; m++) {
			if (m > 1)
				p = p * v;
			for (int d = 1; d <= N; d++)
				for (int q = 0; q <= d; q++)
					M(JetSeries::index(d - q, q) - 1, int(i) * Dc + m - 1) = p.at(d - q, q);
		}
	}
	auto ker = kernel(M);
	if (basis)
		*basis = ker;
	return int(ker.size());
}

} // namespace

JetRelationSpace jet_rank(const std::vector<JetSeries> &jets0, int D)
{
	if (jets0.empty())
		throw AlgebraError("jet rank: empty web");
	Field K = rationals();
	for (auto &j : jets0)
		K = common_field(K, j.field());
	std::vector<JetSeries> jets;
	int N = jets0[0].order();
	for (auto &j : jets0) {
		if (j.order() != N)
			throw AlgebraError("jet rank: jets of different orders");
		if (j.at(1, 0).is_zero() && j.at(0, 1).is_zero())
			throw AlgebraError("jet rank: first integral critical at the base point");
		if (j.field() == K) {
			jets.push_back(j);
			continue;
		}
		JetSeries l(K, j.base_x().in(K), j.base_y().in(K), N);
		for (int d = 0; d <= N; d++)
			for (int q = 0; q <= d; q++)
				l.at(d - q, q) = j.at(d - q, q).in(K);
		jets.push_back(l);
	}
	if (N < 2)
		throw AlgebraError("jet rank: order must be at least 2");
	JetRelationSpace S;
	S.base = {jets[0].base_x(), jets[0].base_y()};
	S.order = N;
	S.degree_cap = D;
	bool over, over_prev;
	S.kernel_dimension = jet_kernel(jets, N, D, &S.kernel, over);
	S.previous_dimension = jet_kernel(jets, N - 1, D, nullptr, over_prev);
	S.stabilized = over && over_prev && S.kernel_dimension == S.previous_dimension;
	S.meets_order_heuristic = N >= 2 * pi_bound(2, int(jets.size()));
	return S;
}

JetSeries formal_first_integral(const Foliation &F, const AffinePoint &b, int N)
{
	Field K = common_field(F.field(), common_field(b.x, b.y));
	FieldScalar x0 = b.x.in(K), y0 = b.y.in(K);
	JetSeries A = poly_jet(F.a().in(K), x0, y0, N), Bj = poly_jet(F.b().in(K), x0, y0, N);
	JetSeries U(K, x0, y0, N);
	if (!A.at(0, 0).is_zero()) {
		// u_y = (b/a) u_x with u(x, y0) = x - x0
		JetSeries R = Bj * A.inverse();
		U.at(1, 0) = FieldScalar(K, 1);
		for (int j = 1; j <= N; j++)
			for (int i = 0; i + j <= N; i++) {
				FieldScalar s(K);
				for (int i1 = 0; i1 <= i; i1++)
					for (int j1 = 0; j1 <= j - 1; j1++)
						if (i1 + 1 + j1 <= N)
							s.addmul(R.at(i - i1, j - 1 - j1), U.at(i1 + 1, j1) * FieldScalar(i1 + 1));
				U.at(i, j) = s / FieldScalar(j);
			}
		return U;
	}
	if (Bj.at(0, 0).is_zero())
		throw AlgebraError("formal first integral: singular base point");
	// u_x = (a/b) u_y with u(x0, y) = y - y0
	JetSeries R = A * Bj.inverse();
	U.at(0, 1) = FieldScalar(K, 1);
	for (int i = 1; i <= N; i++)
		for (int j = 0; i + j <= N; j++) {
			FieldScalar s(K);
			for (int i1 = 0; i1 <= i - 1; i1++)
				for (int j1 = 0; j1 <= j; j1++)
					if (i1 + j1 + 1 <= N)
						s.addmul(R.at(i - 1 - i1, j - j1), U.at(i1, j1 + 1) * FieldScalar(j1 + 1));
			U.at(i, j) = s / FieldScalar(i);
		}
	return U;
}

AffinePoint choose_base_point(const Web &W, const std::vector<std::optional<RatFunc>> &integrals)
{
	std::vector<RatFunc> ux, uy;
	for (auto &u : integrals) {
		ux.push_back(u ? u->dx() : RatFunc());
		uy.push_back(u ? u->dy() : RatFunc());
	}
	for (auto &[x, y] : cached_candidates()) {
		if (!transverse_at(W, x, y))
			continue;
		bool ok = true;
		for (size_t i = 0; ok && i < integrals.size(); i++) {
			if (!integrals[i])
				continue;
			if (integrals[i]->den().eval(x, y).is_zero()) {
				ok = false;
				break;
			}
			auto gx = eval_safe(ux[i], x, y), gy = eval_safe(uy[i], x, y);
			ok = gx && gy && !(gx->is_zero() && gy->is_zero());
		}
		if (ok)
			return {x, y};
	}
	throw AlgebraError("no admissible base point of small height");
}

JetRelationSpace jet_rank(const Web &W, const std::vector<std::optional<RatFunc>> &integrals, const AffinePoint &b, int N,
                          int D)
{
	if (integrals.size() != W.size())
		throw AlgebraError("jet rank: one first integral slot per foliation required");
	if (!transverse_at(W, b.x, b.y))
		throw AlgebraError("jet rank: base point on the discriminant");
	std::vector<JetSeries> jets;
	for (size_t i = 0; i < W.size(); i++) {
		if (integrals[i]) {
			if (!is_first_integral(*integrals[i], W[i]))
				throw AlgebraError("jet rank: supplied function is not a first integral of foliation " + std::to_string(i));
			if (integrals[i]->den().eval(b.x, b.y).is_zero())
				throw AlgebraError("jet rank: first integral has a pole at the base point");
			jets.push_back(taylor_jet(*integrals[i], b.x, b.y, N));
		} else {
			jets.push_back(formal_first_integral(W[i], b, N));
		}
	}
	return jet_rank(jets, D);
}

} // namespace webcurv
