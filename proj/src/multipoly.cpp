#include "webcurv/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace webcurv {

namespace {

inline bool term_before(uint32_t ai, uint32_t aj, uint32_t bi, uint32_t bj)
{
	uint32_t da = ai + aj, db = bi + bj;
	return da != db ? da > db : ai > bi;
}

inline bool term_before(const MultiPoly::Term &a, const MultiPoly::Term &b) { return term_before(a.i, a.j, b.i, b.j); }

std::string monomial_str(uint32_t i, uint32_t j)
{
	std::string s;
	if (i > 0)
		s += i == 1 ? "x" : "x^" + std::to_string(i);
	if (j > 0)
		s += (s.empty() ? "" : "*") + std::string(j == 1 ? "y" : "y^" + std::to_string(j));
	return s;
}

// integer coordinate images of the coefficients of p over K with a common denominator
struct IntImage
{
	Integer den = 1;
	std::vector<Integer> co; // size terms * d
};

IntImage int_image(const MultiPoly &p, Field K)
{
	int d = K->degree();
	IntImage im;
	for (auto &t : p.terms())
		for (auto &c : t.c.coords())
			mpz_lcm(im.den.get_mpz_t(), im.den.get_mpz_t(), c.get_den_mpz_t());
	im.co.assign(p.size() * d, Integer(0));
	for (size_t n = 0; n < p.size(); n++) {
		auto &cs = p.terms()[n].c.coords();
		for (size_t k = 0; k < cs.size(); k++) {
			if (cs[k] == 0)
				continue;
			Integer v = im.den / cs[k].get_den();
			im.co[n * d + k] = v * cs[k].get_num();
		}
	}
	return im;
}

} // namespace

MultiPoly::MultiPoly(const FieldScalar &c) : K_(c.field())
{
	if (!c.is_zero())
		t_.push_back({0, 0, c});
}

MultiPoly MultiPoly::monomial(const FieldScalar &c, uint32_t i, uint32_t j)
{
	MultiPoly p(c.field());
	if (!c.is_zero())
		p.t_.push_back({i, j, c});
	return p;
}

MultiPoly MultiPoly::x(Field K) { return monomial(FieldScalar(K, 1), 1, 0); }
MultiPoly MultiPoly::y(Field K) { return monomial(FieldScalar(K, 1), 0, 1); }

MultiPoly MultiPoly::from_terms(Field K, std::vector<Term> terms)
{
	for (auto &t : terms)
		K = common_field(K, t.c.field());
	std::sort(terms.begin(), terms.end(), [](const Term &a, const Term &b) { return term_before(a, b); });
	MultiPoly p(K);
	for (auto &t : terms) {
		if (!p.t_.empty() && p.t_.back().i == t.i && p.t_.back().j == t.j)
			p.t_.back().c += t.c;
		else
			p.t_.push_back({t.i, t.j, t.c.in(K)});
		if (p.t_.size() >= 2 && p.t_[p.t_.size() - 2].c.is_zero())
			p.t_.erase(p.t_.end() - 2);
	}
	if (!p.t_.empty() && p.t_.back().c.is_zero())
		p.t_.pop_back();
	for (auto &t : p.t_)
		t.c = t.c.in(K);
	return p;
}

int MultiPoly::total_degree() const { return t_.empty() ? -1 : int(t_[0].i + t_[0].j); }

int MultiPoly::degree_x() const
{
	int d = -1;
	for (auto &t : t_)
		d = std::max(d, int(t.i));
	return d;
}

int MultiPoly::degree_y() const
{
	int d = -1;
	for (auto &t : t_)
		d = std::max(d, int(t.j));
	return d;
}

int MultiPoly::min_degree_x() const
{
	int d = t_.empty() ? 0 : 1 << 30;
	for (auto &t : t_)
		d = std::min(d, int(t.i));
	return d;
}

int MultiPoly::min_degree_y() const
{
	int d = t_.empty() ? 0 : 1 << 30;
	for (auto &t : t_)
		d = std::min(d, int(t.j));
	return d;
}

FieldScalar MultiPoly::coeff(uint32_t i, uint32_t j) const
{
	auto it = std::lower_bound(t_.begin(), t_.end(), Term{i, j, FieldScalar()},
	                           [](const Term &a, const Term &b) { return term_before(a, b); });
	if (it != t_.end() && it->i == i && it->j == j)
		return it->c;
	return FieldScalar(K_);
}

bool MultiPoly::is_homogeneous() const
{
	for (auto &t : t_)
		if (t.i + t.j != t_[0].i + t_[0].j)
			return false;
	return true;
}

MultiPoly &MultiPoly::operator+=(const MultiPoly &o)
{
	Field K = common_field(K_, o.K_);
	std::vector<Term> r;
	r.reserve(t_.size() + o.t_.size());
	size_t a = 0, b = 0;
	while (a < t_.size() || b < o.t_.size()) {
		if (b == o.t_.size() || (a < t_.size() && term_before(t_[a], o.t_[b]))) {
			r.push_back(std::move(t_[a++]));
		} else if (a == t_.size() || term_before(o.t_[b], t_[a])) {
			r.push_back(o.t_[b++]);
		} else {
			FieldScalar c = t_[a].c + o.t_[b].c;
			if (!c.is_zero())
				r.push_back({t_[a].i, t_[a].j, c});
			a++;
			b++;
		}
	}
	for (auto &t : r)
		if (t.c.field() != K)
			t.c = t.c.in(K);
	t_ = std::move(r);
	K_ = K;
	return *this;
}

MultiPoly MultiPoly::operator-() const
{
	MultiPoly r = *this;
	for (auto &t : r.t_)
		t.c = -t.c;
	return r;
}

MultiPoly &MultiPoly::operator-=(const MultiPoly &o) { return *this += -o; }

MultiPoly &MultiPoly::operator*=(const FieldScalar &s)
{
	K_ = common_field(K_, s.field());
	if (s.is_zero()) {
		t_.clear();
		return *this;
	}
	for (auto &t : t_)
		t.c = (t.c * s).in(K_);
	return *this;
}

MultiPoly &MultiPoly::operator*=(const MultiPoly &o)
{
	*this = *this * o;
	return *this;
}

MultiPoly operator*(const MultiPoly &a, const MultiPoly &b)
{
	Field K = common_field(a.field(), b.field());
	if (a.is_zero() || b.is_zero())
		return MultiPoly(K);
	if (a.size() == 1 || b.size() == 1) {
		const MultiPoly &m = a.size() == 1 ? a : b;
		const MultiPoly &o = a.size() == 1 ? b : a;
		auto &mt = m.terms()[0];
		std::vector<MultiPoly::Term> r;
		r.reserve(o.size());
		for (auto &t : o.terms())
			r.push_back({t.i + mt.i, t.j + mt.j, (t.c * mt.c).in(K)});
		return MultiPoly::from_terms(K, std::move(r));
	}
	int d = K->degree();
	int w = 2 * d - 1;
	size_t X = a.degree_x() + b.degree_x() + 1, Y = a.degree_y() + b.degree_y() + 1;
	IntImage A = int_image(a, K), B = int_image(b, K);
	std::vector<Integer> buf;
	std::map<size_t, std::vector<Integer>> sparse;
	bool dense = X * Y * w <= 4000000;
	if (dense)
		buf.assign(X * Y * w, Integer(0));
	std::vector<char> used(dense ? X * Y : 0, 0);
	for (size_t p = 0; p < a.size(); p++) {
		auto &ta = a.terms()[p];
		for (size_t q = 0; q < b.size(); q++) {
			auto &tb = b.terms()[q];
			size_t idx = (ta.i + tb.i) * Y + (ta.j + tb.j);
			Integer *slot;
			if (dense) {
				used[idx] = 1;
				slot = &buf[idx * w];
			} else {
				auto &v = sparse[idx];
				if (v.empty())
					v.assign(w, Integer(0));
				slot = v.data();
			}
			for (int k1 = 0; k1 < d; k1++) {
				const Integer &x1 = A.co[p * d + k1];
				if (x1 == 0)
					continue;
				for (int k2 = 0; k2 < d; k2++) {
					const Integer &x2 = B.co[q * d + k2];
					if (x2 != 0)
						mpz_addmul(slot[k1 + k2].get_mpz_t(), x1.get_mpz_t(), x2.get_mpz_t());
				}
			}
		}
	}
	Integer den = A.den * B.den;
	std::vector<MultiPoly::Term> out;
	auto emit = [&](size_t idx, const Integer *s) {
		FieldScalar::Coords c(d);
		bool nz = false;
		for (int k = 0; k < d; k++)
			c[k] = Rational(s[k]);
		for (int m = d; m < w; m++) {
			if (s[m] == 0)
				continue;
			auto &pw = K->powers[m];
			for (int k = 0; k < d; k++)
				if (pw[k] != 0)
					c[k] += s[m] * pw[k];
		}
		for (int k = 0; k < d; k++) {
			if (c[k] != 0) {
				nz = true;
				c[k] /= den;
			}
		}
		if (nz)
			out.push_back({uint32_t(idx / Y), uint32_t(idx % Y), FieldScalar(K, std::move(c))});
	};
	if (dense) {
		for (size_t idx = 0; idx < X * Y; idx++)
			if (used[idx])
				emit(idx, &buf[idx * w]);
	} else {
		for (auto &[idx, v] : sparse)
			emit(idx, v.data());
	}
	std::sort(out.begin(), out.end(), [](const MultiPoly::Term &s, const MultiPoly::Term &t) { return term_before(s, t); });
	MultiPoly r(K);
	r = MultiPoly::from_terms(K, std::move(out));
	return r;
}

bool MultiPoly::operator==(const MultiPoly &o) const
{
	if (t_.size() != o.t_.size())
		return false;
	for (size_t n = 0; n < t_.size(); n++)
		if (t_[n].i != o.t_[n].i || t_[n].j != o.t_[n].j || t_[n].c != o.t_[n].c)
			return false;
	return true;
}

MultiPoly MultiPoly::dx() const
{
	std::vector<Term> r;
	for (auto &t : t_)
		if (t.i > 0)
			r.push_back({t.i - 1, t.j, t.c * FieldScalar(long(t.i))});
	return from_terms(K_, std::move(r));
}

MultiPoly MultiPoly::dy() const
{
	std::vector<Term> r;
	for (auto &t : t_)
		if (t.j > 0)
			r.push_back({t.i, t.j - 1, t.c * FieldScalar(long(t.j))});
	return from_terms(K_, std::move(r));
}

FieldScalar MultiPoly::eval(const FieldScalar &x, const FieldScalar &y) const
{
	Field K = common_field(common_field(K_, x.field()), y.field());
	int dx_ = degree_x(), dy_ = degree_y();
	std::vector<FieldScalar> px(std::max(dx_, 0) + 1, FieldScalar(K, 1)), py(std::max(dy_, 0) + 1, FieldScalar(K, 1));
	for (int k = 1; k <= dx_; k++)
		px[k] = px[k - 1] * x;
	for (int k = 1; k <= dy_; k++)
		py[k] = py[k - 1] * y;
	FieldScalar r(K);
	for (auto &t : t_)
		r += t.c * px[t.i] * py[t.j];
	return r;
}

UPoly MultiPoly::eval_x(const FieldScalar &c) const
{
	Field K = common_field(K_, c.field());
	int dy_ = std::max(degree_y(), 0);
	std::vector<FieldScalar> co(dy_ + 1, FieldScalar(K));
	std::vector<FieldScalar> pc(std::max(degree_x(), 0) + 1, FieldScalar(K, 1));
	for (size_t k = 1; k < pc.size(); k++)
		pc[k] = pc[k - 1] * c;
	for (auto &t : t_)
		co[t.j] += t.c * pc[t.i];
	return UPoly(K, co);
}

UPoly MultiPoly::eval_y(const FieldScalar &c) const { return swap_xy().eval_x(c); }

MultiPoly MultiPoly::homogeneous_part(int d) const
{
	MultiPoly r(K_);
	for (auto &t : t_)
		if (int(t.i + t.j) == d)
			r.t_.push_back(t);
	return r;
}

MultiPoly MultiPoly::in(Field K) const
{
	if (K == K_)
		return *this;
	MultiPoly r(common_field(K, K_));
	r.t_ = t_;
	for (auto &t : r.t_)
		t.c = t.c.in(r.K_);
	return r;
}

MultiPoly MultiPoly::swap_xy() const
{
	std::vector<Term> r;
	r.reserve(t_.size());
	for (auto &t : t_)
		r.push_back({t.j, t.i, t.c});
	return from_terms(K_, std::move(r));
}

MultiPoly MultiPoly::substitute_affine(const FieldScalar &a, const FieldScalar &b, const FieldScalar &e,
                                       const FieldScalar &c, const FieldScalar &d, const FieldScalar &f) const
{
	Field K = K_;
	for (auto *s : {&a, &b, &e, &c, &d, &f})
		K = common_field(K, s->field());
	MultiPoly X = monomial(a, 1, 0) + monomial(b, 0, 1) + MultiPoly(e);
	MultiPoly Y = monomial(c, 1, 0) + monomial(d, 0, 1) + MultiPoly(f);
	int dx_ = std::max(degree_x(), 0), dy_ = std::max(degree_y(), 0);
	std::vector<MultiPoly> px(dx_ + 1), py(dy_ + 1);
	px[0] = MultiPoly(FieldScalar(K, 1));
	py[0] = px[0];
	for (int k = 1; k <= dx_; k++)
		px[k] = px[k - 1] * X;
	for (int k = 1; k <= dy_; k++)
		py[k] = py[k - 1] * Y;
	// group by power of x to share products
	std::map<uint32_t, MultiPoly> by_i;
	for (auto &t : t_) {
		auto it = by_i.find(t.i);
		if (it == by_i.end())
			it = by_i.emplace(t.i, MultiPoly(K)).first;
		it->second += py[t.j] * t.c;
	}
	MultiPoly r(K);
	for (auto &[i, q] : by_i)
		r += px[i] * q;
	return r;
}

std::string MultiPoly::str() const
{
	if (t_.empty())
		return "0";
	std::ostringstream os;
	bool first = true;
	for (auto &t : t_) {
		std::string m = monomial_str(t.i, t.j);
		FieldScalar c = t.c;
		bool neg = false;
		if (c.is_rational() && c.to_rational() < 0) {
			neg = true;
			c = -c;
		}
		if (first)
			os << (neg ? "-" : "");
		else
			os << (neg ? " - " : " + ");
		first = false;
		std::string cs;
		if (c.is_rational()) {
			Rational q = c.to_rational();
			cs = q.get_den() == 1 ? rational_str(q) : "(" + rational_str(q) + ")";
		} else {
			cs = "(" + c.str() + ")";
		}
		if (m.empty())
			os << (c.is_rational() ? rational_str(c.to_rational()) : cs);
		else if (c.is_one())
			os << m;
		else
			os << cs << "*" << m;
	}
	return os.str();
}

MultiPoly pow(const MultiPoly &p, unsigned e)
{
	MultiPoly r(FieldScalar(p.field(), 1)), b = p;
	while (e) {
		if (e & 1)
			r = r * b;
		e >>= 1;
		if (e)
			b = b * b;
	}
	return r;
}

std::optional<MultiPoly> divide_exact(const MultiPoly &p, const MultiPoly &q)
{
	if (q.is_zero())
		throw AlgebraError("division by zero polynomial");
	Field K = common_field(p.field(), q.field());
	if (p.is_zero())
		return MultiPoly(K);
	if (q.size() == 1) {
		auto &lt = q.leading();
		FieldScalar inv = lt.c.inverse();
		std::vector<MultiPoly::Term> r;
		for (auto &t : p.terms()) {
			if (t.i < lt.i || t.j < lt.j)
				return std::nullopt;
			r.push_back({t.i - lt.i, t.j - lt.j, t.c * inv});
		}
		return MultiPoly::from_terms(K, std::move(r));
	}
	int PX = p.degree_x(), PY = p.degree_y(), QX = q.degree_x(), QY = q.degree_y();
	if (QX > PX || QY > PY || q.total_degree() > p.total_degree())
		return std::nullopt;
	int HX = PX - QX, HY = PY - QY;
	size_t W = PY + 1;
	std::vector<FieldScalar> r((PX + 1) * W, FieldScalar(K));
	std::vector<char> nz((PX + 1) * W, 0);
	for (auto &t : p.terms()) {
		r[t.i * W + t.j] = t.c.in(K);
		nz[t.i * W + t.j] = 1;
	}
	auto &lt = q.leading();
	FieldScalar inv = lt.c.inverse();
	std::vector<MultiPoly::Term> quo;
	int top = p.total_degree();
	for (int deg = top; deg >= 0; deg--) {
		for (int i = std::min(deg, PX); i >= std::max(0, deg - PY); i--) {
			int j = deg - i;
			size_t idx = i * W + j;
			if (!nz[idx] || r[idx].is_zero())
				continue;
			int hi = i - int(lt.i), hj = j - int(lt.j);
			if (hi < 0 || hj < 0 || hi > HX || hj > HY)
				return std::nullopt;
			FieldScalar c = r[idx] * inv;
			for (auto &t : q.terms()) {
				size_t k = (hi + t.i) * W + (hj + t.j);
				r[k] -= c * t.c;
				nz[k] = 1;
			}
			quo.push_back({uint32_t(hi), uint32_t(hj), c});
		}
	}
	return MultiPoly::from_terms(K, std::move(quo));
}

bool divides(const MultiPoly &q, const MultiPoly &p) { return divide_exact(p, q).has_value(); }

FieldScalar normalizing_factor(const MultiPoly &p)
{
	if (p.is_zero())
		return FieldScalar(1);
	FieldScalar inv = p.leading().c.inverse();
	Integer den = 1, num = 0;
	for (auto &t : p.terms()) {
		FieldScalar c = t.c * inv;
		for (auto &q : c.coords()) {
			if (q == 0)
				continue;
			mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
			mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), q.get_num_mpz_t());
		}
	}
	FieldScalar s = inv;
	s.mul_rational(Rational(den, num));
	return s;
}

MultiPoly normalize(const MultiPoly &p)
{
	if (p.is_zero())
		return p;
	return p * normalizing_factor(p);
}

std::vector<UPoly> coeffs_in_y(const MultiPoly &p)
{
	Field K = p.field();
	int dy = p.degree_y();
	std::vector<std::vector<FieldScalar>> c(std::max(dy, -1) + 1);
	int dx = p.degree_x();
	for (auto &v : c)
		v.assign(dx + 1, FieldScalar(K));
	for (auto &t : p.terms())
		c[t.j][t.i] = t.c;
	std::vector<UPoly> out;
	for (auto &v : c)
		out.emplace_back(K, v);
	return out;
}

std::vector<UPoly> coeffs_in_x(const MultiPoly &p) { return coeffs_in_y(p.swap_xy()); }

MultiPoly from_coeffs_in_y(Field K, const std::vector<UPoly> &c)
{
	std::vector<MultiPoly::Term> t;
	for (size_t j = 0; j < c.size(); j++) {
		K = common_field(K, c[j].field());
		for (int i = 0; i <= c[j].degree(); i++)
			if (!c[j].coeffs()[i].is_zero())
				t.push_back({uint32_t(i), uint32_t(j), c[j].coeffs()[i]});
	}
	return MultiPoly::from_terms(K, std::move(t));
}

MultiPoly from_upoly_x(const UPoly &p) { return from_coeffs_in_y(p.field(), {p}); }

MultiPoly from_upoly_y(const UPoly &p) { return from_upoly_x(p).swap_xy(); }

namespace {

MultiPoly mono_xy(Field K, int i, int j) { return MultiPoly::monomial(FieldScalar(K, 1), i, j); }

// p, q not divisible by x or y
MultiPoly gcd_core(const MultiPoly &p, const MultiPoly &q)
{
	Field K = common_field(p.field(), q.field());
	auto cp = coeffs_in_y(p), cq = coeffs_in_y(q);
	UPoly contp(K), contq(K);
	for (auto &u : cp)
		contp = ugcd(contp, u);
	for (auto &u : cq)
		contq = ugcd(contq, u);
	UPoly cont = ugcd(contp, contq);
	if (p.degree_y() == 0 || q.degree_y() == 0)
		return from_upoly_x(cont);
	for (auto &u : cp)
		u = *udivide_exact(u, contp);
	for (auto &u : cq)
		u = *udivide_exact(u, contq);
	MultiPoly pp = from_coeffs_in_y(K, cp), qq = from_coeffs_in_y(K, cq);
	UPoly lp = cp.back(), lq = cq.back();
	UPoly gam = ugcd(lp, lq);
	int bound = gam.degree() + std::min(pp.degree_x(), qq.degree_x());
	int best = 1 << 30;
	std::vector<FieldScalar> xs;
	std::vector<UPoly> gs;
	long n = 0;
	int tries = 0;
	while (tries++ < 40 * (bound + 4)) {
		long cv = (n % 2 == 0) ? n / 2 : -(n + 1) / 2;
		n++;
		FieldScalar c(K, Rational(cv));
		FieldScalar gc = gam.eval(c);
		if (lp.eval(c).is_zero() || lq.eval(c).is_zero())
			continue;
		UPoly g = ugcd(pp.eval_x(c), qq.eval_x(c));
		if (g.degree() == 0)
			return from_upoly_x(cont);
		if (g.degree() < best) {
			best = g.degree();
			xs.clear();
			gs.clear();
		}
		if (g.degree() > best)
			continue;
		xs.push_back(c);
		gs.push_back(g * gc);
		if (int(xs.size()) < bound + 1)
			continue;
		std::vector<UPoly> coef;
		for (int m = 0; m <= best; m++) {
			std::vector<FieldScalar> ys;
			for (auto &gg : gs)
				ys.push_back(gg.coeff(m));
			coef.push_back(uinterpolate(xs, ys));
		}
		UPoly cg(K);
		for (auto &u : coef)
			cg = ugcd(cg, u);
		for (auto &u : coef)
			u = *udivide_exact(u, cg);
		MultiPoly G = from_coeffs_in_y(K, coef);
		if (divides(G, pp) && divides(G, qq))
			return G * from_upoly_x(cont);
	}
	throw AlgebraError("gcd: interpolation did not converge");
}

} // namespace

MultiPoly poly_gcd(const MultiPoly &p, const MultiPoly &q)
{
	Field K = common_field(p.field(), q.field());
	if (p.is_zero())
		return normalize(q.in(K));
	if (q.is_zero())
		return normalize(p.in(K));
	if (p.is_constant() || q.is_constant())
		return MultiPoly(FieldScalar(K, 1));
	int ax = p.min_degree_x(), ay = p.min_degree_y(), bx = q.min_degree_x(), by = q.min_degree_y();
	MultiPoly p1 = *divide_exact(p.in(K), mono_xy(K, ax, ay));
	MultiPoly q1 = *divide_exact(q.in(K), mono_xy(K, bx, by));
	MultiPoly mono = mono_xy(K, std::min(ax, bx), std::min(ay, by));
	MultiPoly g;
	if (p1.is_constant() || q1.is_constant())
		g = MultiPoly(FieldScalar(K, 1));
	else if (p1 == q1)
		g = p1;
	else
		g = gcd_core(p1, q1);
	return normalize(g * mono);
}

MultiPoly squarefree_part(const MultiPoly &p)
{
	if (p.is_constant())
		return normalize(p);
	MultiPoly g = poly_gcd(p, poly_gcd(p.dx(), p.dy()));
	return normalize(*divide_exact(p, g));
}

bool is_squarefree(const MultiPoly &p)
{
	if (p.is_constant())
		return true;
	return poly_gcd(p, poly_gcd(p.dx(), p.dy())).is_constant();
}

long raw_valuation(MultiPoly &p, const MultiPoly &h)
{
	long m = 0;
	while (!p.is_zero()) {
		auto q = divide_exact(p, h);
		if (!q)
			break;
		p = std::move(*q);
		m++;
	}
	return m;
}

Valuation valuation(const MultiPoly &p, const MultiPoly &h)
{
	if (h.is_constant())
		throw AlgebraError("valuation: h must be non-constant");
	if (!is_squarefree(h))
		throw AlgebraError("valuation: h must be square-free");
	if (p.is_zero())
		return Valuation::inf();
	MultiPoly r = p;
	return {false, raw_valuation(r, h)};
}

MultiPoly resultant(const MultiPoly &p, const MultiPoly &q, Var v)
{
	if (p.is_zero() || q.is_zero())
		throw AlgebraError("resultant of zero polynomial");
	if (v == Var::X)
		return resultant(p.swap_xy(), q.swap_xy(), Var::Y).swap_xy();
	Field K = common_field(p.field(), q.field());
	int m = p.degree_y(), n = q.degree_y();
	if (m == 0 && n == 0)
		return MultiPoly(FieldScalar(K, 1));
	if (m == 0)
		return pow(p.in(K), n);
	if (n == 0)
		return pow(q.in(K), m);
	auto cp = coeffs_in_y(p), cq = coeffs_in_y(q);
	int bound = n * std::max(p.degree_x(), 0) + m * std::max(q.degree_x(), 0);
	std::vector<FieldScalar> xs, ys;
	long k = 0;
	while (int(xs.size()) < bound + 1) {
		long cv = (k % 2 == 0) ? k / 2 : -(k + 1) / 2;
		k++;
		FieldScalar c(K, Rational(cv));
		if (cp.back().eval(c).is_zero() || cq.back().eval(c).is_zero())
			continue;
		xs.push_back(c);
		ys.push_back(uresultant(p.eval_x(c), q.eval_x(c)));
	}
	return from_upoly_x(uinterpolate(xs, ys));
}

std::vector<MultiPoly> coprime_base(const std::vector<MultiPoly> &inputs)
{
	std::vector<MultiPoly> base;
	std::vector<MultiPoly> stack;
	for (auto &p : inputs) {
		// peel square-free layers so that repeated factors become separate inputs
		MultiPoly r = p;
		while (!r.is_constant()) {
			MultiPoly s = squarefree_part(r);
			stack.push_back(s);
			r = *divide_exact(r, s);
		}
	}
	while (!stack.empty()) {
		MultiPoly q = normalize(stack.back());
		stack.pop_back();
		if (q.is_constant())
			continue;
		bool split = false;
		for (size_t i = 0; i < base.size(); i++) {
			if (base[i] == q) {
				split = true;
				break;
			}
			MultiPoly g = poly_gcd(base[i], q);
			if (g.is_constant())
				continue;
			MultiPoly f = base[i];
			base.erase(base.begin() + i);
			stack.push_back(g);
			stack.push_back(*divide_exact(f, g));
			stack.push_back(*divide_exact(q, g));
			split = true;
			break;
		}
		if (!split)
			base.push_back(q);
	}
	return base;
}

} // namespace webcurv
