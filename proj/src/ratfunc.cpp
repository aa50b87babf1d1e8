#include "webcurv/ratfunc.hpp"

namespace webcurv {

RatFunc::RatFunc(const MultiPoly &num, const MultiPoly &den)
{
	if (den.is_zero())
		throw AlgebraError("rational function with zero denominator");
	Field K = common_field(num.field(), den.field());
	if (num.is_zero()) {
		num_ = MultiPoly(K);
		den_ = MultiPoly(FieldScalar(K, 1));
		return;
	}
	if (den.is_constant()) {
		num_ = (num * den.leading().c.inverse()).in(K);
		den_ = MultiPoly(FieldScalar(K, 1));
		return;
	}
	MultiPoly g = poly_gcd(num, den);
	num_ = g.is_constant() ? num.in(K) : *divide_exact(num.in(K), g);
	den_ = g.is_constant() ? den.in(K) : *divide_exact(den.in(K), g);
	fix_scalar();
}

RatFunc RatFunc::coprime(const MultiPoly &num, const MultiPoly &den)
{
	if (den.is_zero())
		throw AlgebraError("rational function with zero denominator");
	RatFunc r;
	Field K = common_field(num.field(), den.field());
	r.num_ = num.in(K);
	r.den_ = den.in(K);
	if (r.num_.is_zero())
		r.den_ = MultiPoly(FieldScalar(K, 1));
	r.fix_scalar();
	return r;
}

void RatFunc::fix_scalar()
{
	FieldScalar s = normalizing_factor(den_);
	den_ *= s;
	num_ *= s;
}

RatFunc &RatFunc::operator+=(const RatFunc &o)
{
	if (o.is_zero())
		return *this;
	if (is_zero())
		return *this = o;
	if (den_ == o.den_) {
		*this = RatFunc(num_ + o.num_, den_);
		return *this;
	}
	MultiPoly g = poly_gcd(den_, o.den_);
	MultiPoly a = *divide_exact(o.den_, g); // den * a = lcm
	MultiPoly b = *divide_exact(den_, g);
	*this = RatFunc(num_ * a + o.num_ * b, den_ * a);
	return *this;
}

RatFunc &RatFunc::operator-=(const RatFunc &o) { return *this += -o; }

RatFunc RatFunc::operator-() const
{
	RatFunc r = *this;
	r.num_ = -r.num_;
	return r;
}

RatFunc &RatFunc::operator*=(const RatFunc &o)
{
	if (is_zero() || o.is_zero()) {
		*this = RatFunc(MultiPoly(common_field(field(), o.field())));
		return *this;
	}
	MultiPoly g1 = poly_gcd(num_, o.den_), g2 = poly_gcd(o.num_, den_);
	MultiPoly n1 = *divide_exact(num_, g1), d2 = *divide_exact(o.den_, g1);
	MultiPoly n2 = *divide_exact(o.num_, g2), d1 = *divide_exact(den_, g2);
	*this = coprime(n1 * n2, d1 * d2);
	return *this;
}

RatFunc &RatFunc::operator/=(const RatFunc &o)
{
	if (o.is_zero())
		throw AlgebraError("rational function division by zero");
	return *this *= coprime(o.den_, o.num_);
}

RatFunc pow(const RatFunc &r, long e)
{
	if (e < 0)
		return pow(RatFunc(1) / r, -e);
	return RatFunc::coprime(pow(r.num(), unsigned(e)), pow(r.den(), unsigned(e)));
}

RatFunc RatFunc::dx() const
{
	if (den_.is_constant())
		return RatFunc::coprime(num_.dx(), den_);
	return RatFunc(num_.dx() * den_ - num_ * den_.dx(), den_ * den_);
}

RatFunc RatFunc::dy() const
{
	if (den_.is_constant())
		return RatFunc::coprime(num_.dy(), den_);
	return RatFunc(num_.dy() * den_ - num_ * den_.dy(), den_ * den_);
}

FieldScalar RatFunc::eval(const FieldScalar &x, const FieldScalar &y) const
{
	FieldScalar d = den_.eval(x, y);
	if (d.is_zero())
		throw AlgebraError("evaluation on the polar locus");
	return num_.eval(x, y) / d;
}

RatFunc RatFunc::substitute_affine(const FieldScalar &a, const FieldScalar &b, const FieldScalar &e,
                                   const FieldScalar &c, const FieldScalar &d, const FieldScalar &f) const
{
	return RatFunc(num_.substitute_affine(a, b, e, c, d, f), den_.substitute_affine(a, b, e, c, d, f));
}

RatFunc RatFunc::in(Field K) const { return coprime(num_.in(K), den_.in(K)); }

std::string RatFunc::str() const
{
	if (den_.is_constant() && den_.leading().c.is_one())
		return num_.str();
	return "(" + num_.str() + ")/(" + den_.str() + ")";
}

JetSeries::JetSeries(Field K, FieldScalar x0, FieldScalar y0, int N)
    : K_(K), x0_(std::move(x0)), y0_(std::move(y0)), N_(N), c_(index(0, N + 1), FieldScalar(K))
{
}

JetSeries JetSeries::constant(Field K, const FieldScalar &x0, const FieldScalar &y0, int N, const FieldScalar &c)
{
	JetSeries j(K, x0, y0, N);
	j.at(0, 0) = c.in(K);
	return j;
}

JetSeries &JetSeries::operator+=(const JetSeries &o)
{
	for (size_t k = 0; k < c_.size() && k < o.c_.size(); k++)
		c_[k] += o.c_[k];
	return *this;
}

JetSeries &JetSeries::operator-=(const JetSeries &o)
{
	for (size_t k = 0; k < c_.size() && k < o.c_.size(); k++)
		c_[k] -= o.c_[k];
	return *this;
}

JetSeries JetSeries::operator*(const JetSeries &o) const
{
	int N = std::min(N_, o.N_);
	JetSeries r(common_field(K_, o.K_), x0_, y0_, N);
	for (int d1 = 0; d1 <= N; d1++)
		for (int j1 = 0; j1 <= d1; j1++) {
			const FieldScalar &a = at(d1 - j1, j1);
			if (a.is_zero())
				continue;
			for (int d2 = 0; d1 + d2 <= N; d2++)
				for (int j2 = 0; j2 <= d2; j2++) {
					const FieldScalar &b = o.at(d2 - j2, j2);
					if (!b.is_zero())
						r.at(d1 + d2 - j1 - j2, j1 + j2).addmul(a, b);
				}
		}
	return r;
}

JetSeries JetSeries::operator*(const FieldScalar &s) const
{
	JetSeries r = *this;
	for (auto &c : r.c_)
		c *= s;
	return r;
}

JetSeries JetSeries::inverse() const
{
	const FieldScalar &c0 = at(0, 0);
	if (c0.is_zero())
		throw AlgebraError("jet inverse: vanishing constant term");
	FieldScalar inv = c0.inverse();
	JetSeries r(K_, x0_, y0_, N_);
	r.at(0, 0) = inv;
	// r * this = 1, solve degree by degree
	for (int d = 1; d <= N_; d++)
		for (int j = 0; j <= d; j++) {
			int i = d - j;
			FieldScalar s(K_);
			for (int i1 = 0; i1 <= i; i1++)
				for (int j1 = 0; j1 <= j; j1++) {
					if (i1 == 0 && j1 == 0)
						continue;
					const FieldScalar &a = at(i1, j1);
					if (!a.is_zero())
						s.addmul(a, r.at(i - i1, j - j1));
				}
			r.at(i, j) = -s * inv;
		}
	return r;
}

JetSeries JetSeries::truncate(int M) const
{
	JetSeries r(K_, x0_, y0_, M);
	for (int d = 0; d <= std::min(M, N_); d++)
		for (int j = 0; j <= d; j++)
			r.at(d - j, j) = at(d - j, j);
	return r;
}

JetSeries JetSeries::dX() const
{
	JetSeries r(K_, x0_, y0_, std::max(N_ - 1, 0));
	for (int d = 1; d <= N_; d++)
		for (int j = 0; j < d; j++)
			r.at(d - 1 - j, j) = at(d - j, j) * FieldScalar(long(d - j));
	return r;
}

JetSeries JetSeries::dY() const
{
	JetSeries r(K_, x0_, y0_, std::max(N_ - 1, 0));
	for (int d = 1; d <= N_; d++)
		for (int j = 1; j <= d; j++)
			r.at(d - j, j - 1) = at(d - j, j) * FieldScalar(long(j));
	return r;
}

bool JetSeries::operator==(const JetSeries &o) const
{
	if (N_ != o.N_ || x0_ != o.x0_ || y0_ != o.y0_)
		return false;
	for (size_t k = 0; k < c_.size(); k++)
		if (c_[k] != o.c_[k])
			return false;
	return true;
}

MultiPoly JetSeries::to_poly() const
{
	std::vector<MultiPoly::Term> t;
	for (int d = 0; d <= N_; d++)
		for (int j = 0; j <= d; j++)
			if (!at(d - j, j).is_zero())
				t.push_back({uint32_t(d - j), uint32_t(j), at(d - j, j)});
	return MultiPoly::from_terms(K_, std::move(t));
}

JetSeries poly_jet(const MultiPoly &p, const FieldScalar &x0, const FieldScalar &y0, int N)
{
	Field K = common_field(common_field(p.field(), x0.field()), y0.field());
	MultiPoly s = p.substitute_affine(FieldScalar(K, 1), FieldScalar(K), x0, FieldScalar(K), FieldScalar(K, 1), y0);
	JetSeries j(K, x0, y0, N);
	for (auto &t : s.terms())
		if (int(t.i + t.j) <= N)
			j.at(t.i, t.j) = t.c;
	return j;
}

JetSeries taylor_jet(const RatFunc &r, const FieldScalar &x0, const FieldScalar &y0, int N)
{
	if (r.den().eval(x0, y0).is_zero())
		throw AlgebraError("taylor_jet: base point lies on the polar locus");
	JetSeries n = poly_jet(r.num(), x0, y0, N);
	if (r.den().is_constant())
		return n * r.den().leading().c.inverse();
	return n * poly_jet(r.den(), x0, y0, N).inverse();
}

} // namespace webcurv
