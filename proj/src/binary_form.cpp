#include "webcurv/poly.hpp"
#include "webcurv/linalg.hpp"

#include <sstream>

namespace webcurv {

BinaryForm::BinaryForm(Field K, int n, std::vector<FieldScalar> c) : K_(K), n_(n), c_(std::move(c))
{
	if (int(c_.size()) != n + 1)
		throw AlgebraError("binary form: coefficient count must be degree + 1");
	for (auto &s : c_)
		K_ = common_field(K_, s.field());
	for (auto &s : c_)
		s = s.in(K_);
}

BinaryForm BinaryForm::from_poly(const MultiPoly &p, int n)
{
	std::vector<FieldScalar> c(n + 1, FieldScalar(p.field()));
	for (auto &t : p.terms()) {
		if (int(t.i + t.j) != n)
			throw AlgebraError("binary form: polynomial is not homogeneous of degree " + std::to_string(n));
		c[t.j] = t.c;
	}
	return BinaryForm(p.field(), n, c);
}

BinaryForm BinaryForm::linear(const FieldScalar &a, const FieldScalar &b)
{
	return BinaryForm(common_field(a, b), 1, {a, b});
}

BinaryForm BinaryForm::vanishing_at(const FieldScalar &u, const FieldScalar &v)
{
	return linear(v, -u).normalized();
}

bool BinaryForm::is_zero() const
{
	for (auto &c : c_)
		if (!c.is_zero())
			return false;
	return true;
}

MultiPoly BinaryForm::to_poly() const
{
	std::vector<MultiPoly::Term> t;
	for (int m = 0; m <= n_; m++)
		if (!c_[m].is_zero())
			t.push_back({uint32_t(n_ - m), uint32_t(m), c_[m]});
	return MultiPoly::from_terms(K_, std::move(t));
}

FieldScalar BinaryForm::eval(const FieldScalar &u, const FieldScalar &v) const
{
	Field K = common_field(common_field(K_, u.field()), v.field());
	FieldScalar r(K), pu(K, 1);
	std::vector<FieldScalar> pv(n_ + 1, FieldScalar(K, 1));
	for (int k = 1; k <= n_; k++)
		pv[k] = pv[k - 1] * v;
	for (int m = n_; m >= 0; m--) {
		r += c_[m] * pu * pv[m];
		pu *= u;
	}
	return r;
}

BinaryForm BinaryForm::dx() const
{
	if (n_ == 0)
		return BinaryForm(K_, 0, {FieldScalar(K_)});
	std::vector<FieldScalar> c(n_);
	for (int m = 0; m < n_; m++)
		c[m] = c_[m] * FieldScalar(long(n_ - m));
	return BinaryForm(K_, n_ - 1, c);
}

BinaryForm BinaryForm::dy() const
{
	if (n_ == 0)
		return BinaryForm(K_, 0, {FieldScalar(K_)});
	std::vector<FieldScalar> c(n_);
	for (int m = 1; m <= n_; m++)
		c[m - 1] = c_[m] * FieldScalar(long(m));
	return BinaryForm(K_, n_ - 1, c);
}

BinaryForm BinaryForm::operator*(const BinaryForm &o) const
{
	Field K = common_field(K_, o.K_);
	std::vector<FieldScalar> c(n_ + o.n_ + 1, FieldScalar(K));
	for (int a = 0; a <= n_; a++)
		for (int b = 0; b <= o.n_; b++)
			c[a + b] += c_[a] * o.c_[b];
	return BinaryForm(K, n_ + o.n_, c);
}

BinaryForm BinaryForm::operator*(const FieldScalar &s) const
{
	std::vector<FieldScalar> c = c_;
	for (auto &x : c)
		x *= s;
	return BinaryForm(common_field(K_, s.field()), n_, c);
}

BinaryForm BinaryForm::operator+(const BinaryForm &o) const
{
	if (n_ != o.n_)
		throw AlgebraError("binary form: degree mismatch in sum");
	std::vector<FieldScalar> c = c_;
	for (int m = 0; m <= n_; m++)
		c[m] += o.c_[m];
	return BinaryForm(common_field(K_, o.K_), n_, c);
}

BinaryForm BinaryForm::operator-(const BinaryForm &o) const { return *this + o * FieldScalar(-1); }

bool BinaryForm::operator==(const BinaryForm &o) const
{
	if (n_ != o.n_)
		return false;
	for (int m = 0; m <= n_; m++)
		if (c_[m] != o.c_[m])
			return false;
	return true;
}

BinaryForm BinaryForm::normalized() const
{
	for (int m = 0; m <= n_; m++)
		if (!c_[m].is_zero())
			return *this * c_[m].inverse();
	return *this;
}

bool BinaryForm::proportional(const BinaryForm &o) const
{
	return n_ == o.n_ && normalized() == o.normalized();
}

BinaryForm BinaryForm::in(Field K) const { return BinaryForm(common_field(K, K_), n_, c_); }

BinaryForm BinaryForm::substitute(const FieldScalar &a, const FieldScalar &b, const FieldScalar &c,
                                  const FieldScalar &d) const
{
	FieldScalar z(0);
	MultiPoly p = to_poly().substitute_affine(a, b, z, c, d, z);
	if (p.is_zero()) {
		Field K = common_field(common_field(K_, a.field()), common_field(b.field(), common_field(c.field(), d.field())));
		return BinaryForm(K, n_, std::vector<FieldScalar>(n_ + 1, FieldScalar(K)));
	}
	return from_poly(p, n_);
}

UPoly BinaryForm::dehomogenize() const
{
	std::vector<FieldScalar> c(n_ + 1);
	for (int m = 0; m <= n_; m++)
		c[n_ - m] = c_[m];
	return UPoly(K_, c);
}

std::string BinaryForm::str() const { return to_poly().str(); }

FieldScalar resultant(const BinaryForm &f, const BinaryForm &g)
{
	if (f.is_zero() || g.is_zero())
		throw AlgebraError("resultant of zero form");
	Field K = common_field(f.field(), g.field());
	int m = f.degree(), n = g.degree();
	if (m == 0 && n == 0)
		return FieldScalar(K, 1);
	Matrix S(K, m + n, m + n);
	for (int r = 0; r < n; r++)
		for (int k = 0; k <= m; k++)
			S(r, r + k) = f.coeff(k);
	for (int r = 0; r < m; r++)
		for (int k = 0; k <= n; k++)
			S(n + r, r + k) = g.coeff(k);
	return determinant(S);
}

LinearFactorization linear_factors(const BinaryForm &f)
{
	if (f.is_zero())
		throw AlgebraError("linear_factors of zero form");
	Field K = f.field();
	LinearFactorization out;
	int n = f.degree();
	// y^e divides f when the leading coefficients vanish
	int e = 0;
	while (e <= n && f.coeff(e).is_zero())
		e++;
	if (e > 0)
		out.factors.push_back({BinaryForm::linear(FieldScalar(K), FieldScalar(K, 1)), e});
	UPoly g = f.dehomogenize(); // f(t,1), degree n - e... in t = x/y
	UPoly rest = g;
	for (auto &[r, m] : roots_in_field(g)) {
		out.factors.push_back({BinaryForm::linear(FieldScalar(K, 1), -r), m});
		UPoly lin(K, {-r, FieldScalar(K, 1)});
		for (int k = 0; k < m; k++)
			rest = *udivide_exact(rest, lin);
	}
	// rest(t) of degree n - e - sum m; homogenize with respect to y
	int dr = rest.degree();
	std::vector<FieldScalar> rc(dr + 1);
	for (int k = 0; k <= dr; k++)
		rc[dr - k] = rest.coeff(k);
	BinaryForm res(K, dr, rc);
	out.unit = res.coeff(0);
	out.residual = res.normalized();
	return out;
}

P1Point P1Point::make(const FieldScalar &u, const FieldScalar &v)
{
	if (v.is_zero()) {
		if (u.is_zero())
			throw AlgebraError("P1 point [0:0]");
		Field K = common_field(u, v);
		return {FieldScalar(K, 1), FieldScalar(K)};
	}
	return {u / v, FieldScalar(common_field(u, v), 1)};
}

bool P1Point::operator==(const P1Point &o) const { return u == o.u && v == o.v; }

std::string P1Point::str() const { return "[" + u.str() + ":" + v.str() + "]"; }

P1Point root_of_linear(const BinaryForm &l)
{
	if (l.degree() != 1)
		throw AlgebraError("root_of_linear: degree must be 1");
	return P1Point::make(-l.coeff(1), l.coeff(0));
}

} // namespace webcurv
