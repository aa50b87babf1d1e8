#include "webcurv/poly.hpp"
#include "webcurv/linalg.hpp"

#include <sstream>

namespace webcurv {

UPoly::UPoly(Field K, std::vector<FieldScalar> c) : K_(K), c_(std::move(c))
{
	for (auto &s : c_)
		K_ = common_field(K_, s.field());
	for (auto &s : c_)
		s = s.in(K_);
	trim();
}

UPoly UPoly::constant(const FieldScalar &c) { return UPoly(c.field(), {c}); }

UPoly UPoly::variable(Field K) { return UPoly(K, {FieldScalar(K), FieldScalar(K, 1)}); }

void UPoly::trim()
{
	while (!c_.empty() && c_.back().is_zero())
		c_.pop_back();
}

FieldScalar UPoly::coeff(int k) const
{
	if (k < 0 || k >= int(c_.size()))
		return FieldScalar(K_);
	return c_[k];
}

FieldScalar UPoly::eval(const FieldScalar &t) const
{
	FieldScalar r(common_field(K_, t.field()));
	for (int k = degree(); k >= 0; k--) {
		r *= t;
		r += c_[k];
	}
	return r;
}

UPoly UPoly::derivative() const
{
	std::vector<FieldScalar> d;
	for (size_t k = 1; k < c_.size(); k++)
		d.push_back(c_[k] * FieldScalar(long(k)));
	return UPoly(K_, d);
}

UPoly UPoly::monic() const
{
	if (is_zero())
		return *this;
	UPoly r = *this;
	FieldScalar inv = lc().inverse();
	for (auto &c : r.c_)
		c *= inv;
	return r;
}

UPoly &UPoly::operator+=(const UPoly &o)
{
	K_ = common_field(K_, o.K_);
	if (c_.size() < o.c_.size())
		c_.resize(o.c_.size(), FieldScalar(K_));
	for (size_t k = 0; k < o.c_.size(); k++)
		c_[k] += o.c_[k];
	trim();
	return *this;
}

UPoly &UPoly::operator-=(const UPoly &o)
{
	K_ = common_field(K_, o.K_);
	if (c_.size() < o.c_.size())
		c_.resize(o.c_.size(), FieldScalar(K_));
	for (size_t k = 0; k < o.c_.size(); k++)
		c_[k] -= o.c_[k];
	trim();
	return *this;
}

UPoly &UPoly::operator*=(const UPoly &o)
{
	Field K = common_field(K_, o.K_);
	if (is_zero() || o.is_zero()) {
		c_.clear();
		K_ = K;
		return *this;
	}
	std::vector<FieldScalar> r(c_.size() + o.c_.size() - 1, FieldScalar(K));
	for (size_t i = 0; i < c_.size(); i++) {
		if (c_[i].is_zero())
			continue;
		for (size_t j = 0; j < o.c_.size(); j++)
			r[i + j].addmul(c_[i], o.c_[j]);
	}
	K_ = K;
	c_ = std::move(r);
	for (auto &s : c_)
		s = s.in(K_);
	trim();
	return *this;
}

UPoly &UPoly::operator*=(const FieldScalar &s)
{
	K_ = common_field(K_, s.field());
	for (auto &c : c_)
		c = (c * s).in(K_);
	trim();
	return *this;
}

UPoly UPoly::operator-() const
{
	UPoly r = *this;
	for (auto &c : r.c_)
		c = -c;
	return r;
}

bool UPoly::operator==(const UPoly &o) const
{
	if (c_.size() != o.c_.size())
		return false;
	for (size_t k = 0; k < c_.size(); k++)
		if (c_[k] != o.c_[k])
			return false;
	return true;
}

std::string UPoly::str(const std::string &var) const
{
	if (is_zero())
		return "0";
	std::ostringstream os;
	bool first = true;
	for (int k = degree(); k >= 0; k--) {
		if (c_[k].is_zero())
			continue;
		if (!first)
			os << " + ";
		first = false;
		os << "(" << c_[k].str() << ")";
		if (k > 0)
			os << "*" << var << (k > 1 ? "^" + std::to_string(k) : "");
	}
	return os.str();
}

void udivmod(const UPoly &a, const UPoly &b, UPoly &q, UPoly &r)
{
	if (b.is_zero())
		throw AlgebraError("polynomial division by zero");
	Field K = common_field(a.field(), b.field());
	r = a;
	r.K_ = K;
	for (auto &c : r.c_)
		c = c.in(K);
	int db = b.degree();
	std::vector<FieldScalar> qc(std::max(0, r.degree() - db + 1), FieldScalar(K));
	FieldScalar inv = b.lc().inverse();
	while (!r.is_zero() && r.degree() >= db) {
		int s = r.degree() - db;
		FieldScalar c = r.lc() * inv;
		qc[s] = c;
		for (int i = 0; i <= db; i++)
			r.c_[s + i] -= c * b.c_[i];
		r.c_.pop_back();
		r.trim();
	}
	q = UPoly(K, qc);
}

UPoly urem(const UPoly &a, const UPoly &b)
{
	UPoly q, r;
	udivmod(a, b, q, r);
	return r;
}

std::optional<UPoly> udivide_exact(const UPoly &a, const UPoly &b)
{
	UPoly q, r;
	udivmod(a, b, q, r);
	if (!r.is_zero())
		return std::nullopt;
	return q;
}

UPoly ugcd(UPoly a, UPoly b)
{
	while (!b.is_zero()) {
		UPoly r = urem(a, b).monic();
		a = std::move(b);
		b = std::move(r);
	}
	return a.monic();
}

UPoly usquarefree(const UPoly &a)
{
	if (a.degree() <= 0)
		return a.monic();
	UPoly g = ugcd(a, a.derivative());
	return udivide_exact(a, g)->monic();
}

std::vector<UPoly> usquarefree_decomposition(const UPoly &f)
{
	std::vector<UPoly> out;
	if (f.degree() <= 0)
		return out;
	UPoly a = f.monic();
	UPoly b = a.derivative();
	UPoly c = ugcd(a, b);
	UPoly w = *udivide_exact(a, c);
	UPoly y = *udivide_exact(b, c);
	UPoly z = y - w.derivative();
	while (w.degree() > 0) {
		UPoly g = ugcd(w, z);
		out.push_back(g);
		w = *udivide_exact(w, g);
		y = *udivide_exact(z, g);
		z = y - w.derivative();
	}
	while (!out.empty() && out.back().degree() == 0)
		out.pop_back();
	return out;
}

FieldScalar uresultant(const UPoly &a, const UPoly &b)
{
	if (a.is_zero() || b.is_zero())
		throw AlgebraError("resultant of zero polynomial");
	Field K = common_field(a.field(), b.field());
	int m = a.degree(), n = b.degree();
	if (m == 0)
		return a.lc().pow(n).in(K);
	if (n == 0)
		return b.lc().pow(m).in(K);
	int N = m + n;
	Matrix S(K, N, N);
	for (int r = 0; r < n; r++)
		for (int k = 0; k <= m; k++)
			S(r, r + k) = a.coeff(m - k);
	for (int r = 0; r < m; r++)
		for (int k = 0; k <= n; k++)
			S(n + r, r + k) = b.coeff(n - k);
	return determinant(S);
}

UPoly uinterpolate(const std::vector<FieldScalar> &xs, const std::vector<FieldScalar> &ys)
{
	size_t n = xs.size();
	Field K = rationals();
	for (auto &y : ys)
		K = common_field(K, y.field());
	for (auto &x : xs)
		K = common_field(K, x.field());
	std::vector<FieldScalar> dd(ys.begin(), ys.end());
	for (size_t j = 1; j < n; j++)
		for (size_t i = n - 1; i >= j; i--) {
			dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
			if (i == j)
				break;
		}
	UPoly r(K);
	for (size_t k = n; k-- > 0;) {
		r *= UPoly(K, {-xs[k], FieldScalar(K, 1)});
		r += UPoly::constant(dd[k].in(K));
	}
	return r;
}

} // namespace webcurv
