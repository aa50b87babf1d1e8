#include "webcurv/field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace webcurv {

namespace {

using QPoly = std::vector<Rational>; // low to high

void trim(QPoly &p)
{
	while (!p.empty() && p.back() == 0)
		p.pop_back();
}

// quotient and remainder of a by b over Q
void qdivmod(QPoly a, const QPoly &b, QPoly &q, QPoly &r)
{
	trim(a);
	q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
	while (a.size() >= b.size() && !a.empty()) {
		size_t s = a.size() - b.size();
		Rational c = a.back() / b.back();
		q[s] = c;
		for (size_t i = 0; i < b.size(); i++)
			a[s + i] -= c * b[i];
		a.pop_back();
		trim(a);
	}
	r = a;
}

QPoly qmul(const QPoly &a, const QPoly &b)
{
	if (a.empty() || b.empty())
		return {};
	QPoly c(a.size() + b.size() - 1, Rational(0));
	for (size_t i = 0; i < a.size(); i++)
		for (size_t j = 0; j < b.size(); j++)
			c[i + j] += a[i] * b[j];
	return c;
}

QPoly qsub(QPoly a, const QPoly &b)
{
	if (a.size() < b.size())
		a.resize(b.size(), Rational(0));
	for (size_t i = 0; i < b.size(); i++)
		a[i] -= b[i];
	trim(a);
	return a;
}

struct Registry
{
	std::mutex m;
	std::map<std::string, std::unique_ptr<NumberField>> by_label;
};

Registry &registry()
{
	static Registry r;
	return r;
}

std::unique_ptr<NumberField> build(const std::string &label, const std::string &symbol, std::vector<Rational> minpoly)
{
	trim(minpoly);
	if (minpoly.size() < 2)
		throw AlgebraError("minimal polynomial must have degree >= 1");
	Rational lc = minpoly.back();
	for (auto &c : minpoly)
		c /= lc;
	auto K = std::make_unique<NumberField>();
	K->label = label;
	K->symbol = symbol;
	K->minpoly = minpoly;
	int d = K->degree();
	K->powers.assign(std::max(1, 2 * d - 1), std::vector<Rational>(d, Rational(0)));
	if (d == 1) {
		K->powers[0][0] = 1;
		return K;
	}
	std::vector<Rational> cur(d, Rational(0));
	cur[0] = 1;
	for (int m = 0; m <= 2 * d - 2; m++) {
		K->powers[m] = cur;
		// multiply by alpha
		Rational top = cur[d - 1];
		for (int k = d - 1; k > 0; k--)
			cur[k] = cur[k - 1] - top * minpoly[k];
		cur[0] = -top * minpoly[0];
	}
	return K;
}

QPoly cyclotomic_poly(int k)
{
	QPoly num(k + 1, Rational(0));
	num[0] = -1;
	num[k] = 1;
	for (int d = 1; d < k; d++) {
		if (k % d)
			continue;
		QPoly q, r;
		qdivmod(num, cyclotomic_poly(d), q, r);
		num = q;
	}
	return num;
}

} // namespace

Field make_field(const std::string &label, const std::string &symbol, std::vector<Rational> minpoly)
{
	auto &R = registry();
	std::lock_guard<std::mutex> lock(R.m);
	auto it = R.by_label.find(label);
	if (it != R.by_label.end()) {
		QPoly mp = minpoly;
		trim(mp);
		Rational lc = mp.empty() ? Rational(1) : mp.back();
		for (auto &c : mp)
			c /= lc;
		if (mp != it->second->minpoly)
			throw AlgebraError("field label " + label + " already bound to another minimal polynomial");
		return it->second.get();
	}
	auto K = build(label, symbol, std::move(minpoly));
	Field f = K.get();
	R.by_label.emplace(label, std::move(K));
	return f;
}

Field rationals()
{
	static Field Q = make_field("Q", "", {Rational(0), Rational(1)});
	return Q;
}

Field gaussian() { return make_field("Q(i)", "i", {Rational(1), Rational(0), Rational(1)}); }
Field eisenstein() { return make_field("Q(xi3)", "xi3", {Rational(1), Rational(1), Rational(1)}); }

Field cyclotomic(int k)
{
	if (k < 1)
		throw AlgebraError("cyclotomic field needs k >= 1");
	if (k <= 2)
		return rationals();
	if (k == 3)
		return eisenstein();
	if (k == 4)
		return gaussian();
	if (k % 4 == 2)
		return cyclotomic(k / 2);
	std::string s = "xi" + std::to_string(k);
	return make_field("Q(" + s + ")", s, cyclotomic_poly(k));
}

Field find_field(const std::string &label)
{
	auto &R = registry();
	std::lock_guard<std::mutex> lock(R.m);
	auto it = R.by_label.find(label);
	return it == R.by_label.end() ? nullptr : it->second.get();
}

FieldScalar root_of_unity(int k, long e)
{
	e %= k;
	if (e < 0)
		e += k;
	if (k <= 2)
		return FieldScalar(e == 0 ? 1 : -1);
	if (k % 4 == 2) {
		// xi_{2m} = -xi_m^((m+1)/2) for odd m
		int m = k / 2;
		FieldScalar z = -root_of_unity(m, (m + 1) / 2);
		return z.pow(e);
	}
	return FieldScalar::generator(cyclotomic(k)).pow(e);
}

Field common_field(Field a, Field b)
{
	if (a == b || b->is_rational())
		return a;
	if (a->is_rational())
		return b;
	throw AlgebraError("field mismatch: " + a->label + " vs " + b->label);
}

Field common_field(const FieldScalar &a, const FieldScalar &b) { return common_field(a.K_, b.K_); }

FieldScalar::FieldScalar(Field K, Coords c) : K_(K), c_(std::move(c))
{
	if (int(c_.size()) != K->degree())
		c_.resize(K->degree(), Rational(0));
}

FieldScalar FieldScalar::generator(Field K)
{
	FieldScalar s(K);
	if (K->degree() == 1)
		s.c_[0] = -K->minpoly[0];
	else
		s.c_[1] = 1;
	return s;
}

bool FieldScalar::is_zero() const
{
	for (auto &c : c_)
		if (c != 0)
			return false;
	return true;
}

bool FieldScalar::is_one() const { return c_[0] == 1 && is_rational(); }

bool FieldScalar::is_rational() const
{
	for (size_t k = 1; k < c_.size(); k++)
		if (c_[k] != 0)
			return false;
	return true;
}

Rational FieldScalar::to_rational() const
{
	if (!is_rational())
		throw AlgebraError("scalar is not rational: " + str());
	return c_[0];
}

FieldScalar FieldScalar::in(Field K) const
{
	if (K == K_)
		return *this;
	if (!K_->is_rational())
		throw AlgebraError("cannot move scalar from " + K_->label + " to " + K->label);
	return FieldScalar(K, c_[0]);
}

FieldScalar &FieldScalar::operator+=(const FieldScalar &o)
{
	if (o.K_ == K_) {
		for (size_t k = 0; k < c_.size(); k++)
			c_[k] += o.c_[k];
	} else if (o.K_->is_rational()) {
		c_[0] += o.c_[0];
	} else {
		*this = in(common_field(K_, o.K_));
		for (size_t k = 0; k < c_.size(); k++)
			c_[k] += o.c_[k];
	}
	return *this;
}

FieldScalar &FieldScalar::operator-=(const FieldScalar &o)
{
	if (o.K_ == K_) {
		for (size_t k = 0; k < c_.size(); k++)
			c_[k] -= o.c_[k];
	} else if (o.K_->is_rational()) {
		c_[0] -= o.c_[0];
	} else {
		*this = in(common_field(K_, o.K_));
		for (size_t k = 0; k < c_.size(); k++)
			c_[k] -= o.c_[k];
	}
	return *this;
}

FieldScalar FieldScalar::operator-() const
{
	FieldScalar r = *this;
	for (auto &c : r.c_)
		c = -c;
	return r;
}

void FieldScalar::mul_rational(const Rational &q)
{
	for (auto &c : c_)
		c *= q;
}

FieldScalar &FieldScalar::operator*=(const FieldScalar &o)
{
	if (o.K_->is_rational()) {
		mul_rational(o.c_[0]);
		return *this;
	}
	if (K_->is_rational()) {
		Rational q = c_[0];
		*this = o;
		mul_rational(q);
		return *this;
	}
	common_field(K_, o.K_);
	int d = K_->degree();
	Rational prod[16];
	std::vector<Rational> big;
	Rational *s = prod;
	if (2 * d - 1 > 16) {
		big.assign(2 * d - 1, Rational(0));
		s = big.data();
	}
	for (int i = 0; i < 2 * d - 1; i++)
		s[i] = 0;
	for (int i = 0; i < d; i++) {
		if (c_[i] == 0)
			continue;
		for (int j = 0; j < d; j++)
			if (o.c_[j] != 0)
				s[i + j] += c_[i] * o.c_[j];
	}
	for (int k = 0; k < d; k++)
		c_[k] = s[k];
	for (int m = d; m < 2 * d - 1; m++) {
		if (s[m] == 0)
			continue;
		auto &pw = K_->powers[m];
		for (int k = 0; k < d; k++)
			if (pw[k] != 0)
				c_[k] += s[m] * pw[k];
	}
	return *this;
}

void FieldScalar::addmul(const FieldScalar &a, const FieldScalar &b)
{
	if (K_->is_rational() && a.K_->is_rational() && b.K_->is_rational()) {
		c_[0] += a.c_[0] * b.c_[0];
		return;
	}
	*this += a * b;
}

FieldScalar FieldScalar::inverse() const
{
	if (is_zero())
		throw AlgebraError("division by zero in " + K_->label);
	if (K_->is_rational())
		return FieldScalar(K_, 1 / c_[0]);
	// extended Euclid: find u with u*a = 1 mod m
	QPoly a(c_.begin(), c_.end());
	trim(a);
	QPoly m = K_->minpoly;
	QPoly r0 = m, r1 = a, s0 = {}, s1 = {Rational(1)};
	while (!(r1.size() == 1)) {
		QPoly q, r;
		qdivmod(r0, r1, q, r);
		QPoly s2 = qsub(s0, qmul(q, s1));
		r0 = r1;
		r1 = r;
		s0 = s1;
		s1 = s2;
		if (r1.empty())
			throw AlgebraError("minimal polynomial of " + K_->label + " is reducible");
	}
	FieldScalar u(K_);
	for (size_t k = 0; k < s1.size() && k < u.c_.size(); k++)
		u.c_[k] = s1[k] / r1[0];
	if (s1.size() > u.c_.size()) {
		QPoly q, r;
		qdivmod(s1, m, q, r);
		for (size_t k = 0; k < u.c_.size(); k++)
			u.c_[k] = k < r.size() ? r[k] / r1[0] : Rational(0);
	}
	return u;
}

FieldScalar &FieldScalar::operator/=(const FieldScalar &o)
{
	if (o.K_->is_rational()) {
		if (o.c_[0] == 0)
			throw AlgebraError("division by zero");
		mul_rational(1 / o.c_[0]);
		return *this;
	}
	return *this *= o.inverse();
}

FieldScalar FieldScalar::pow(long e) const
{
	if (e < 0)
		return inverse().pow(-e);
	FieldScalar r(K_, Rational(1)), b = *this;
	while (e) {
		if (e & 1)
			r *= b;
		e >>= 1;
		if (e)
			b *= b;
	}
	return r;
}

bool FieldScalar::operator==(const FieldScalar &o) const
{
	if (K_ == o.K_)
		return c_ == o.c_;
	if (o.K_->is_rational())
		return is_rational() && c_[0] == o.c_[0];
	if (K_->is_rational())
		return o.is_rational() && c_[0] == o.c_[0];
	return false;
}

Integer FieldScalar::denominator() const
{
	Integer l = 1;
	for (auto &c : c_)
		mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
	return l;
}

int FieldScalar::compare(const FieldScalar &o) const
{
	size_t n = std::max(c_.size(), o.c_.size());
	for (size_t k = 0; k < n; k++) {
		Rational a = k < c_.size() ? c_[k] : Rational(0);
		Rational b = k < o.c_.size() ? o.c_[k] : Rational(0);
		int c = cmp(a, b);
		if (c)
			return c < 0 ? -1 : 1;
	}
	return 0;
}

std::string rational_str(const Rational &q)
{
	return q.get_str();
}

Rational parse_rational(const std::string &s)
{
	Rational q(s);
	q.canonicalize();
	return q;
}

std::string FieldScalar::str() const
{
	if (is_rational())
		return rational_str(c_[0]);
	std::ostringstream os;
	bool first = true;
	for (int k = int(c_.size()) - 1; k >= 0; k--) {
		const Rational &c = c_[k];
		if (c == 0)
			continue;
		bool neg = c < 0;
		Rational a = neg ? Rational(-c) : c;
		if (first)
			os << (neg ? "-" : "");
		else
			os << (neg ? " - " : " + ");
		first = false;
		std::string sym = k == 0 ? "" : (k == 1 ? K_->symbol : K_->symbol + "^" + std::to_string(k));
		if (k == 0)
			os << rational_str(a);
		else if (a == 1)
			os << sym;
		else if (a.get_den() == 1)
			os << rational_str(a) << "*" << sym;
		else
			os << "(" << rational_str(a) << ")*" << sym;
	}
	return os.str();
}

size_t FieldScalar::hash() const
{
	size_t h = 1469598103934665603ull;
	for (auto &c : c_) {
		h ^= mpz_get_ui(c.get_num_mpz_t()) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
		h ^= mpz_get_ui(c.get_den_mpz_t()) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
	}
	return h;
}

std::ostream &operator<<(std::ostream &os, const FieldScalar &s) { return os << s.str(); }

} // namespace webcurv
