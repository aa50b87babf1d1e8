#include "webcurv/numeric.hpp"
#include "webcurv/linalg.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <map>
#include <mutex>

namespace webcurv::num {

namespace {

Real eps_real() { return Real(1) / pow(Real(10), 50); }

Real argument(const Complex &z)
{
	Real a = atan2(z.imag(), z.real());
	if (a < -eps_real())
		a += 2 * boost::math::constants::pi<Real>();
	if (a < 0)
		a = 0;
	return a;
}

struct ConjCache
{
	std::mutex m;
	std::map<Field, std::vector<Complex>> roots;
};

ConjCache &conj_cache()
{
	static ConjCache c;
	return c;
}

} // namespace

Complex to_complex(const Rational &q)
{
	Real n(q.get_num().get_str()), d(q.get_den().get_str());
	return Complex(n / d, Real(0));
}

std::vector<Complex> polynomial_roots(const std::vector<Complex> &coeffs)
{
	int n = int(coeffs.size()) - 1;
	std::vector<Complex> roots;
	if (n <= 0)
		return roots;
	std::vector<Complex> a = coeffs;
	for (auto &c : a)
		c /= coeffs.back();
	if (n == 1)
		return {-a[0]};
	// Cauchy bound for the initial circle
	Real R = 0;
	for (int k = 0; k < n; k++)
		R = std::max(R, Real(abs(a[k])));
	R += 1;
	Real r0 = R / 2;
	Real two_pi = 2 * boost::math::constants::pi<Real>();
	for (int k = 0; k < n; k++) {
		Real th = two_pi * k / n + Real(0.4);
		roots.push_back(Complex(r0 * cos(th), r0 * sin(th)));
	}
	auto eval = [&](const Complex &z, Complex &p, Complex &dp) {
		p = a[n];
		dp = 0;
		for (int k = n - 1; k >= 0; k--) {
			dp = dp * z + p;
			p = p * z + a[k];
		}
	};
	Real tol = pow(Real(10), -55);
	for (int it = 0; it < 2000; it++) {
		Real maxstep = 0;
		for (int i = 0; i < n; i++) {
			Complex p, dp;
			eval(roots[i], p, dp);
			if (abs(p) == 0)
				continue;
			Complex ratio = p / dp;
			Complex s = 0;
			for (int j = 0; j < n; j++)
				if (j != i)
					s += Complex(1) / (roots[i] - roots[j]);
			Complex w = ratio / (Complex(1) - ratio * s);
			roots[i] -= w;
			maxstep = std::max(maxstep, Real(abs(w)) / (1 + Real(abs(roots[i]))));
		}
		if (maxstep < tol)
			break;
	}
	return roots;
}

std::vector<Complex> conjugates(Field K)
{
	auto &C = conj_cache();
	{
		std::lock_guard<std::mutex> lock(C.m);
		auto it = C.roots.find(K);
		if (it != C.roots.end())
			return it->second;
	}
	std::vector<Complex> co;
	for (auto &q : K->minpoly)
		co.push_back(to_complex(q));
	auto r = polynomial_roots(co);
	std::stable_sort(r.begin(), r.end(), [](const Complex &a, const Complex &b) { return argument(a) < argument(b); });
	std::lock_guard<std::mutex> lock(C.m);
	C.roots[K] = r;
	return r;
}

Complex generator_value(Field K) { return conjugates(K)[0]; }

Complex embed(const FieldScalar &s, const Complex &alpha)
{
	Complex r = 0;
	auto &c = s.coords();
	for (int k = int(c.size()) - 1; k >= 0; k--)
		r = r * alpha + to_complex(c[k]);
	return r;
}

Complex embed(const FieldScalar &s)
{
	if (s.field()->is_rational())
		return to_complex(s.coord(0));
	return embed(s, generator_value(s.field()));
}

std::complex<double> to_double(const FieldScalar &s)
{
	Complex z = embed(s);
	return {z.real().convert_to<double>(), z.imag().convert_to<double>()};
}

bool recognize_rational(const Real &v, const Real &tol, Rational &out)
{
	// continued fraction convergents
	Real x = v;
	Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;
	for (int it = 0; it < 200; it++) {
		Real fl = floor(x);
		Integer a(fl.convert_to<boost::multiprecision::cpp_int>().str());
		Integer p2 = a * p1 + p0, q2 = a * q1 + q0;
		p0 = p1;
		q0 = q1;
		p1 = p2;
		q1 = q2;
		Rational cand(p1, q1);
		cand.canonicalize();
		Real approx = Real(p1.get_str()) / Real(q1.get_str());
		if (abs(approx - v) <= tol) {
			out = cand;
			return true;
		}
		if (q1 > Integer("1000000000000000000000000"))
			return false;
		Real frac = x - fl;
		if (frac == 0)
			return false;
		x = 1 / frac;
	}
	return false;
}

} // namespace webcurv::num

namespace webcurv {

using namespace num;

namespace {

std::vector<Complex> embedded_coeffs(const UPoly &f, const Complex &alpha)
{
	std::vector<Complex> c;
	for (auto &s : f.coeffs())
		c.push_back(embed(s, alpha));
	return c;
}

} // namespace

std::vector<std::pair<FieldScalar, int>> roots_in_field(const UPoly &f)
{
	std::vector<std::pair<FieldScalar, int>> out;
	if (f.is_zero())
		throw AlgebraError("roots of zero polynomial");
	if (f.degree() <= 0)
		return out;
	Field K = f.field();
	int d = K->degree();
	UPoly g = usquarefree(f);
	std::vector<FieldScalar> found;
	auto accept = [&](const FieldScalar &r) {
		if (!g.eval(r).is_zero())
			return;
		for (auto &x : found)
			if (x == r)
				return;
		found.push_back(r);
	};
	if (g.degree() == 1) {
		accept(-g.coeff(0) / g.coeff(1));
	} else if (d == 1) {
		std::vector<Complex> co;
		for (auto &s : g.coeffs())
			co.push_back(to_complex(s.coord(0)));
		Real tol = pow(Real(10), -40);
		for (auto &z : polynomial_roots(co)) {
			if (abs(z.imag()) > pow(Real(10), -30))
				continue;
			Rational q;
			if (recognize_rational(z.real(), tol * (1 + abs(z.real())), q))
				accept(FieldScalar(q));
		}
	} else {
		// one embedding per real place or conjugate pair until d real equations are available
		auto conj = conjugates(K);
		struct Place
		{
			Complex alpha;
			bool real;
		};
		std::vector<Place> places;
		int eqs = 0;
		std::vector<bool> used(conj.size(), false);
		Real small = pow(Real(10), -40);
		for (size_t k = 0; k < conj.size() && eqs < d; k++) {
			if (used[k])
				continue;
			bool real = abs(conj[k].imag()) < small;
			used[k] = true;
			if (!real)
				for (size_t m = k + 1; m < conj.size(); m++)
					if (!used[m] && abs(conj[m] - Complex(conj[k].real(), -conj[k].imag())) < small) {
						used[m] = true;
						break;
					}
			places.push_back({conj[k], real});
			eqs += real ? 1 : 2;
		}
		std::vector<std::vector<Complex>> cand;
		for (auto &pl : places)
			cand.push_back(polynomial_roots(embedded_coeffs(g, pl.alpha)));
		// real linear system rows: sum_k c_k Re/Im(alpha^k) = Re/Im(z)
		std::vector<std::vector<Real>> A;
		for (auto &pl : places) {
			std::vector<Real> re(d), im(d);
			Complex p = 1;
			for (int k = 0; k < d; k++) {
				re[k] = p.real();
				im[k] = p.imag();
				p *= pl.alpha;
			}
			A.push_back(re);
			if (!pl.real)
				A.push_back(im);
		}
		std::vector<size_t> idx(places.size(), 0);
		Real tol = pow(Real(10), -35);
		while (true) {
			std::vector<Real> rhs;
			bool ok = true;
			for (size_t p = 0; p < places.size(); p++) {
				const Complex &z = cand[p][idx[p]];
				rhs.push_back(z.real());
				if (!places[p].real)
					rhs.push_back(z.imag());
				else if (abs(z.imag()) > pow(Real(10), -30))
					ok = false;
			}
			if (ok) {
				// Gaussian elimination with partial pivoting
				int n = d;
				std::vector<std::vector<Real>> M = A;
				std::vector<Real> b = rhs;
				for (int c = 0; c < n; c++) {
					int piv = c;
					for (int r = c + 1; r < n; r++)
						if (abs(M[r][c]) > abs(M[piv][c]))
							piv = r;
					std::swap(M[c], M[piv]);
					std::swap(b[c], b[piv]);
					for (int r = c + 1; r < n; r++) {
						Real f = M[r][c] / M[c][c];
						for (int k = c; k < n; k++)
							M[r][k] -= f * M[c][k];
						b[r] -= f * b[c];
					}
				}
				std::vector<Real> sol(n);
				for (int c = n - 1; c >= 0; c--) {
					Real s = b[c];
					for (int k = c + 1; k < n; k++)
						s -= M[c][k] * sol[k];
					sol[c] = s / M[c][c];
				}
				FieldScalar::Coords co(d);
				bool rec = true;
				for (int k = 0; k < d && rec; k++)
					rec = recognize_rational(sol[k], tol * (1 + abs(sol[k])), co[k]);
				if (rec)
					accept(FieldScalar(K, co));
			}
			size_t p = 0;
			while (p < idx.size() && ++idx[p] == cand[p].size())
				idx[p++] = 0;
			if (p == idx.size())
				break;
		}
	}
	for (auto &r : found) {
		UPoly lin(K, {-r, FieldScalar(K, 1)});
		UPoly rest = f;
		int m = 0;
		while (true) {
			auto q = udivide_exact(rest, lin);
			if (!q)
				break;
			rest = *q;
			m++;
		}
		out.push_back({r, m});
	}
	std::sort(out.begin(), out.end(), [](auto &a, auto &b) { return a.first.compare(b.first) < 0; });
	return out;
}

} // namespace webcurv
