#include "webcurv/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace webcurv {

namespace {

struct RealPoly
{
	std::vector<std::tuple<int, int, double>> terms;

	double operator()(double x, double y) const
	{
		double s = 0;
		for (auto &[i, j, c] : terms)
			s += c * std::pow(x, i) * std::pow(y, j);
		return s;
	}
};

std::optional<RealPoly> real_poly(const MultiPoly &p)
{
	RealPoly r;
	for (auto &t : p.terms()) {
		if (!t.c.is_rational())
			return std::nullopt;
		r.terms.emplace_back(int(t.i), int(t.j), t.c.to_rational().get_d());
	}
	return r;
}

const char *palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                         "#17becf", "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22"};

constexpr double canvas = 800;

class Canvas
{
public:
	explicit Canvas(const PlotOptions &o) : o_(o) {}

	void move(double x, double y) { put('M', x, y); }
	void line(double x, double y) { put('L', x, y); }
	std::string take() { return std::move(d_); }
	bool empty() const { return d_.empty(); }

private:
	const PlotOptions &o_;
	std::string d_;

	void put(char c, double x, double y)
	{
		char buf[64];
		double px = (x - o_.x0) / (o_.x1 - o_.x0) * canvas;
		double py = (o_.y1 - y) / (o_.y1 - o_.y0) * canvas;
		std::snprintf(buf, sizeof buf, "%c%.2f %.2f ", c, px, py);
		d_ += buf;
	}
};

void contours(const RealPoly &num, const RealPoly &den, const PlotOptions &o, Canvas &out)
{
	int G = o.grid;
	double hx = (o.x1 - o.x0) / G, hy = (o.y1 - o.y0) / G;
	std::vector<double> v((G + 1) * (G + 1)), s((G + 1) * (G + 1));
	std::vector<double> finite;
	for (int j = 0; j <= G; j++)
		for (int i = 0; i <= G; i++) {
			double x = o.x0 + i * hx, y = o.y0 + j * hy, d = den(x, y);
			s[j * (G + 1) + i] = d;
			double val = num(x, y) / d;
			v[j * (G + 1) + i] = val;
			if (std::isfinite(val))
				finite.push_back(val);
		}
	if (finite.empty())
		return;
	std::sort(finite.begin(), finite.end());
	std::vector<double> levels;
	for (int k = 0; k < o.levels; k++) {
		double c = finite[std::min(finite.size() - 1, size_t((k + 0.5) / o.levels * finite.size()))];
		if (levels.empty() || c != levels.back())
			levels.push_back(c);
	}

	auto at = [&](int i, int j) { return v[j * (G + 1) + i]; };
	for (int j = 0; j < G; j++)
		for (int i = 0; i < G; i++) {
			double c0 = at(i, j), c1 = at(i + 1, j), c2 = at(i + 1, j + 1), c3 = at(i, j + 1);
			if (!std::isfinite(c0) || !std::isfinite(c1) || !std::isfinite(c2) || !std::isfinite(c3))
				continue;
			double d0 = s[j * (G + 1) + i], d1 = s[j * (G + 1) + i + 1], d2 = s[(j + 1) * (G + 1) + i + 1],
			       d3 = s[(j + 1) * (G + 1) + i];
			// a pole crosses the cell
			if ((d0 > 0) != (d1 > 0) || (d0 > 0) != (d2 > 0) || (d0 > 0) != (d3 > 0))
				continue;
			double x = o.x0 + i * hx, y = o.y0 + j * hy;
			// corners counterclockwise from (x, y); edges 0: bottom, 1: right, 2: top, 3: left
			double cx[4] = {x, x + hx, x + hx, x}, cy[4] = {y, y, y + hy, y + hy}, cv[4] = {c0, c1, c2, c3};
			for (double L : levels) {
				int mask = 0;
				for (int k = 0; k < 4; k++)
					mask |= (cv[k] > L) << k;
				if (mask == 0 || mask == 15)
					continue;
				std::pair<double, double> e[4];
				bool has[4] = {};
				for (int k = 0; k < 4; k++) {
					int a = k, b = (k + 1) % 4;
					if ((cv[a] > L) != (cv[b] > L)) {
						double t = (L - cv[a]) / (cv[b] - cv[a]);
						e[k] = {cx[a] + t * (cx[b] - cx[a]), cy[a] + t * (cy[b] - cy[a])};
						has[k] = true;
					}
				}
				auto seg = [&](int p, int q) {
					if (e[p] == e[q])
						return;
					out.move(e[p].first, e[p].second);
					out.line(e[q].first, e[q].second);
				};
				if (mask == 5 || mask == 10) {
					bool center = (c0 + c1 + c2 + c3) / 4 > L;
					bool zero_high = mask == 5;
					if (center == zero_high) {
						seg(0, 1);
						seg(2, 3);
					} else {
						seg(0, 3);
						seg(1, 2);
					}
					continue;
				}
				int p = -1;
				for (int k = 0; k < 4; k++)
					if (has[k]) {
						if (p < 0)
							p = k;
						else
							seg(p, k);
					}
			}
		}
}

void trace(const RealPoly &a, const RealPoly &b, const PlotOptions &o, Canvas &out)
{
	double span = std::max(o.x1 - o.x0, o.y1 - o.y0);
	double h = span / o.grid * 2;
	auto field = [&](double x, double y, double &u, double &w) {
		u = -b(x, y);
		w = a(x, y);
		double n = std::hypot(u, w);
		if (!(n > 1e-12) || !std::isfinite(n))
			return false;
		u /= n;
		w /= n;
		return true;
	};
	auto inside = [&](double x, double y) { return x >= o.x0 && x <= o.x1 && y >= o.y0 && y <= o.y1; };
	const int seeds = 16, steps = 4 * o.grid;
	for (int sj = 0; sj < seeds; sj++)
		for (int si = 0; si < seeds; si++) {
			double sx = o.x0 + (si + 0.5) / seeds * (o.x1 - o.x0), sy = o.y0 + (sj + 0.5) / seeds * (o.y1 - o.y0);
			for (int dir : {1, -1}) {
				double x = sx, y = sy;
				out.move(x, y);
				for (int n = 0; n < steps && inside(x, y); n++) {
					double u1, w1, u2, w2, u3, w3, u4, w4;
					if (!field(x, y, u1, w1) || !field(x + dir * h / 2 * u1, y + dir * h / 2 * w1, u2, w2))
						break;
					// keep the orientation continuous through the intermediate stages
					if (u1 * u2 + w1 * w2 < 0)
						u2 = -u2, w2 = -w2;
					if (!field(x + dir * h / 2 * u2, y + dir * h / 2 * w2, u3, w3))
						break;
					if (u1 * u3 + w1 * w3 < 0)
						u3 = -u3, w3 = -w3;
					if (!field(x + dir * h * u3, y + dir * h * w3, u4, w4))
						break;
					if (u1 * u4 + w1 * w4 < 0)
						u4 = -u4, w4 = -w4;
					x += dir * h / 6 * (u1 + 2 * u2 + 2 * u3 + u4);
					y += dir * h / 6 * (w1 + 2 * w2 + 2 * w3 + w4);
					out.line(x, y);
				}
			}
		}
}

} // namespace

std::string plot_svg(const Web &W, const std::vector<std::optional<RatFunc>> &integrals, const PlotOptions &o,
                     std::vector<std::string> &warnings)
{
	if (!(o.x1 > o.x0) || !(o.y1 > o.y0) || !std::isfinite(o.x1 - o.x0) || !std::isfinite(o.y1 - o.y0))
		throw std::invalid_argument("plot region is degenerate");
	if (o.grid < 2)
		throw std::invalid_argument("plot grid must be at least 2");

	std::string svg = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
	                  "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"800\" "
	                  "viewBox=\"0 0 800 800\">\n"
	                  "<rect width=\"800\" height=\"800\" fill=\"white\"/>\n";
	for (size_t k = 0; k < W.size(); k++) {
		Canvas c(o);
		const std::optional<RatFunc> &u = k < integrals.size() ? integrals[k] : std::nullopt;
		if (u) {
			auto num = real_poly(u->num()), den = real_poly(u->den());
			if (!num || !den) {
				warnings.push_back("foliation " + std::to_string(k) + ": first integral is not real, skipped");
				continue;
			}
			contours(*num, *den, o, c);
		} else {
			auto a = real_poly(W[k].a()), b = real_poly(W[k].b());
			if (!a || !b) {
				warnings.push_back("foliation " + std::to_string(k) + ": 1-form is not real, skipped");
				continue;
			}
			trace(*a, *b, o, c);
		}
		svg += "<g id=\"foliation-" + std::to_string(k) + "\">\n";
		if (!c.empty())
			svg += "<path fill=\"none\" stroke=\"" + std::string(palette[k % 10]) + "\" stroke-width=\"0.6\" d=\"" +
			       c.take() + "\"/>\n";
		svg += "</g>\n";
	}
	svg += "</svg>\n";
	return svg;
}

} // namespace webcurv
