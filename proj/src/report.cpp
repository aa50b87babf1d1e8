#include "webcurv/report.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdio>

namespace webcurv {

namespace {

using Clock = std::chrono::steady_clock;

template <class F> CheckRecord timed(const std::string &name, F &&body)
{
	CheckRecord c;
	c.name = name;
	auto t0 = Clock::now();
	try {
		body(c);
	} catch (const std::exception &e) {
		c.status = CheckRecord::Fail;
		c.witness = std::string("error: ") + e.what();
	}
	c.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
	return c;
}

std::string clip(std::string s, size_t n = 240)
{
	if (s.size() > n)
		s = s.substr(0, n) + "...";
	return s;
}

const char *status_name(CheckRecord::Status s)
{
	switch (s) {
	case CheckRecord::Pass:
		return "pass";
	case CheckRecord::Fail:
		return "fail";
	default:
		return "skip";
	}
}

CheckRecord flatness(const std::string &name, const Web &W, bool expect_flat, int threads)
{
	return timed(name, [&](CheckRecord &c) {
		CurvatureReport K = curvature(W, threads);
		c.data.emplace_back("triples", std::to_string(K.triple_count));
		c.data.emplace_back("flat", K.is_flat ? "true" : "false");
		c.status = K.is_flat == expect_flat ? CheckRecord::Pass : CheckRecord::Fail;
		if (!K.is_flat)
			c.data.emplace_back("curvature_numerator_lowest_terms", curvature_witness(K.K));
		if (c.status == CheckRecord::Fail)
			c.witness = K.is_flat ? "curvature vanishes" : curvature_witness(K.K);
	});
}

CheckRecord first_integral(const std::string &name, const RatFunc &u, const Foliation &F)
{
	return timed(name, [&](CheckRecord &c) {
		c.data.emplace_back("integral", clip(u.str()));
		if (is_first_integral(u, F)) {
			c.status = CheckRecord::Pass;
		} else {
			c.status = CheckRecord::Fail;
			c.witness = clip("du ^ omega = " + wedge(differential(u), F.form()).str());
		}
	});
}

const char *kind_name(RelationCandidate::Kind k)
{
	switch (k) {
	case RelationCandidate::Polynomial:
		return "polynomial";
	case RelationCandidate::Logarithmic:
		return "logarithmic";
	default:
		return "log-squared";
	}
}

std::string scalar_list(const AffinePoint &p) { return p.x.str() + "," + p.y.str(); }

} // namespace

bool Report::passed() const
{
	for (auto &c : checks)
		if (c.status == CheckRecord::Fail)
			return false;
	return true;
}

std::string Report::json(bool timings) const
{
	nlohmann::ordered_json j;
	j["schema"] = report_schema;
	j["tool"] = "webcurv";
	j["version"] = tool_version;
	j["target"] = target;
	j["status"] = passed() ? "pass" : "fail";
	auto arr = nlohmann::ordered_json::array();
	for (auto &c : checks) {
		nlohmann::ordered_json r;
		r["name"] = c.name;
		r["status"] = status_name(c.status);
		if (!c.witness.empty())
			r["witness"] = c.witness;
		for (auto &[k, v] : c.data)
			r[k] = v;
		if (timings)
			r["wall_time_s"] = c.seconds;
		arr.push_back(r);
	}
	j["checks"] = arr;
	return j.dump(2) + "\n";
}

std::string spec_hash(const std::string &text)
{
	uint64_t h = 1469598103934665603ull;
	for (unsigned char c : text) {
		h ^= c;
		h *= 1099511628211ull;
	}
	char buf[17];
	std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
	return buf;
}

std::string curvature_witness(const TwoForm &K)
{
	const MultiPoly &n = K.c.num();
	if (n.is_zero())
		return "0";
	int lo = n.total_degree();
	for (auto &t : n.terms())
		lo = std::min(lo, int(t.i + t.j));
	return clip(n.homogeneous_part(lo).str());
}

Report verify_entry(const CatalogEntry &e, int threads)
{
	Report r;
	r.target = e.id;
	Web W = e.web();
	r.checks.push_back(flatness("flatness", W, e.expected_flat, threads));
	if (e.first_integral)
		r.checks.push_back(first_integral("first_integral", *e.first_integral, e.cdql.nonlinear));
	for (size_t i = 0; i < W.size(); i++)
		if (e.integrals[i])
			r.checks.push_back(first_integral("first_integral[" + std::to_string(i) + "]", *e.integrals[i], W[i]));
	for (auto &rel : e.relations)
		r.checks.push_back(timed("relation " + rel.name, [&](CheckRecord &c) {
			RelationVerdict v = verify_relation(rel);
			c.data.emplace_back("kind", kind_name(rel.declared_kind));
			c.data.emplace_back("exact", v.exact ? "true" : "false");
			if (v.constant_checked) {
				char buf[32];
				std::snprintf(buf, sizeof buf, "%.3e", v.constant_residual);
				c.data.emplace_back("constant_residual", buf);
				c.data.emplace_back("base", scalar_list(v.base));
			}
			c.status = v.passed ? CheckRecord::Pass : CheckRecord::Fail;
			if (!v.passed)
				c.witness = v.detail;
		}));
	if (e.polar_row)
		r.checks.push_back(timed("polar_row", [&](CheckRecord &c) {
			PolarMap f = ell_polar_map(e.cdql.nonlinear);
			auto m = match_table1(f, e.points_at_infinity());
			c.data.emplace_back("expected_row", *e.polar_row);
			c.data.emplace_back("polar_map", f.str());
			bool ok = m && m->label == *e.polar_row && fibers_match(table1_row(*e.polar_row), m->normalized_map, m->q);
			c.status = ok ? CheckRecord::Pass : CheckRecord::Fail;
			if (m)
				c.data.emplace_back("matched_row", m->label);
			if (!ok)
				c.witness = m ? "matched row " + m->label + ", fibers differ from " + *e.polar_row
				              : "no row matches " + f.str();
		}));
	return r;
}

Report verify_workspace(const Workspace &ws, const std::string &target, int threads)
{
	Report r;
	r.target = target;
	std::vector<std::pair<std::string, bool>> todo;
	for (auto &d : ws.directives)
		if (d.verb == "verify") {
			bool flat = true;
			for (auto &o : d.options)
				if (o.first == "notflat")
					flat = false;
			todo.emplace_back(d.target, flat);
		}
	if (todo.empty())
		for (auto &name : ws.web_order)
			todo.emplace_back(name, true);
	for (auto &[name, flat] : todo) {
		const SpecWeb &s = ws.webs.at(name);
		r.checks.push_back(flatness(name + ": flatness", s.web, flat, threads));
		for (size_t i = 0; i < s.web.size(); i++)
			if (s.integrals[i])
				r.checks.push_back(
					first_integral(name + ": first_integral[" + std::to_string(i) + "]", *s.integrals[i], s.web[i]));
	}
	return r;
}

Report rank_report(const std::string &target, const Web &W, const std::vector<std::optional<RatFunc>> &integrals,
                   const RankOptions &o)
{
	Report r;
	r.target = target;
	r.checks.push_back(timed("jet_rank", [&](CheckRecord &c) {
		AffinePoint base = o.base ? *o.base : choose_base_point(W, integrals);
		int D = o.degree.value_or(o.order);
		JetRelationSpace s = jet_rank(W, integrals, base, o.order, D);
		int bound = pi_bound(2, int(W.size()));
		c.data.emplace_back("base", scalar_list(base));
		c.data.emplace_back("order", std::to_string(s.order));
		c.data.emplace_back("degree", std::to_string(s.degree_cap));
		c.data.emplace_back("dimension", std::to_string(s.kernel_dimension));
		c.data.emplace_back("dimension_at_previous_order", std::to_string(s.previous_dimension));
		c.data.emplace_back("stabilized", s.stabilized ? "true" : "false");
		c.data.emplace_back("order_heuristic_met", s.meets_order_heuristic ? "true" : "false");
		c.data.emplace_back("pi_bound", std::to_string(bound));
		// a stabilized dimension above the bound would contradict Bol's theorem
		c.status = s.stabilized && s.kernel_dimension > bound ? CheckRecord::Fail : CheckRecord::Pass;
		if (c.status == CheckRecord::Fail)
			c.witness = "dimension exceeds the bound";
	}));
	return r;
}

} // namespace webcurv
