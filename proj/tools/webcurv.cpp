#include "webcurv/plot.hpp"
#include "webcurv/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace webcurv;

namespace {

struct UsageError : std::runtime_error
{
	using std::runtime_error::runtime_error;
};

struct Target
{
	std::string label;
	Web web;
	std::vector<std::optional<RatFunc>> integrals;
	std::optional<Workspace> ws; // spec files only
	std::optional<CatalogEntry> entry;
	std::string web_name;
};

std::string read_file(const std::string &path)
{
	std::ifstream in(path, std::ios::binary);
	if (!in)
		throw UsageError("cannot read " + path);
	std::ostringstream s;
	s << in.rdbuf();
	return s.str();
}

Workspace load_spec(const std::string &path, std::string &hash)
{
	std::string text = read_file(path);
	hash = spec_hash(text);
	try {
		return resolve(parse_spec(text));
	} catch (const ParseError &e) {
		throw UsageError(path + ":" + e.what());
	}
}

// a catalog id, or a path to a spec file; web selects a web of the file
Target load_target(const std::string &t, const std::string &web, const std::string &verb)
{
	Target out;
	if (std::filesystem::is_regular_file(t)) {
		std::string hash;
		out.ws = load_spec(t, hash);
		out.label = "spec:" + hash;
		std::string name = web;
		if (name.empty())
			for (auto &d : out.ws->directives)
				if (d.verb == verb) {
					name = d.target;
					break;
				}
		if (name.empty() && !out.ws->web_order.empty())
			name = out.ws->web_order.front();
		auto it = out.ws->webs.find(name);
		if (it == out.ws->webs.end())
			throw UsageError(name.empty() ? t + " declares no web" : "no web named '" + name + "' in " + t);
		out.web_name = name;
		out.label += ":" + name;
		out.web = it->second.web;
		out.integrals = it->second.integrals;
		return out;
	}
	try {
		out.entry = catalog_entry(t);
	} catch (const CatalogError &e) {
		throw UsageError(e.what());
	}
	out.label = out.entry->id;
	out.web = out.entry->web();
	out.integrals = out.entry->integrals;
	return out;
}

const Directive *find_directive(const Target &t, const std::string &verb)
{
	if (!t.ws)
		return nullptr;
	for (auto &d : t.ws->directives)
		if (d.verb == verb && d.target == t.web_name)
			return &d;
	return nullptr;
}

std::vector<ExprPtr> option(const Directive *d, const std::string &key)
{
	if (d)
		for (auto &[k, v] : d->options)
			if (k == key)
				return v;
	return {};
}

double to_double(const FieldScalar &c)
{
	if (!c.is_rational())
		throw UsageError("expected a rational number, got " + c.str());
	return c.to_rational().get_d();
}

FieldScalar constant_of(const Expr &e, Field K)
{
	RatFunc r = eval_ratfunc(e, K);
	if (!r.is_constant())
		throw UsageError("expected a constant, got " + print_expr(e));
	return r.num().constant_term() / r.den().constant_term();
}

std::vector<FieldScalar> number_list(const std::string &s, Field K, size_t n, const std::string &what)
{
	std::vector<FieldScalar> out;
	std::stringstream in(s);
	std::string item;
	try {
		while (std::getline(in, item, ','))
			out.push_back(constant_of(*parse_expr(item), K));
	} catch (const ParseError &e) {
		throw UsageError(what + ": " + e.what());
	}
	if (out.size() != n)
		throw UsageError(what + " needs " + std::to_string(n) + " comma separated numbers");
	return out;
}

void emit(const std::string &text, const std::string &path)
{
	if (path.empty()) {
		std::cout << text;
		return;
	}
	std::ofstream out(path, std::ios::binary);
	if (!out)
		throw UsageError("cannot write " + path);
	out << text;
}

nlohmann::ordered_json entry_json(const CatalogEntry &e)
{
	nlohmann::ordered_json j;
	j["id"] = e.id;
	j["field"] = e.field->label;
	Web W = e.web();
	j["size"] = W.size();
	auto pts = nlohmann::ordered_json::array();
	for (auto &p : e.cdql.linear_points)
		pts.push_back(p.str());
	j["points"] = pts;
	j["nonlinear"] = e.cdql.nonlinear.str();
	j["first_integral"] = e.first_integral ? nlohmann::ordered_json(e.first_integral->str()) : nullptr;
	j["expected_flat"] = e.expected_flat;
	j["expected_rank"] = e.expected_rank ? nlohmann::ordered_json(*e.expected_rank) : nullptr;
	if (e.rank_strictly_below)
		j["rank_strictly_below"] = *e.rank_strictly_below;
	j["pi_bound"] = pi_bound(2, int(W.size()));
	j["polar_row"] = e.polar_row ? nlohmann::ordered_json(*e.polar_row) : nullptr;
	auto rels = nlohmann::ordered_json::array();
	for (auto &r : e.relations)
		rels.push_back(r.name);
	j["relations"] = rels;
	auto fols = nlohmann::ordered_json::array();
	for (auto &F : W.foliations())
		fols.push_back(F.str());
	j["foliations"] = fols;
	return j;
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"Exact verification toolkit for planar webs"};
	app.require_subcommand(1);
	app.set_version_flag("--version", tool_version);

	std::string target, web, out;
	bool timings = false;

	auto *verify = app.add_subcommand("verify", "flatness, first integral, relation and polar row checks");
	verify->add_option("target", target, "catalog id or spec file")->required();
	verify->add_option("--web", web, "web of the spec file (default: the verify directives)");
	verify->add_option("--out", out, "write the JSON report here instead of stdout");
	verify->add_flag("--timings", timings, "include wall times in the report");

	int order = 0, degree = 0;
	std::string base;
	auto *rank = app.add_subcommand("rank", "jet estimate of the rank");
	rank->add_option("target", target, "catalog id or spec file")->required();
	rank->add_option("--web", web, "web of the spec file");
	rank->add_option("--order,-N", order, "jet order (default 12)")->check(CLI::Range(1, 64));
	rank->add_option("--degree,-D", degree, "degree cap (default: the order)")->check(CLI::Range(1, 64));
	rank->add_option("--base", base, "base point p/q,r/s");
	rank->add_option("--out", out, "write the JSON report here instead of stdout");
	rank->add_flag("--timings", timings, "include wall times in the report");

	std::string region;
	int grid = 0;
	auto *plot = app.add_subcommand("plot", "SVG of the real leaves");
	plot->add_option("target", target, "catalog id or spec file")->required();
	plot->add_option("--web", web, "web of the spec file");
	plot->add_option("--region", region, "x0,x1,y0,y1 (default -2,2,-2,2)");
	plot->add_option("--grid", grid, "marching squares grid (default 512)")->check(CLI::Range(2, 4096));
	plot->add_option("--out", out, "SVG file (default stdout)");

	std::string action, id;
	bool as_json = false;
	auto *catalog = app.add_subcommand("catalog", "list the catalog or show one entry");
	catalog->add_option("action", action, "list | show")->required()->check(CLI::IsMember({"list", "show"}));
	catalog->add_option("id", id, "entry id for show");
	catalog->add_flag("--json", as_json, "JSON listing");

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError &e) {
		int code = app.exit(e);
		return code == 0 ? 0 : 2;
	}

	try {
		if (*verify) {
			Target t = load_target(target, web, "verify");
			Report r;
			if (t.entry) {
				r = verify_entry(*t.entry);
			} else {
				Workspace ws = *t.ws;
				if (!web.empty()) {
					ws.directives.clear();
					Directive d;
					d.verb = "verify";
					d.target = web;
					ws.directives.push_back(d);
				}
				r = verify_workspace(ws, t.label.substr(0, t.label.rfind(':')));
			}
			emit(r.json(timings), out);
			return r.passed() ? 0 : 1;
		}
		if (*rank) {
			Target t = load_target(target, web, "rank");
			const Directive *d = find_directive(t, "rank");
			Field K = t.ws ? t.ws->field : t.web.field();
			RankOptions o;
			if (order)
				o.order = order;
			else if (auto v = option(d, "order"); !v.empty())
				o.order = int(to_double(constant_of(*v[0], K)));
			if (degree)
				o.degree = degree;
			else if (auto v = option(d, "degree"); !v.empty())
				o.degree = int(to_double(constant_of(*v[0], K)));
			if (!base.empty()) {
				auto c = number_list(base, K, 2, "--base");
				o.base = AffinePoint{c[0], c[1]};
			} else if (auto v = option(d, "base"); v.size() == 2) {
				o.base = AffinePoint{constant_of(*v[0], K), constant_of(*v[1], K)};
			}
			Report r = rank_report(t.label, t.web, t.integrals, o);
			emit(r.json(timings), out);
			const CheckRecord &c = r.checks.front();
			if (c.witness.rfind("error: ", 0) == 0) {
				std::cerr << "webcurv: " << c.witness.substr(7) << "\n";
				return 2;
			}
			std::map<std::string, std::string> m(c.data.begin(), c.data.end());
			std::cerr << "dimension " << m["dimension"] << ", stabilized " << m["stabilized"] << ", pi bound "
			          << m["pi_bound"] << "\n";
			return r.passed() ? 0 : 1;
		}
		if (*plot) {
			Target t = load_target(target, web, "plot");
			const Directive *d = find_directive(t, "plot");
			Field K = t.ws ? t.ws->field : t.web.field();
			PlotOptions o;
			if (!region.empty()) {
				auto c = number_list(region, K, 4, "--region");
				o.x0 = to_double(c[0]), o.x1 = to_double(c[1]), o.y0 = to_double(c[2]), o.y1 = to_double(c[3]);
			} else if (auto v = option(d, "region"); v.size() == 4) {
				o.x0 = to_double(constant_of(*v[0], K)), o.x1 = to_double(constant_of(*v[1], K));
				o.y0 = to_double(constant_of(*v[2], K)), o.y1 = to_double(constant_of(*v[3], K));
			}
			if (grid)
				o.grid = grid;
			else if (auto v = option(d, "grid"); !v.empty())
				o.grid = int(to_double(constant_of(*v[0], K)));
			std::vector<std::string> warnings;
			std::string svg;
			try {
				svg = plot_svg(t.web, t.integrals, o, warnings);
			} catch (const std::invalid_argument &e) {
				throw UsageError(e.what());
			}
			for (auto &w : warnings)
				std::cerr << "webcurv: warning: " << w << "\n";
			emit(svg, out);
			return 0;
		}
		if (*catalog) {
			if (action == "list") {
				if (as_json) {
					nlohmann::ordered_json j = catalog_ids();
					std::cout << j.dump(2) << "\n";
				} else {
					for (auto &s : catalog_ids())
						std::cout << s << "\n";
				}
				return 0;
			}
			if (id.empty())
				throw UsageError("catalog show needs an id");
			CatalogEntry e = [&] {
				try {
					return catalog_entry(id);
				} catch (const CatalogError &err) {
					throw UsageError(err.what());
				}
			}();
			std::cout << entry_json(e).dump(2) << "\n";
			return 0;
		}
	} catch (const UsageError &e) {
		std::cerr << "webcurv: " << e.what() << "\n";
		return 2;
	} catch (const std::exception &e) {
		std::cerr << "webcurv: " << e.what() << "\n";
		return 1;
	}
	return 2;
}
