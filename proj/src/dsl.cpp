#include "webcurv/dsl.hpp"

#include "webcurv/catalog.hpp"

#include <algorithm>

namespace webcurv {

namespace {

bool same(const ExprPtr &a, const ExprPtr &b)
{
	if (!a || !b)
		return !a && !b;
	return *a == *b;
}

bool same(const std::vector<ExprPtr> &a, const std::vector<ExprPtr> &b)
{
	if (a.size() != b.size())
		return false;
	for (size_t i = 0; i < a.size(); i++)
		if (!same(a[i], b[i]))
			return false;
	return true;
}

const std::vector<std::string> keywords{"field", "pol", "fol", "web", "verify", "rank", "plot"};

bool reserved(const std::string &s)
{
	return s == "x" || s == "y" || s == "dx" || s == "dy" || s == "d" || s == "form" || s == "pencil" ||
	       std::find(keywords.begin(), keywords.end(), s) != keywords.end();
}

Token declared_name(TokenStream &ts)
{
	if (ts.peek().kind == Tok::Ident && reserved(ts.peek().text))
		ts.fail("reserved word cannot be used as a name");
	return ts.expect_ident();
}

FieldDecl parse_field(TokenStream &ts, SourcePos pos)
{
	FieldDecl f;
	f.pos = pos;
	f.name = ts.expect_ident().text;
	if (ts.accept("(")) {
		f.symbol = declared_name(ts).text;
		ts.expect(":");
		f.minpoly = parse_expr(ts);
		ts.expect(")");
	}
	return f;
}

std::vector<ExprPtr> parse_point(TokenStream &ts)
{
	std::vector<ExprPtr> out;
	if (ts.accept("[")) {
		out.push_back(parse_expr(ts));
		ts.expect(":");
		out.push_back(parse_expr(ts));
		ts.expect(":");
		out.push_back(parse_expr(ts));
		ts.expect("]");
		return out;
	}
	out.push_back(parse_expr(ts));
	ts.expect(",");
	out.push_back(parse_expr(ts));
	if (ts.accept(","))
		out.push_back(parse_expr(ts));
	return out;
}

FolDecl parse_fol_body(TokenStream &ts, FolDecl f)
{
	Token k = ts.expect_ident();
	ts.expect("(");
	if (k.text == "d") {
		f.kind = FolDecl::Differential;
		f.args.push_back(parse_expr(ts));
	} else if (k.text == "form") {
		f.kind = FolDecl::Form;
		f.args.push_back(parse_expr(ts));
		ts.expect(",");
		f.args.push_back(parse_expr(ts));
	} else if (k.text == "pencil") {
		f.kind = FolDecl::Pencil;
		f.args = parse_point(ts);
	} else {
		throw ParseError(k.pos, "expected d(...), form(...) or pencil(...), got '" + k.text + "'");
	}
	ts.expect(")");
	return f;
}

FolDecl parse_fol(TokenStream &ts, SourcePos pos)
{
	FolDecl f;
	f.pos = pos;
	f.name = declared_name(ts).text;
	ts.expect("=");
	return parse_fol_body(ts, f);
}

bool starts_inline_fol(const TokenStream &ts)
{
	const Token &t = ts.peek();
	const Token &u = ts.peek(1);
	return t.kind == Tok::Ident && (t.text == "d" || t.text == "form" || t.text == "pencil") && u.kind == Tok::Punct &&
	       u.text == "(";
}

WebDecl parse_web(TokenStream &ts, SourcePos pos)
{
	WebDecl w;
	w.pos = pos;
	w.name = declared_name(ts).text;
	ts.expect("=");
	do {
		WebFactor f;
		f.pos = ts.peek().pos;
		if (ts.accept("[")) {
			f.form = parse_expr(ts);
			ts.expect("]");
		} else if (starts_inline_fol(ts)) {
			FolDecl g;
			g.pos = f.pos;
			f.inline_fol = parse_fol_body(ts, g);
		} else {
			f.name = ts.expect_ident().text;
		}
		w.factors.push_back(f);
	} while (ts.accept("*"));
	return w;
}

Directive parse_directive(TokenStream &ts, const std::string &verb, SourcePos pos)
{
	Directive d;
	d.verb = verb;
	d.pos = pos;
	d.target = ts.expect_ident().text;
	while (ts.peek().kind == Tok::Ident) {
		Token k = ts.next();
		const std::string &key = k.text;
		std::vector<ExprPtr> args;
		if (key == "order" || key == "degree" || key == "grid") {
			args.push_back(parse_expr(ts));
		} else if (key == "base" || key == "region") {
			ts.expect("(");
			do
				args.push_back(parse_expr(ts));
			while (ts.accept(","));
			ts.expect(")");
		} else if (key != "flat" && key != "notflat") {
			throw ParseError(k.pos, "unknown option '" + key + "' for " + verb);
		}
		d.options.emplace_back(key, std::move(args));
	}
	return d;
}

std::string print_point(const std::vector<ExprPtr> &a)
{
	if (a.size() == 3)
		return "[" + print_expr(*a[0]) + " : " + print_expr(*a[1]) + " : " + print_expr(*a[2]) + "]";
	return print_expr(*a[0]) + ", " + print_expr(*a[1]);
}

std::string print_fol_body(const FolDecl &g)
{
	if (g.kind == FolDecl::Differential)
		return "d(" + print_expr(*g.args[0]) + ")";
	if (g.kind == FolDecl::Form)
		return "form(" + print_expr(*g.args[0]) + ", " + print_expr(*g.args[1]) + ")";
	return "pencil(" + print_point(g.args) + ")";
}

} // namespace

bool FieldDecl::operator==(const FieldDecl &o) const
{
	return name == o.name && symbol == o.symbol && same(minpoly, o.minpoly);
}
bool PolDecl::operator==(const PolDecl &o) const { return name == o.name && same(value, o.value); }
bool FolDecl::operator==(const FolDecl &o) const { return name == o.name && kind == o.kind && same(args, o.args); }
bool WebFactor::operator==(const WebFactor &o) const
{
	return name == o.name && same(form, o.form) && inline_fol == o.inline_fol;
}
bool WebDecl::operator==(const WebDecl &o) const { return name == o.name && factors == o.factors; }

bool Directive::operator==(const Directive &o) const
{
	if (verb != o.verb || target != o.target || options.size() != o.options.size())
		return false;
	for (size_t i = 0; i < options.size(); i++)
		if (options[i].first != o.options[i].first || !same(options[i].second, o.options[i].second))
			return false;
	return true;
}

WebSpecDocument parse_spec(const std::string &text)
{
	TokenStream ts(tokenize(text));
	WebSpecDocument doc;
	while (!ts.at_end()) {
		Token kw = ts.expect_ident();
		if (kw.text == "field")
			doc.decls.push_back(parse_field(ts, kw.pos));
		else if (kw.text == "pol") {
			PolDecl p;
			p.pos = kw.pos;
			p.name = declared_name(ts).text;
			ts.expect("=");
			p.value = parse_expr(ts);
			doc.decls.push_back(p);
		} else if (kw.text == "fol")
			doc.decls.push_back(parse_fol(ts, kw.pos));
		else if (kw.text == "web")
			doc.decls.push_back(parse_web(ts, kw.pos));
		else if (kw.text == "verify" || kw.text == "rank" || kw.text == "plot")
			doc.decls.push_back(parse_directive(ts, kw.text, kw.pos));
		else
			throw ParseError(kw.pos, "unknown declaration '" + kw.text + "'");
		ts.expect(";");
	}
	return doc;
}

std::string print_spec(const WebSpecDocument &doc)
{
	std::string out;
	for (auto &decl : doc.decls) {
		if (auto *f = std::get_if<FieldDecl>(&decl)) {
			out += "field " + f->name;
			if (f->minpoly)
				out += "(" + f->symbol + ": " + print_expr(*f->minpoly) + ")";
		} else if (auto *p = std::get_if<PolDecl>(&decl)) {
			out += "pol " + p->name + " = " + print_expr(*p->value);
		} else if (auto *g = std::get_if<FolDecl>(&decl)) {
			out += "fol " + g->name + " = " + print_fol_body(*g);
		} else if (auto *w = std::get_if<WebDecl>(&decl)) {
			out += "web " + w->name + " =";
			for (size_t i = 0; i < w->factors.size(); i++) {
				out += i ? " * " : " ";
				const WebFactor &f = w->factors[i];
				out += f.form ? "[" + print_expr(*f.form) + "]" : f.inline_fol ? print_fol_body(*f.inline_fol) : f.name;
			}
		} else if (auto *d = std::get_if<Directive>(&decl)) {
			out += d->verb + " " + d->target;
			for (auto &[key, args] : d->options) {
				out += " " + key;
				if (key == "base" || key == "region") {
					out += " (";
					for (size_t i = 0; i < args.size(); i++)
						out += (i ? ", " : "") + print_expr(*args[i]);
					out += ")";
				} else if (!args.empty()) {
					out += " " + print_expr(*args[0]);
				}
			}
		}
		out += ";\n";
	}
	return out;
}

namespace {

// value of a bracketed expression: a function, or a product of 1-forms
struct FormValue
{
	std::optional<RatFunc> function;
	std::vector<OneForm> forms;
	std::vector<std::optional<RatFunc>> integrals;
};

class Resolver
{
public:
	Workspace ws;

	RatFunc function(const Expr &e) { return eval_ratfunc(e, ws.field, env()); }

	FieldScalar constant(const Expr &e)
	{
		RatFunc r = function(e);
		if (!r.is_constant())
			throw ParseError(e.pos, "expected a constant");
		return r.num().constant_term() / r.den().constant_term();
	}

	long integer(const Expr &e)
	{
		FieldScalar c = constant(e);
		if (!c.is_rational() || c.to_rational().get_den() != 1)
			throw ParseError(e.pos, "expected an integer");
		return c.to_rational().get_num().get_si();
	}

	void field(const FieldDecl &f)
	{
		if (field_seen_)
			throw ParseError(f.pos, "field declared twice");
		if (!ws.pols.empty() || !ws.fols.empty() || !ws.webs.empty())
			throw ParseError(f.pos, "field must be declared before any expression");
		field_seen_ = true;
		if (!f.minpoly) {
			if (f.name != "Q")
				throw ParseError(f.pos, "unknown field '" + f.name + "'");
			return;
		}
		// the minimal polynomial is read as a polynomial in x after renaming its variable
		std::map<std::string, RatFunc> var{{f.symbol, RatFunc(MultiPoly::x())}, {"t", RatFunc(MultiPoly::x())}};
		RatFunc m = eval_ratfunc(*f.minpoly, rationals(), var);
		if (!m.is_polynomial() || m.num().degree_y() > 0 || m.num().total_degree() < 1)
			throw ParseError(f.minpoly->pos, "minimal polynomial must be a non-constant polynomial in one variable");
		MultiPoly p = m.num() * m.den().constant_term().inverse();
		int n = p.total_degree();
		FieldScalar lc = p.coeff(n, 0);
		std::vector<Rational> coeffs;
		for (int i = 0; i <= n; i++)
			coeffs.push_back((p.coeff(i, 0) / lc).to_rational());
		// irreducibility is the caller's obligation; rational roots are the cheap part of it to refuse
		std::vector<FieldScalar> uc;
		for (auto &c : coeffs)
			uc.emplace_back(c);
		if (n > 1 && !roots_in_field(UPoly(rationals(), uc)).empty())
			throw ParseError(f.pos, "minimal polynomial has a rational root");
		try {
			ws.field = make_field(f.name + "(" + f.symbol + ")", f.symbol, coeffs);
		} catch (const AlgebraError &e) {
			throw ParseError(f.pos, e.what());
		}
		if (ws.field->symbol != f.symbol)
			generator_alias_ = f.symbol;
	}

	void fol(const FolDecl &f)
	{
		fresh(f.name, f.pos);
		SpecFoliation s = foliation(f.kind, f.args, f.pos);
		ws.fols.emplace(f.name, s);
	}

	void web(const WebDecl &w)
	{
		fresh(w.name, w.pos);
		SpecWeb s;
		s.pos = w.pos;
		std::vector<Foliation> fs;
		auto add = [&](const Foliation &F, const std::optional<RatFunc> &u, SourcePos pos) {
			if (std::find(fs.begin(), fs.end(), F) != fs.end())
				throw ParseError(pos, "foliation repeated in web " + w.name);
			fs.push_back(F);
			s.integrals.push_back(u);
		};
		for (auto &f : w.factors) {
			if (f.inline_fol) {
				SpecFoliation g = foliation(f.inline_fol->kind, f.inline_fol->args, f.pos);
				add(g.F, g.integral, f.pos);
				continue;
			}
			if (!f.form) {
				if (auto it = ws.fols.find(f.name); it != ws.fols.end()) {
					add(it->second.F, it->second.integral, f.pos);
				} else if (auto jt = ws.webs.find(f.name); jt != ws.webs.end()) {
					for (size_t i = 0; i < jt->second.web.size(); i++)
						add(jt->second.web[i], jt->second.integrals[i], f.pos);
				} else {
					throw ParseError(f.pos, "unknown foliation or web '" + f.name + "'");
				}
				continue;
			}
			FormValue v = form(*f.form);
			if (v.function)
				throw ParseError(f.pos, "a web factor must be a 1-form, not a function");
			for (size_t i = 0; i < v.forms.size(); i++) {
				if (v.forms[i].is_zero())
					throw ParseError(f.pos, "zero 1-form");
				add(Foliation::from_form(v.forms[i]), v.integrals[i], f.pos);
			}
		}
		try {
			s.web = Web(fs);
		} catch (const std::exception &e) {
			throw ParseError(w.pos, e.what());
		}
		ws.webs.emplace(w.name, s);
		ws.web_order.push_back(w.name);
	}

	void directive(const Directive &d)
	{
		if (!ws.webs.count(d.target))
			throw ParseError(d.pos, "unknown web '" + d.target + "'");
		for (auto &[key, args] : d.options) {
			if (key == "base" && args.size() != 2)
				throw ParseError(d.pos, "base takes two coordinates");
			if (key == "region" && args.size() != 4)
				throw ParseError(d.pos, "region takes four numbers");
			for (auto &a : args)
				constant(*a);
		}
		ws.directives.push_back(d);
	}

	void pol(const PolDecl &p)
	{
		fresh(p.name, p.pos);
		ws.pols.emplace(p.name, function(*p.value));
	}

private:
	bool field_seen_ = false;
	std::string generator_alias_;

	std::map<std::string, RatFunc> env() const
	{
		std::map<std::string, RatFunc> e = ws.pols;
		if (!generator_alias_.empty())
			e.emplace(generator_alias_, RatFunc(FieldScalar::generator(ws.field)));
		return e;
	}

	void fresh(const std::string &name, SourcePos pos)
	{
		if (ws.pols.count(name) || ws.fols.count(name) || ws.webs.count(name) || name == ws.field->symbol ||
		    name == generator_alias_)
			throw ParseError(pos, "name '" + name + "' already defined");
	}

	// the form as written, with its first integral when one is known
	std::pair<OneForm, std::optional<RatFunc>> raw_form(FolDecl::Kind kind, const std::vector<ExprPtr> &args,
	                                                    SourcePos pos)
	{
		try {
			if (kind == FolDecl::Differential) {
				RatFunc u = function(*args[0]);
				if (u.is_constant())
					throw ParseError(args[0]->pos, "d of a constant");
				return {differential(u), u};
			}
			if (kind == FolDecl::Form) {
				OneForm w{function(*args[0]), function(*args[1])};
				if (w.is_zero())
					throw ParseError(pos, "zero 1-form");
				return {w, std::nullopt};
			}
			ProjPoint p = args.size() == 3 ? ProjPoint::make(constant(*args[0]), constant(*args[1]), constant(*args[2]))
			                               : ProjPoint::affine(constant(*args[0]), constant(*args[1]));
			return {pencil(p).form(), pencil_integral(p)};
		} catch (const ParseError &) {
			throw;
		} catch (const std::exception &e) {
			throw ParseError(pos, e.what());
		}
	}

	SpecFoliation foliation(FolDecl::Kind kind, const std::vector<ExprPtr> &args, SourcePos pos)
	{
		auto [w, u] = raw_form(kind, args, pos);
		return {Foliation::from_form(w), u};
	}

	FormValue single(const OneForm &w, const std::optional<RatFunc> &u)
	{
		FormValue v;
		v.forms.push_back(w);
		v.integrals.push_back(u);
		return v;
	}

	FormValue single(const std::pair<OneForm, std::optional<RatFunc>> &p) { return single(p.first, p.second); }

	FormValue form(const Expr &e)
	{
		switch (e.kind) {
		case Expr::Sym:
			if (e.name == "dx" || e.name == "dy") {
				Field K = ws.field;
				RatFunc one(FieldScalar(K, 1)), zero(FieldScalar(K, 0));
				FormValue v;
				v.forms.push_back(e.name == "dx" ? OneForm{one, zero} : OneForm{zero, one});
				v.integrals.push_back(RatFunc(e.name == "dx" ? MultiPoly::x(K) : MultiPoly::y(K)));
				return v;
			}
			if (auto it = ws.fols.find(e.name); it != ws.fols.end())
				return single(it->second.F.form(), it->second.integral);
			return {function(e), {}, {}};
		case Expr::Call: {
			if (e.name == "d" && e.args.size() == 1)
				return single(raw_form(FolDecl::Differential, e.args, e.pos));
			if (e.name == "form" && e.args.size() == 2)
				return single(raw_form(FolDecl::Form, e.args, e.pos));
			if (e.name == "pencil" && (e.args.size() == 2 || e.args.size() == 3))
				return single(raw_form(FolDecl::Pencil, e.args, e.pos));
			throw ParseError(e.pos, "unknown function '" + e.name + "' with " + std::to_string(e.args.size()) +
			                            " arguments");
		}
		case Expr::Num:
			return {function(e), {}, {}};
		case Expr::Neg: {
			FormValue v = form(*e.args[0]);
			if (v.function)
				return {-*v.function, {}, {}};
			v.forms[0] = v.forms[0] * RatFunc(-1);
			if (v.integrals[0])
				v.integrals[0] = -*v.integrals[0];
			return v;
		}
		case Expr::Pow: {
			FormValue v = form(*e.args[0]);
			if (!v.function)
				throw ParseError(e.pos, "power of a 1-form would repeat a foliation");
			return {function(e), {}, {}};
		}
		case Expr::Add:
		case Expr::Sub: {
			FormValue l = form(*e.args[0]), r = form(*e.args[1]);
			bool sub = e.kind == Expr::Sub;
			if (l.function && r.function)
				return {sub ? *l.function - *r.function : *l.function + *r.function, {}, {}};
			if (l.function || r.function || l.forms.size() != 1 || r.forms.size() != 1)
				throw ParseError(e.pos, "sum of a 1-form with a function or with a product of forms");
			FormValue v;
			v.forms.push_back(sub ? l.forms[0] - r.forms[0] : l.forms[0] + r.forms[0]);
			v.integrals.push_back(std::nullopt);
			// sums of exact forms stay exact as long as each summand is the differential of its integral
			if (l.integrals[0] && r.integrals[0] && l.forms[0] == differential(*l.integrals[0]) &&
			    r.forms[0] == differential(*r.integrals[0]))
				v.integrals[0] = sub ? *l.integrals[0] - *r.integrals[0] : *l.integrals[0] + *r.integrals[0];
			return v;
		}
		case Expr::Mul: {
			FormValue l = form(*e.args[0]), r = form(*e.args[1]);
			if (l.function && r.function)
				return {*l.function * *r.function, {}, {}};
			if (l.function || r.function) {
				FormValue v = l.function ? r : l;
				const RatFunc &c = l.function ? *l.function : *r.function;
				if (v.forms.size() != 1)
					throw ParseError(e.pos, "scaling a product of forms is ambiguous");
				if (c.is_zero())
					throw ParseError(e.pos, "zero 1-form");
				v.forms[0] = v.forms[0] * c;
				if (v.integrals[0] && c.is_constant())
					v.integrals[0] = *v.integrals[0] * c;
				return v;
			}
			// product of forms: a web
			l.forms.insert(l.forms.end(), r.forms.begin(), r.forms.end());
			l.integrals.insert(l.integrals.end(), r.integrals.begin(), r.integrals.end());
			return l;
		}
		case Expr::Div: {
			FormValue l = form(*e.args[0]), r = form(*e.args[1]);
			if (!r.function)
				throw ParseError(e.pos, "division by a 1-form");
			if (l.function)
				return {function(e), {}, {}};
			if (l.forms.size() != 1)
				throw ParseError(e.pos, "scaling a product of forms is ambiguous");
			if (r.function->is_zero())
				throw ParseError(e.pos, "division by zero");
			l.forms[0] = l.forms[0] * (RatFunc(1) / *r.function);
			if (l.integrals[0] && r.function->is_constant())
				l.integrals[0] = *l.integrals[0] / *r.function;
			return l;
		}
		}
		throw ParseError(e.pos, "bad form expression");
	}
};

} // namespace

Workspace resolve(const WebSpecDocument &doc)
{
	Resolver r;
	for (auto &d : doc.decls) {
		if (auto *f = std::get_if<FieldDecl>(&d))
			r.field(*f);
		else if (auto *p = std::get_if<PolDecl>(&d))
			r.pol(*p);
		else if (auto *g = std::get_if<FolDecl>(&d))
			r.fol(*g);
		else if (auto *w = std::get_if<WebDecl>(&d))
			r.web(*w);
		else
			r.directive(std::get<Directive>(d));
	}
	return std::move(r.ws);
}

} // namespace webcurv
