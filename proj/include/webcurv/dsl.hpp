#pragma once

#include "webcurv/expr.hpp"
#include "webcurv/geometry.hpp"

#include <variant>

namespace webcurv {

// field Q(xi3: t^2+t+1)
struct FieldDecl
{
	std::string name;
	std::string symbol;   // empty for Q
	ExprPtr minpoly;      // in the symbol or in t; null for Q
	SourcePos pos;
	bool operator==(const FieldDecl &o) const;
};

// pol P = x^3 + y^3
struct PolDecl
{
	std::string name;
	ExprPtr value;
	SourcePos pos;
	bool operator==(const PolDecl &o) const;
};

// fol F = d(f) | form(a, b) | pencil(x0, y0) | pencil([X:Y:Z])
struct FolDecl
{
	enum Kind { Differential, Form, Pencil };
	std::string name;
	Kind kind = Differential;
	std::vector<ExprPtr> args; // pencils: 2 affine or 3 projective coordinates
	SourcePos pos;
	bool operator==(const FolDecl &o) const;
};

// one factor of a web: a bracketed form expression, an inline d(...)/form(...)/pencil(...),
// or the name of a foliation or web
struct WebFactor
{
	ExprPtr form; // bracketed, may be a product of forms
	std::optional<FolDecl> inline_fol; // name left empty
	std::string name;
	SourcePos pos;
	bool operator==(const WebFactor &o) const;
};

struct WebDecl
{
	std::string name;
	std::vector<WebFactor> factors;
	SourcePos pos;
	bool operator==(const WebDecl &o) const;
};

// verify W [flat | notflat];  rank W [order N] [degree D] [base (p, q)];  plot W [region (x0, x1, y0, y1)] [grid G]
struct Directive
{
	std::string verb;
	std::string target;
	std::vector<std::pair<std::string, std::vector<ExprPtr>>> options;
	SourcePos pos;
	bool operator==(const Directive &o) const;
};

using Decl = std::variant<FieldDecl, PolDecl, FolDecl, WebDecl, Directive>;

struct WebSpecDocument
{
	std::vector<Decl> decls;
	bool operator==(const WebSpecDocument &o) const { return decls == o.decls; }
};

WebSpecDocument parse_spec(const std::string &text);
std::string print_spec(const WebSpecDocument &doc);

struct SpecFoliation
{
	Foliation F;
	std::optional<RatFunc> integral;
};

struct SpecWeb
{
	Web web;
	std::vector<std::optional<RatFunc>> integrals; // one per foliation
	SourcePos pos;
};

// the document with every name resolved
struct Workspace
{
	Field field = rationals();
	std::map<std::string, RatFunc> pols;
	std::map<std::string, SpecFoliation> fols;
	std::map<std::string, SpecWeb> webs;
	std::vector<std::string> web_order; // declaration order
	std::vector<Directive> directives;
};

// resolution errors are ParseErrors carrying the span of the offending name
Workspace resolve(const WebSpecDocument &doc);

} // namespace webcurv
