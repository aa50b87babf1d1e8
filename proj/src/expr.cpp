#include "webcurv/expr.hpp"

#include <cctype>

namespace webcurv {

std::vector<Token> tokenize(const std::string &src)
{
	std::vector<Token> out;
	SourcePos pos;
	size_t i = 0;
	auto advance = [&] {
		if (src[i] == '\n') {
			pos.line++;
			pos.col = 1;
		} else {
			pos.col++;
		}
		i++;
	};
	while (i < src.size()) {
		char c = src[i];
		if (std::isspace((unsigned char)c)) {
			advance();
			continue;
		}
		if (c == '#') {
			while (i < src.size() && src[i] != '\n')
				advance();
			continue;
		}
		Token t;
		t.pos = pos;
		if (std::isdigit((unsigned char)c)) {
			t.kind = Tok::Number;
			while (i < src.size() && std::isdigit((unsigned char)src[i])) {
				t.text += src[i];
				advance();
			}
		} else if (std::isalpha((unsigned char)c) || c == '_') {
			t.kind = Tok::Ident;
			while (i < src.size() && (std::isalnum((unsigned char)src[i]) || src[i] == '_')) {
				t.text += src[i];
				advance();
			}
		} else if (std::string("()[]+-*/^,;=:").find(c) != std::string::npos) {
			t.kind = Tok::Punct;
			t.text = c;
			advance();
		} else {
			throw ParseError(pos, std::string("unexpected character '") + c + "'");
		}
		out.push_back(t);
	}
	Token end;
	end.pos = pos;
	out.push_back(end);
	return out;
}

bool Expr::operator==(const Expr &o) const
{
	if (kind != o.kind || value != o.value || name != o.name || args.size() != o.args.size())
		return false;
	for (size_t k = 0; k < args.size(); k++)
		if (!(*args[k] == *o.args[k]))
			return false;
	return true;
}

const Token &TokenStream::peek(int ahead) const
{
	size_t k = std::min(i_ + ahead, t_.size() - 1);
	return t_[k];
}

Token TokenStream::next()
{
	Token t = peek();
	if (i_ + 1 < t_.size())
		i_++;
	return t;
}

bool TokenStream::accept(const std::string &punct)
{
	if (peek().kind == Tok::Punct && peek().text == punct) {
		next();
		return true;
	}
	return false;
}

Token TokenStream::expect(const std::string &punct)
{
	if (peek().kind != Tok::Punct || peek().text != punct)
		fail("expected '" + punct + "'");
	return next();
}

Token TokenStream::expect_ident()
{
	if (peek().kind != Tok::Ident)
		fail("expected a name");
	return next();
}

void TokenStream::fail(const std::string &msg) const
{
	const Token &t = peek();
	std::string got = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
	throw ParseError(t.pos, msg + ", got " + got);
}

namespace {

ExprPtr make(Expr::Kind k, SourcePos pos, std::vector<ExprPtr> args = {})
{
	auto e = std::make_shared<Expr>();
	e->kind = k;
	e->pos = pos;
	e->args = std::move(args);
	return e;
}

ExprPtr parse_unary(TokenStream &ts);

ExprPtr parse_primary(TokenStream &ts)
{
	const Token &t = ts.peek();
	if (t.kind == Tok::Number) {
		auto e = std::make_shared<Expr>();
		e->kind = Expr::Num;
		e->pos = t.pos;
		e->value = Integer(t.text);
		ts.next();
		return e;
	}
	if (t.kind == Tok::Ident) {
		Token id = ts.next();
		if (ts.accept("(")) {
			auto e = std::make_shared<Expr>();
			e->kind = Expr::Call;
			e->name = id.text;
			e->pos = id.pos;
			if (!ts.accept(")")) {
				do
					e->args.push_back(parse_expr(ts));
				while (ts.accept(","));
				ts.expect(")");
			}
			return e;
		}
		auto e = std::make_shared<Expr>();
		e->kind = Expr::Sym;
		e->name = id.text;
		e->pos = id.pos;
		return e;
	}
	if (t.kind == Tok::Punct && t.text == "(") {
		ts.next();
		auto e = parse_expr(ts);
		ts.expect(")");
		return e;
	}
	ts.fail("expected an expression");
}

ExprPtr parse_power(TokenStream &ts)
{
	auto base = parse_primary(ts);
	SourcePos pos = ts.peek().pos;
	if (ts.accept("^"))
		return make(Expr::Pow, pos, {base, parse_unary(ts)});
	return base;
}

ExprPtr parse_unary(TokenStream &ts)
{
	SourcePos pos = ts.peek().pos;
	if (ts.accept("-"))
		return make(Expr::Neg, pos, {parse_unary(ts)});
	if (ts.accept("+"))
		return parse_unary(ts);
	return parse_power(ts);
}

ExprPtr parse_term(TokenStream &ts)
{
	auto lhs = parse_unary(ts);
	while (true) {
		SourcePos pos = ts.peek().pos;
		if (ts.accept("*"))
			lhs = make(Expr::Mul, pos, {lhs, parse_unary(ts)});
		else if (ts.accept("/"))
			lhs = make(Expr::Div, pos, {lhs, parse_unary(ts)});
		else
			return lhs;
	}
}

int precedence(const Expr &e)
{
	switch (e.kind) {
	case Expr::Add:
	case Expr::Sub:
		return 1;
	case Expr::Mul:
	case Expr::Div:
		return 2;
	case Expr::Neg:
		return 3;
	case Expr::Pow:
		return 4;
	default:
		return 5;
	}
}

std::string wrap(const Expr &e, int min_prec)
{
	std::string s = print_expr(e);
	return precedence(e) < min_prec ? "(" + s + ")" : s;
}

} // namespace

ExprPtr parse_expr(TokenStream &ts)
{
	auto lhs = parse_term(ts);
	while (true) {
		SourcePos pos = ts.peek().pos;
		if (ts.accept("+"))
			lhs = make(Expr::Add, pos, {lhs, parse_term(ts)});
		else if (ts.accept("-"))
			lhs = make(Expr::Sub, pos, {lhs, parse_term(ts)});
		else
			return lhs;
	}
}

ExprPtr parse_expr(const std::string &src)
{
	TokenStream ts(tokenize(src));
	auto e = parse_expr(ts);
	if (!ts.at_end())
		ts.fail("unexpected trailing input");
	return e;
}

std::string print_expr(const Expr &e)
{
	switch (e.kind) {
	case Expr::Num:
		return e.value.get_str();
	case Expr::Sym:
		return e.name;
	case Expr::Call: {
		std::string s = e.name + "(";
		for (size_t k = 0; k < e.args.size(); k++)
			s += (k ? ", " : "") + print_expr(*e.args[k]);
		return s + ")";
	}
	case Expr::Neg:
		return "-" + wrap(*e.args[0], 3);
	case Expr::Pow:
		return wrap(*e.args[0], 5) + "^" + wrap(*e.args[1], 5);
	case Expr::Add:
		return wrap(*e.args[0], 1) + " + " + wrap(*e.args[1], 2);
	case Expr::Sub:
		return wrap(*e.args[0], 1) + " - " + wrap(*e.args[1], 2);
	case Expr::Mul:
		return wrap(*e.args[0], 2) + "*" + wrap(*e.args[1], 3);
	case Expr::Div:
		return wrap(*e.args[0], 2) + "/" + wrap(*e.args[1], 3);
	}
	return {};
}

namespace {

long eval_exponent(const Expr &e)
{
	if (e.kind == Expr::Num)
		return e.value.get_si();
	if (e.kind == Expr::Neg)
		return -eval_exponent(*e.args[0]);
	throw ParseError(e.pos, "exponent must be an integer literal");
}

} // namespace

RatFunc eval_ratfunc(const Expr &e, Field K, const std::map<std::string, RatFunc> &env)
{
	switch (e.kind) {
	case Expr::Num:
		return RatFunc(FieldScalar(K, Rational(e.value)));
	case Expr::Sym: {
		if (e.name == "x")
			return RatFunc(MultiPoly::x(K));
		if (e.name == "y")
			return RatFunc(MultiPoly::y(K));
		if (!K->is_rational() && e.name == K->symbol)
			return RatFunc(FieldScalar::generator(K));
		auto it = env.find(e.name);
		if (it == env.end())
			throw ParseError(e.pos, "unknown name '" + e.name + "'");
		return it->second;
	}
	case Expr::Call:
		throw ParseError(e.pos, "unknown function '" + e.name + "'");
	case Expr::Neg:
		return -eval_ratfunc(*e.args[0], K, env);
	case Expr::Pow: {
		long n = eval_exponent(*e.args[1]);
		RatFunc b = eval_ratfunc(*e.args[0], K, env);
		if (n < 0 && b.is_zero())
			throw ParseError(e.pos, "division by zero");
		return pow(b, n);
	}
	case Expr::Add:
		return eval_ratfunc(*e.args[0], K, env) + eval_ratfunc(*e.args[1], K, env);
	case Expr::Sub:
		return eval_ratfunc(*e.args[0], K, env) - eval_ratfunc(*e.args[1], K, env);
	case Expr::Mul:
		return eval_ratfunc(*e.args[0], K, env) * eval_ratfunc(*e.args[1], K, env);
	case Expr::Div: {
		RatFunc d = eval_ratfunc(*e.args[1], K, env);
		if (d.is_zero())
			throw ParseError(e.pos, "division by zero");
		return eval_ratfunc(*e.args[0], K, env) / d;
	}
	}
	throw ParseError(e.pos, "bad expression");
}

RatFunc parse_ratfunc(const std::string &src, Field K) { return eval_ratfunc(*parse_expr(src), K); }

MultiPoly parse_poly(const std::string &src, Field K)
{
	RatFunc r = parse_ratfunc(src, K);
	if (!r.is_polynomial())
		throw ParseError(SourcePos{}, "not a polynomial: " + src);
	return r.num() * r.den().constant_term().inverse();
}

} // namespace webcurv
