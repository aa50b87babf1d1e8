#pragma once

#include "webcurv/ratfunc.hpp"

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace webcurv {

struct SourcePos
{
	int line = 1, col = 1;
	std::string str() const { return std::to_string(line) + ":" + std::to_string(col); }
};

struct ParseError : std::runtime_error
{
	SourcePos pos;
	ParseError(SourcePos p, const std::string &msg) : std::runtime_error(p.str() + ": " + msg), pos(p) {}
};

enum class Tok { End, Number, Ident, Punct };

struct Token
{
	Tok kind = Tok::End;
	std::string text;
	SourcePos pos;
};

// '#' starts a comment running to the end of the line
std::vector<Token> tokenize(const std::string &src);

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr
{
	enum Kind { Num, Sym, Add, Sub, Mul, Div, Neg, Pow, Call };
	Kind kind;
	Integer value;          // Num
	std::string name;       // Sym, Call
	std::vector<ExprPtr> args;
	SourcePos pos;

	// structural, positions ignored
	bool operator==(const Expr &o) const;
};

class TokenStream
{
public:
	explicit TokenStream(std::vector<Token> t) : t_(std::move(t)) {}
	const Token &peek(int ahead = 0) const;
	Token next();
	bool accept(const std::string &punct);
	Token expect(const std::string &punct);
	Token expect_ident();
	bool at_end() const { return peek().kind == Tok::End; }
	[[noreturn]] void fail(const std::string &msg) const;

private:
	std::vector<Token> t_;
	size_t i_ = 0;
};

ExprPtr parse_expr(TokenStream &ts);
ExprPtr parse_expr(const std::string &src);
std::string print_expr(const Expr &e);

// x, y and the field generator symbol are predefined; other names come from env
RatFunc eval_ratfunc(const Expr &e, Field K, const std::map<std::string, RatFunc> &env = {});
RatFunc parse_ratfunc(const std::string &src, Field K = rationals());
MultiPoly parse_poly(const std::string &src, Field K = rationals());

} // namespace webcurv
