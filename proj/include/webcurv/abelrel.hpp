#pragma once

#include "webcurv/geometry.hpp"

#include <map>
#include <optional>

namespace webcurv {

// pairwise coprime square-free non-constant polynomials g_i; L_i stands for log g_i
struct LogBasis
{
	std::vector<MultiPoly> gens;
	explicit LogBasis(std::vector<MultiPoly> g);
	size_t size() const { return gens.size(); }
};

// Symbols 0..n-1 are the logs of the basis generators, further symbols are logs of constants
// (registered in constants) whose differential vanishes.
struct LogExpression
{
	RatFunc rational;
	std::map<int, FieldScalar> linear;
	std::map<std::pair<int, int>, FieldScalar> quadratic; // keys with first <= second
	std::vector<FieldScalar> constants;

	LogExpression &operator+=(const LogExpression &o);
	LogExpression operator*(const FieldScalar &s) const;
	bool is_zero() const { return rational.is_zero() && linear.empty() && quadratic.empty(); }
	// symbol of log c, registering c when new
	int constant_symbol(const FieldScalar &c, size_t basis_size);
};

// d of a LogExpression: a rational 1-form plus 1-forms multiplying each log symbol
struct LogOneForm
{
	OneForm rational;
	std::map<int, OneForm> by_symbol;
	bool is_zero() const;
};
LogOneForm d_log_expression(const LogExpression &e, const LogBasis &B);

// log of a rational function as a combination of basis logs plus the log of a constant
struct LogDecomposition
{
	std::map<int, long> exponents;
	FieldScalar constant;
};
// nullopt when the argument is not a constant times a product of generator powers
std::optional<LogDecomposition> decompose_log(const RatFunc &r, const LogBasis &B);

// one-variable function t -> A(t) (A stored as a rational function of x), composed with u
RatFunc compose(const RatFunc &A, const RatFunc &u);

struct RelationTerm
{
	enum Kind { Rational, Log, LogProduct };
	size_t foliation = 0;
	FieldScalar coeff = FieldScalar(1);
	Kind kind = Rational;
	RatFunc A, B; // functions of t, written in the variable x
};

struct RelationCandidate
{
	enum Kind { Polynomial, Logarithmic, LogSquared };
	std::string name;
	Web web;
	Kind declared_kind = Polynomial;
	std::vector<RatFunc> first_integrals; // one per foliation of the web
	std::vector<RelationTerm> terms;      // sum of coeff * term(u_i) = 0
	std::optional<LogBasis> basis;
};

struct RelationVerdict
{
	bool well_formed = false;      // every first integral passes is_first_integral
	bool symbolic_d_zero = false;
	bool constant_checked = false; // numeric constant check performed
	bool exact = false;            // decided by exact arithmetic alone
	double constant_residual = 0;  // |residual| after reduction modulo 2 pi i for log-linear relations
	AffinePoint base;
	bool passed = false;
	std::string detail;
};
RelationVerdict verify_relation(const RelationCandidate &r);

int pi_bound(int n, int k);

struct JetRelationSpace
{
	AffinePoint base;
	int order = 0, degree_cap = 0;
	int kernel_dimension = 0;
	int previous_dimension = 0; // at order - 1
	bool stabilized = false;      // equal dimensions at N - 1 and N, both systems overdetermined
	bool meets_order_heuristic = false; // N >= 2 pi(2, k)
	std::vector<std::vector<FieldScalar>> kernel; // coefficient vectors, foliation-major, degree 1..D
};

// jets of u_i - u_i(base)
JetRelationSpace jet_rank(const std::vector<JetSeries> &jets, int D);
// missing first integrals are replaced by the formal one normalized on the horizontal line through base
JetRelationSpace jet_rank(const Web &W, const std::vector<std::optional<RatFunc>> &integrals, const AffinePoint &base, int N,
                          int D);
// formal first integral u with u(x, y0) = x - x0
JetSeries formal_first_integral(const Foliation &F, const AffinePoint &base, int N);
// deterministic scan of small-height rational points off the discriminant and the polar loci
AffinePoint choose_base_point(const Web &W, const std::vector<std::optional<RatFunc>> &integrals);

} // namespace webcurv
