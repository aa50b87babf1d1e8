#pragma once

#include "webcurv/abelrel.hpp"
#include "webcurv/webops.hpp"

namespace webcurv {

struct CatalogError : std::runtime_error
{
	using std::runtime_error::runtime_error;
};

struct CatalogEntry
{
	std::string id;
	CDQLWeb cdql;
	Field field = rationals();
	bool expected_flat = true;
	std::optional<int> expected_rank;
	std::optional<int> rank_strictly_below; // set when only an upper bound is known
	std::optional<RatFunc> first_integral;  // of the nonlinear foliation
	// one slot per foliation of web(); empty where no rational first integral is known
	std::vector<std::optional<RatFunc>> integrals;
	std::vector<RelationCandidate> relations;
	std::optional<std::string> polar_row;

	Web web() const { return cdql.web(); }
	// the points of the configuration on the line at infinity, as [X:Y]
	std::vector<P1Point> points_at_infinity() const;
};

// A_I (k >= 4), A_II (k >= 3), A_III (k >= 2), A_IV (k >= 1); smaller k only with allow_small
CatalogEntry family(const std::string &name, int k, bool allow_small = false);
// refuses k above max_k, a runtime guard
CatalogEntry family_guarded(const std::string &name, int k, int max_k = 6);
CatalogEntry sporadic(const std::string &id);
CatalogEntry flat_nonexceptional(const std::string &id);
// any id accepted by the command line: sporadic ids, flat ids and family ids such as A_III^2
CatalogEntry catalog_entry(const std::string &id);
std::vector<std::string> sporadic_ids();
std::vector<std::string> flat_nonexceptional_ids();
std::vector<std::string> catalog_ids(); // sporadic, flat, then families with k <= 6

// first integral of the pencil of lines through p
RatFunc pencil_integral(const ProjPoint &p);

struct FiberPattern
{
	int at_q = 0, at_hat = 0; // f^-1(q_i) = at_q q_i + at_hat hat(q_i)
};

struct Table1Row
{
	std::string label;
	PolarMap map;
	int k_ell = 3;
	std::vector<FiberPattern> pattern; // indexed like the q_i; rows with one entry apply it to every q_i
	const FiberPattern &fiber(size_t i) const { return pattern.size() == 1 ? pattern[0] : pattern.at(i); }
};
Table1Row table1_row(const std::string &label);
std::vector<std::string> table1_labels();

struct RowMatch
{
	std::string label;
	Mobius normalization;       // sends the chosen q_1, q_2, q_3 to [1:0], [0:1], [1:-1]
	std::vector<P1Point> q;     // normalized points in row order
	PolarMap normalized_map;
};
// searches all orderings of the q's for a row of the same cardinality whose normal form is proportional
std::optional<RowMatch> match_table1(const PolarMap &f, const std::vector<P1Point> &qs);
// compares polar fibers with the row's pattern, hats taken relative to the other q's
bool fibers_match(const Table1Row &row, const PolarMap &f, const std::vector<P1Point> &q);

} // namespace webcurv
