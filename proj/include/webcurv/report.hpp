#pragma once

#include "webcurv/catalog.hpp"
#include "webcurv/dsl.hpp"

namespace webcurv {

inline constexpr const char *tool_version = "1.0.0";
inline constexpr const char *report_schema = "webcurv-report/1";

struct CheckRecord
{
	enum Status { Pass, Fail, Skip };
	std::string name;
	Status status = Skip;
	std::string witness; // filled on failure
	std::vector<std::pair<std::string, std::string>> data; // extra key/value output, printed in order
	double seconds = 0;
};

struct Report
{
	std::string target;
	std::vector<CheckRecord> checks;

	bool passed() const;
	// wall times are left out unless asked for, so that reports are byte-identical across runs
	std::string json(bool timings = false) const;
};

// FNV-1a, as 16 hex digits
std::string spec_hash(const std::string &text);

// lowest-degree terms of the curvature numerator, capped in length
std::string curvature_witness(const TwoForm &K);

// flatness, first integrals, attached relations and the polar row
Report verify_entry(const CatalogEntry &e, int threads = 0);
// verify directives of the document, or every web when there are none
Report verify_workspace(const Workspace &ws, const std::string &target, int threads = 0);

struct RankOptions
{
	int order = 12;
	std::optional<int> degree;      // defaults to the order
	std::optional<AffinePoint> base; // defaults to the deterministic scan
};
Report rank_report(const std::string &target, const Web &W, const std::vector<std::optional<RatFunc>> &integrals,
                   const RankOptions &o);

} // namespace webcurv
