#pragma once

#include "webcurv/geometry.hpp"

namespace webcurv {

struct PlotOptions
{
	double x0 = -2, x1 = 2, y0 = -2, y1 = 2;
	int grid = 512;
	int levels = 24; // contour levels per foliation
};

// Real leaves of each foliation as an SVG 1.1 document. Level curves of the first integral by marching
// squares where one is given, integral curves of the direction field otherwise. Foliations whose data
// is not real are skipped with a warning.
std::string plot_svg(const Web &W, const std::vector<std::optional<RatFunc>> &integrals, const PlotOptions &o,
                     std::vector<std::string> &warnings);

} // namespace webcurv
