#pragma once

#include <string>
#include <vector>

#include "chebseq/stats.hpp"

namespace chebseq {

/// Scatter plot of (N, log log term) with the fitted line, as a small
/// self-contained SVG document.
std::string scatter_svg(const std::vector<LogLogPoint>& points, const FitReport& fit,
                        const std::string& title);

}  // namespace chebseq
