#pragma once

#include <string>
#include <vector>

#include "mutarate/rate_model.hpp"

namespace mutarate {

// Scatter of observations, fitted curve and its confidence band
// (x = elapsed days, y = distance). Output is deterministic.
std::string render_rate_svg(const std::vector<RateObservation>& obs, const RateFit& fit,
                            const std::string& title);

}  // namespace mutarate
