#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "sesquiop/io_util.hpp"
#include "sesquiop/spectral.hpp"
#include "sesquiop/verification.hpp"

namespace sesquiop {

nlohmann::json to_json(const ResidualReport& rep);
nlohmann::json to_json(const SpectralReport& rep);

// Aggregate CSV: one row per check, 17-significant-digit floats, fixed
// column and row order so identical runs are byte-identical.
std::string residual_csv(const std::vector<ResidualReport>& reps);
std::string spectral_csv(const SpectralReport& rep);

// Markdown summaries round to 3 significant digits.
std::string residual_markdown(const std::vector<ResidualReport>& reps);
std::string spectral_markdown(const SpectralReport& rep);

}  // namespace sesquiop
