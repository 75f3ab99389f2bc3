#pragma once

#include "ccm/border.hpp"
#include "ccm/features.hpp"
#include "ccm/path_search.hpp"
#include "ccm/potential.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace ccm {

/// Plain numeric CSV, one matrix row per line, full round-trip precision.
std::string matrix_csv(const Eigen::MatrixXd& m);
Eigen::MatrixXd parse_matrix_csv(std::string_view text);

/// index,w,h per curve point.
std::string curve_csv(const ClosedCurve& curve);

/// One row per curve point; columns named win{3,7,13}_{w,h,sum,diff,angle}_d{0,1,2}.
std::string features_csv(const FeatureMatrix<double>& features, const FeatureOptions& options = {});

nlohmann::json to_json(const MatchResult<double>& result);
/// Reads the "path" array (and wrap counts if present) of a MatchResult document.
TorusPath path_from_json(const nlohmann::json& doc);

} // namespace ccm
