// Deployment-plan and coverage-report JSON (schema_version 1). Keys are
// emitted sorted and every floating-point value is rounded to 9 significant
// digits before serialization, so repeated runs are byte-identical.
#pragma once

#include "uavcov/coverage.hpp"
#include "uavcov/placement.hpp"

#include <string>

namespace uavcov {

/// Value-level rounding to `digits` significant decimal digits.
double round_sig(double x, int digits = 9);

std::string deployment_to_json(const DeploymentPlan& plan,
                               const BuildingDims& building);
void write_deployment(const std::string& path, const DeploymentPlan& plan,
                      const BuildingDims& building);

/// Throws std::runtime_error naming the first offending/missing key.
DeploymentPlan read_deployment(const std::string& path);
DeploymentPlan deployment_from_json(const std::string& text);

std::string report_to_json(const CoverageReport& report, const HoleSet& holes);

}  // namespace uavcov
