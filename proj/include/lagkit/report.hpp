#pragma once

// Stable JSON for check reports and the catalog listing:
//
//   {"spec_name": ..., "transform": {"center": [[re, im], ...], "scale": r} | null,
//    "checks": {name: {"max", "mean", "tol", "pass", "worst_point", "points",
//                      "status", "message"?}},
//    "sphere_fit": {"center", "radius_sq_signed", "rms_residual"} | null}
//
// Keys are sorted. Residuals that were never computed are null.

#include <string>

#include "lagkit/differentiation.hpp"
#include "lagkit/verifier.hpp"

namespace lagkit {

std::string report_json(const CheckReport& report);
std::string report_text(const CheckReport& report);
std::string catalog_json();
std::string crosscheck_json(const CrosscheckResult& result);

const char* status_name(CheckStatus status);

}  // namespace lagkit
