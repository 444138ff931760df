#include "lagkit/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "lagkit/constructor.hpp"

namespace lagkit {

namespace {

using nlohmann::json;

json number(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

json vec_json(const ComplexVec& v) {
  json out = json::array();
  for (const auto& z : v.components()) out.push_back({z.re, z.im});
  return out;
}

json check_json(const CheckResult& c) {
  json j = {{"max", number(c.max_residual)},
            {"mean", number(c.mean_residual)},
            {"tol", c.tolerance},
            {"pass", c.pass},
            {"worst_point", c.worst_point},
            {"points", c.points_evaluated},
            {"status", status_name(c.status)}};
  if (!c.message.empty()) j["message"] = c.message;
  return j;
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

}  // namespace

const char* status_name(CheckStatus status) {
  switch (status) {
    case CheckStatus::ok: return "ok";
    case CheckStatus::skipped: return "skipped";
    case CheckStatus::error: return "error";
  }
  return "?";
}

std::string report_json(const CheckReport& report) {
  json j;
  j["spec_name"] = report.spec_name;
  j["transform"] = report.transform
                       ? json{{"center", vec_json(report.transform->center)},
                              {"scale", report.transform->scale}}
                       : json(nullptr);
  json checks = json::object();
  for (const auto& [name, c] : report.checks) checks[name] = check_json(c);
  j["checks"] = checks;
  j["sphere_fit"] = report.sphere_fit
                        ? json{{"center", vec_json(report.sphere_fit->center)},
                               {"radius_sq_signed", report.sphere_fit->radius_sq_signed},
                               {"rms_residual", report.sphere_fit->rms_residual}}
                        : json(nullptr);
  return j.dump(2) + "\n";
}

std::string report_text(const CheckReport& report) {
  std::ostringstream os;
  os << (report.spec_name.empty() ? "<unnamed>" : report.spec_name) << "\n";
  for (const auto& [name, c] : report.checks) {
    const char* verdict = c.status == CheckStatus::skipped ? "SKIP"
                          : c.status == CheckStatus::error ? "ERROR"
                          : c.pass                         ? "PASS"
                                                           : "FAIL";
    os << "  " << verdict << "  " << name;
    if (c.status != CheckStatus::skipped && c.points_evaluated > 0) {
      os << "  max=" << sci(c.max_residual) << " tol=" << sci(c.tolerance)
         << " points=" << c.points_evaluated;
    }
    if (!c.message.empty()) os << "  (" << c.message << ")";
    os << "\n";
  }
  if (report.sphere_fit) {
    os << "  sphere fit: r^2=" << sci(report.sphere_fit->radius_sq_signed)
       << " rms=" << sci(report.sphere_fit->rms_residual) << "\n";
  }
  os << (report.all_passed() ? "all checks passed" : "some checks failed") << "\n";
  return os.str();
}

std::string catalog_json() {
  json out = json::array();
  for (const auto& e : catalog_entries()) {
    const ImmersionSpec spec = catalog(e.name);
    out.push_back({{"name", e.name},
                   {"summary", e.summary},
                   {"n", spec.signature.n()},
                   {"s", spec.signature.s()},
                   {"params", spec.num_params()},
                   {"expected_index", spec.expected_index ? json(*spec.expected_index)
                                                          : json(nullptr)},
                   {"quadric", spec.quadric_c ? json(*spec.quadric_c) : json(nullptr)},
                   {"expected_pass", e.expected_pass},
                   {"expected_fail", e.expected_fail}});
  }
  return out.dump(2) + "\n";
}

std::string crosscheck_json(const CrosscheckResult& result) {
  json orders = json::array();
  for (const auto& o : result.orders) {
    orders.push_back({{"order", o.order},
                      {"step", o.step},
                      {"tol", o.tolerance},
                      {"max_deviation", number(o.max_deviation)},
                      {"pass", o.pass}});
  }
  return json{{"orders", orders}, {"points", result.points_evaluated}, {"pass", result.pass()}}
             .dump(2) +
         "\n";
}

}  // namespace lagkit
