#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lagkit/dsl.hpp"

namespace lagkit {

// L(t, u) = exp(i*t) * psi(u), built on the AST.
//
// psi must have n-1 parameters in C^n. The result prepends t:[0, 2*pi],
// keeps the signature and declared quadric (|e^{it}|=1 preserves <z,z>), and
// sets expected_index to psi's index plus one when the quadric is
// hyperbolic (t is then timelike).
ImmersionSpec circle_product(const ImmersionSpec& psi, const std::string& t_name = "t");

struct CatalogEntry {
  std::string name;
  std::string summary;
  std::string source;  // canonical DSL text
  std::vector<std::string> expected_pass;
  std::vector<std::string> expected_fail;
};

const std::vector<CatalogEntry>& catalog_entries();
const CatalogEntry& catalog_entry(std::string_view name);  // throws UsageError
ImmersionSpec catalog(std::string_view name);              // throws UsageError
bool in_catalog(std::string_view name);

}  // namespace lagkit
