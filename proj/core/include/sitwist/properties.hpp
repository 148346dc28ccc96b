#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sitwist/catalog.hpp"

namespace sitwist {

// Randomized law checks. Each suite draws from its own generator, seeded
// from the global seed and the suite name, so results do not depend on
// which other suites run.
struct PropertyOptions {
  std::uint64_t seed = 20240611;
  int cases = 1000;
};

struct PropertyResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;
  double seconds = 0;

  bool passed() const noexcept { return cases > 0 && failures == 0; }
};

std::vector<std::string> property_names();
// Throws DomainError for an unknown name. The naturality suite needs a
// catalog with at least one curve.
PropertyResult run_property(const std::string& name, const PropertyOptions& options, const Catalog& catalog);
std::vector<PropertyResult> run_properties(const PropertyOptions& options, const Catalog& catalog);

Json to_json(const PropertyResult& r);
std::string to_text(const PropertyResult& r);

}  // namespace sitwist
