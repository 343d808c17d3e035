#pragma once

// Reference coefficients of the strata curves for families (c), (d+) and (d-),
// checked against freshly derived curves.

#include <iosfwd>
#include <string>
#include <vector>

#include "crosscap/bifurcation.hpp"

namespace crosscap {

struct VerificationRow {
  std::string id;        // e.g. "(c)(2) alpha^3 coefficient"
  std::string expected;
  std::string computed;
  bool pass = false;
};

/// Runs every row against the catalog; no file access.
std::vector<VerificationRow> run_verification(const GermCatalog& catalog, unsigned order = kDefaultOrder);

/// One line per row; returns true when all rows pass.
bool print_verification(std::ostream& os, const std::vector<VerificationRow>& rows);

/// p == c * q for a nonzero rational c.
bool proportional(const MultiPoly& p, const MultiPoly& q);

}  // namespace crosscap
