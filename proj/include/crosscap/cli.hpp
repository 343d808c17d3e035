#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "crosscap/bifurcation.hpp"

namespace crosscap::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kInvalidConfig = 2,
  kIoError = 3,
};

/// Entry point; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// The verify command against an arbitrary catalog.
int verify(const GermCatalog& catalog, unsigned order, std::ostream& out);

nlohmann::json curve_json(const BifurcationCurve& curve);

}  // namespace crosscap::cli
