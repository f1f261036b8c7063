#pragma once

#include <string>
#include <vector>

namespace entgeo::cli {

/// Entry point for the entgeo command line. Returns 0 on success, 2 on
/// usage errors and 1 on computation or input-data errors; diagnostics go
/// to the error stream.
int run(const std::vector<std::string>& args);

}  // namespace entgeo::cli
