#ifndef CARTIER_RUN_HPP
#define CARTIER_RUN_HPP

#include <string>

#include "cartier/config.hpp"
#include "cartier/error.hpp"

namespace cartier {

struct RunResult {
  std::string report;
  int exit_code = 0;
};

// Executes one job and renders the deterministic text report. All engine
// errors are caught and mapped onto exit codes (2 config/parse, 3 resource
// caps, 4 verification failures).
RunResult run_job(const JobConfig& cfg);

int exit_code_for(ErrorKind kind);

}  // namespace cartier

#endif
