#pragma once

#include <string>

#include "sqnmr/config.hpp"

namespace sqnmr {

// executes one subcommand and writes its CSV outputs plus a JSON manifest
// into out_dir (created if missing). throws config_error for unknown names
// or invalid settings, precondition_error for numerical gate failures, and
// std::runtime_error for io failures.
void run_subcommand(const std::string& name, const RunConfig& cfg, const std::string& out_dir,
                    int n_threads);

} // namespace sqnmr
