#pragma once

#include <string>
#include <vector>

namespace topecycle {

// Dispatches the subcommands gen | graph | lattice | cycle | verify | sweep.
// Returns the process exit status: 0 on success, 1 when a verification or
// sweep fails, 2 on usage and input errors.  The environment variable
// TOPECYCLE_SEED overrides the generic-direction seed.
int cli_run(const std::vector<std::string>& args);

} // namespace topecycle
