#pragma once

namespace liqshock {

// Batch front door. Exit codes: 0 ok, 2 validation error, 3 solver
// failure, 4 audit or convergence-gate failure.
int run_cli(int argc, char** argv);

}  // namespace liqshock
