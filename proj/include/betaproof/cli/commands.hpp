#pragma once

#include "betaproof/cli/config.hpp"

#include <iosfwd>

namespace betaproof::cli {

// Each command returns its exit code: 0 success, 1 a failed check, 3 an
// output file that cannot be written. Reports go to cfg.output_path when set,
// otherwise to `out`; warnings and failure lists go to `err`.

/// Replays the full argument. Exit 0 iff every step verified.
int cmd_replay(const RunConfig& cfg, std::ostream& out, std::ostream& err);
/// Encloses the roots x1..x5 of q1..q5 and checks the printed digits.
int cmd_roots(const RunConfig& cfg, std::ostream& out, std::ostream& err);
/// Reproduces the numeric constants next to their printed prefixes.
int cmd_constants(const RunConfig& cfg, std::ostream& out, std::ostream& err);
/// Evaluates the polygamma sandwich at x = cfg.bounds_x.
int cmd_bounds(const RunConfig& cfg, std::ostream& out, std::ostream& err);
/// Grid sweep of the lower bound and its comparison bounds.
int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses argv (flags, BETAPROOF_* environment overrides), validates and
/// dispatches. Configuration errors return 2.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace betaproof::cli
