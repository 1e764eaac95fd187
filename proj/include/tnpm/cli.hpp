#pragma once

namespace tnpm {

/// Full command-line surface (generate | fit | select | metrics). Returns the
/// process exit code; failures emit one machine-readable JSON object on
/// stderr.
int run_cli(int argc, const char* const* argv);

}  // namespace tnpm
