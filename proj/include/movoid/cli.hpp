#pragma once

namespace movoid {

/// Entry point of the movoid tool. Exit codes: 0 success / all checks pass,
/// 1 verification failure, 2 usage or parameter error.
int cli_run(int argc, const char* const* argv);

} // namespace movoid
