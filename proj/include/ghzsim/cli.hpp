#pragma once

namespace ghzsim {

// Full command-line front end; returns the process exit code.
// 0 success, 1 usage error, 2 numerical-quality failure, 3 validation failure.
int cli_main(int argc, const char* const* argv);

} // namespace ghzsim
