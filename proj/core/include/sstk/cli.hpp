// Batch command-line front end. One subcommand per run; the report is a
// single newline-terminated JSON document on standard output, human-readable
// summaries go to standard error. Exit 0 on success, 1 when a check fails
// (the report is still emitted), 2 on input errors.
#pragma once

namespace sstk {

int cli_main(int argc, const char* const* argv);

}  // namespace sstk
