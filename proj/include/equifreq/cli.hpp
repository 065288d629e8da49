#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace equifreq::cli {

// Parses and runs one CLI invocation (argv without the program name).
// Results go to `out`, diagnostics to `err`. Exit codes: 0 success (or
// verified equal), 1 verified not-equal or an enumeration that found nothing,
// 2 usage or domain error. Output is byte-deterministic for fixed inputs.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace equifreq::cli
