#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace pcf::cli {

/// Runs one command line (without the program name). Returns 0 on pass,
/// 1 when a verification does not pass, 2 on usage or input errors.
int dispatch(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace pcf::cli
