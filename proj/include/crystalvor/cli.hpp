#pragma once

#include <iosfwd>

namespace crystalvor {

/// Entry point of the crystalvor command. Returns 0 on success, 1 when a
/// verification finds a violation and 2 on usage or input errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace crystalvor
