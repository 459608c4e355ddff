#pragma once

#include <ostream>

namespace solenoid::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitSelftestFailed = 1;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitUnknown = 3;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace solenoid::cli
