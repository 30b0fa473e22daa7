#pragma once

#include "fuzdeg/verify.hpp"

namespace fuzdeg {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCapacity = 3;

/// Exit status of the verify command for a finished report.
inline int verify_exit_code(const VerificationReport& report) {
  return report.all_passed() ? kExitOk : kExitVerifyFailed;
}

}  // namespace fuzdeg
