#pragma once

namespace natmap {

inline constexpr const char* kToolName = "natmap";
inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kConfigSchemaVersion = 1;
inline constexpr int kReportSchemaVersion = 1;

}  // namespace natmap
