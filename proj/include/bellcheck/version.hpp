#pragma once

namespace bellcheck {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kReportSchema = "bellcheck-report/1";
inline constexpr const char* kConjectureSchema = "bellcheck-conjecture/1";

}  // namespace bellcheck
