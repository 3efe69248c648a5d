#pragma once

namespace idpd {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kReportSchema = "idpd-report/1";

} // namespace idpd
