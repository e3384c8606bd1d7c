#pragma once

namespace growthacct {

inline constexpr const char* kToolVersion = "0.1.0";

} // namespace growthacct
