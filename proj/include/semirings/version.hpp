#pragma once

namespace semirings {

inline constexpr const char* kEngineVersion = "1.0.0";

}  // namespace semirings
