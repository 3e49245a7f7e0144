#pragma once

namespace fibdual {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace fibdual
