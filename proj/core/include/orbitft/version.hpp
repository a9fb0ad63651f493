#pragma once

namespace orbitft {

inline constexpr const char* tool_version = "0.1.0";
inline constexpr int schema_version = 1;

}
