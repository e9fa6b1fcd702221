#pragma once

namespace spinent {
inline constexpr const char* kVersion = "0.1.0";
}
