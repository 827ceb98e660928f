#pragma once

namespace regula {
inline constexpr const char* kVersion = "0.1.0";
}
