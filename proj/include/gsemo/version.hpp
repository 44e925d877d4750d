#pragma once

namespace gsemo {
inline constexpr const char* kVersion = "0.1.0";
}
