#pragma once

namespace matroots {
inline constexpr const char* kVersion = "0.1.0";
}
