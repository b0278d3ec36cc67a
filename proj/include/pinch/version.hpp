#pragma once

namespace pinch {

inline constexpr const char* kVersion = "0.1.0";

} // namespace pinch
