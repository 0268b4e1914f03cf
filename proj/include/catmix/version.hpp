#pragma once

namespace catmix {

inline constexpr const char* kVersion = "0.1.0";

} // namespace catmix
