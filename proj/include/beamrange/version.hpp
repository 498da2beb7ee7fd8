#pragma once

namespace beamrange {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace beamrange
