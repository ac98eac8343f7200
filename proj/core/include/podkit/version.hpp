#pragma once

namespace podkit {

inline constexpr const char* kToolVersion = "podkit 0.1.0";

}  // namespace podkit
