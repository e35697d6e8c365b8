#pragma once

namespace massbound {

inline constexpr const char* kArtifactName = "massbound";
inline constexpr const char* kArtifactVersion = "1.0.0";

}  // namespace massbound
