#pragma once

namespace scrollulrich {

inline constexpr const char* kEngineName = "scroll-ulrich";
inline constexpr const char* kEngineVersion = "0.1.0";

}  // namespace scrollulrich
