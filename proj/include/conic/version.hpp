#pragma once

namespace conic {

inline constexpr const char* kToolVersion = "1.0.0";

}
