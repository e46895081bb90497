#pragma once

namespace honeylab {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace honeylab
