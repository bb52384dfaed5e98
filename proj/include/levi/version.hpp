#pragma once

namespace levi {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace levi
