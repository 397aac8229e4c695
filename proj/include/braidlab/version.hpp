#pragma once

namespace braidlab {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace braidlab
