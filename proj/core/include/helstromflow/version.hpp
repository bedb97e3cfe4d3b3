#pragma once

namespace hflow {

inline constexpr const char* version = "0.1.0";

} // namespace hflow
