#pragma once

namespace pdisc {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace pdisc
