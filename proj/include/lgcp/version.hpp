#pragma once

namespace lgcp {

inline constexpr const char* kVersion = "0.1.0";

}
