#pragma once

namespace cech23 {

inline constexpr const char* version_string = "0.1.0";

}
