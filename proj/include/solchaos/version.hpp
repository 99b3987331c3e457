#pragma once

namespace solchaos {

inline constexpr const char* kVersion = "0.1.0";

}
