#pragma once

namespace dedekind {

inline constexpr const char* kVersion = "0.1.0";

}
