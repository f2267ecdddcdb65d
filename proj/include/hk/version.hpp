#pragma once

namespace hk {

// Engine version: bump whenever a change could alter any computed number
// (colengths, estimates, bounds); cached results from other versions are
// ignored.
inline constexpr const char* engine_version = "1.0.0";

} // namespace hk
