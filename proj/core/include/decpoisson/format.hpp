#pragma once

#include <string>

namespace decp {

/// Shortest decimal that round-trips to the same double ("0.125", "1e-10").
[[nodiscard]] std::string format_double(double value);

}  // namespace decp
