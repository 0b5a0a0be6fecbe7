#include "decpoisson/format.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace decp {

std::string format_double(double value) {
    if (std::isnan(value)) {
        return "nan";
    }
    std::array<char, 32> buffer{};
    const auto result = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
    return {buffer.data(), result.ptr};
}

}  // namespace decp
