#include "dwt/format.hpp"

#include <cmath>
#include <cstdio>

namespace dwt {

std::string format_sig(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

std::string format_count(double v) {
    if (std::isfinite(v) && std::abs(v) < 1e15 && v == std::floor(v)) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.0f", v);
        return buf;
    }
    return format_sig(v);
}

}  // namespace dwt
