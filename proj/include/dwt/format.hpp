#pragma once

#include <string>

namespace dwt {

/// Shortest of fixed/scientific with `digits` significant digits ("%.6g").
std::string format_sig(double v, int digits = 6);

/// Integral values without a decimal point, others as format_sig.
std::string format_count(double v);

}  // namespace dwt
