#pragma once

// Plain-text forms of an OrderElement:
//   v-basis:  [g1,g2,g3,g4]
//   half:     (A+Bi+Cr2j+Dr2k)/2   meaning (A + B i + C sqrt2 j + D sqrt2 k)/2
// In the half form any term may be omitted and a bare unit coefficient may be
// dropped, so "(2+2i)/2" and "(1+i+r2j)/2" both parse.

#include <string>
#include <string_view>

#include "hquat/quat.hpp"

namespace hquat {

// Throws InvalidArgument on malformed text or a parity violation.
OrderElement parse(std::string_view text);

std::string format(const OrderElement& e);
std::string format_half(const OrderElement& e);

}  // namespace hquat
