#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gwb/algebra/polynomial.hpp"

namespace gwb::algebra {

/// Parses infix polynomial text such as "x1^2 - 3/4*y1 + (1+2*i)*x2" over the
/// given variable names. Division is only allowed by integer literals; `i` is
/// the imaginary unit unless it is itself a variable name.
Polynomial parse_polynomial(std::string_view text, std::span<const std::string> names,
                            MonomialOrder order = MonomialOrder::grevlex());

std::vector<Polynomial> parse_polynomials(std::span<const std::string_view> texts,
                                          std::span<const std::string> names,
                                          MonomialOrder order = MonomialOrder::grevlex());

}  // namespace gwb::algebra
