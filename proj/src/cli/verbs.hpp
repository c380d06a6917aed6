#pragma once

#include "gwb/cli/cli.hpp"

namespace gwb::cli {

Outcome replay(const Context& ctx);

}  // namespace gwb::cli
