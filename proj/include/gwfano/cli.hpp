#pragma once

#include <ostream>

namespace gwfano {

// Exit codes: 0 success, 1 invalid input, 2 mathematical consistency failure.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gwfano
