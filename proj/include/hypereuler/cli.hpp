#pragma once

#include <iosfwd>

namespace hypereuler::cli {

// Exit codes: 0 found/valid, 1 none/invalid, 2 unknown, 64 parse, 65 inadmissible.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hypereuler::cli
