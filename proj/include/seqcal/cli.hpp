#pragma once

#include <iosfwd>

namespace seqcal {

// Exit status: 0 success or a true verdict, 1 a false verdict, 2 a usage,
// format or input error.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace seqcal
