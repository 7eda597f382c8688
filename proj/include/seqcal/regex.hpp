#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "seqcal/graphs.hpp"
#include "seqcal/logic.hpp"

namespace seqcal {

// Property expressions over Boolean terms:
//   regex  := factor (',' factor)*
//   factor := (expr | '<' regex '>') suffix*
//   suffix := '*' | '^' n          (n >= 1)
// e.g. `P, true*, !Q` or `P, true, true, <true, true, true, true>*, !Q`.
//
// Compiles to a Boolean graph whose initial vertex v0 has no incoming arcs
// and whose terminal vertex (the last one) has no outgoing arcs. Words of
// length zero are not representable and are dropped.
BooleanGraph compile_regex(std::string_view regex, const Props& ap, std::string name = "regex");

// The regex's language up to max_len terms, expanded directly from the
// syntax; sorted shortest first, then by label keys.
std::vector<BoolWord> expand_regex(std::string_view regex, std::size_t max_len);

}  // namespace seqcal
