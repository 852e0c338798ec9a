#pragma once

#include <string>
#include <vector>

#include "twindi/types.hpp"

namespace twindi {

// Notes attached to reports for small-d, small-range runs, where published
// example lists for these parameters are known to disagree with the oracle.
std::vector<std::string> errata_notes(i64 d);

} // namespace twindi
