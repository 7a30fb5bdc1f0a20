#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "trop/genus_one.hpp"
#include "trop/report.hpp"

namespace trop {

// exit contract: 0 success, 1 usage or schema error, 2 identity failure
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// the full genus-one pipeline with every headline number checked
Report case_study_genus1();

// degree over a region with automatic resampling on NonGenericSample
Rat degree_at_region(const ForgetfulMap& fm, const TropicalCycle& c, M12Region region,
                     int index);

} // namespace trop
