#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "trinomia/report.hpp"

namespace trinomia {

// Each runner executes one verification suite at the given bounds and
// returns a Report with its own wall time filled in. All exact values in
// the records are decimal strings; doubles appear only under *_float keys.

Report suite_agreement(unsigned long symbolic_max, unsigned long grid_max);
Report suite_hankel(unsigned long max_n, bool symbolic);
Report suite_interlace(unsigned long max_n, unsigned jobs = 0);
Report suite_tp(std::size_t block, std::size_t j_size, unsigned jobs = 0);
Report suite_sm(unsigned long depth);
Report suite_sm_point(long b, long c, unsigned long depth);
Report suite_criteria();
Report suite_riordan(std::size_t depth);
Report suite_binomial(const std::vector<long>& a_values, unsigned long max_n);
Report suite_tli(unsigned long max_sum, unsigned jobs = 0);
Report suite_motzkin(unsigned long max_n, unsigned jobs = 0);
Report suite_limits(const std::vector<unsigned long>& ladder, unsigned long ratio_n,
                    unsigned long variance_n);
Report suite_fundamental(unsigned long max_sum);

// profile "quick" finishes in well under a minute; "full" runs the
// acceptance bounds
Report report_all(const std::string& profile, unsigned jobs = 0);

}  // namespace trinomia
