#pragma once

#include "bmeas/entire.hpp"
#include "bmeas/scalar.hpp"

#include <string>
#include <vector>

namespace bmeas {

// One identity checked at one grid point.  m_terms is the product
// truncation for the reciprocal identity and 0 elsewhere.
struct ResidualRow {
    std::string suite;
    Complex p;
    Complex omega;
    int m_terms = 0;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct SuiteReport {
    std::vector<ResidualRow> rows;
    double max_residual = 0.0;
    bool all_pass = true;
};

const std::vector<std::string>& identity_suite_names();

// Shared evaluation grid: nine real parameters across (0,1), two complex
// ones off the segment, and six frequencies including complex values.
const std::vector<Complex>& default_grid_p();
const std::vector<Complex>& default_grid_omega();

// which: one suite name or "all".  Points, truncations and tolerances are
// fixed so repeated runs are byte-identical.
SuiteReport run_identity_suite(const std::string& which, const EvalConfig& cfg = {});

}  // namespace bmeas
