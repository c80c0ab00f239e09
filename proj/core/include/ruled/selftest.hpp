#pragma once

#include <iosfwd>

namespace ruled {

// Runs the twelve-criterion acceptance suite, printing one PASS/FAIL line per
// criterion.  quick shrinks trial counts for a fast smoke run.  Returns the
// number of failed criteria.
int run_acceptance(std::ostream& out, bool quick);

}  // namespace ruled
