#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace nhq {

// One acceptance criterion: a named check over its full parameter grid.
// `run` returns pass/fail and writes diagnostics for failures to the log.
struct AcceptanceCheck {
    int number;
    std::string name;
    std::string summary;
    std::function<bool(std::ostream&)> run;
};

const std::vector<AcceptanceCheck>& acceptance_checks();

}  // namespace nhq
