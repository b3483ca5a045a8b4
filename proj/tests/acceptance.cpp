#include <chrono>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "nhq/accept.hpp"

int main() {
    using clock = std::chrono::steady_clock;
    bool all_ok = true;
    for (const auto& c : nhq::acceptance_checks()) {
        std::ostringstream log;
        auto t0 = clock::now();
        bool ok = false;
        try {
            ok = c.run(log);
        } catch (const std::exception& e) {
            log << "    exception: " << e.what() << "\n";
        }
        double secs =
            std::chrono::duration<double>(clock::now() - t0).count();
        std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << std::setw(2)
                  << c.number << "  " << c.name << "  (" << std::fixed
                  << std::setprecision(1) << secs << "s)  " << c.summary
                  << "\n";
        if (!ok) {
            std::cout << log.str();
            all_ok = false;
        }
    }
    std::cout << (all_ok ? "ALL CRITERIA PASS" : "SOME CRITERIA FAILED")
              << "\n";
    return all_ok ? 0 : 1;
}
