#include "selftest.hpp"

#include "acceptance_suite.hpp"

#include <json.hpp>

#include <iomanip>
#include <ostream>
#include <string>

int run_selftest(std::uint64_t seed, bool json, std::ostream& out, std::ostream& timing) {
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    int failures = 0;
    auto results = acceptance::run_all(seed, [&](const acceptance::Result& r) {
        timing << acceptance::format(r) << '\n' << std::flush;
        if (!r.pass) ++failures;
        if (json) {
            checks.push_back({{"name", std::to_string(r.id) + " " + r.name},
                              {"verdict", r.pass ? "pass" : "fail"},
                              {"detail", r.detail}});
        } else {
            out << (r.pass ? "PASS  " : "FAIL  ") << std::setw(2) << r.id << ' ' << std::left << std::setw(24) << r.name
                << std::right << ' ' << r.detail << '\n';
        }
    });
    int passed = static_cast<int>(results.size()) - failures;
    if (json) {
        nlohmann::ordered_json report = {{"command", "selftest"},
                                         {"inputs", {{"seed", std::to_string(seed)}}},
                                         {"result", {{"passed", passed}, {"total", results.size()}}},
                                         {"checks", checks}};
        out << report.dump(2) << '\n';
    } else {
        out << passed << '/' << results.size() << " criteria passed\n";
    }
    return failures;
}
