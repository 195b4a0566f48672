#include "acceptance_suite.hpp"

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
    std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 20240601;
    auto results = acceptance::run_all(seed, [](const acceptance::Result& r) {
        std::cout << acceptance::format(r) << std::endl;
    });
    int failed = 0;
    for (const auto& r : results) failed += !r.pass;
    std::cout << (results.size() - failed) << "/" << results.size() << " criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}
