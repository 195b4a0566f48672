#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace acceptance {

struct Result {
    int id = 0;
    std::string name;
    bool pass = false;
    double seconds = 0;
    double budget = 0;  // seconds, 0 when the criterion has no runtime limit
    std::string detail;
};

// one line per criterion: "PASS  3 lehmer-series  0.41s  <detail>"
std::string format(const Result& r);

// runs every criterion; `each` is called after each one finishes
std::vector<Result> run_all(std::uint64_t seed, const std::function<void(const Result&)>& each = {});

}  // namespace acceptance
