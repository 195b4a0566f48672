#pragma once

#include "translab/scalar.hpp"

#include <map>
#include <mutex>
#include <utility>
#include <vector>

namespace translab {

Int binomial(long n, long k);  // 0 outside 0 <= k <= n; n >= 0
Int factorial(unsigned long n);
Int stirling2(unsigned m, unsigned l);
Int lcm_upto(unsigned long n);  // d_n, with d_0 = 1
Rat harmonic(unsigned long r, unsigned p);

// Caches binomials, Stirling subset numbers and harmonic sums. All methods are
// safe to call from several threads.
class CombinatoricsTable {
public:
    Int binomial(long n, long k);
    Int stirling2(unsigned m, unsigned l);
    Rat harmonic(unsigned long r, unsigned p);
    Int lcm_upto(unsigned long n);

    static CombinatoricsTable& shared();

private:
    void grow_stirling(unsigned m);

    std::mutex mu_;
    std::vector<std::vector<Int>> stirling_;  // stirling_[m][l]
    std::map<unsigned, std::vector<Rat>> harmonic_;  // p -> H_0..H_r
    std::vector<Int> lcm_{Int(1)};
};

}  // namespace translab
