#include "translab/combinatorics.hpp"

namespace translab {

Int binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

CombinatoricsTable& CombinatoricsTable::shared() {
    static CombinatoricsTable t;
    return t;
}

Int CombinatoricsTable::binomial(long n, long k) { return translab::binomial(n, k); }

void CombinatoricsTable::grow_stirling(unsigned m) {
    if (stirling_.empty()) stirling_.push_back({Int(1)});
    while (stirling_.size() <= m) {
        const auto& prev = stirling_.back();
        unsigned row = static_cast<unsigned>(stirling_.size());
        std::vector<Int> cur(row + 1);
        cur[0] = 0;
        for (unsigned l = 1; l <= row; ++l) {
            Int a = l < prev.size() ? prev[l] : Int(0);
            cur[l] = l * a + prev[l - 1];
        }
        stirling_.push_back(std::move(cur));
    }
}

Int CombinatoricsTable::stirling2(unsigned m, unsigned l) {
    if (l > m) return 0;
    std::lock_guard<std::mutex> g(mu_);
    grow_stirling(m);
    return stirling_[m][l];
}

Rat CombinatoricsTable::harmonic(unsigned long r, unsigned p) {
    std::lock_guard<std::mutex> g(mu_);
    auto& h = harmonic_[p];
    if (h.empty()) h.push_back(Rat(0));
    while (h.size() <= r) {
        Int k(static_cast<unsigned long>(h.size()));
        Int kp;
        mpz_pow_ui(kp.get_mpz_t(), k.get_mpz_t(), p);
        Rat term(1, kp);
        term.canonicalize();
        h.push_back(h.back() + term);
    }
    return h[r];
}

Int CombinatoricsTable::lcm_upto(unsigned long n) {
    std::lock_guard<std::mutex> g(mu_);
    while (lcm_.size() <= n) {
        Int k(static_cast<unsigned long>(lcm_.size()));
        Int l;
        mpz_lcm(l.get_mpz_t(), lcm_.back().get_mpz_t(), k.get_mpz_t());
        lcm_.push_back(l);
    }
    return lcm_[n];
}

Int stirling2(unsigned m, unsigned l) { return CombinatoricsTable::shared().stirling2(m, l); }
Int lcm_upto(unsigned long n) { return CombinatoricsTable::shared().lcm_upto(n); }
Rat harmonic(unsigned long r, unsigned p) { return CombinatoricsTable::shared().harmonic(r, p); }

}  // namespace translab
