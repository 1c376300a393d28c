#ifndef LCDKIT_BOUNDS_HPP
#define LCDKIT_BOUNDS_HPP

#include <cstdint>
#include <optional>

namespace lcdkit {

/// q-ary entropy H_q(x) = x log_q(q-1) - x log_q(x) - (1-x) log_q(1-x) on
/// [0, 1], with 0 log 0 = 0 by continuity.
double q_ary_entropy(uint32_t q, double x);

/// Asymptotic rate guarantee 1 - H_q(delta), defined on the open interval
/// 0 < delta < (q-1)/q.
double gv_rate(uint32_t q, double delta);

/// (n + 1 - k) - d; zero exactly for MDS parameters, negative inputs are
/// rejected as inconsistent.
int64_t singleton_defect(int64_t n, int64_t k, int64_t d);

struct BoundsReport {
    uint32_t q = 0;
    std::optional<double> delta, entropy, rate;
    std::optional<int64_t> n, k, d, defect;
    std::optional<bool> mds;
};

BoundsReport asymptotic_report(uint32_t q, double delta);
BoundsReport finite_report(uint32_t q, int64_t n, int64_t k, int64_t d);

}  // namespace lcdkit

#endif
