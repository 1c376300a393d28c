#include "lcdkit/bounds.hpp"

#include <cmath>
#include <string>

#include "lcdkit/errors.hpp"

namespace lcdkit {

double q_ary_entropy(uint32_t q, double x) {
    if (q < 2) raise(Errc::InvalidParameters, "entropy needs q >= 2");
    if (!(x >= 0.0 && x <= 1.0)) raise(Errc::OutOfDomain, "entropy argument outside [0, 1]");
    double lq = std::log(double(q));
    auto xlog = [&](double v) { return v == 0.0 ? 0.0 : v * std::log(v) / lq; };
    return x * std::log(double(q - 1)) / lq - xlog(x) - xlog(1.0 - x);
}

double gv_rate(uint32_t q, double delta) {
    if (q < 2) raise(Errc::InvalidParameters, "rate bound needs q >= 2");
    double edge = double(q - 1) / double(q);
    if (!(delta > 0.0 && delta < edge))
        raise(Errc::OutOfDomain, "delta must satisfy 0 < delta < (q-1)/q = " + std::to_string(edge));
    return 1.0 - q_ary_entropy(q, delta);
}

int64_t singleton_defect(int64_t n, int64_t k, int64_t d) {
    if (n < 1 || k < 1 || k > n || d < 1 || d > n)
        raise(Errc::InvalidParameters, "not a valid parameter triple");
    int64_t defect = (n + 1 - k) - d;
    if (defect < 0)
        raise(Errc::InvalidParameters,
              "d exceeds the Singleton bound n + 1 - k = " + std::to_string(n + 1 - k));
    return defect;
}

BoundsReport asymptotic_report(uint32_t q, double delta) {
    BoundsReport r;
    r.q = q;
    r.delta = delta;
    r.entropy = q_ary_entropy(q, delta);
    r.rate = gv_rate(q, delta);
    return r;
}

BoundsReport finite_report(uint32_t q, int64_t n, int64_t k, int64_t d) {
    BoundsReport r;
    r.q = q;
    r.n = n;
    r.k = k;
    r.d = d;
    r.defect = singleton_defect(n, k, d);
    r.mds = (*r.defect == 0);
    return r;
}

}  // namespace lcdkit
