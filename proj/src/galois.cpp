#include "lcdkit/galois.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>
#include <tuple>

namespace lcdkit {
namespace {

constexpr uint64_t kMaxOrder = 1u << 16;
constexpr uint32_t kAddTableMax = 256;
constexpr uint64_t kConwaySearchCap = 1u << 21;

bool is_prime_u32(uint32_t v) {
    if (v < 2) return false;
    for (uint32_t d = 2; uint64_t(d) * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

std::vector<uint32_t> distinct_prime_factors(uint32_t n) {
    std::vector<uint32_t> out;
    for (uint32_t d = 2; uint64_t(d) * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Polynomials over F_p: little-endian coefficient vectors (constant first).
using Poly = std::vector<uint32_t>;

int poly_deg(const Poly& f) {
    for (int i = int(f.size()) - 1; i >= 0; --i)
        if (f[i] != 0) return i;
    return -1;
}

bool poly_is_one(const Poly& f) { return poly_deg(f) == 0 && f[0] == 1; }

Poly poly_mul(const Poly& a, const Poly& b, uint32_t p) {
    int da = poly_deg(a), db = poly_deg(b);
    if (da < 0 || db < 0) return {};
    Poly c(size_t(da + db + 1), 0);
    for (int i = 0; i <= da; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j <= db; ++j) c[i + j] = (c[i + j] + uint64_t(a[i]) * b[j]) % p;
    }
    return c;
}

// Remainder of a modulo monic f, in place.
void poly_mod_inplace(Poly& a, const Poly& f, uint32_t p) {
    int df = poly_deg(f);
    for (int da = poly_deg(a); da >= df && df >= 0; da = poly_deg(a)) {
        uint32_t c = a[da];
        int shift = da - df;
        for (int i = 0; i <= df; ++i) {
            uint64_t sub = uint64_t(c) * f[i] % p;
            a[shift + i] = uint32_t((a[shift + i] + p - sub) % p);
        }
    }
    if (df == 0) a.assign(1, 0);  // constant modulus (not used in practice)
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, uint32_t p) {
    Poly c = poly_mul(a, b, p);
    poly_mod_inplace(c, f, p);
    return c;
}

// x^e modulo monic f.
Poly poly_pow_x_mod(uint64_t e, const Poly& f, uint32_t p) {
    Poly result = {1};
    Poly base = {0, 1};
    poly_mod_inplace(base, f, p);
    while (e > 0) {
        if (e & 1) result = poly_mulmod(result, base, f, p);
        base = poly_mulmod(base, base, f, p);
        e >>= 1;
    }
    return result;
}

bool poly_divides(const Poly& g, const Poly& f, uint32_t p) {
    Poly r = f;
    poly_mod_inplace(r, g, p);
    return poly_deg(r) < 0;
}

// Trial division by every monic divisor of degree 1..m/2.
bool modulus_irreducible(const Poly& f, uint32_t p, uint32_t m) {
    if (m == 1) return true;
    for (uint32_t d = 1; d <= m / 2; ++d) {
        Poly g(d + 1, 0);
        g[d] = 1;
        while (true) {
            if (poly_divides(g, f, p)) return false;
            uint32_t i = 0;
            while (i < d && ++g[i] == p) g[i++] = 0;
            if (i == d) break;
        }
    }
    return true;
}

// Multiplicative order of x in F_p[x]/(f) equals r: holds iff f is
// irreducible and primitive.
bool x_has_order(uint64_t r, const std::vector<uint32_t>& factors, const Poly& f, uint32_t p) {
    if (!poly_is_one(poly_pow_x_mod(r, f, p))) return false;
    for (uint32_t u : factors)
        if (poly_is_one(poly_pow_x_mod(r / u, f, p))) return false;
    return true;
}

uint32_t modpow_u32(uint32_t a, uint64_t e, uint32_t mod) {
    uint64_t r = 1, b = a % mod;
    while (e > 0) {
        if (e & 1) r = r * b % mod;
        b = b * b % mod;
        e >>= 1;
    }
    return uint32_t(r);
}

uint64_t checked_order(uint32_t p, uint32_t m) {
    uint64_t q = 1;
    for (uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxOrder)
            raise(Errc::UnsupportedFieldOrder, "field order exceeds 2^16");
    }
    return q;
}

Poly conway_rec(uint32_t p, uint32_t m);

// Evaluate g at the residue X, modulo f.
Poly poly_eval_at_residue(const Poly& g, const Poly& X, const Poly& f, uint32_t p) {
    Poly acc = {0};
    for (int i = poly_deg(g); i >= 0; --i) {
        acc = poly_mulmod(acc, X, f, p);
        if (acc.empty()) acc.assign(1, 0);
        acc[0] = (acc[0] + g[i]) % p;
    }
    return acc;
}

Poly conway_compute(uint32_t p, uint32_t m) {
    uint64_t q = checked_order(p, m);
    uint64_t r = q - 1;
    if (m == 1) {
        // x - a0 for the least primitive root a0.
        auto factors = distinct_prime_factors(uint32_t(r));
        for (uint32_t a0 = 1; a0 < p; ++a0) {
            bool primitive = true;
            for (uint32_t u : factors)
                if (modpow_u32(a0, r / u, p) == 1) primitive = false;
            if (r == 1) primitive = (a0 == 1);
            if (primitive) return {(p - a0) % p, 1};
        }
        raise(Errc::NoCanonicalModulus, "no primitive root found");
    }

    std::vector<std::pair<uint64_t, Poly>> subfields;  // (s, conway of subfield)
    for (uint32_t d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        uint64_t qd = 1;
        for (uint32_t i = 0; i < d; ++i) qd *= p;
        subfields.emplace_back(r / (qd - 1), conway_rec(p, d));
    }
    auto factors = distinct_prime_factors(uint32_t(r));

    // Enumerate words (a_{m-1}, ..., a_0) lexicographically; candidate
    // f = x^m - a_{m-1} x^{m-1} + a_{m-2} x^{m-2} - ... + (-1)^m a_0.
    std::vector<uint32_t> w(m, 0);
    for (uint64_t iter = 0; iter < kConwaySearchCap; ++iter) {
        Poly f(m + 1, 0);
        f[m] = 1;
        for (uint32_t j = 0; j < m; ++j)
            f[j] = ((m - j) % 2 == 0) ? w[j] : (p - w[j]) % p;
        if (x_has_order(r, factors, f, p)) {
            bool compatible = true;
            for (const auto& [s, sub] : subfields) {
                Poly X = poly_pow_x_mod(s, f, p);
                if (poly_deg(poly_eval_at_residue(sub, X, f, p)) >= 0) {
                    compatible = false;
                    break;
                }
            }
            if (compatible) return f;
        }
        uint32_t i = 0;
        while (i < m && ++w[i] == p) w[i++] = 0;
        if (i == m) break;
    }
    raise(Errc::NoCanonicalModulus, "canonical modulus search exhausted");
}

Poly conway_rec(uint32_t p, uint32_t m) {
    static std::mutex mu;
    static std::map<std::pair<uint32_t, uint32_t>, Poly> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({p, m});
        if (it != cache.end()) return it->second;
    }
    Poly f = conway_compute(p, m);
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(std::make_pair(p, m), f);
    return f;
}

}  // namespace

std::vector<uint32_t> conway_polynomial(uint32_t p, uint32_t m) {
    if (!is_prime_u32(p)) raise(Errc::NotPrime, "p = " + std::to_string(p) + " is not prime");
    if (m < 1) raise(Errc::InvalidParameters, "extension degree must be >= 1");
    return conway_rec(p, m);
}

std::vector<uint32_t> FieldSpec::digits(uint32_t v) const {
    std::vector<uint32_t> d(m_);
    for (uint32_t i = 0; i < m_; ++i) {
        d[i] = v % p_;
        v /= p_;
    }
    return d;
}

uint32_t FieldSpec::from_digits(const std::vector<uint32_t>& d) const {
    if (d.size() > m_) raise(Errc::InvalidParameters, "too many coefficients");
    uint32_t v = 0;
    for (size_t i = d.size(); i-- > 0;) {
        if (d[i] >= p_) raise(Errc::InvalidParameters, "coefficient not reduced mod p");
        v = v * p_ + d[i];
    }
    return v;
}

uint32_t FieldSpec::add_slow(uint32_t a, uint32_t b) const {
    uint32_t v = 0, scale = 1;
    for (uint32_t i = 0; i < m_; ++i) {
        v += (a % p_ + b % p_) % p_ * scale;
        a /= p_;
        b /= p_;
        scale *= p_;
    }
    return v;
}

FieldSpec::FieldSpec(uint32_t p, uint32_t m, std::vector<uint32_t> modulus)
    : p_(p), m_(m), q_(uint32_t(checked_order(p, m))), modulus_(std::move(modulus)) {
    neg_.resize(q_);
    for (uint32_t v = 0; v < q_; ++v) {
        uint32_t n = 0, scale = 1, x = v;
        for (uint32_t i = 0; i < m_; ++i) {
            n += (p_ - x % p_) % p_ * scale;
            x /= p_;
            scale *= p_;
        }
        neg_[v] = n;
    }

    // Encoded multiplication straight from the polynomial representation,
    // used only while constructing the tables.
    auto raw_mul = [&](uint32_t a, uint32_t b) -> uint32_t {
        Poly pa = digits(a), pb = digits(b);
        Poly c = poly_mul(pa, pb, p_);
        poly_mod_inplace(c, modulus_, p_);
        uint32_t v = 0, scale = 1;
        for (uint32_t i = 0; i < m_; ++i) {
            v += (i < c.size() ? c[i] : 0) * scale;
            scale *= p_;
        }
        return v;
    };
    auto raw_pow = [&](uint32_t a, uint64_t e) -> uint32_t {
        uint32_t r = 1;
        while (e > 0) {
            if (e & 1) r = raw_mul(r, a);
            a = raw_mul(a, a);
            e >>= 1;
        }
        return r;
    };

    uint64_t r = q_ - 1;
    generator_ = 1;
    if (q_ > 2) {
        auto factors = distinct_prime_factors(uint32_t(r));
        for (uint32_t cand = 2; cand < q_; ++cand) {
            bool ok = true;
            for (uint32_t u : factors)
                if (raw_pow(cand, r / u) == 1) {
                    ok = false;
                    break;
                }
            if (ok) {
                generator_ = cand;
                break;
            }
        }
    }

    exp_.assign(size_t(2 * r), 0);
    log_.assign(q_, 0);
    uint32_t cur = 1;
    for (uint64_t i = 0; i < r; ++i) {
        exp_[i] = cur;
        exp_[i + r] = cur;
        log_[cur] = uint32_t(i);
        cur = raw_mul(cur, generator_);
    }
    if (cur != 1) raise(Errc::InvalidParameters, "generator cycle broken (internal)");

    if (p_ != 2 && q_ <= kAddTableMax) {
        add_.resize(size_t(q_) * q_);
        for (uint32_t a = 0; a < q_; ++a)
            for (uint32_t b = 0; b < q_; ++b) add_[a * q_ + b] = add_slow(a, b);
    }
}

Field make_field(uint32_t p, uint32_t m, const std::optional<std::vector<uint32_t>>& modulus) {
    if (!is_prime_u32(p)) raise(Errc::NotPrime, "p = " + std::to_string(p) + " is not prime");
    if (m < 1) raise(Errc::InvalidParameters, "extension degree must be >= 1");
    checked_order(p, m);

    std::vector<uint32_t> mod;
    if (m == 1) {
        mod = {0, 1};  // placeholder x, ignored for prime fields
    } else if (modulus.has_value()) {
        mod = *modulus;
        if (mod.size() != size_t(m) + 1)
            raise(Errc::InvalidParameters, "modulus must have m+1 coefficients");
        for (uint32_t c : mod)
            if (c >= p) raise(Errc::InvalidParameters, "modulus coefficient not reduced mod p");
        if (mod[m] != 1) raise(Errc::InvalidParameters, "modulus must be monic");
        if (!modulus_irreducible(mod, p, m)) {
            std::ostringstream os;
            os << "modulus is reducible over F_" << p;
            raise(Errc::ReducibleModulus, os.str());
        }
    } else {
        mod = conway_polynomial(p, m);
    }

    static std::mutex mu;
    static std::map<std::tuple<uint32_t, uint32_t, std::vector<uint32_t>>,
                    std::unique_ptr<FieldSpec>>
        registry;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(p, m, mod);
    auto it = registry.find(key);
    if (it == registry.end()) {
        it = registry.emplace(key, std::unique_ptr<FieldSpec>(new FieldSpec(p, m, mod))).first;
    }
    return Field(it->second.get());
}

Fq Field::element(uint32_t encoded) const {
    const FieldSpec& F = spec();
    if (encoded >= F.q()) raise(Errc::InvalidParameters, "element encoding out of range");
    return Fq(&F, encoded);
}

Fq Field::from_coeffs(const std::vector<uint32_t>& coeffs) const {
    const FieldSpec& F = spec();
    return Fq(&F, F.from_digits(coeffs));
}

Fq Field::zero() const { return Fq(&spec(), 0); }
Fq Field::one() const { return Fq(&spec(), 1); }

std::ostream& operator<<(std::ostream& os, Fq a) { return os << a.value(); }

uint32_t quadratic_base_order(Field f) {
    const FieldSpec& F = f.spec();
    if (F.m() % 2 != 0)
        raise(Errc::NotAQuadraticExtension, "field order is not a square");
    uint32_t q0 = 1;
    for (uint32_t i = 0; i < F.m() / 2; ++i) q0 *= F.p();
    return q0;
}

Fq conjugate(Fq a) {
    uint32_t q0 = quadratic_base_order(a.field());
    return a.pow(q0);
}

Fq norm(Fq a) {
    uint32_t q0 = quadratic_base_order(a.field());
    return a.pow(uint64_t(q0) + 1);
}

}  // namespace lcdkit
