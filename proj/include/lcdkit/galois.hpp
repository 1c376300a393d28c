#ifndef LCDKIT_GALOIS_HPP
#define LCDKIT_GALOIS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "lcdkit/errors.hpp"

namespace lcdkit {

class Field;
class Fq;

/// Immutable description of F_{p^m} with precomputed arithmetic tables.
///
/// Elements are encoded as integers in [0, q): the base-p digits of the
/// encoding are the polynomial-basis coordinates, constant term in the least
/// significant digit. Multiplicative structure uses exp/log tables over a
/// fixed generator; addition is digit-wise mod p (XOR in characteristic 2).
class FieldSpec {
  public:
    uint32_t p() const { return p_; }
    uint32_t m() const { return m_; }
    uint32_t q() const { return q_; }
    /// Modulus coefficients, constant term first, length m+1, monic.
    /// For m = 1 this is the fixed placeholder x (i.e. {0, 1}).
    const std::vector<uint32_t>& modulus() const { return modulus_; }

    uint32_t add(uint32_t a, uint32_t b) const {
        if (p_ == 2) return a ^ b;
        if (!add_.empty()) return add_[a * q_ + b];
        return add_slow(a, b);
    }
    uint32_t neg(uint32_t a) const { return neg_[a]; }
    uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg_[b]); }
    uint32_t mul(uint32_t a, uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    uint32_t inv(uint32_t a) const {
        if (a == 0) raise(Errc::DivisionByZero, "inverse of zero");
        return exp_[q_ - 1 - log_[a]];
    }
    uint32_t pow(uint32_t a, uint64_t e) const {
        if (a == 0) return e == 0 ? 1 : 0;
        uint64_t r = q_ - 1;
        return exp_[(uint64_t(log_[a]) * (e % r)) % r];
    }

    /// Base-p digits of an encoding, length m (constant term first).
    std::vector<uint32_t> digits(uint32_t v) const;
    uint32_t from_digits(const std::vector<uint32_t>& d) const;

  private:
    FieldSpec(uint32_t p, uint32_t m, std::vector<uint32_t> modulus);
    uint32_t add_slow(uint32_t a, uint32_t b) const;

    uint32_t p_, m_, q_;
    std::vector<uint32_t> modulus_;
    uint32_t generator_;
    std::vector<uint32_t> exp_;  // size 2(q-1), exp_[i] = g^(i mod q-1)
    std::vector<uint32_t> log_;  // size q, defined for nonzero encodings
    std::vector<uint32_t> neg_;  // size q
    std::vector<uint32_t> add_;  // q*q lookup for small odd characteristic

    friend Field make_field(uint32_t, uint32_t, const std::optional<std::vector<uint32_t>>&);
};

/// Value handle to an interned field. make_field returns the same underlying
/// FieldSpec for identical (p, m, modulus), so handles compare by pointer.
class Field {
  public:
    Field() = default;
    bool valid() const { return spec_ != nullptr; }
    uint32_t p() const { return spec().p(); }
    uint32_t m() const { return spec().m(); }
    uint32_t q() const { return spec().q(); }
    const std::vector<uint32_t>& modulus() const { return spec().modulus(); }
    const FieldSpec& spec() const {
        if (!spec_) raise(Errc::FieldMismatch, "empty field handle");
        return *spec_;
    }

    Fq element(uint32_t encoded) const;
    Fq from_coeffs(const std::vector<uint32_t>& coeffs) const;
    Fq zero() const;
    Fq one() const;

    friend bool operator==(Field a, Field b) { return a.spec_ == b.spec_; }
    friend bool operator!=(Field a, Field b) { return a.spec_ != b.spec_; }

  private:
    explicit Field(const FieldSpec* s) : spec_(s) {}
    const FieldSpec* spec_ = nullptr;

    friend class Fq;
    friend Field make_field(uint32_t, uint32_t, const std::optional<std::vector<uint32_t>>&);
};

/// Build (or fetch) F_{p^m}. With no modulus and m > 1 the Conway polynomial
/// is used; a supplied modulus must be monic of degree m and irreducible.
/// For m = 1 any supplied modulus is ignored. Field order is capped at 2^16.
Field make_field(uint32_t p, uint32_t m,
                 const std::optional<std::vector<uint32_t>>& modulus = std::nullopt);

/// Conway polynomial of F_{p^m} (coefficients constant-first, monic).
std::vector<uint32_t> conway_polynomial(uint32_t p, uint32_t m);

/// Field element: an encoding plus its field. Mixed-field arithmetic throws.
class Fq {
  public:
    Fq() = default;
    uint32_t value() const { return v_; }
    bool is_zero() const { return v_ == 0; }
    Field field() const { return Field(f_); }

    Fq inverse() const { return Fq(&same(*this), same(*this).inv(v_)); }
    Fq pow(uint64_t e) const { return Fq(&same(*this), same(*this).pow(v_, e)); }

    friend Fq operator+(Fq a, Fq b) {
        const FieldSpec& F = same(a, b);
        return Fq(&F, F.add(a.v_, b.v_));
    }
    friend Fq operator-(Fq a, Fq b) {
        const FieldSpec& F = same(a, b);
        return Fq(&F, F.sub(a.v_, b.v_));
    }
    friend Fq operator*(Fq a, Fq b) {
        const FieldSpec& F = same(a, b);
        return Fq(&F, F.mul(a.v_, b.v_));
    }
    friend Fq operator/(Fq a, Fq b) {
        const FieldSpec& F = same(a, b);
        return Fq(&F, F.mul(a.v_, F.inv(b.v_)));
    }
    friend Fq operator-(Fq a) { return Fq(&same(a), same(a).neg(a.v_)); }
    friend bool operator==(Fq a, Fq b) { return a.f_ == b.f_ && a.v_ == b.v_; }
    friend bool operator!=(Fq a, Fq b) { return !(a == b); }

  private:
    Fq(const FieldSpec* f, uint32_t v) : f_(f), v_(v) {}
    static const FieldSpec& same(Fq a) {
        if (!a.f_) raise(Errc::FieldMismatch, "element without a field");
        return *a.f_;
    }
    static const FieldSpec& same(Fq a, Fq b) {
        if (!a.f_ || a.f_ != b.f_) raise(Errc::FieldMismatch, "elements of different fields");
        return *a.f_;
    }

    const FieldSpec* f_ = nullptr;
    uint32_t v_ = 0;

    friend class Field;
};

std::ostream& operator<<(std::ostream& os, Fq a);

/// q0 with field order q0^2; throws NotAQuadraticExtension otherwise.
uint32_t quadratic_base_order(Field f);

/// Frobenius conjugate a -> a^q0 over F_{q0^2}; an involution.
Fq conjugate(Fq a);

/// Norm a -> a^(q0+1), landing in the subfield of order q0.
Fq norm(Fq a);

}  // namespace lcdkit

#endif
