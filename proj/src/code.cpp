#include "lcdkit/code.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <string>

namespace lcdkit {

const char* variant_name(Variant v) {
    return v == Variant::euclidean ? "euclidean" : "hermitian";
}

std::optional<Variant> variant_from_name(const std::string& s) {
    if (s == "euclidean") return Variant::euclidean;
    if (s == "hermitian") return Variant::hermitian;
    return std::nullopt;
}

bool MonomialTransform::all_nonzero() const {
    for (const Fq& a : scale)
        if (a.is_zero()) return false;
    return true;
}

MonomialTransform MonomialTransform::identity(Field f, size_t n) {
    return {std::vector<Fq>(n, f.one()), Permutation::identity(n)};
}

struct LinearCode::Impl {
    Field field;
    Variant variant;
    MatrixFq G;

    mutable std::mutex mu;
    mutable std::optional<MatrixFq> gram;
    mutable std::optional<StandardFormWitness> standard;
    mutable std::optional<size_t> distance;

    Impl(Field f, Variant v, MatrixFq g) : field(f), variant(v), G(std::move(g)) {}
};

LinearCode LinearCode::make(Field f, MatrixFq g, Variant v, RankPolicy policy) {
    if (g.field() != f) raise(Errc::FieldMismatch, "generator field mismatch");
    if (v == Variant::hermitian && f.m() % 2 != 0)
        raise(Errc::HermitianNeedsSquareOrder, "hermitian codes need a field of square order");
    if (g.rows() == 0 || g.cols() == 0) raise(Errc::ZeroCode, "empty generator matrix");
    RrefResult rr = rref(g);
    if (rr.rank == 0) raise(Errc::ZeroCode, "generator matrix has rank zero");
    if (rr.rank < g.rows()) {
        if (policy == RankPolicy::require_full)
            raise(Errc::RankDeficient, "generator matrix has dependent rows");
        g = take_rows(rr.R, 0, rr.rank);
    }
    return LinearCode(std::make_shared<const Impl>(f, v, std::move(g)));
}

Field LinearCode::field() const { return impl_->field; }
Variant LinearCode::variant() const { return impl_->variant; }
size_t LinearCode::n() const { return impl_->G.cols(); }
size_t LinearCode::k() const { return impl_->G.rows(); }
const MatrixFq& LinearCode::generator() const { return impl_->G; }

const MatrixFq& LinearCode::gram_cached() const {
    std::lock_guard<std::mutex> lock(impl_->mu);
    if (!impl_->gram) {
        impl_->gram = impl_->variant == Variant::euclidean ? gram_euclidean(impl_->G)
                                                           : gram_hermitian(impl_->G);
    }
    return *impl_->gram;
}

const StandardFormWitness& LinearCode::standard_cached() const {
    std::lock_guard<std::mutex> lock(impl_->mu);
    if (!impl_->standard) {
        RrefResult rr = rref(impl_->G);
        std::vector<bool> is_pivot(n(), false);
        for (size_t p : rr.pivots) is_pivot[p] = true;
        std::vector<uint32_t> images;
        images.reserve(n());
        for (size_t p : rr.pivots) images.push_back(uint32_t(p));
        for (size_t c = 0; c < n(); ++c)
            if (!is_pivot[c]) images.push_back(uint32_t(c));
        Permutation sigma(std::move(images));
        MatrixFq g_std = permute_columns(rr.R, sigma);
        MatrixFq p_part = k() < n() ? MatrixFq(impl_->field, k(), n() - k())
                                    : MatrixFq(impl_->field, k(), 0);
        for (size_t r = 0; r < k(); ++r)
            for (size_t c = k(); c < n(); ++c) p_part.raw_set(r, c - k(), g_std.raw(r, c));
        impl_->standard = StandardFormWitness{sigma, std::move(g_std), std::move(p_part)};
    }
    return *impl_->standard;
}

std::optional<size_t> LinearCode::distance_if_cached() const {
    std::lock_guard<std::mutex> lock(impl_->mu);
    return impl_->distance;
}

const MatrixFq& gram(const LinearCode& c) { return c.gram_cached(); }
const StandardFormWitness& standard_form(const LinearCode& c) { return c.standard_cached(); }

std::optional<LinearCode> dual(const LinearCode& c) {
    if (c.k() == c.n()) return std::nullopt;
    MatrixFq kernel_rows = left_kernel(transpose(c.generator()));  // {h : G h^T = 0}
    MatrixFq basis = row_basis(kernel_rows);
    if (c.variant() == Variant::hermitian) basis = conjugated(basis);
    return LinearCode::make(c.field(), basis, c.variant());
}

MatrixFq hull_basis(const LinearCode& c) {
    MatrixFq x = left_kernel(gram(c));
    return x * c.generator();
}

size_t hull_dimension(const LinearCode& c) { return c.k() - rank(gram(c)); }

LcdVerdict is_lcd(const LinearCode& c) {
    Fq d = det(gram(c));
    return {!d.is_zero(), d};
}

LinearCode apply_transform(const LinearCode& c, const MonomialTransform& t, ZeroPolicy policy,
                           bool* rank_dropped) {
    if (t.scale.size() != c.n() || t.sigma.size() != c.n())
        raise(Errc::DimensionMismatch, "transform length does not match code length");
    if (!t.all_nonzero() && policy == ZeroPolicy::reject)
        raise(Errc::ZeroScalarNotAllowed, "scaling word has a zero coordinate");
    MatrixFq g = permute_columns(scale_columns(c.generator(), t.scale), t.sigma);
    if (rank_dropped) *rank_dropped = false;
    size_t r = rank(g);
    if (r == c.k()) return LinearCode::make(c.field(), std::move(g), c.variant());
    if (!rank_dropped)
        raise(Errc::RankDropped, "degenerate scaling dropped the dimension from " +
                                     std::to_string(c.k()) + " to " + std::to_string(r));
    *rank_dropped = true;
    return LinearCode::make(c.field(), std::move(g), c.variant(), LinearCode::RankPolicy::reduce);
}

uint64_t projective_class_count(uint32_t q, size_t k) {
    uint64_t count = 0;
    for (size_t i = 0; i < k; ++i) {
        if (count > (std::numeric_limits<uint64_t>::max() - 1) / q)
            return std::numeric_limits<uint64_t>::max();
        count = count * q + 1;  // 1 + q + ... + q^(k-1)
    }
    return count;
}

size_t LinearCode::distance(uint64_t budget) const {
    {
        std::lock_guard<std::mutex> lock(impl_->mu);
        if (impl_->distance) return *impl_->distance;
    }
    const FieldSpec& F = impl_->field.spec();
    uint32_t q = F.q();
    size_t kk = k(), nn = n();
    uint64_t classes = projective_class_count(q, kk);
    if (classes > budget) {
        raise(Errc::BudgetExceeded,
              "minimum distance needs " + std::to_string(classes) +
                  " projective classes, budget is " + std::to_string(budget));
    }

    std::vector<std::vector<uint32_t>> rows(kk);
    for (size_t i = 0; i < kk; ++i) rows[i] = impl_->G.row_encoded(i);

    // delta[j][d] = (d+1 mod q)*row_j - d*row_j, so stepping a message digit
    // is one vector add; the wrap step returns the digit's contribution to 0.
    std::vector<uint32_t> delta(kk * size_t(q) * nn);
    for (size_t j = 0; j < kk; ++j)
        for (uint32_t d = 0; d < q; ++d) {
            uint32_t next_d = d + 1 == q ? 0 : d + 1;
            uint32_t* slot = &delta[(j * q + d) * nn];
            for (size_t c = 0; c < nn; ++c)
                slot[c] = F.sub(F.mul(next_d, rows[j][c]), F.mul(d, rows[j][c]));
        }

    size_t best = nn + 1;
    std::vector<uint32_t> cw(nn), digit(kk);
    auto step_digit = [&](size_t j, uint32_t d) {
        const uint32_t* slot = &delta[(j * q + d) * nn];
        if (F.p() == 2) {
            for (size_t c = 0; c < nn; ++c) cw[c] ^= slot[c];
        } else {
            for (size_t c = 0; c < nn; ++c) cw[c] = F.add(cw[c], slot[c]);
        }
    };
    // One representative per projective class: messages whose first nonzero
    // coordinate is 1, enumerated with an odometer over the tail coordinates.
    for (size_t lead = 0; lead < kk && best > 1; ++lead) {
        cw = rows[lead];
        std::fill(digit.begin() + lead, digit.end(), 0);
        while (true) {
            size_t w = 0;
            for (size_t c = 0; c < nn; ++c) w += cw[c] != 0;
            if (w < best) best = w;
            if (best == 1) break;
            size_t j = kk;
            while (j-- > lead + 1) {
                step_digit(j, digit[j]);
                if (++digit[j] < q) break;
                digit[j] = 0;
            }
            if (j <= lead) break;
        }
    }

    std::lock_guard<std::mutex> lock(impl_->mu);
    impl_->distance = best;
    return best;
}

size_t min_distance(const LinearCode& c, uint64_t budget) { return c.distance(budget); }

bool is_mds(const LinearCode& c, uint64_t budget) {
    return min_distance(c, budget) == c.n() - c.k() + 1;
}

bool same_code(const LinearCode& a, const LinearCode& b) {
    return a.field() == b.field() && a.variant() == b.variant() && a.n() == b.n() &&
           a.k() == b.k() && same_row_space(a.generator(), b.generator());
}

}  // namespace lcdkit
