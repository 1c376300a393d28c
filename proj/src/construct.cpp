#include "lcdkit/construct.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace lcdkit {
namespace {

// Lexicographically first size-s subset of {0..k-1}; next_combination steps
// through all of them in lexicographic order.
bool next_combination(std::vector<size_t>& idx, size_t k) {
    size_t s = idx.size();
    size_t i = s;
    while (i-- > 0) {
        if (idx[i] + (s - i) < k) {
            ++idx[i];
            for (size_t j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

Fq u_value(Variant v, Fq a) {
    Field f = a.field();
    if (v == Variant::euclidean) return a * a - f.one();
    return norm(a) - f.one();
}

MatrixFq gram_of(Variant v, const MatrixFq& g) {
    return v == Variant::euclidean ? gram_euclidean(g) : gram_hermitian(g);
}

}  // namespace

MinorCertificate find_minimal_deletion(const MatrixFq& m, uint64_t minor_budget) {
    if (m.rows() != m.cols()) raise(Errc::NotSquare, "deletion search needs a square matrix");
    size_t k = m.rows();
    Fq d0 = det(m);
    if (!d0.is_zero()) return {{}, d0, MinorCertificate::Proof::exhaustive};

    size_t s0 = k - rank(m);  // a nonsingular principal submatrix has order <= rank
    if (s0 == 0) s0 = 1;
    auto proof = s0 > 1 ? MinorCertificate::Proof::rank_shortcut
                        : MinorCertificate::Proof::exhaustive;

    uint64_t evaluated = 0;
    for (size_t s = s0; s <= k; ++s) {
        std::vector<size_t> idx(s);
        for (size_t i = 0; i < s; ++i) idx[i] = i;
        do {
            if (++evaluated > minor_budget)
                raise(Errc::SearchBudgetExceeded,
                      "evaluated " + std::to_string(minor_budget) + " minors without success");
            Fq d = det(principal_delete(m, idx));
            if (!d.is_zero()) return {idx, d, proof};
        } while (next_combination(idx, k));
    }
    throw std::logic_error("deletion search fell through the full deletion");
}

namespace {

std::vector<Fq> choose_scaling(Field f, size_t n, size_t k, const std::vector<size_t>& J,
                               bool allow_zero, Variant variant) {
    for (size_t j : J)
        if (j >= k) raise(Errc::IndexOutOfRange, "deletion index out of range");
    if (k > n) raise(Errc::InvalidParameters, "k exceeds n");
    std::vector<Fq> a(n, f.one());
    if (J.empty()) return a;

    std::optional<Fq> special;
    if (variant == Variant::euclidean) {
        Fq one = f.one(), minus_one = -f.one();
        for (uint32_t v = 2; v < f.q(); ++v) {
            Fq e = f.element(v);
            if (e != one && e != minus_one) {
                special = e;
                break;
            }
        }
        if (!special && !allow_zero)
            raise(Errc::FieldTooSmall,
                  "no scalar outside {1,-1} exists in F_" + std::to_string(f.q()) +
                      "; the equivalence construction needs q > 3");
    } else {
        for (uint32_t v = 2; v < f.q(); ++v) {
            Fq e = f.element(v);
            if (norm(e) != f.one()) {
                special = e;
                break;
            }
        }
        if (!special && !allow_zero)
            raise(Errc::FieldTooSmall,
                  "every nonzero element of F_" + std::to_string(f.q()) +
                      " has norm 1; the equivalence construction needs base order > 2");
    }
    Fq chosen = special ? *special : f.zero();
    for (size_t j : J) a[j] = chosen;
    return a;
}

}  // namespace

std::vector<Fq> choose_scaling_euclidean(Field f, size_t n, size_t k,
                                         const std::vector<size_t>& J, bool allow_zero) {
    return choose_scaling(f, n, k, J, allow_zero, Variant::euclidean);
}

std::vector<Fq> choose_scaling_hermitian(Field f, size_t n, size_t k,
                                         const std::vector<size_t>& J, bool allow_zero) {
    quadratic_base_order(f);
    return choose_scaling(f, n, k, J, allow_zero, Variant::hermitian);
}

LcdifyResult lcdify(const LinearCode& c, bool allow_zero, uint64_t minor_budget) {
    Field f = c.field();
    StandardFormWitness sf = standard_form(c);
    MatrixFq m = gram_of(c.variant(), sf.G_std);
    MinorCertificate cert = find_minimal_deletion(m, minor_budget);
    std::vector<Fq> a_std =
        c.variant() == Variant::euclidean
            ? choose_scaling_euclidean(f, c.n(), c.k(), cert.J, allow_zero)
            : choose_scaling_hermitian(f, c.n(), c.k(), cert.J, allow_zero);

    MatrixFq g_out = scale_columns(sf.G_std, a_std);
    LinearCode out = LinearCode::make(f, g_out, c.variant());
    Fq det_after = det(gram_of(c.variant(), g_out));

    // Both determinant routes must agree: the output Gram equals the
    // standard-form Gram plus a diagonal word supported on J.
    Fq expected = cert.det_minor;
    for (size_t j : cert.J) expected = expected * u_value(c.variant(), a_std[j]);
    if (expected != det_after || det_after.is_zero())
        throw std::logic_error("gram determinant factorization failed");

    // Express the scaling on original coordinates, so the stored transform
    // applies as scale-then-permute to the rref of the input generator.
    std::vector<Fq> a_orig(c.n(), f.one());
    for (size_t i = 0; i < c.n(); ++i) a_orig[sf.sigma[i]] = a_std[i];

    return {std::move(out),
            MonomialTransform{std::move(a_orig), sf.sigma},
            std::move(cert),
            det_after,
            std::move(sf)};
}

MatrixFq hull_first_basis(const LinearCode& c) {
    MatrixFq basis = hull_basis(c);
    if (basis.rows() == c.k()) return basis;
    MatrixFq canon = row_basis(c.generator());
    size_t current = basis.rows() == 0 ? 0 : rank(basis);
    for (size_t r = 0; r < canon.rows() && current < c.k(); ++r) {
        MatrixFq candidate =
            basis.rows() == 0 ? take_rows(canon, r, 1) : vstack(basis, take_rows(canon, r, 1));
        size_t cr = rank(candidate);
        if (cr > current) {
            basis = std::move(candidate);
            current = cr;
        }
    }
    if (current != c.k()) throw std::logic_error("hull basis completion failed");
    return basis;
}

std::optional<LinearCode> hull_complement_subcode(const LinearCode& c) {
    size_t h = hull_dimension(c);
    if (h == 0) raise(Errc::AlreadyLCD, "the code has a trivial hull");
    if (h == c.k()) return std::nullopt;
    MatrixFq basis = hull_first_basis(c);
    return LinearCode::make(c.field(), take_rows(basis, h, c.k() - h), c.variant());
}

ExtensionResult extend_to_lcd(const LinearCode& c) {
    size_t h = hull_dimension(c);
    size_t k = c.k(), n = c.n();
    Field f = c.field();
    if (h == 0) {
        ExtensionMap map{0, MatrixFq(f, 0, n), c.generator(), MatrixFq(f, k, 0)};
        return {c, std::move(map)};
    }
    MatrixFq basis = hull_first_basis(c);
    MatrixFq hull_rows = take_rows(basis, 0, h);
    MatrixFq complement = take_rows(basis, h, k - h);
    MatrixFq block(f, k, h);
    for (size_t i = 0; i < h; ++i) block.raw_set(i, i, 1);
    MatrixFq extended = hstack(basis, block);
    LinearCode out = LinearCode::make(f, extended, c.variant());
    return {std::move(out),
            ExtensionMap{h, std::move(hull_rows), std::move(complement), std::move(block)}};
}

bool extension_is_deficient(const LinearCode& c, const MatrixFq& l_values) {
    if (l_values.field() != c.field()) raise(Errc::FieldMismatch, "value matrix field mismatch");
    if (l_values.rows() != c.k())
        raise(Errc::DimensionMismatch, "value matrix needs one row per basis element");
    size_t h = hull_dimension(c);
    size_t full_rank = l_values.cols() == 0 ? 0 : rank(l_values);
    size_t top_rank =
        (h == 0 || l_values.cols() == 0) ? 0 : rank(take_rows(l_values, 0, h));
    // C = Ker(L) + Hull(C) exactly when the forms' values on the hull span
    // everything the forms take on C.
    if (full_rank != top_rank)
        raise(Errc::DecompositionViolated, "the code does not split as Ker(L) + Hull");
    bool deficient = full_rank < h;
    if (deficient) {
        MatrixFq gl = hstack(hull_first_basis(c), l_values);
        if (!det(gram_of(c.variant(), gl)).is_zero())
            throw std::logic_error("deficient extension produced a nonsingular gram");
    }
    return deficient;
}

}  // namespace lcdkit
