#include "lcdkit/matrix.hpp"

#include <algorithm>
#include <string>

namespace lcdkit {

Permutation::Permutation(std::vector<uint32_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (uint32_t v : images_) {
        if (v >= images_.size() || seen[v])
            raise(Errc::InvalidParameters, "permutation images are not a bijection");
        seen[v] = true;
    }
}

Permutation Permutation::identity(size_t n) {
    std::vector<uint32_t> im(n);
    for (size_t i = 0; i < n; ++i) im[i] = uint32_t(i);
    return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
    std::vector<uint32_t> im(images_.size());
    for (size_t i = 0; i < images_.size(); ++i) im[images_[i]] = uint32_t(i);
    return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
    for (size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != i) return false;
    return true;
}

MatrixFq::MatrixFq(Field f, size_t rows, size_t cols)
    : field_(f), rows_(rows), cols_(cols), v_(rows * cols, 0) {
    field_.spec();  // reject empty handles
}

MatrixFq MatrixFq::identity(Field f, size_t n) {
    MatrixFq m(f, n, n);
    for (size_t i = 0; i < n; ++i) m.raw_set(i, i, 1);
    return m;
}

MatrixFq MatrixFq::from_encoded(Field f, size_t rows, size_t cols,
                                const std::vector<uint32_t>& row_major) {
    if (row_major.size() != rows * cols)
        raise(Errc::DimensionMismatch, "entry count does not match shape");
    MatrixFq m(f, rows, cols);
    for (uint32_t v : row_major)
        if (v >= f.q()) raise(Errc::InvalidParameters, "entry encoding out of range");
    m.v_ = row_major;
    return m;
}

void MatrixFq::set(size_t r, size_t c, Fq v) {
    if (v.field() != field_) raise(Errc::FieldMismatch, "entry from a different field");
    v_[r * cols_ + c] = v.value();
}

std::vector<uint32_t> MatrixFq::row_encoded(size_t r) const {
    return std::vector<uint32_t>(v_.begin() + r * cols_, v_.begin() + (r + 1) * cols_);
}

namespace {

void swap_rows(MatrixFq& m, size_t a, size_t b) {
    if (a == b) return;
    for (size_t c = 0; c < m.cols(); ++c) {
        uint32_t t = m.raw(a, c);
        m.raw_set(a, c, m.raw(b, c));
        m.raw_set(b, c, t);
    }
}

void check_same_field(const MatrixFq& a, const MatrixFq& b) {
    if (a.field() != b.field()) raise(Errc::FieldMismatch, "matrices over different fields");
}

}  // namespace

RrefResult rref(const MatrixFq& a) {
    const FieldSpec& F = a.field().spec();
    MatrixFq w = a;
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < w.cols() && r < w.rows(); ++c) {
        size_t piv = r;
        while (piv < w.rows() && w.raw(piv, c) == 0) ++piv;
        if (piv == w.rows()) continue;
        swap_rows(w, r, piv);
        uint32_t scale = F.inv(w.raw(r, c));
        for (size_t j = c; j < w.cols(); ++j) w.raw_set(r, j, F.mul(scale, w.raw(r, j)));
        for (size_t i = 0; i < w.rows(); ++i) {
            if (i == r) continue;
            uint32_t f = w.raw(i, c);
            if (f == 0) continue;
            for (size_t j = c; j < w.cols(); ++j)
                w.raw_set(i, j, F.sub(w.raw(i, j), F.mul(f, w.raw(r, j))));
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(w), r, std::move(pivots)};
}

size_t rank(const MatrixFq& a) { return rref(a).rank; }

Fq det(const MatrixFq& a) {
    if (a.rows() != a.cols()) raise(Errc::NotSquare, "determinant of a non-square matrix");
    const FieldSpec& F = a.field().spec();
    MatrixFq w = a;
    uint32_t d = 1;
    for (size_t c = 0; c < w.cols(); ++c) {
        size_t piv = c;
        while (piv < w.rows() && w.raw(piv, c) == 0) ++piv;
        if (piv == w.rows()) return a.field().zero();
        if (piv != c) {
            swap_rows(w, c, piv);
            d = F.neg(d);
        }
        uint32_t pv = w.raw(c, c);
        d = F.mul(d, pv);
        uint32_t pinv = F.inv(pv);
        for (size_t i = c + 1; i < w.rows(); ++i) {
            uint32_t f = w.raw(i, c);
            if (f == 0) continue;
            uint32_t factor = F.mul(f, pinv);
            for (size_t j = c; j < w.cols(); ++j)
                w.raw_set(i, j, F.sub(w.raw(i, j), F.mul(factor, w.raw(c, j))));
        }
    }
    return a.field().element(d);
}

MatrixFq left_kernel(const MatrixFq& a) {
    const FieldSpec& F = a.field().spec();
    RrefResult rr = rref(transpose(a));
    size_t n = a.rows();
    std::vector<bool> is_pivot(n, false);
    for (size_t p : rr.pivots) is_pivot[p] = true;
    MatrixFq out(a.field(), n - rr.rank, n);
    size_t row = 0;
    for (size_t fcol = 0; fcol < n; ++fcol) {
        if (is_pivot[fcol]) continue;
        out.raw_set(row, fcol, 1);
        for (size_t i = 0; i < rr.rank; ++i)
            out.raw_set(row, rr.pivots[i], F.neg(rr.R.raw(i, fcol)));
        ++row;
    }
    return out;
}

MatrixFq transpose(const MatrixFq& a) {
    MatrixFq t(a.field(), a.cols(), a.rows());
    for (size_t r = 0; r < a.rows(); ++r)
        for (size_t c = 0; c < a.cols(); ++c) t.raw_set(c, r, a.raw(r, c));
    return t;
}

MatrixFq conjugated(const MatrixFq& a) {
    const FieldSpec& F = a.field().spec();
    uint32_t q0 = quadratic_base_order(a.field());
    MatrixFq out = a;
    for (size_t r = 0; r < a.rows(); ++r)
        for (size_t c = 0; c < a.cols(); ++c) out.raw_set(r, c, F.pow(a.raw(r, c), q0));
    return out;
}

MatrixFq operator*(const MatrixFq& a, const MatrixFq& b) {
    check_same_field(a, b);
    if (a.cols() != b.rows()) raise(Errc::DimensionMismatch, "incompatible shapes for product");
    const FieldSpec& F = a.field().spec();
    MatrixFq out(a.field(), a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t l = 0; l < a.cols(); ++l) {
            uint32_t ail = a.raw(i, l);
            if (ail == 0) continue;
            for (size_t j = 0; j < b.cols(); ++j)
                out.raw_set(i, j, F.add(out.raw(i, j), F.mul(ail, b.raw(l, j))));
        }
    return out;
}

MatrixFq gram_euclidean(const MatrixFq& g) {
    const FieldSpec& F = g.field().spec();
    MatrixFq m(g.field(), g.rows(), g.rows());
    for (size_t i = 0; i < g.rows(); ++i)
        for (size_t j = i; j < g.rows(); ++j) {
            uint32_t s = 0;
            for (size_t l = 0; l < g.cols(); ++l) s = F.add(s, F.mul(g.raw(i, l), g.raw(j, l)));
            m.raw_set(i, j, s);
            m.raw_set(j, i, s);
        }
    return m;
}

MatrixFq gram_hermitian(const MatrixFq& g) {
    const FieldSpec& F = g.field().spec();
    uint32_t q0 = quadratic_base_order(g.field());
    MatrixFq m(g.field(), g.rows(), g.rows());
    for (size_t i = 0; i < g.rows(); ++i)
        for (size_t j = 0; j < g.rows(); ++j) {
            uint32_t s = 0;
            for (size_t l = 0; l < g.cols(); ++l)
                s = F.add(s, F.mul(g.raw(i, l), F.pow(g.raw(j, l), q0)));
            m.raw_set(i, j, s);
        }
    return m;
}

MatrixFq principal_delete(const MatrixFq& m, const std::vector<size_t>& idx) {
    if (m.rows() != m.cols()) raise(Errc::NotSquare, "principal submatrix of a non-square matrix");
    std::vector<size_t> del = idx;
    std::sort(del.begin(), del.end());
    del.erase(std::unique(del.begin(), del.end()), del.end());
    for (size_t i : del)
        if (i >= m.rows())
            raise(Errc::IndexOutOfRange, "index " + std::to_string(i + 1) + " out of range");
    std::vector<size_t> keep;
    for (size_t i = 0; i < m.rows(); ++i)
        if (!std::binary_search(del.begin(), del.end(), i)) keep.push_back(i);
    MatrixFq out(m.field(), keep.size(), keep.size());
    for (size_t r = 0; r < keep.size(); ++r)
        for (size_t c = 0; c < keep.size(); ++c) out.raw_set(r, c, m.raw(keep[r], keep[c]));
    return out;
}

MatrixFq diag_add(const MatrixFq& m, const std::vector<Fq>& u) {
    if (m.rows() != m.cols()) raise(Errc::NotSquare, "diagonal update of a non-square matrix");
    if (u.size() != m.rows()) raise(Errc::DimensionMismatch, "diagonal word has wrong length");
    const FieldSpec& F = m.field().spec();
    MatrixFq out = m;
    for (size_t i = 0; i < u.size(); ++i) {
        if (u[i].field() != m.field()) raise(Errc::FieldMismatch, "diagonal word field mismatch");
        out.raw_set(i, i, F.add(out.raw(i, i), u[i].value()));
    }
    return out;
}

MatrixFq vstack(const MatrixFq& top, const MatrixFq& bottom) {
    check_same_field(top, bottom);
    if (top.cols() != bottom.cols()) raise(Errc::DimensionMismatch, "vstack width mismatch");
    MatrixFq out(top.field(), top.rows() + bottom.rows(), top.cols());
    for (size_t r = 0; r < top.rows(); ++r)
        for (size_t c = 0; c < top.cols(); ++c) out.raw_set(r, c, top.raw(r, c));
    for (size_t r = 0; r < bottom.rows(); ++r)
        for (size_t c = 0; c < top.cols(); ++c) out.raw_set(top.rows() + r, c, bottom.raw(r, c));
    return out;
}

MatrixFq hstack(const MatrixFq& left, const MatrixFq& right) {
    check_same_field(left, right);
    if (left.rows() != right.rows()) raise(Errc::DimensionMismatch, "hstack height mismatch");
    MatrixFq out(left.field(), left.rows(), left.cols() + right.cols());
    for (size_t r = 0; r < left.rows(); ++r) {
        for (size_t c = 0; c < left.cols(); ++c) out.raw_set(r, c, left.raw(r, c));
        for (size_t c = 0; c < right.cols(); ++c)
            out.raw_set(r, left.cols() + c, right.raw(r, c));
    }
    return out;
}

MatrixFq take_rows(const MatrixFq& a, size_t begin, size_t count) {
    if (begin + count > a.rows()) raise(Errc::IndexOutOfRange, "row slice out of range");
    MatrixFq out(a.field(), count, a.cols());
    for (size_t r = 0; r < count; ++r)
        for (size_t c = 0; c < a.cols(); ++c) out.raw_set(r, c, a.raw(begin + r, c));
    return out;
}

MatrixFq permute_columns(const MatrixFq& a, const Permutation& sigma) {
    if (sigma.size() != a.cols()) raise(Errc::DimensionMismatch, "permutation length mismatch");
    MatrixFq out(a.field(), a.rows(), a.cols());
    for (size_t r = 0; r < a.rows(); ++r)
        for (size_t c = 0; c < a.cols(); ++c) out.raw_set(r, c, a.raw(r, sigma[c]));
    return out;
}

MatrixFq scale_columns(const MatrixFq& a, const std::vector<Fq>& factors) {
    if (factors.size() != a.cols()) raise(Errc::DimensionMismatch, "scaling word length mismatch");
    const FieldSpec& F = a.field().spec();
    MatrixFq out = a;
    for (size_t c = 0; c < a.cols(); ++c) {
        if (factors[c].field() != a.field())
            raise(Errc::FieldMismatch, "scaling word field mismatch");
        for (size_t r = 0; r < a.rows(); ++r)
            out.raw_set(r, c, F.mul(a.raw(r, c), factors[c].value()));
    }
    return out;
}

MatrixFq row_basis(const MatrixFq& a) {
    RrefResult rr = rref(a);
    return take_rows(rr.R, 0, rr.rank);
}

bool same_row_space(const MatrixFq& a, const MatrixFq& b) {
    if (a.field() != b.field() || a.cols() != b.cols()) return false;
    return row_basis(a) == row_basis(b);
}

}  // namespace lcdkit
