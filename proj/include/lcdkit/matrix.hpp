#ifndef LCDKIT_MATRIX_HPP
#define LCDKIT_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "lcdkit/galois.hpp"

namespace lcdkit {

/// Permutation of {0..n-1}. images()[i] is the source index that lands at
/// position i, i.e. applying to a word x yields y with y_i = x[images_[i]].
class Permutation {
  public:
    explicit Permutation(std::vector<uint32_t> images);
    static Permutation identity(size_t n);
    size_t size() const { return images_.size(); }
    uint32_t operator[](size_t i) const { return images_[i]; }
    const std::vector<uint32_t>& images() const { return images_; }
    Permutation inverse() const;
    bool is_identity() const;
    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.images_ == b.images_;
    }

  private:
    std::vector<uint32_t> images_;
};

/// Dense matrix over one finite field, entries stored as encodings.
/// Zero-row and zero-column shapes are allowed; the 0x0 matrix has det 1.
class MatrixFq {
  public:
    MatrixFq(Field f, size_t rows, size_t cols);
    static MatrixFq identity(Field f, size_t n);
    static MatrixFq from_encoded(Field f, size_t rows, size_t cols,
                                 const std::vector<uint32_t>& row_major);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Field field() const { return field_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Fq operator()(size_t r, size_t c) const { return field_.element(raw(r, c)); }
    void set(size_t r, size_t c, Fq v);
    uint32_t raw(size_t r, size_t c) const { return v_[r * cols_ + c]; }
    void raw_set(size_t r, size_t c, uint32_t v) { v_[r * cols_ + c] = v; }
    const std::vector<uint32_t>& raw_data() const { return v_; }
    std::vector<uint32_t> row_encoded(size_t r) const;

    friend bool operator==(const MatrixFq& a, const MatrixFq& b) {
        return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.v_ == b.v_;
    }

  private:
    Field field_;
    size_t rows_, cols_;
    std::vector<uint32_t> v_;
};

struct RrefResult {
    MatrixFq R;
    size_t rank;
    std::vector<size_t> pivots;  // pivot column per pivot row, increasing
};

RrefResult rref(const MatrixFq& a);
size_t rank(const MatrixFq& a);

/// Exact determinant by elimination with row swaps; 0x0 gives 1.
Fq det(const MatrixFq& a);

/// Rows form a basis of the left kernel {x : x A = 0}; row count equals
/// rows(A) - rank(A). Basis rows carry the identity pattern on free indices.
MatrixFq left_kernel(const MatrixFq& a);

MatrixFq transpose(const MatrixFq& a);
MatrixFq conjugated(const MatrixFq& a);  // entrywise Frobenius conjugate
MatrixFq operator*(const MatrixFq& a, const MatrixFq& b);

MatrixFq gram_euclidean(const MatrixFq& g);             // G G^T
MatrixFq gram_hermitian(const MatrixFq& g);             // G conj(G)^T

/// Delete the rows and columns listed in `idx` (0-based set) from a square
/// matrix. Deleting everything leaves the 0x0 matrix.
MatrixFq principal_delete(const MatrixFq& m, const std::vector<size_t>& idx);

/// M + diag(u).
MatrixFq diag_add(const MatrixFq& m, const std::vector<Fq>& u);

MatrixFq vstack(const MatrixFq& top, const MatrixFq& bottom);
MatrixFq hstack(const MatrixFq& left, const MatrixFq& right);
MatrixFq take_rows(const MatrixFq& a, size_t begin, size_t count);
MatrixFq permute_columns(const MatrixFq& a, const Permutation& sigma);
MatrixFq scale_columns(const MatrixFq& a, const std::vector<Fq>& factors);

/// Nonzero rows of the reduced row echelon form: the canonical basis of the
/// row space.
MatrixFq row_basis(const MatrixFq& a);
bool same_row_space(const MatrixFq& a, const MatrixFq& b);

}  // namespace lcdkit

#endif
