#ifndef LCDKIT_CONSTRUCT_HPP
#define LCDKIT_CONSTRUCT_HPP

#include "lcdkit/code.hpp"

namespace lcdkit {

constexpr uint64_t kDefaultMinorBudget = 10'000'000;

/// Witness for the smallest principal deletion with a nonsingular remainder:
/// det(M with rows/cols J deleted) = det_minor != 0, and every deletion of
/// fewer indices leaves a singular matrix. J is empty when M itself is
/// nonsingular. Indices are 0-based.
struct MinorCertificate {
    enum class Proof { exhaustive, rank_shortcut };

    std::vector<size_t> J;
    Fq det_minor;
    Proof proof = Proof::exhaustive;

    int t() const { return int(J.size()) - 1; }
};

/// Search deletions of increasing size, lexicographically within each size,
/// starting from k - rank(M) (no smaller deletion can expose a nonsingular
/// principal submatrix). Always terminates: deleting everything leaves the
/// 0x0 matrix with determinant 1.
MinorCertificate find_minimal_deletion(const MatrixFq& m,
                                       uint64_t minor_budget = kDefaultMinorBudget);

/// Scaling word for the Euclidean construction: positions in J get the first
/// element of F_q* outside {1,-1} (requires q > 3, or zero with allow_zero);
/// all other positions get 1. J holds 0-based positions in [0, k).
std::vector<Fq> choose_scaling_euclidean(Field f, size_t n, size_t k,
                                         const std::vector<size_t>& J, bool allow_zero = false);

/// Hermitian analogue: positions in J get the first nonzero element whose
/// norm over the base field differs from 1 (requires base order > 2, or zero
/// with allow_zero); the rest get 1.
std::vector<Fq> choose_scaling_hermitian(Field f, size_t n, size_t k,
                                         const std::vector<size_t>& J, bool allow_zero = false);

struct LcdifyResult {
    LinearCode code;               // the equivalent LCD code
    MonomialTransform transform;   // scale-then-permute, original coordinates
    MinorCertificate cert;         // deletion set J on standard-form positions
    Fq det_gram_after;             // det of the output's Gram, nonzero
    StandardFormWitness standard;  // the systematic form the scaling acts on
};

/// Transform a code into an equivalent LCD code: bring it to standard form,
/// find the minimal deletion certificate of the Gram matrix, scale the J
/// columns. The output Gram determinant factors exactly as
/// (prod over J of u_j) * det_minor with u_j = a_j^2 - 1 (Euclidean) or
/// a_j^(q0+1) - 1 (Hermitian); this identity is recomputed on every call.
LcdifyResult lcdify(const LinearCode& c, bool allow_zero = false,
                    uint64_t minor_budget = kDefaultMinorBudget);

/// The LCD subcode spanned by the canonical completion of a hull basis to a
/// basis of C; empty when the hull is all of C. Throws AlreadyLCD when the
/// hull is trivial.
std::optional<LinearCode> hull_complement_subcode(const LinearCode& c);

/// Basis of C ordered hull-first together with the appended coordinate block
/// used by the extension construction.
struct ExtensionMap {
    size_t h = 0;
    MatrixFq hull_rows;        // h x n
    MatrixFq complement_rows;  // (k-h) x n
    MatrixFq appended_block;   // k x h, row i = e_i for i < h, zero below
};

struct ExtensionResult {
    LinearCode code;
    ExtensionMap map;
};

/// Append h coordinates carrying the hull-detecting linear forms, producing
/// an LCD code of parameters [n+h, k, >= d]. A code with trivial hull is
/// returned unchanged.
ExtensionResult extend_to_lcd(const LinearCode& c);

/// The canonical hull-first basis extend_to_lcd builds on: hull rows stacked
/// over the greedy completion from the generator's rref rows.
MatrixFq hull_first_basis(const LinearCode& c);

/// Given linear forms by their k x t value matrix on the canonical hull-first
/// basis, decide whether appending them cannot yield an LCD code (rank < h).
/// Requires C = Ker(L) + Hull(C), i.e. the full value matrix has the same
/// rank as its first h rows; otherwise DecompositionViolated.
bool extension_is_deficient(const LinearCode& c, const MatrixFq& l_values);

}  // namespace lcdkit

#endif
