#ifndef LCDKIT_CODE_HPP
#define LCDKIT_CODE_HPP

#include <memory>
#include <optional>

#include "lcdkit/matrix.hpp"

namespace lcdkit {

/// Which inner product governs duals, hulls and Gram matrices.
enum class Variant { euclidean, hermitian };

const char* variant_name(Variant v);
std::optional<Variant> variant_from_name(const std::string& s);

constexpr uint64_t kDefaultDistanceBudget = 2'000'000;

/// Coordinate scaling followed by a coordinate permutation: the image of a
/// word x is y with y_i = (a * x)[sigma(i)]. With every a_j nonzero this is a
/// code equivalence and preserves [n, k, d].
struct MonomialTransform {
    std::vector<Fq> scale;
    Permutation sigma;

    bool all_nonzero() const;
    static MonomialTransform identity(Field f, size_t n);
};

/// Column permutation sigma moving the rref pivots to the front, and the
/// resulting systematic generator [I_k : P].
struct StandardFormWitness {
    Permutation sigma;
    MatrixFq G_std;
    MatrixFq P;
};

struct LcdVerdict {
    bool lcd;
    Fq det_gram;
};

/// An [n, k] linear code with a fixed generator matrix. Full-rank generators
/// are kept verbatim; construction with RankPolicy::reduce replaces a
/// rank-deficient input by the nonzero rows of its rref. Instances are
/// immutable; copies share the cached Gram/standard-form/distance values.
class LinearCode {
  public:
    enum class RankPolicy { require_full, reduce };

    static LinearCode make(Field f, MatrixFq g, Variant v,
                           RankPolicy policy = RankPolicy::require_full);

    Field field() const;
    Variant variant() const;
    size_t n() const;
    size_t k() const;
    const MatrixFq& generator() const;

    const MatrixFq& gram_cached() const;
    const StandardFormWitness& standard_cached() const;
    std::optional<size_t> distance_if_cached() const;
    size_t distance(uint64_t budget) const;

  private:
    struct Impl;
    explicit LinearCode(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

/// Gram matrix of the stored generator under the code's inner product.
const MatrixFq& gram(const LinearCode& c);

const StandardFormWitness& standard_form(const LinearCode& c);

/// Dual code under the code's inner product, with the canonical (rref) basis;
/// empty when k = n.
std::optional<LinearCode> dual(const LinearCode& c);

/// Basis of C intersected with its dual: rows x*G for x spanning the left
/// kernel of the Gram matrix.
MatrixFq hull_basis(const LinearCode& c);
size_t hull_dimension(const LinearCode& c);

/// Nonsingular Gram certificate; lcd iff det_gram is nonzero.
LcdVerdict is_lcd(const LinearCode& c);

enum class ZeroPolicy { reject, allow };

/// Apply a monomial transform. Zero scalars require ZeroPolicy::allow; if the
/// rank then drops, the result is re-reduced and reported through
/// rank_dropped, or RankDropped is thrown when no report slot is given.
LinearCode apply_transform(const LinearCode& c, const MonomialTransform& t,
                           ZeroPolicy policy = ZeroPolicy::reject,
                           bool* rank_dropped = nullptr);

/// Exact minimum distance by enumerating one message per projective class;
/// throws BudgetExceeded when (q^k - 1)/(q - 1) exceeds the budget.
size_t min_distance(const LinearCode& c, uint64_t budget = kDefaultDistanceBudget);

bool is_mds(const LinearCode& c, uint64_t budget = kDefaultDistanceBudget);

/// Number of projective message classes (q^k - 1)/(q - 1), saturating.
uint64_t projective_class_count(uint32_t q, size_t k);

/// Same field, variant, length and row space.
bool same_code(const LinearCode& a, const LinearCode& b);

}  // namespace lcdkit

#endif
