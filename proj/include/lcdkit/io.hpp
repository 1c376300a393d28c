#ifndef LCDKIT_IO_HPP
#define LCDKIT_IO_HPP

#include <iosfwd>
#include <string>

#include "lcdkit/construct.hpp"

namespace lcdkit {

/// A code file, kept exactly as read: header plus the generator matrix
/// verbatim (possibly rank-deficient until turned into a LinearCode).
struct ParsedCode {
    Field field;
    Variant variant;
    MatrixFq G;
};

ParsedCode parse_code(std::istream& in);
ParsedCode parse_code_string(const std::string& text);
ParsedCode parse_code_file(const std::string& path);

/// Rejects rank-deficient generators unless reduce is requested.
LinearCode code_from_parsed(const ParsedCode& pc,
                            LinearCode::RankPolicy policy = LinearCode::RankPolicy::require_full);

void write_code(std::ostream& os, const LinearCode& c);
std::string serialize_code(const LinearCode& c);

/// Certificate of a transformation, as stored in a transform file. For kind
/// scale: sigma and a describe scale-then-permute on the rref of the original
/// generator (sigma is the standard-form column move, a is indexed by
/// original coordinates), J/t/det_MJ the deletion certificate on
/// standard-form positions, det_gram_after the output Gram determinant.
/// For kind extend only q, n, h and det_gram_after are stored; the rest is
/// recomputed. All indices are 1-based on disk and 0-based here.
struct TransformRecord {
    enum class Kind { scale, extend };

    Kind kind = Kind::scale;
    uint32_t q = 0;
    uint64_t n = 0;
    std::vector<uint32_t> sigma;  // 0-based images
    std::vector<uint32_t> a;      // element encodings, length n
    std::vector<size_t> J;        // 0-based, strictly increasing
    int64_t t = -1;
    uint32_t det_minor = 0;
    uint32_t det_gram_after = 0;
    uint64_t h = 0;
};

TransformRecord scale_record(const LinearCode& original, const LcdifyResult& r);
TransformRecord extend_record(const LinearCode& original, const ExtensionResult& e);

TransformRecord parse_transform(std::istream& in);
TransformRecord parse_transform_string(const std::string& text);
TransformRecord parse_transform_file(const std::string& path);

void write_transform(std::ostream& os, const TransformRecord& r);
std::string serialize_transform(const TransformRecord& r);

struct VerifyReport {
    bool ok = false;
    std::string mismatch;  // first field that failed to match
};

/// Recompute the whole transformation from the original file and compare
/// against the transformed file and certificate, field by field.
VerifyReport verify_transform(const ParsedCode& original, const ParsedCode& transformed,
                              const TransformRecord& rec);

/// Deterministic 64-bit generator (splitmix64). Bounded draws use rejection
/// sampling, so identical seeds give identical streams on every platform.
struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    uint64_t below(uint64_t bound) {
        uint64_t limit = bound * (~uint64_t(0) / bound);
        uint64_t x = next();
        while (x >= limit) x = next();
        return x % bound;
    }
};

/// Uniform k x n generator entries, redrawn in full until the rank is k.
LinearCode random_code(Field f, Variant v, size_t n, size_t k, uint64_t seed);

}  // namespace lcdkit

#endif
