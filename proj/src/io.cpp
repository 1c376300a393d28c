#include "lcdkit/io.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace lcdkit {
namespace {

class LineReader {
  public:
    explicit LineReader(std::istream& in) : in_(in) {}

    // Next content line; blank lines and '#' comments are skipped.
    bool next(std::string& out) {
        std::string line;
        while (std::getline(in_, line)) {
            ++lineno_;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            size_t first = line.find_first_not_of(" \t");
            if (first == std::string::npos || line[first] == '#') continue;
            out = line;
            return true;
        }
        return false;
    }

    std::string require(const std::string& what) {
        std::string line;
        if (!next(line)) fail("missing " + what);
        return line;
    }

    void require_end() {
        std::string line;
        if (next(line)) fail("unexpected trailing content");
    }

    [[noreturn]] void fail(const std::string& msg) const {
        raise(Errc::ParseError, "line " + std::to_string(lineno_) + ": " + msg);
    }

  private:
    std::istream& in_;
    size_t lineno_ = 0;
};

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

uint64_t parse_u64(const LineReader& lr, const std::string& tok, const std::string& what) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        lr.fail("expected a non-negative integer for " + what + ", got '" + tok + "'");
    errno = 0;
    unsigned long long v = std::strtoull(tok.c_str(), nullptr, 10);
    if (errno != 0) lr.fail(what + " out of range");
    return v;
}

uint64_t parse_kv_u64(const LineReader& lr, const std::string& tok, const std::string& key) {
    if (tok.rfind(key + "=", 0) != 0) lr.fail("expected '" + key + "=...', got '" + tok + "'");
    return parse_u64(lr, tok.substr(key.size() + 1), key);
}

std::vector<uint32_t> parse_comma_list(const LineReader& lr, const std::string& body,
                                       const std::string& what) {
    std::vector<uint32_t> out;
    std::string cur;
    std::istringstream is(body);
    while (std::getline(is, cur, ','))
        out.push_back(uint32_t(parse_u64(lr, cur, what)));
    return out;
}

}  // namespace

ParsedCode parse_code(std::istream& in) {
    LineReader lr(in);

    auto header = split_ws(lr.require("field header"));
    if (header.size() != 4 || header[0] != "field")
        lr.fail("expected 'field p=<p> m=<m> modulus=<c0,...,cm>'");
    uint64_t p = parse_kv_u64(lr, header[1], "p");
    uint64_t m = parse_kv_u64(lr, header[2], "m");
    if (header[3].rfind("modulus=", 0) != 0) lr.fail("expected 'modulus=...'");
    std::string modbody = header[3].substr(8);
    std::optional<std::vector<uint32_t>> modulus;
    if (!modbody.empty()) modulus = parse_comma_list(lr, modbody, "modulus coefficient");
    if (m > 1 && !modulus) lr.fail("missing modulus coefficients for m > 1");

    Field field;
    try {
        field = make_field(uint32_t(p), uint32_t(m), m == 1 ? std::nullopt : modulus);
    } catch (const Error& e) {
        lr.fail(e.what());
    }

    auto form = split_ws(lr.require("form line"));
    if (form.size() != 2 || form[0] != "form") lr.fail("expected 'form euclidean|hermitian'");
    auto variant = variant_from_name(form[1]);
    if (!variant) lr.fail("unknown form '" + form[1] + "'");

    auto dims = split_ws(lr.require("dimension line"));
    if (dims.size() != 2) lr.fail("expected 'n=<n> k=<k>'");
    uint64_t n = parse_kv_u64(lr, dims[0], "n");
    uint64_t k = parse_kv_u64(lr, dims[1], "k");
    if (n < 1 || k < 1 || k > n) lr.fail("need 1 <= k <= n");

    MatrixFq g(field, size_t(k), size_t(n));
    for (uint64_t r = 0; r < k; ++r) {
        auto row = split_ws(lr.require("generator row"));
        if (row.size() != n)
            lr.fail("expected " + std::to_string(n) + " entries, got " +
                    std::to_string(row.size()));
        for (uint64_t c = 0; c < n; ++c) {
            uint64_t v = parse_u64(lr, row[c], "entry");
            if (v >= field.q()) lr.fail("entry " + std::to_string(v) + " not below q");
            g.raw_set(size_t(r), size_t(c), uint32_t(v));
        }
    }
    lr.require_end();
    return {field, *variant, std::move(g)};
}

ParsedCode parse_code_string(const std::string& text) {
    std::istringstream is(text);
    return parse_code(is);
}

ParsedCode parse_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(Errc::ParseError, "cannot open '" + path + "'");
    try {
        return parse_code(in);
    } catch (const Error& e) {
        if (e.code() != Errc::ParseError) throw;
        raise(Errc::ParseError, path + ", " + std::string(e.what()).substr(12));
    }
}

LinearCode code_from_parsed(const ParsedCode& pc, LinearCode::RankPolicy policy) {
    return LinearCode::make(pc.field, pc.G, pc.variant, policy);
}

void write_code(std::ostream& os, const LinearCode& c) {
    Field f = c.field();
    os << "field p=" << f.p() << " m=" << f.m() << " modulus=";
    const auto& mod = f.modulus();
    for (size_t i = 0; i < mod.size(); ++i) os << (i ? "," : "") << mod[i];
    os << "\nform " << variant_name(c.variant()) << "\n";
    os << "n=" << c.n() << " k=" << c.k() << "\n";
    const MatrixFq& g = c.generator();
    for (size_t r = 0; r < g.rows(); ++r) {
        for (size_t cidx = 0; cidx < g.cols(); ++cidx)
            os << (cidx ? " " : "") << g.raw(r, cidx);
        os << "\n";
    }
}

std::string serialize_code(const LinearCode& c) {
    std::ostringstream os;
    write_code(os, c);
    return os.str();
}

TransformRecord scale_record(const LinearCode& original, const LcdifyResult& r) {
    TransformRecord rec;
    rec.kind = TransformRecord::Kind::scale;
    rec.q = original.field().q();
    rec.n = original.n();
    rec.sigma = r.transform.sigma.images();
    rec.a.reserve(r.transform.scale.size());
    for (const Fq& e : r.transform.scale) rec.a.push_back(e.value());
    rec.J = r.cert.J;
    rec.t = r.cert.t();
    rec.det_minor = r.cert.det_minor.value();
    rec.det_gram_after = r.det_gram_after.value();
    return rec;
}

TransformRecord extend_record(const LinearCode& original, const ExtensionResult& e) {
    TransformRecord rec;
    rec.kind = TransformRecord::Kind::extend;
    rec.q = original.field().q();
    rec.n = original.n();
    rec.h = e.map.h;
    rec.det_gram_after = det(gram(e.code)).value();
    return rec;
}

void write_transform(std::ostream& os, const TransformRecord& r) {
    os << "kind: " << (r.kind == TransformRecord::Kind::scale ? "scale" : "extend") << "\n";
    os << "q: " << r.q << "\n";
    os << "n: " << r.n << "\n";
    if (r.kind == TransformRecord::Kind::scale) {
        os << "sigma:";
        for (uint32_t s : r.sigma) os << " " << s + 1;
        os << "\na:";
        for (uint32_t v : r.a) os << " " << v;
        os << "\nJ:";
        for (size_t j : r.J) os << " " << j + 1;
        os << "\nt: " << r.t << "\n";
        os << "det_MJ: " << r.det_minor << "\n";
        os << "det_gram_after: " << r.det_gram_after << "\n";
    } else {
        os << "h: " << r.h << "\n";
        os << "det_gram_after: " << r.det_gram_after << "\n";
    }
}

std::string serialize_transform(const TransformRecord& r) {
    std::ostringstream os;
    write_transform(os, r);
    return os.str();
}

namespace {

std::string expect_key(LineReader& lr, const std::string& key) {
    std::string line = lr.require("'" + key + ":' line");
    if (line.rfind(key + ":", 0) != 0) lr.fail("expected '" + key + ": ...'");
    std::string body = line.substr(key.size() + 1);
    size_t first = body.find_first_not_of(" \t");
    return first == std::string::npos ? std::string() : body.substr(first);
}

uint64_t expect_u64(LineReader& lr, const std::string& key) {
    return parse_u64(lr, expect_key(lr, key), key);
}

std::vector<uint64_t> expect_list(LineReader& lr, const std::string& key) {
    auto toks = split_ws(expect_key(lr, key));
    std::vector<uint64_t> out;
    out.reserve(toks.size());
    for (const auto& t : toks) out.push_back(parse_u64(lr, t, key));
    return out;
}

}  // namespace

TransformRecord parse_transform(std::istream& in) {
    LineReader lr(in);
    TransformRecord rec;

    std::string kind = expect_key(lr, "kind");
    if (kind == "scale")
        rec.kind = TransformRecord::Kind::scale;
    else if (kind == "extend")
        rec.kind = TransformRecord::Kind::extend;
    else
        lr.fail("unknown kind '" + kind + "'");

    rec.q = uint32_t(expect_u64(lr, "q"));
    rec.n = expect_u64(lr, "n");
    if (rec.q < 2) lr.fail("q must be at least 2");

    if (rec.kind == TransformRecord::Kind::scale) {
        auto sigma = expect_list(lr, "sigma");
        if (sigma.size() != rec.n) lr.fail("sigma must list n positions");
        std::vector<uint32_t> images;
        images.reserve(sigma.size());
        for (uint64_t v : sigma) {
            if (v < 1 || v > rec.n) lr.fail("sigma position out of range");
            images.push_back(uint32_t(v - 1));
        }
        try {
            rec.sigma = Permutation(images).images();
        } catch (const Error&) {
            lr.fail("sigma is not a permutation");
        }

        auto a = expect_list(lr, "a");
        if (a.size() != rec.n) lr.fail("a must list n elements");
        for (uint64_t v : a) {
            if (v >= rec.q) lr.fail("scaling element not below q");
            rec.a.push_back(uint32_t(v));
        }

        auto J = expect_list(lr, "J");
        for (uint64_t v : J) {
            if (v < 1 || v > rec.n) lr.fail("J index out of range");
            rec.J.push_back(size_t(v - 1));
        }
        for (size_t i = 1; i < rec.J.size(); ++i)
            if (rec.J[i - 1] >= rec.J[i]) lr.fail("J must be strictly increasing");

        std::string tline = expect_key(lr, "t");
        bool neg = !tline.empty() && tline[0] == '-';
        rec.t = int64_t(parse_u64(lr, neg ? tline.substr(1) : tline, "t"));
        if (neg) rec.t = -rec.t;

        rec.det_minor = uint32_t(expect_u64(lr, "det_MJ"));
        rec.det_gram_after = uint32_t(expect_u64(lr, "det_gram_after"));
        if (rec.det_minor >= rec.q || rec.det_gram_after >= rec.q)
            lr.fail("determinant encoding not below q");
    } else {
        rec.h = expect_u64(lr, "h");
        rec.det_gram_after = uint32_t(expect_u64(lr, "det_gram_after"));
        if (rec.det_gram_after >= rec.q) lr.fail("determinant encoding not below q");
    }
    lr.require_end();
    return rec;
}

TransformRecord parse_transform_string(const std::string& text) {
    std::istringstream is(text);
    return parse_transform(is);
}

TransformRecord parse_transform_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(Errc::ParseError, "cannot open '" + path + "'");
    try {
        return parse_transform(in);
    } catch (const Error& e) {
        if (e.code() != Errc::ParseError) throw;
        raise(Errc::ParseError, path + ", " + std::string(e.what()).substr(12));
    }
}

namespace {

Fq u_of(Variant v, Fq a) {
    Field f = a.field();
    return v == Variant::euclidean ? a * a - f.one() : norm(a) - f.one();
}

// All size-s subsets of {0..k-1}, lexicographic.
bool advance_subset(std::vector<size_t>& idx, size_t k) {
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

}  // namespace

VerifyReport verify_transform(const ParsedCode& original, const ParsedCode& transformed,
                              const TransformRecord& rec) {
    auto fail = [](const char* what) { return VerifyReport{false, what}; };

    if (rec.q != original.field.q()) return fail("q");
    if (rec.n != original.G.cols()) return fail("n");
    if (transformed.field != original.field) return fail("field");
    if (transformed.variant != original.variant) return fail("form");

    LinearCode orig = code_from_parsed(original);
    size_t k = orig.k(), n = orig.n();

    if (rec.kind == TransformRecord::Kind::extend) {
        ExtensionResult ext = extend_to_lcd(orig);
        if (rec.h != ext.map.h) return fail("h");
        if (!(transformed.G == ext.code.generator())) return fail("generator");
        Fq dg = det(gram(ext.code));
        if (dg.is_zero() || dg.value() != rec.det_gram_after) return fail("det_gram_after");
        return {true, ""};
    }

    if (transformed.G.rows() != k || transformed.G.cols() != n) return fail("k");
    const StandardFormWitness& sf = standard_form(orig);
    if (rec.sigma != sf.sigma.images()) return fail("sigma");

    Field f = orig.field();
    std::vector<Fq> a_std;
    a_std.reserve(n);
    for (size_t i = 0; i < n; ++i) a_std.push_back(f.element(rec.a[sf.sigma[i]]));
    MatrixFq g_out = scale_columns(sf.G_std, a_std);
    if (!(transformed.G == g_out)) return fail("generator");

    for (size_t j : rec.J)
        if (j >= k) return fail("J");
    if (rec.t != int64_t(rec.J.size()) - 1) return fail("t");

    MatrixFq m = orig.variant() == Variant::euclidean ? gram_euclidean(sf.G_std)
                                                      : gram_hermitian(sf.G_std);
    // minimality: every strictly smaller deletion leaves a singular matrix
    for (size_t s = 0; s < rec.J.size(); ++s) {
        std::vector<size_t> idx(s);
        for (size_t i = 0; i < s; ++i) idx[i] = i;
        do {
            if (!det(principal_delete(m, idx)).is_zero()) return fail("J");
        } while (advance_subset(idx, k));
    }
    Fq det_minor = det(principal_delete(m, rec.J));
    if (det_minor.is_zero() || det_minor.value() != rec.det_minor) return fail("det_MJ");

    std::vector<bool> in_J(n, false);
    for (size_t j : rec.J) in_J[j] = true;
    for (size_t i = 0; i < n; ++i) {
        bool u_zero = u_of(orig.variant(), a_std[i]).is_zero();
        if (in_J[i] == u_zero) return fail("scaling support");
    }

    Fq dg = det(orig.variant() == Variant::euclidean ? gram_euclidean(g_out)
                                                     : gram_hermitian(g_out));
    if (dg.is_zero() || dg.value() != rec.det_gram_after) return fail("det_gram_after");

    Fq expected = det_minor;
    for (size_t j : rec.J) expected = expected * u_of(orig.variant(), a_std[j]);
    if (expected != dg) return fail("factorization");

    return {true, ""};
}

LinearCode random_code(Field f, Variant v, size_t n, size_t k, uint64_t seed) {
    if (k < 1 || k > n) raise(Errc::InvalidParameters, "need 1 <= k <= n");
    if (v == Variant::hermitian && f.m() % 2 != 0)
        raise(Errc::HermitianNeedsSquareOrder, "hermitian codes need a field of square order");
    SplitMix64 gen(seed);
    while (true) {
        MatrixFq g(f, k, n);
        for (size_t r = 0; r < k; ++r)
            for (size_t c = 0; c < n; ++c) g.raw_set(r, c, uint32_t(gen.below(f.q())));
        if (rank(g) == k) return LinearCode::make(f, std::move(g), v);
    }
}

}  // namespace lcdkit
