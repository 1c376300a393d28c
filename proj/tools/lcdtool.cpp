// lcdtool: transform linear codes over finite fields into equivalent or
// extended LCD codes, with verifiable certificates.
//
// Exit codes: 0 ok, 2 parse/usage, 3 construction impossible over this field,
// 4 enumeration budget exceeded, 5 verification failed, 1 internal error.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "lcdkit/bounds.hpp"
#include "lcdkit/io.hpp"

using namespace lcdkit;

namespace {

int exit_code_for(Errc c) {
    switch (c) {
        case Errc::ParseError:
        case Errc::RankDeficient:
        case Errc::InvalidParameters:
        case Errc::NotPrime:
        case Errc::ReducibleModulus:
        case Errc::NoCanonicalModulus:
        case Errc::UnsupportedFieldOrder:
        case Errc::OutOfDomain:
        case Errc::HermitianNeedsSquareOrder:
            return 2;
        case Errc::FieldTooSmall:
            return 3;
        case Errc::BudgetExceeded:
        case Errc::SearchBudgetExceeded:
            return 4;
        case Errc::VerifyFailed:
            return 5;
        default:
            return 1;
    }
}

LinearCode load_code(const std::string& path, bool reduce) {
    ParsedCode pc = parse_code_file(path);
    return code_from_parsed(pc, reduce ? LinearCode::RankPolicy::reduce
                                       : LinearCode::RankPolicy::require_full);
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) raise(Errc::InvalidParameters, "cannot write '" + path + "'");
    out << content;
}

Field field_for_order(uint64_t q, const std::optional<std::vector<uint32_t>>& modulus) {
    if (q < 2) raise(Errc::InvalidParameters, "q must be at least 2");
    uint32_t p = 0;
    for (uint32_t d = 2; uint64_t(d) * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    if (p == 0) p = uint32_t(q);
    uint32_t m = 0;
    uint64_t acc = 1;
    while (acc < q) {
        acc *= p;
        ++m;
    }
    if (acc != q) raise(Errc::InvalidParameters, "q = " + std::to_string(q) + " is not a prime power");
    return make_field(p, m, modulus);
}

void cmd_analyze(const std::string& path, bool reduce, bool mindist, uint64_t budget) {
    LinearCode c = load_code(path, reduce);
    const MatrixFq& m = gram(c);
    LcdVerdict v = is_lcd(c);
    std::cout << "n=" << c.n() << " k=" << c.k() << " q=" << c.field().q()
              << " form=" << variant_name(c.variant()) << "\n";
    std::cout << "rank_gram=" << rank(m) << "\n";
    std::cout << "h=" << hull_dimension(c) << "\n";
    std::cout << "lcd=" << (v.lcd ? "yes" : "no") << "\n";
    std::cout << "det_gram=" << v.det_gram.value() << "\n";
    if (mindist) {
        size_t d = min_distance(c, budget);
        int64_t defect = singleton_defect(int64_t(c.n()), int64_t(c.k()), int64_t(d));
        std::cout << "d=" << d << "\n";
        std::cout << "singleton_defect=" << defect << "\n";
        std::cout << "mds=" << (defect == 0 ? "yes" : "no") << "\n";
    }
}

void cmd_lcdify(const std::string& path, const std::string& out_path,
                const std::string& cert_path, bool reduce, bool allow_zero) {
    LinearCode c = load_code(path, reduce);
    LcdifyResult r = lcdify(c, allow_zero);
    write_file(out_path, serialize_code(r.code));
    if (!cert_path.empty()) write_file(cert_path, serialize_transform(scale_record(c, r)));
    std::cout << "n=" << r.code.n() << " k=" << r.code.k() << " |J|=" << r.cert.J.size()
              << " det_gram_after=" << r.det_gram_after.value() << "\n";
}

void cmd_extend(const std::string& path, const std::string& out_path,
                const std::string& cert_path, bool reduce) {
    LinearCode c = load_code(path, reduce);
    ExtensionResult e = extend_to_lcd(c);
    write_file(out_path, serialize_code(e.code));
    if (!cert_path.empty()) write_file(cert_path, serialize_transform(extend_record(c, e)));
    std::cout << "n=" << e.code.n() << " k=" << e.code.k() << " h=" << e.map.h << "\n";
}

void cmd_verify(const std::string& original, const std::string& transformed,
                const std::string& cert) {
    ParsedCode o = parse_code_file(original);
    ParsedCode t = parse_code_file(transformed);
    TransformRecord rec = parse_transform_file(cert);
    VerifyReport rep = verify_transform(o, t, rec);
    if (!rep.ok) raise(Errc::VerifyFailed, "first mismatch at '" + rep.mismatch + "'");
    std::cout << "verified\n";
}

void cmd_random(uint64_t q, uint64_t n, uint64_t k, uint64_t seed, const std::string& form,
                const std::optional<std::vector<uint32_t>>& modulus, const std::string& out_path) {
    auto v = variant_from_name(form);
    if (!v) raise(Errc::InvalidParameters, "unknown form '" + form + "'");
    Field f = field_for_order(q, modulus);
    LinearCode c = random_code(f, *v, size_t(n), size_t(k), seed);
    std::string text = serialize_code(c);
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
}

void cmd_mindist(const std::string& path, bool reduce, uint64_t budget) {
    LinearCode c = load_code(path, reduce);
    size_t d = min_distance(c, budget);
    std::cout << "d=" << d << "\n";
}

void cmd_bounds(std::optional<uint64_t> q, std::optional<double> delta, std::optional<int64_t> n,
                std::optional<int64_t> k, std::optional<int64_t> d) {
    if (!q) raise(Errc::InvalidParameters, "--q is required");
    if (delta) {
        BoundsReport r = asymptotic_report(uint32_t(*q), *delta);
        std::cout.precision(15);
        std::cout << "entropy=" << *r.entropy << "\n";
        std::cout << "gv_rate=" << *r.rate << "\n";
        return;
    }
    if (n && k && d) {
        BoundsReport r = finite_report(uint32_t(*q), *n, *k, *d);
        std::cout << "singleton_defect=" << *r.defect << "\n";
        std::cout << "mds=" << (*r.mds ? "yes" : "no") << "\n";
        return;
    }
    raise(Errc::InvalidParameters, "need either --delta or all of --n --k --d");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"LCD code construction and verification toolkit"};
    app.require_subcommand(1);

    std::string in_path, out_path, cert_path, form = "euclidean";
    std::string original, transformed, cert;
    bool reduce = false, mindist = false, allow_zero = false;
    uint64_t budget = kDefaultDistanceBudget;
    uint64_t q = 0, n = 0, k = 0, seed = 0;
    std::vector<uint32_t> modulus;
    std::optional<double> delta;
    std::optional<int64_t> bn, bk, bd;

    auto* analyze = app.add_subcommand("analyze", "report rank, hull and LCD status");
    analyze->add_option("file", in_path)->required();
    analyze->add_flag("--reduce", reduce, "accept rank-deficient generators");
    analyze->add_flag("--mindist", mindist, "also compute the exact minimum distance");
    analyze->add_option("--budget", budget, "projective class budget for --mindist");

    auto* lcdify_cmd = app.add_subcommand("lcdify", "emit an equivalent LCD code + certificate");
    lcdify_cmd->add_option("file", in_path)->required();
    lcdify_cmd->add_option("-o,--out", out_path)->required();
    lcdify_cmd->add_option("--cert", cert_path, "certificate output path")->required();
    lcdify_cmd->add_flag("--reduce", reduce);
    lcdify_cmd->add_flag("--allow-zero", allow_zero,
                         "permit zero scalars over tiny fields (drops the distance guarantee)");

    auto* extend = app.add_subcommand("extend", "emit the hull-extension LCD code");
    extend->add_option("file", in_path)->required();
    extend->add_option("-o,--out", out_path)->required();
    extend->add_option("--cert", cert_path, "certificate output path");
    extend->add_flag("--reduce", reduce);

    auto* verify = app.add_subcommand("verify", "recompute a certificate end to end");
    verify->add_option("original", original)->required();
    verify->add_option("transformed", transformed)->required();
    verify->add_option("cert", cert)->required();

    auto* random = app.add_subcommand("random", "deterministic random code file");
    random->add_option("--q", q)->required();
    random->add_option("--n", n)->required();
    random->add_option("--k", k)->required();
    random->add_option("--seed", seed)->required();
    random->add_option("--form", form, "euclidean (default) or hermitian");
    random->add_option("--modulus", modulus, "override the canonical modulus (c0,c1,...)")
        ->delimiter(',');
    random->add_option("-o,--out", out_path, "output path (stdout when omitted)");

    auto* mind = app.add_subcommand("mindist", "exact minimum distance");
    mind->add_option("file", in_path)->required();
    mind->add_flag("--reduce", reduce);
    mind->add_option("--budget", budget);

    auto* bounds = app.add_subcommand("bounds", "entropy / rate / Singleton defect");
    bounds->add_option("--q", q);
    bounds->add_option("--delta", delta);
    bounds->add_option("--n", bn);
    bounds->add_option("--k", bk);
    bounds->add_option("--d", bd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (analyze->parsed()) cmd_analyze(in_path, reduce, mindist, budget);
        if (lcdify_cmd->parsed()) cmd_lcdify(in_path, out_path, cert_path, reduce, allow_zero);
        if (extend->parsed()) cmd_extend(in_path, out_path, cert_path, reduce);
        if (verify->parsed()) cmd_verify(original, transformed, cert);
        if (random->parsed())
            cmd_random(q, n, k, seed, form,
                       modulus.empty() ? std::nullopt
                                       : std::optional<std::vector<uint32_t>>(modulus),
                       out_path);
        if (mind->parsed()) cmd_mindist(in_path, reduce, budget);
        if (bounds->parsed()) cmd_bounds(q ? std::optional<uint64_t>(q) : std::nullopt, delta,
                                         bn, bk, bd);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
