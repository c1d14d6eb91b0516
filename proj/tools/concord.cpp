// concord: certify infinite-rank satellite operators on the knot concordance
// group from exact Seifert-form arithmetic.
//
// Exit codes: 0 success (nonzero linking / verdict reached), 2 input or
// domain error, 3 inconclusive (l = 0), 4 missing tau oracle bound.

#include <iostream>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "concord/concord.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInput = 2;
constexpr int kExitInconclusive = 3;
constexpr int kExitMissingTau = 4;

unsigned long g_prec = 64;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw concord::ParseError("cannot write " + out_path);
        out << text;
    }
}

int cmd_linking(const std::string& file) {
    concord::Pattern p = concord::pattern_from_json(concord::load_json_file(file));
    concord::Rational l = concord::axis_self_linking(p);
    std::cout << "l = " << l.str() << "\n";
    return l.is_zero() ? kExitInconclusive : kExitOk;
}

int cmd_certify(const std::string& file, std::size_t family, const std::string& tau_file,
                long p_override, long q_override, const std::string& out_path,
                const std::string& verify_file) {
    std::optional<concord::TauOracle> oracle;
    if (!tau_file.empty())
        oracle = concord::tau_from_json(concord::load_json_file(tau_file));

    if (!verify_file.empty()) {
        concord::RankCertificate cert =
            concord::certificate_from_json(concord::load_json_file(verify_file));
        concord::VerifyResult r =
            concord::verify_certificate(cert, oracle ? &*oracle : nullptr);
        if (r.ok) {
            std::cout << "certificate verifies\n";
            return kExitOk;
        }
        std::cout << "certificate INVALID: " << r.first_failure << "\n";
        return kExitError;
    }

    concord::Pattern pat = concord::pattern_from_json(concord::load_json_file(file));

    if (sgn(pat.winding()) != 0) {
        std::cout << "infinite rank via signature jumps (winding number "
                  << pat.winding().get_str() << ")\n";
        return kExitOk;
    }

    concord::Rational l = concord::axis_self_linking(pat);
    if (l.is_zero()) {
        std::cout << "inconclusive: l = 0\n";
        return kExitInconclusive;
    }
    bool mirror = l.sign() > 0;
    std::cout << "infinite rank via instanton cobordism (l = " << l.str() << ")"
              << (mirror ? " [mirror pattern used]" : "") << "\n";

    if (family > 0) {
        if (!oracle) throw concord::MissingTau("Y");
        std::optional<std::pair<concord::Int, concord::Int>> forced;
        if (p_override > 0 || q_override > 0) {
            if (p_override <= 0 || q_override <= 0)
                throw concord::DomainError("--p and --q must be given together");
            forced = std::make_pair(concord::Int(p_override), concord::Int(q_override));
        }
        concord::RankCertificate cert = concord::generate_family(pat, family, *oracle, forced);
        emit(concord::dump_canonical(concord::certificate_to_json(cert)), out_path);
    }
    return kExitOk;
}

int cmd_signature(const std::string& file, const std::string& at, bool jumps) {
    concord::SeifertForm k = concord::knot_from_json(concord::load_json_file(file));
    if (jumps) {
        std::cout << concord::dump_canonical(
            concord::spectrum_to_json(concord::jump_spectrum(k, g_prec)));
        return kExitOk;
    }
    if (at.empty()) throw concord::DomainError("signature needs --at a/n or --jumps");
    concord::CircleAngle t = concord::CircleAngle::parse(at);
    try {
        std::cout << concord::tl_signature(k, t, g_prec) << "\n";
    } catch (const concord::SingularAtRoot&) {
        std::cerr << "error: " << at
                  << " is a root of the Alexander polynomial; the signature jumps here "
                     "(use --jumps for the jump spectrum)\n";
        return kExitInput;
    }
    return kExitOk;
}

int cmd_torus(long r, long s, bool want_seifert, bool want_jumps) {
    concord::SeifertForm k = concord::torus_seifert(r, s);
    if (want_jumps) {
        std::cout << concord::dump_canonical(
            concord::spectrum_to_json(concord::jump_spectrum(k, g_prec)));
    } else if (want_seifert) {
        std::cout << concord::dump_canonical(concord::knot_to_json(k));
    } else {
        throw concord::DomainError("torus needs --seifert or --jumps");
    }
    return kExitOk;
}

int cmd_independence(const std::vector<std::string>& files) {
    std::vector<concord::SeifertForm> knots;
    for (const auto& f : files)
        knots.push_back(concord::knot_from_json(concord::load_json_file(f)));
    std::cout << "rank = " << concord::independence_rank(knots, g_prec) << "\n";
    return kExitOk;
}

int cmd_genus1(long max_m, long max_l) {
    concord::json out = concord::json::array();
    for (const auto& t : concord::genus1_enumerate(max_m, max_l)) {
        concord::IntMatrix g = concord::genus1_form(t.n, t.m, t.l);
        concord::json witnesses = concord::json::array();
        for (long x = -1; x <= 1; ++x)
            for (long y = -1; y <= 1; ++y) {
                if (x == 0 && y == 0) continue;
                concord::Int val = concord::genus1_value(t.n, t.m, t.l, concord::Int(x),
                                                         concord::Int(y));
                if (sgn(val) != 0)
                    witnesses.push_back(concord::json{
                        {"x", x}, {"y", y}, {"value", concord::to_long(val)}});
            }
        if (witnesses.empty()) continue;  // no axis in the box certifies infinite rank
        concord::json e;
        e["n"] = concord::to_long(t.n);
        e["m"] = concord::to_long(t.m);
        e["l"] = concord::to_long(t.l);
        e["form"] = concord::io_detail::matrix_to_json(g);
        e["witnesses"] = std::move(witnesses);
        out.push_back(std::move(e));
    }
    std::cout << concord::dump_canonical(out);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact certification of infinite-rank satellite operators"};
    app.require_subcommand(1);
    unsigned long prec = 64;
    app.add_option("--precision-start", prec,
                   "starting interval precision in bits (results are precision-independent)");

    std::string pattern_file, tau_file, out_path, verify_file, knot_file, at;
    std::size_t family = 0;
    long p_override = 0, q_override = 0;

    auto* linking = app.add_subcommand("linking", "rational self-linking number of the axis");
    linking->add_option("pattern", pattern_file, "pattern JSON file")->required();

    auto* certify = app.add_subcommand("certify", "verdict and certified torus-knot family");
    certify->add_option("pattern", pattern_file, "pattern JSON file");
    certify->add_option("--family", family, "number of certified torus knots to generate");
    certify->add_option("--tau", tau_file, "tau oracle JSON file");
    certify->add_option("--p", p_override, "override p (odd, coprime to q)");
    certify->add_option("--q", q_override, "override q (odd, coprime to p)");
    certify->add_option("--out", out_path, "write certificate JSON here instead of stdout");
    certify->add_option("--verify", verify_file, "verify an emitted certificate JSON file");

    auto* signature = app.add_subcommand("signature", "Tristram-Levine signature or jump spectrum");
    signature->add_option("knot", knot_file, "knot JSON file")->required();
    signature->add_option("--at", at, "angle a/n: evaluate sigma at e^{2 pi i a/n}");
    bool sig_jumps = false;
    signature->add_flag("--jumps", sig_jumps, "print the full jump spectrum");

    auto* torus = app.add_subcommand("torus", "torus knot Seifert data");
    long tr = 0, ts = 0;
    torus->add_option("--r", tr, "torus parameter r >= 2")->required();
    torus->add_option("--s", ts, "torus parameter s >= 2")->required();
    bool torus_seifert_flag = false, torus_jumps = false;
    torus->add_flag("--seifert", torus_seifert_flag, "print the Seifert matrix as knot JSON");
    torus->add_flag("--jumps", torus_jumps, "print the jump spectrum");

    auto* independence = app.add_subcommand("independence", "rank of a family's jump functions");
    std::vector<std::string> indep_files;
    independence->add_option("knots", indep_files, "knot JSON files")->required();

    auto* genus1 = app.add_subcommand("genus1", "genus-1 Alexander-one operator candidates");
    long max_m = 0, max_l = 0;
    genus1->add_option("--max-m", max_m, "bound on |m|")->required();
    genus1->add_option("--max-l", max_l, "bound on |l|")->required();

    auto* catalog = app.add_subcommand("catalog", "pattern catalog maintenance");
    auto* catalog_idx = catalog->add_subcommand("index", "build index.json for a directory");
    std::string catalog_dir;
    catalog_idx->add_option("dir", catalog_dir, "catalog directory")->required();

    CLI11_PARSE(app, argc, argv);
    g_prec = prec < 16 ? 16 : prec;

    try {
        if (linking->parsed()) return cmd_linking(pattern_file);
        if (certify->parsed())
            return cmd_certify(pattern_file, family, tau_file, p_override, q_override, out_path,
                               verify_file);
        if (signature->parsed()) return cmd_signature(knot_file, at, sig_jumps);
        if (torus->parsed()) return cmd_torus(tr, ts, torus_seifert_flag, torus_jumps);
        if (independence->parsed()) return cmd_independence(indep_files);
        if (genus1->parsed()) return cmd_genus1(max_m, max_l);
        if (catalog->parsed() && catalog_idx->parsed()) {
            concord::catalog_index(catalog_dir);
            std::cout << "indexed " << catalog_dir << "\n";
            return kExitOk;
        }
    } catch (const concord::MissingTau& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMissingTau;
    } catch (const concord::ZeroLinking& e) {
        std::cerr << "inconclusive: " << e.what() << "\n";
        return kExitInconclusive;
    } catch (const concord::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitError;
}
