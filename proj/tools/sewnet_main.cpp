#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sewnet/algebra.hpp"
#include "sewnet/io.hpp"
#include "sewnet/report.hpp"
#include "sewnet/sewing.hpp"

using namespace sewnet;

namespace {

// Exit codes: 0 all checks pass, 1 a verification failed, 2 bad input
// (unparsable file, unknown flag or suite, out-of-range labels).

struct Options {
    std::string category;
    std::string algebra;
    bool canonical = false;
    Real tol = kDefaultTol;
    std::uint64_t seed = 0;
    std::string suite;
    std::string format = "text";
    std::string out;
};

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

// Suite tokens select checks by group or name; a token matching nothing is
// an input error so typos cannot silently pass a run.
void apply_suite(const Options& o, std::vector<ReportCheck>& cs) {
    if (o.suite.empty()) return;
    std::vector<std::string> toks = split_commas(o.suite);
    if (toks.empty()) throw ParseError("empty --suite");
    for (const auto& t : toks) {
        bool hit = false;
        for (const auto& c : cs)
            if (c.group == t || c.name == t) hit = true;
        if (!hit) throw ParseError("unknown suite '" + t + "'");
    }
    std::vector<ReportCheck> kept;
    for (auto& c : cs)
        for (const auto& t : toks)
            if (c.group == t || c.name == t) {
                kept.push_back(std::move(c));
                break;
            }
    cs = std::move(kept);
}

void emit(const Options& o, const RunReport& rep, bool to_stdout = false) {
    std::string txt = rep.render(o.format);
    if (o.out.empty() || to_stdout) {
        std::cout << txt;
        return;
    }
    std::ofstream f(o.out);
    if (!f) throw ParseError("cannot write " + o.out);
    f << txt;
}

int finish(const Options& o, RunReport& rep, std::vector<ReportCheck> cs,
           bool report_to_stdout = false) {
    apply_suite(o, cs);
    for (const auto& c : cs) rep.add(c.group, c.name, c.residual, c.pass, c.note);
    emit(o, rep, report_to_stdout);
    return rep.ok() ? 0 : 1;
}

void frobenius_checks(const FrobeniusAlgebra& A, Real tol,
                      const std::string& group,
                      std::vector<ReportCheck>& cs) {
    for (const auto& r : verify_frobenius(A, tol).checks)
        cs.push_back({group, r.name, r.residual, r.pass, r.detail});
}

int cmd_check_category(const Options& o) {
    RunReport rep("check-category", o.seed, o.tol);
    rep.meta("category", o.category);
    CategoryData C;
    try {
        C = load_category(o.category);
    } catch (const ConsistencyError& e) {
        // parse-clean file with a broken axiom: a failed check, not bad input
        std::vector<ReportCheck> cs;
        cs.push_back({"category", "finalize", 1, false, e.what()});
        return finish(o, rep, std::move(cs));
    }
    std::vector<ReportCheck> cs;
    for (const auto& r : check_category(C, o.tol))
        cs.push_back({"category", r.name, r.residual, r.pass, r.detail});
    Mat S = smatrix(C);
    Real ds = (S - C.stilde).cwiseAbs().maxCoeff();
    cs.push_back({"category", "smatrix", ds, ds <= o.tol,
                  "diagram-engine Hopf link against the twist formula"});
    return finish(o, rep, std::move(cs));
}

int cmd_check_cardy(const Options& o) {
    CategoryData C = load_category(o.category);
    CardyAlgebra Cd =
        o.canonical ? canonical_cardy(C) : load_cardy(C, o.algebra);
    RunReport rep("check-cardy", o.seed, o.tol);
    rep.meta("category", o.category);
    rep.meta("algebra", o.canonical ? "canonical" : o.algebra);
    std::vector<ReportCheck> cs;
    frobenius_checks(Cd.Hop, o.tol, "frobenius-open", cs);
    frobenius_checks(Cd.Hcl, o.tol, "frobenius-closed", cs);
    for (const auto& r : verify_cardy(Cd, o.tol).checks)
        cs.push_back({"cardy", r.name, r.residual, r.pass, r.detail});
    return finish(o, rep, std::move(cs));
}

CorrelatorSet load_set(const Options& o, const CategoryData& C) {
    if (o.canonical) return canonical_correlators(canonical_cardy(C));
    return load_correlators(C, o.algebra);
}

int cmd_check_sewing(const Options& o) {
    CategoryData C = load_category(o.category);
    CorrelatorSet S = load_set(o, C);
    RunReport rep("check-sewing", o.seed, o.tol);
    rep.meta("category", o.category);
    rep.meta("correlators", o.canonical ? "canonical" : o.algebra);
    std::vector<ReportCheck> cs;
    std::string failing;
    for (const auto& r : check_all(S, o.tol)) {
        cs.push_back({"relations", "R" + std::to_string(r.id), r.residual,
                      r.pass, relation_encoding(r.id)});
        if (!r.pass) failing += (failing.empty() ? "R" : ",R") +
                                std::to_string(r.id);
    }
    if (!failing.empty()) rep.meta("failing", failing);
    return finish(o, rep, std::move(cs));
}

int cmd_extract(const Options& o) {
    CategoryData C = load_category(o.category);
    CorrelatorSet S = load_set(o, C);
    RunReport rep("extract", o.seed, o.tol);
    rep.meta("category", o.category);
    rep.meta("correlators", o.canonical ? "canonical" : o.algebra);
    CardyAlgebra Ex;
    try {
        Ex = extract_cardy(S, o.tol, o.seed);
    } catch (const SewingError& e) {
        std::vector<ReportCheck> cs;
        cs.push_back({"extract", "preconditions", 1, false, e.what()});
        finish(o, rep, std::move(cs), /*report_to_stdout=*/true);
        return 1;
    }
    // --out names the algebra file here; the report goes to stdout
    std::string outalg = o.out.empty() ? "extracted.alg" : o.out;
    save_cardy(Ex, outalg);
    rep.meta("algebra-out", outalg);
    std::vector<ReportCheck> cs;
    frobenius_checks(Ex.Hop, o.tol, "frobenius-open", cs);
    frobenius_checks(Ex.Hcl, o.tol, "frobenius-closed", cs);
    for (const auto& r : verify_cardy(Ex, o.tol).checks)
        cs.push_back({"cardy", r.name, r.residual, r.pass, r.detail});
    auto iso = cardy_isomorphic(Ex, canonical_cardy(C), o.tol);
    rep.meta("isomorphic", iso ? "true" : "false");
    cs.push_back({"extract", "reference isomorphism", iso ? Real(0) : Real(1),
                  bool(iso), "against the canonical algebra"});
    return finish(o, rep, std::move(cs), /*report_to_stdout=*/true);
}

int cmd_dim(const Options& o, int genus,
            const std::vector<std::string>& btoks) {
    CategoryData C = load_category(o.category);
    std::vector<CenterObj> boundary;
    for (const auto& t : btoks) {
        std::vector<std::string> ab = split_commas(t);
        if (ab.size() != 2)
            throw ParseError("boundary labels must be pairs 'a,b', got '" + t +
                             "'");
        int a = -1, b = -1;
        try {
            a = std::stoi(ab[0]);
            b = std::stoi(ab[1]);
        } catch (const std::exception&) {
            throw ParseError("bad boundary pair '" + t + "'");
        }
        if (a < 0 || a >= C.num_labels || b < 0 || b >= C.num_labels)
            throw ParseError("boundary label out of range in '" + t + "'");
        boundary.push_back(center_simple(a, b));
    }
    long long n = stringnet_dim(C, genus, boundary);
    if (o.format == "json-like") {
        RunReport rep("dim", o.seed, o.tol);
        rep.meta("category", o.category);
        rep.meta("genus", std::to_string(genus));
        rep.meta("result", std::to_string(n));
        emit(o, rep);
    } else {
        if (o.out.empty()) {
            std::cout << n << "\n";
        } else {
            std::ofstream f(o.out);
            if (!f) throw ParseError("cannot write " + o.out);
            f << n << "\n";
        }
    }
    return 0;
}

void add_common(CLI::App* s, Options& o, bool with_algebra) {
    s->add_option("--category", o.category, "category data file")->required();
    if (with_algebra) {
        s->add_option("--algebra", o.algebra, "algebra or correlator file");
        s->add_flag("--canonical", o.canonical,
                    "use the canonical structure instead of a file");
    }
    s->add_option("--tol", o.tol, "verification tolerance");
    s->add_option("--seed", o.seed, "rng seed for randomized steps");
    s->add_option("--suite", o.suite,
                  "comma list of check groups or names to run");
    s->add_option("--format", o.format, "report format")
        ->check(CLI::IsMember({"text", "json-like"}));
    s->add_option("--out", o.out, "output path (report, or algebra file for "
                                  "extract)");
}

void need_source(const Options& o, const char* cmd) {
    if (o.canonical == o.algebra.empty()) return;  // exactly one given
    throw ParseError(std::string(cmd) +
                     " needs exactly one of --algebra and --canonical");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graphical-calculus engine: category, Cardy-algebra and "
                 "sewing-constraint verification"};
    app.require_subcommand(1);
    Options o;

    CLI::App* c_cat = app.add_subcommand(
        "check-category", "axioms and derived data of a category file");
    add_common(c_cat, o, false);

    CLI::App* c_cardy = app.add_subcommand(
        "check-cardy", "Frobenius and Cardy conditions of an algebra");
    add_common(c_cardy, o, true);

    CLI::App* c_sew = app.add_subcommand(
        "check-sewing", "the 32 sewing relations of a correlator set");
    add_common(c_sew, o, true);

    CLI::App* c_ext = app.add_subcommand(
        "extract", "split the propagators and extract the Cardy algebra");
    add_common(c_ext, o, true);

    CLI::App* c_dim = app.add_subcommand(
        "dim", "string-net dimension for genus and center-pair boundary");
    add_common(c_dim, o, false);
    int genus = 0;
    std::vector<std::string> btoks;
    c_dim->add_option("genus", genus, "surface genus")
        ->required()
        ->check(CLI::NonNegativeNumber);
    c_dim->add_option("boundary", btoks, "boundary center pairs a,b");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (c_cat->parsed()) return cmd_check_category(o);
        if (c_cardy->parsed()) {
            need_source(o, "check-cardy");
            return cmd_check_cardy(o);
        }
        if (c_sew->parsed()) {
            need_source(o, "check-sewing");
            return cmd_check_sewing(o);
        }
        if (c_ext->parsed()) {
            need_source(o, "extract");
            return cmd_extract(o);
        }
        if (c_dim->parsed()) return cmd_dim(o, genus, btoks);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ShapeMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UnknownRelation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const SewingError& e) {
        std::cerr << "verification error: " << e.what() << "\n";
        return 1;
    } catch (const ConsistencyError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
