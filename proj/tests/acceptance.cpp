// Acceptance gate.  Runs the end-to-end criteria against the shipped fixture
// files and the installed command-line binary, printing one PASS/FAIL line
// per criterion.  Usage: acceptance <sewnet-binary> <fixtures-dir>
#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "sewnet/algebra.hpp"
#include "sewnet/category.hpp"
#include "sewnet/center.hpp"
#include "sewnet/io.hpp"
#include "sewnet/morphism.hpp"
#include "sewnet/sewing.hpp"

using namespace sewnet;

namespace {

std::string g_bin, g_fx;
const char* kFixtures[3] = {"vect", "fibonacci", "ising"};

CategoryData cat(const std::string& name) {
    return load_category(g_fx + "/" + name + ".cat");
}

double elapsed(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

struct RunOut {
    int code;
    std::string out;
};

RunOut run_cli(const std::string& args) {
    std::string full = g_bin + " " + args + " 2>&1";
    RunOut r{-1, {}};
    FILE* p = popen(full.c_str(), "r");
    if (!p) return r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof(buf), p)) > 0) r.out.append(buf, n);
    int st = pclose(p);
    if (WIFEXITED(st)) r.code = WEXITSTATUS(st);
    return r;
}

bool fail_line(const std::string& out, const std::string& needle) {
    // some line mentions the named check and is marked FAIL
    size_t pos = 0;
    while (pos < out.size()) {
        size_t eol = out.find('\n', pos);
        if (eol == std::string::npos) eol = out.size();
        std::string line = out.substr(pos, eol - pos);
        if (line.find(needle) != std::string::npos &&
            line.find("FAIL") != std::string::npos)
            return true;
        pos = eol + 1;
    }
    return false;
}

bool note(bool ok, const char* what) {
    if (!ok) std::printf("  failed: %s\n", what);
    return ok;
}

// 1: axiom residuals and invertibility of stilde on every shipped fixture
bool c1() {
    bool ok = true;
    for (const char* name : kFixtures) {
        auto t0 = std::chrono::steady_clock::now();
        CategoryData C = cat(name);
        CheckResult rs[5] = {check_fusion_ring(C), check_pentagon(C, 1e-9L),
                             check_hexagon(C, false, 1e-9L),
                             check_hexagon(C, true, 1e-9L),
                             check_sphericality(C, 1e-9L)};
        for (const auto& r : rs)
            ok = note(r.pass && r.residual < 1e-9L,
                      (std::string(name) + " " + r.name).c_str()) &&
                 ok;
        Eigen::FullPivLU<Mat> lu(C.stilde);
        ok = note(lu.isInvertible(), "stilde invertible") && ok;
        ok = note(elapsed(t0) < 5.0, "fixture under five seconds") && ok;
    }
    return ok;
}

// 2: killing ring identity at every simple label
bool c2() {
    bool ok = true;
    for (const char* name : kFixtures) {
        CategoryData C = cat(name);
        for (int l = 0; l < C.num_labels; ++l)
            ok = note(verify_killing_ring(C, l, 1e-9L).pass, "killing ring") &&
                 ok;
    }
    return ok;
}

// 3: identity reconstruction from simple-channel bases on short words
bool c3() {
    bool ok = true;
    for (const char* name : kFixtures) {
        CategoryData C = cat(name);
        int nl = C.num_labels;
        std::vector<Word> words{Word{}};
        for (size_t lo = 0, len = 1; len <= 3; ++len) {
            size_t hi = words.size();
            for (size_t i = lo; i < hi; ++i)
                for (int a = 0; a < nl; ++a) {
                    Word w = words[i];
                    w.push_back(a);
                    words.push_back(w);
                }
            lo = hi;
        }
        for (const Word& w : words) {
            SumObj A = SumObj::word(w);
            Morphism acc = zero_mor(C, A, A);
            for (int c = 0; c < nl; ++c) {
                auto basis = hom_from_simple(C, c, A);
                for (size_t p = 0; p < basis.size(); ++p)
                    acc = add(acc,
                              compose(basis[p],
                                      coordinate_functional(C, c, A, int(p))));
            }
            ok = note(mor_dist(acc, id_mor(C, A)) < 1e-9L,
                      "identity reconstruction") &&
                 ok;
        }
    }
    return ok;
}

// 4: the cylinder maps invert each other on full hom bases
bool c4() {
    CategoryData C = cat("fibonacci");
    SumObj unit = SumObj::unit();
    SumObj mixed;
    mixed.summands = {Word{}, Word{1}};
    bool ok = true;
    for (const SumObj& A : {unit, mixed})
        for (int n = 1; n <= 3; ++n) {
            std::vector<SumObj> factors(size_t(n), A);
            SumObj prod = factors[0];
            for (size_t i = 1; i < factors.size(); ++i)
                prod = tensor_obj(prod, factors[i]);
            for (const Morphism& f : hom_basis(C, unit, prod)) {
                Real r = mor_dist(map_Y(C, factors, map_Z(C, factors, f)), f);
                ok = note(r < 1e-9L, "cylinder round trip") && ok;
            }
        }
    return ok;
}

// 5: transported Frobenius structures pass all axioms with flags intact
bool c5() {
    bool ok = true;
    for (const char* name : kFixtures) {
        CategoryData C = cat(name);
        FrobeniusAlgebra T = transport_L(trivial_algebra(C));
        ok = note(verify_frobenius(T).ok(1e-9L) && T.symmetric_flag,
                  "transported trivial algebra") &&
             ok;
    }
    CategoryData F = cat("fibonacci");
    SumObj X;
    X.summands = {Word{1}};
    FrobeniusAlgebra E = endomorphism_frobenius(F, X);
    FrobeniusAlgebra TE = transport_L(E);
    ok = note(verify_frobenius(TE).ok(1e-9L) &&
                  TE.symmetric_flag == E.symmetric_flag,
              "transported endomorphism algebra") &&
         ok;
    CategoryData I = cat("ising");
    SumObj Y;
    Y.summands = {Word{2}};
    FrobeniusAlgebra EI = endomorphism_frobenius(I, Y);
    FrobeniusAlgebra TI = transport_L(EI);
    ok = note(verify_frobenius(TI).ok(1e-9L) &&
                  TI.symmetric_flag == EI.symmetric_flag,
              "transported ising endomorphism algebra") &&
         ok;
    return ok;
}

// 6: canonical Cardy algebra verifies; each corruption trips only its own
// condition
bool c6() {
    const char* cname[4] = {"condition I (modularity)",
                            "condition II (iota algebra map)",
                            "condition III (center)", "condition IV (cardy)"};
    bool ok = true;
    for (const char* name : kFixtures) {
        CategoryData C = cat(name);
        ok = note(verify_cardy(canonical_cardy(C)).ok(1e-9L),
                  "canonical cardy") &&
             ok;
        CardyAlgebra ctrls[4] = {corrupt_cardy_I(C), corrupt_cardy_II(C),
                                 corrupt_cardy_III(C), corrupt_cardy_IV(C)};
        for (int k = 0; k < 4; ++k) {
            if (k == 2 && C.num_labels == 1) continue;  // no braiding to break
            AlgebraReport rc = verify_cardy(ctrls[k]);
            const CheckResult* target = rc.find(cname[k]);
            ok = note(target != nullptr && target->residual >= 1e-3L,
                      "corruption fires its own condition") &&
                 ok;
            for (int j = 0; j < 4; ++j) {
                if (j == k) continue;
                const CheckResult* o = rc.find(cname[j]);
                ok = note(o != nullptr && o->residual < 1e-3L,
                          "corruption leaks into another condition") &&
                     ok;
            }
        }
    }
    return ok;
}

// 7: the full relation battery on canonical correlators, timed
bool c7() {
    bool ok = true;
    for (const char* name : kFixtures) {
        auto t0 = std::chrono::steady_clock::now();
        CategoryData C = cat(name);
        CorrelatorSet S = canonical_correlators(canonical_cardy(C));
        auto res = check_all(S, 1e-9L);
        ok = note(res.size() == 32, "32 relations checked") && ok;
        for (const auto& r : res)
            ok = note(r.pass, relation_encoding(r.id)) && ok;
        ok = note(elapsed(t0) < 60.0, "relation battery under a minute") && ok;
    }
    return ok;
}

// 8: extraction lands Cardy-isomorphic to the reference, independent of the
// retract choice
bool c8() {
    bool ok = true;
    auto square = [&](const CardyAlgebra& X, const CardyAlgebra& ref) {
        auto iso = cardy_isomorphic(X, ref);
        if (!iso) return false;
        Real r = mor_dist(compose(L_of_mor(iso->f_op), X.iota),
                          compose(ref.iota, iso->f_cl));
        return r < 1e-9L;
    };
    for (const char* name : kFixtures) {
        CategoryData C = cat(name);
        CardyAlgebra Cd = canonical_cardy(C);
        CorrelatorSet S = canonical_correlators(Cd);
        CardyAlgebra X0 = extract_cardy(S);
        ok = note(square(X0, Cd), "extraction from canonical set") && ok;
        CorrelatorSet Sh = inflate_correlators(S, 42);
        CardyAlgebra X1 = extract_cardy(Sh);
        ok = note(square(X1, Cd), "extraction from inflated set") && ok;
        CardyAlgebra X2 = extract_cardy(Sh, kDefaultTol, 5);
        ok = note(square(X2, X1), "independent retract choices agree") && ok;
    }
    return ok;
}

// 9: stringnet dimensions against a brute-force fusion-tree count
bool c9() {
    using P = std::pair<int, int>;
    bool ok = true;
    for (const char* name : {"vect", "fibonacci"}) {
        CategoryData C = cat(name);
        std::vector<P> simples = center_simples(C);
        size_t ns = simples.size();
        auto Nc = [&](P x, P y, P z) {
            return (long long)C.nfus(x.first, y.first, z.first) *
                   C.nfus(x.second, y.second, z.second);
        };
        auto dualp = [&](P x) {
            return P{C.dual[size_t(x.first)], C.dual[size_t(x.second)]};
        };
        std::function<long long(const std::vector<P>&, size_t, P)> trees =
            [&](const std::vector<P>& fs, size_t pos, P cur) -> long long {
            if (pos == fs.size()) return cur == P{0, 0} ? 1 : 0;
            long long total = 0;
            for (P t : simples) {
                long long m = Nc(cur, fs[pos], t);
                if (m != 0) total += m * trees(fs, pos + 1, t);
            }
            return total;
        };
        auto oracle = [&](int genus, const std::vector<P>& bnd) {
            long long total = 0;
            std::vector<size_t> h(size_t(genus), 0);
            for (;;) {
                std::vector<P> fs = bnd;
                for (size_t i : h) {
                    fs.push_back(simples[i]);
                    fs.push_back(dualp(simples[i]));
                }
                total += trees(fs, 0, P{0, 0});
                size_t k = 0;
                while (k < h.size() && ++h[k] == ns) h[k++] = 0;
                if (k == h.size()) break;
            }
            return total;
        };
        std::vector<std::vector<P>> lists{{}};
        for (size_t lo = 0, len = 1; len <= 3; ++len) {
            size_t hi = lists.size();
            for (size_t i = lo; i < hi; ++i)
                for (P s : simples) {
                    auto l = lists[i];
                    l.push_back(s);
                    lists.push_back(l);
                }
            lo = hi;
        }
        for (int genus = 0; genus <= 2; ++genus)
            for (const auto& bnd : lists) {
                std::vector<CenterObj> objs;
                for (P s : bnd)
                    objs.push_back(center_simple(s.first, s.second));
                long long expect = oracle(genus, bnd);
                long long got = stringnet_dim(C, genus, objs);
                ok = note(got == expect, "stringnet dimension count") && ok;
            }
    }
    return ok;
}

// 10: every corruption fixture fails through the command line with a named
// check and a nonzero exit code
bool c10() {
    bool ok = true;
    auto expect_fail = [&](const std::string& args, const std::string& needle,
                           bool wholeline) {
        RunOut r = run_cli(args);
        bool good = r.code == 1 && (wholeline
                                        ? fail_line(r.out, needle)
                                        : r.out.find(needle) !=
                                              std::string::npos);
        if (!good)
            std::printf("  cli: %s -> exit %d, wanted %s\n", args.c_str(),
                        r.code, needle.c_str());
        return good;
    };
    ok = expect_fail("check-category --category " + g_fx + "/fibonacci-badF.cat",
                     "pentagon", true) &&
         ok;
    const char* cname[4] = {"condition I (modularity)",
                            "condition II (iota algebra map)",
                            "condition III (center)", "condition IV (cardy)"};
    for (const char* name : kFixtures)
        for (int k = 1; k <= 4; ++k) {
            if (k == 3 && std::strcmp(name, "vect") == 0) continue;
            std::string fx = std::string(name);
            ok = expect_fail("check-cardy --category " + g_fx + "/" + fx +
                                 ".cat --algebra " + g_fx + "/" + fx + "-ctrl" +
                                 std::to_string(k) + ".alg",
                             cname[k - 1], true) &&
                 ok;
        }
    for (const char* name : kFixtures) {
        std::string fx = std::string(name);
        ok = expect_fail("check-sewing --category " + g_fx + "/" + fx +
                             ".cat --algebra " + g_fx + "/" + fx + "-broken.cor",
                         "failing: R", false) &&
             ok;
    }
    ok = expect_fail("extract --category " + g_fx +
                         "/fibonacci.cat --algebra " + g_fx +
                         "/fibonacci-broken.cor",
                     "preconditions", true) &&
         ok;
    RunOut j = run_cli("check-cardy --category " + g_fx +
                       "/ising.cat --algebra " + g_fx +
                       "/ising-ctrl4.alg --format json-like");
    ok = note(j.code == 1 && j.out.find("\"pass\": false") != std::string::npos,
              "json-like report carries the failure") &&
         ok;
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    setvbuf(stdout, nullptr, _IONBF, 0);
    if (argc < 3) {
        std::fprintf(stderr, "usage: acceptance <sewnet-binary> <fixtures-dir>\n");
        return 2;
    }
    g_bin = argv[1];
    g_fx = argv[2];
    struct Row {
        int id;
        bool (*fn)();
    };
    Row rows[10] = {{1, c1}, {2, c2}, {3, c3}, {4, c4}, {5, c5},
                    {6, c6}, {7, c7}, {8, c8}, {9, c9}, {10, c10}};
    int bad = 0;
    for (const Row& r : rows) {
        bool ok = false;
        try {
            ok = r.fn();
        } catch (const std::exception& e) {
            std::printf("  exception: %s\n", e.what());
        }
        std::printf("criterion %d: %s\n", r.id, ok ? "PASS" : "FAIL");
        if (!ok) ++bad;
    }
    return bad == 0 ? 0 : 1;
}
