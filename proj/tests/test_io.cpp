#include <cstdio>
#include <string>

#include "doctest.h"
#include "sewnet/algebra.hpp"
#include "sewnet/center.hpp"
#include "sewnet/io.hpp"
#include "sewnet/report.hpp"
#include "sewnet/sewing.hpp"

using namespace sewnet;

namespace {

void write_text(const std::string& path, const std::string& txt) {
    FILE* f = std::fopen(path.c_str(), "w");
    REQUIRE(f != nullptr);
    std::fwrite(txt.data(), 1, txt.size(), f);
    std::fclose(f);
}

std::string read_text(const std::string& path) {
    FILE* f = std::fopen(path.c_str(), "r");
    REQUIRE(f != nullptr);
    char buf[1 << 16];
    size_t n = std::fread(buf, 1, sizeof(buf), f);
    std::fclose(f);
    return std::string(buf, n);
}

Real gen_dist(const CorrelatorSet& a, const CorrelatorSet& b) {
    Real w = 0;
    for (int t = 0; t < 12; ++t) {
        GeneratorTag g = GeneratorTag(t);
        w = std::max(w, mor_dist(a.at(g), b.at(g)));
    }
    return w;
}

void roundtrip_cat(CategoryData (*mk)(), const char* name) {
    CategoryData C = mk();
    std::string p = std::string("io_") + name + ".cat";
    save_category(C, p);
    CategoryData D = load_category(p);
    CHECK(D.num_labels == C.num_labels);
    CHECK(D.dual == C.dual);
    CHECK(D.names == C.names);
    CHECK(D.N == C.N);
    for (auto& [k, v] : C.F) {
        // saver writes only admissible nonzero entries; any drop must be a
        // stored exact zero
        if (std::abs(v) == 0) continue;
        auto it = D.F.find(k);
        REQUIRE(it != D.F.end());
        CHECK(std::abs(it->second - v) == 0);
    }
    for (auto& [k, v] : C.R) {
        if (std::abs(v) == 0) continue;
        auto it = D.R.find(k);
        REQUIRE(it != D.R.end());
        CHECK(std::abs(it->second - v) == 0);
    }
    for (int i = 0; i < C.num_labels; ++i) {
        CHECK(std::abs(C.qdim[i] - D.qdim[i]) <= 1e-18L);
        CHECK(std::abs(C.twist[i] - D.twist[i]) <= 1e-18L);
    }
    CHECK((C.stilde - D.stilde).cwiseAbs().maxCoeff() <= 1e-18L);
}

}  // namespace

TEST_CASE("category files round-trip exactly") {
    roundtrip_cat(make_vect, "vect");
    roundtrip_cat(make_fibonacci, "fibonacci");
    roundtrip_cat(make_ising, "ising");
}

TEST_CASE("frobenius files round-trip") {
    CategoryData C = make_fibonacci();

    FrobeniusAlgebra T = trivial_algebra(C);
    save_frobenius(T, "io_triv.alg");
    FrobeniusAlgebra T2 = load_frobenius(C, "io_triv.alg");
    CHECK(mor_dist(T.m, T2.m) == 0);
    CHECK(mor_dist(T.eta, T2.eta) == 0);
    CHECK(mor_dist(T.Delta, T2.Delta) == 0);
    CHECK(mor_dist(T.eps, T2.eps) == 0);
    CHECK(T2.symmetric_flag == T.symmetric_flag);
    CHECK(T2.commutative_flag == T.commutative_flag);
    CHECK(!T2.in_center);
    CHECK(verify_frobenius(T2).ok(1e-9L));

    SumObj X;
    X.summands = {Word{1}};
    FrobeniusAlgebra E = endomorphism_frobenius(C, X);
    save_frobenius(E, "io_endo.alg");
    FrobeniusAlgebra E2 = load_frobenius(C, "io_endo.alg");
    CHECK(mor_dist(E.m, E2.m) == 0);
    CHECK(mor_dist(E.Delta, E2.Delta) == 0);
    CHECK(verify_frobenius(E2).ok(1e-9L));

    CardyAlgebra Cd = canonical_cardy(C);
    save_frobenius(Cd.Hcl, "io_hcl.alg");
    FrobeniusAlgebra H2 = load_frobenius(C, "io_hcl.alg");
    CHECK(H2.in_center);
    CHECK(H2.zcarrier == Cd.Hcl.zcarrier);
    CHECK(mor_dist(H2.m, Cd.Hcl.m) == 0);
    CHECK(mor_dist(H2.eps, Cd.Hcl.eps) == 0);
}

TEST_CASE("cardy files round-trip and verify") {
    CategoryData C = make_fibonacci();
    CardyAlgebra Cd = canonical_cardy(C);
    save_cardy(Cd, "io_fib.alg");
    CardyAlgebra D2 = load_cardy(C, "io_fib.alg");
    CHECK(mor_dist(D2.iota, Cd.iota) == 0);
    CHECK(mor_dist(D2.Hop.m, Cd.Hop.m) == 0);
    CHECK(mor_dist(D2.Hcl.Delta, Cd.Hcl.Delta) == 0);
    CHECK(D2.Hcl.zcarrier == Cd.Hcl.zcarrier);
    CHECK(verify_cardy(D2).ok(1e-9L));
}

TEST_CASE("correlator files round-trip") {
    CategoryData C = make_fibonacci();
    CorrelatorSet S = canonical_correlators(canonical_cardy(C));
    save_correlators(S, "io_fib.cor");
    CorrelatorSet S2 = load_correlators(C, "io_fib.cor");
    CHECK(gen_dist(S, S2) == 0);

    CorrelatorSet I = inflate_correlators(S, 42);
    save_correlators(I, "io_fib_infl.cor");
    CorrelatorSet I2 = load_correlators(C, "io_fib_infl.cor");
    CHECK(gen_dist(I, I2) < 1e-17L);
    auto res = check_all(I2, 1e-9L);
    CHECK(res.size() == 32);
    for (auto& r : res) {
        INFO("R", r.id);
        CHECK(r.pass);
    }
}

TEST_CASE("loader rejects bad input with a located error") {
    CHECK_THROWS_AS(load_category("io_missing_file.cat"), ParseError);

    write_text("io_bad1.cat",
               "format category 1\n[labels]\na b\n[duals]\n0 0\n"
               "[fusion]\n0 0 oops 1\n");
    CHECK_THROWS_AS(load_category("io_bad1.cat"), ParseError);

    // duals in range but not fixing the unit: parse-clean, axiom-broken
    save_category(make_fibonacci(), "io_bad2.cat");
    std::string txt = read_text("io_bad2.cat");
    auto pos = txt.find("[duals]\n0 1");
    REQUIRE(pos != std::string::npos);
    txt.replace(pos, 11, "[duals]\n1 0");
    write_text("io_bad2.cat", txt);
    CHECK_THROWS_AS(load_category("io_bad2.cat"), ConsistencyError);

    CardyAlgebra Cd = canonical_cardy(make_fibonacci());
    save_cardy(Cd, "io_fib.alg");
    CHECK_THROWS_AS(load_cardy(make_ising(), "io_fib.alg"), ParseError);
}

TEST_CASE("reports render as structured json and derived text") {
    RunReport rep("check-cardy", 7, 1e-9L);
    rep.meta("category", "io_fib.cat");
    rep.add("cardy", "condition I (modularity)", 1.2e-19L, true);
    rep.add("cardy", "condition IV (cardy)", 2.0L, false, "corrupted");
    std::string js = rep.to_json();
    std::string tx = rep.to_text();
    CHECK(js.find("\"schema\": \"sewnet-report/1\"") != std::string::npos);
    CHECK(js.find("\"seed\": 7") != std::string::npos);
    CHECK(js.find("\"pass\": false") != std::string::npos);
    CHECK(tx.find("seed: 7") != std::string::npos);
    CHECK(tx.find("FAIL") != std::string::npos);
    CHECK(!rep.ok());
    CHECK_THROWS_AS(rep.render("yaml"), std::invalid_argument);
}
