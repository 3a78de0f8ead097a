#include <string>

#include "doctest.h"
#include "sewnet/algebra.hpp"
#include "tutil.hpp"

using namespace sewnet;

namespace {

void check_report(const AlgebraReport& rep, Real tol = 1e-9L) {
    for (const auto& c : rep.checks) {
        INFO(c.name, " residual ", double(c.residual));
        CHECK(c.residual < tol);
    }
    CHECK(rep.ok(tol));
}

}  // namespace

TEST_CASE("trivial algebra and its transport verify") {
    for (auto mk : {make_vect, make_fibonacci, make_ising}) {
        CategoryData C = mk();
        FrobeniusAlgebra T = trivial_algebra(C);
        check_report(verify_frobenius(T));
        FrobeniusAlgebra LT = transport_L(T);
        check_report(verify_frobenius(LT));
        CHECK(LT.symmetric_flag);
        CHECK(LT.commutative_flag);
        CHECK(std::abs(qtrace(compose(LT.eps, LT.eta)) - C.global_dim2) <
              1e-9L);
    }
}

TEST_CASE("endomorphism algebras verify and frobenius adjoint is exact") {
    struct Pick {
        CategoryData (*mk)();
        Word x;
    };
    for (auto [mk, x] : {Pick{make_fibonacci, Word{1}},
                         Pick{make_ising, Word{2}}}) {
        CategoryData C = mk();
        SumObj X;
        X.summands = {Word{}, x};
        FrobeniusAlgebra E = endomorphism_frobenius(C, X);
        check_report(verify_frobenius(E));
        CHECK(obj_dim(C, E.carrier, 0) == 2);

        FrobeniusAlgebra bad = E;
        for (int c = 0; c < C.num_labels; ++c)
            if (bad.m.block(c).size() > 0) {
                bad.m.block(c)(0, 0) += Scalar(0.1L);
                break;
            }
        const CheckResult* as = verify_frobenius(bad).find("associativity");
        REQUIRE(as != nullptr);
        CHECK(as->residual >= 0.01L);

        Rng rng(test_seed());
        Morphism f = random_morphism(C, E.carrier, E.carrier, rng);
        Morphism g = random_morphism(C, E.carrier, E.carrier, rng);
        CHECK(mor_dist(frobenius_adjoint(frobenius_adjoint(f, E, E), E, E),
                       f) < 1e-9L);
        CHECK(mor_dist(frobenius_adjoint(compose(g, f), E, E),
                       compose(frobenius_adjoint(f, E, E),
                               frobenius_adjoint(g, E, E))) < 1e-9L);
        CHECK(mor_dist(frobenius_adjoint(id_mor(C, E.carrier), E, E),
                       id_mor(C, E.carrier)) < 1e-9L);
    }
}

TEST_CASE("transport keeps the endomorphism structure frobenius") {
    struct Pick {
        CategoryData (*mk)();
        int x;
    };
    for (auto [mk, x] : {Pick{make_fibonacci, 1}, Pick{make_ising, 2}}) {
        CategoryData C = mk();
        FrobeniusAlgebra E = endomorphism_frobenius(C, SumObj::simple(x));
        FrobeniusAlgebra LE = transport_L(E);
        CHECK(LE.symmetric_flag);
        check_report(verify_frobenius(LE));
    }
}

TEST_CASE("canonical cardy algebra satisfies all four conditions") {
    for (auto mk : {make_vect, make_fibonacci, make_ising}) {
        CategoryData C = mk();
        check_report(verify_cardy(canonical_cardy(C)));
    }
}

TEST_CASE("each corruption breaks exactly its own condition") {
    const char* cname[4] = {"condition I (modularity)",
                            "condition II (iota algebra map)",
                            "condition III (center)",
                            "condition IV (cardy)"};
    for (auto mk : {make_vect, make_fibonacci, make_ising}) {
        CategoryData C = mk();
        CardyAlgebra ctrls[4] = {corrupt_cardy_I(C), corrupt_cardy_II(C),
                                 corrupt_cardy_III(C), corrupt_cardy_IV(C)};
        for (int k = 0; k < 4; ++k) {
            if (k == 2 && C.num_labels == 1) continue;  // no braiding to break
            AlgebraReport rc = verify_cardy(ctrls[k]);
            const CheckResult* target = rc.find(cname[k]);
            REQUIRE(target != nullptr);
            INFO("control ", k + 1, " fired ", double(target->residual));
            CHECK(target->residual >= 1e-3L);
            for (int j = 0; j < 4; ++j) {
                if (j == k) continue;
                const CheckResult* o = rc.find(cname[j]);
                REQUIRE(o != nullptr);
                INFO("control ", k + 1, " leak into ", cname[j], " ",
                     double(o->residual));
                CHECK(o->residual < 1e-3L);
            }
        }
    }
}

TEST_CASE("cardy isomorphism search finds conjugates and rejects mismatches") {
    CategoryData C = make_fibonacci();
    CardyAlgebra Cd = canonical_cardy(C);

    auto self = cardy_isomorphic(Cd, Cd);
    REQUIRE(self.has_value());
    CHECK(mor_dist(self->f_cl, id_mor(C, Cd.Hcl.carrier)) < 1e-9L);
    CHECK(mor_dist(self->f_op, id_mor(C, Cd.Hop.carrier)) < 1e-9L);

    Rng rng(test_seed());
    std::vector<Morphism> ez =
        center_hom_space(C, Cd.Hcl.zcarrier, Cd.Hcl.zcarrier);
    Morphism g = zero_mor(C, Cd.Hcl.carrier, Cd.Hcl.carrier);
    for (const Morphism& e : ez) {
        Scalar c(0.3L + 0.7L * rng.uniform01(), 0.4L * rng.uniform01());
        g = add(g, scale(c, e));
    }
    Morphism gi = mor_inverse(g);
    CardyAlgebra Cd2 = Cd;
    Cd2.Hcl.m = compose(g, compose(Cd.Hcl.m, tensor_mor(gi, gi)));
    Cd2.Hcl.eta = compose(g, Cd.Hcl.eta);
    Cd2.Hcl.Delta = compose(tensor_mor(g, g), compose(Cd.Hcl.Delta, gi));
    Cd2.Hcl.eps = compose(Cd.Hcl.eps, gi);
    Cd2.iota = compose(Cd.iota, gi);
    auto conj = cardy_isomorphic(Cd, Cd2);
    REQUIRE(conj.has_value());
    CHECK(mor_dist(compose(L_of_mor(conj->f_op), Cd.iota),
                   compose(Cd2.iota, conj->f_cl)) < 1e-9L);

    SumObj Xbig{{Word{}, Word{1}}};
    CardyAlgebra Cd3;
    Cd3.Hop = endomorphism_frobenius(C, Xbig);
    Cd3.Hcl = Cd.Hcl;
    Cd3.iota = zero_mor(C, underlying(L_of_obj(C, Cd3.Hop.carrier)),
                        Cd3.Hcl.carrier);
    CHECK(!cardy_isomorphic(Cd, Cd3).has_value());
}
