#include <cstring>
#include <string>

#include "doctest.h"
#include "sewnet/center.hpp"
#include "sewnet/sewing.hpp"
#include "tutil.hpp"

using namespace sewnet;

namespace {

void relations_pass(const CorrelatorSet& S) {
    for (const auto& r : check_all(S)) {
        INFO("R", r.id, " residual ", double(r.residual), " ",
             relation_encoding(r.id));
        CHECK(r.pass);
    }
}

}  // namespace

TEST_CASE("canonical correlators satisfy all relations on every fixture") {
    for (auto mk : {make_vect, make_fibonacci, make_ising}) {
        CategoryData C = mk();
        CorrelatorSet S = canonical_correlators(canonical_cardy(C));
        auto res = check_all(S);
        CHECK(res.size() == 32);
        relations_pass(S);
        Real comp =
            center_completeness_residual(C, S.zcl, id_mor(C, underlying(S.zcl)));
        CHECK(comp < 1e-9L);
    }
}

TEST_CASE("every relation id has an encoding note") {
    for (int id = 1; id <= 32; ++id)
        CHECK(std::strlen(relation_encoding(id)) > 0);
    CHECK_THROWS_AS(relation_encoding(0), UnknownRelation);
    CHECK_THROWS_AS(relation_encoding(33), UnknownRelation);
}

TEST_CASE("inflated correlators still satisfy the relations and split back") {
    CategoryData C = make_fibonacci();
    CorrelatorSet S = canonical_correlators(canonical_cardy(C));
    CorrelatorSet Sh = inflate_correlators(S, 42);
    relations_pass(Sh);

    IdempotentData idem = idempotent_data(Sh);
    Retract Ro = split_idempotent(idem.p_op);
    CHECK(mor_dist(compose(Ro.r, Ro.e), id_mor(C, Ro.image)) < 1e-9L);
    CHECK(mor_dist(compose(Ro.e, Ro.r), idem.p_op) < 1e-9L);
    Retract Ro2 = split_idempotent(idem.p_op, kDefaultTol, 9);
    CHECK(mor_dist(compose(Ro2.r, Ro2.e), id_mor(C, Ro2.image)) < 1e-9L);
    CHECK(mor_dist(compose(Ro2.e, Ro2.r), idem.p_op) < 1e-9L);
    CHECK(Ro.image.summands == Ro2.image.summands);

    Retract Rc = split_center_idempotent(C, Sh.zcl, idem.p_cl);
    CHECK(mor_dist(compose(Rc.r, Rc.e), id_mor(C, Rc.image)) < 1e-9L);
    CHECK(mor_dist(compose(Rc.e, Rc.r), idem.p_cl) < 1e-9L);
    CHECK(center_completeness_residual(C, Sh.zcl, idem.p_cl) < 1e-9L);
}

TEST_CASE("extraction recovers the algebra up to isomorphism") {
    CategoryData C = make_fibonacci();
    CardyAlgebra Cd = canonical_cardy(C);
    CorrelatorSet S = canonical_correlators(Cd);
    CorrelatorSet Sh = inflate_correlators(S, 42);

    CardyAlgebra X0 = extract_cardy(S);
    CHECK(verify_cardy(X0).ok(1e-9L));
    CHECK(cardy_isomorphic(X0, Cd).has_value());

    CardyAlgebra X1 = extract_cardy(Sh);
    CHECK(verify_cardy(X1).ok(1e-9L));
    CHECK(cardy_isomorphic(X1, Cd).has_value());

    CardyAlgebra X2 = extract_cardy(Sh, kDefaultTol, 5);
    CHECK(cardy_isomorphic(X2, X1).has_value());
}

TEST_CASE("gluing a coupon recovers composition") {
    CategoryData C = make_fibonacci();
    CorrelatorSet S = canonical_correlators(canonical_cardy(C));
    const Morphism& uc = S.at(GeneratorTag::CUnit);
    const Morphism& mc = S.at(GeneratorTag::CMul);
    SumObj U = underlying(S.zcl);
    SumObj UU = tensor_obj(U, U);
    Morphism coupon_m = compose(
        tensor_mor(id_mor(C, dual_obj(C, UU)), mc), coevt_mor(C, UU));

    GlueSpec gs;
    gs.glued = UU;
    Morphism f2 = tensor_mor(uc, uc);
    CHECK(mor_dist(glue_correlators(f2, coupon_m, gs), uc) < 1e-9L);

    GlueSpec gs2 = gs;
    gs2.insert = z_braiding(C, S.zcl, S.zcl);
    CHECK(mor_dist(glue_correlators(f2, coupon_m, gs2), uc) < 1e-9L);

    GlueSpec gs3 = gs;
    gs3.post = S.at(GeneratorTag::CCounit);
    CHECK(mor_dist(glue_correlators(f2, coupon_m, gs3),
                   compose(S.at(GeneratorTag::CCounit), uc)) < 1e-9L);

    GlueSpec gs4;
    gs4.glued = SumObj::unit();
    CHECK(mor_dist(glue_correlators(uc, uc, gs4), tensor_mor(uc, uc)) <
          1e-9L);
}

TEST_CASE("stringnet dimensions reproduce the closed-surface counts") {
    struct Row {
        CategoryData (*mk)();
        long long torus, pairing;
    };
    for (auto [mk, torus, pairing] : {Row{make_vect, 1, 1},
                                      Row{make_fibonacci, 4, 2},
                                      Row{make_ising, 9, 3}}) {
        CategoryData C = mk();
        CHECK(stringnet_dim(C, 0, {}) == 1);
        CHECK(stringnet_dim(C, 1, {}) == torus);
        CenterObj L1 = L_of_obj(C, SumObj::unit());
        CHECK(stringnet_dim(C, 0, {L1}) == 1);
        CHECK(stringnet_dim(C, 0, {L1, center_dual(C, L1)}) == pairing);
        CenterObj X = center_simple(1 % C.num_labels, 0);
        CHECK(stringnet_dim(C, 0, {X, center_dual(C, X)}) == 1);
        CHECK(stringnet_dim(C, 0, {center_simple(0, 0)}) == 1);
        CHECK(stringnet_dim(C, 1, {center_simple(0, 0)}) == torus);
    }
    CHECK(stringnet_dim(make_vect(), 2, {}) == 1);
}

TEST_CASE("malformed correlator input is rejected loudly") {
    CategoryData C = make_fibonacci();
    CorrelatorSet S = canonical_correlators(canonical_cardy(C));

    CHECK_THROWS_AS(check_relation(33, S), UnknownRelation);

    CorrelatorSet bad = S;
    bad.corr.erase(GeneratorTag::Iota);
    CHECK_THROWS_AS(check_all(bad), ShapeMismatch);

    CorrelatorSet bad2 = S;
    bad2.corr[GeneratorTag::CProp] =
        scale(Scalar(0.5L), S.at(GeneratorTag::CProp));
    CHECK_THROWS_AS(extract_cardy(bad2), SewingError);
}
