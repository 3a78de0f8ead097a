#include "doctest.h"
#include "sewnet/morphism.hpp"
#include "tutil.hpp"

using namespace sewnet;

namespace {

CategoryData fixtures[3];
bool loaded = false;

const CategoryData& fix(int i) {
    if (!loaded) {
        fixtures[0] = make_vect();
        fixtures[1] = make_fibonacci();
        fixtures[2] = make_ising();
        loaded = true;
    }
    return fixtures[i];
}

}  // namespace

TEST_CASE("zigzags straighten on letters and words") {
    for (int fi = 0; fi < 3; ++fi) {
        const CategoryData& C = fix(fi);
        int nl = C.num_labels;
        for (int a = 0; a < nl; ++a) {
            SumObj A = SumObj::simple(a);
            Morphism z1 = compose(tensor_mor(id_mor(C, A), ev_mor(C, A)),
                                  tensor_mor(coev_mor(C, A), id_mor(C, A)));
            CHECK(mor_dist(z1, id_mor(C, A)) < 1e-9L);
            Morphism z2 = compose(tensor_mor(evt_mor(C, A), id_mor(C, A)),
                                  tensor_mor(id_mor(C, A), coevt_mor(C, A)));
            CHECK(mor_dist(z2, id_mor(C, A)) < 1e-9L);
            CHECK(std::abs(qtrace(id_mor(C, A)) - C.qdim[std::size_t(a)]) <
                  1e-9L);
        }
        Word w;
        for (int i = 0; i < nl; ++i) w.push_back(i % nl);
        w.push_back(nl - 1);
        SumObj A = SumObj::word(w);
        Morphism z1 = compose(tensor_mor(id_mor(C, A), ev_mor(C, A)),
                              tensor_mor(coev_mor(C, A), id_mor(C, A)));
        CHECK(mor_dist(z1, id_mor(C, A)) < 1e-9L);
        SumObj D = dual_obj(C, A);
        Morphism z3 = compose(tensor_mor(id_mor(C, D), evt_mor(C, A)),
                              tensor_mor(coevt_mor(C, A), id_mor(C, D)));
        CHECK(mor_dist(z3, id_mor(C, D)) < 1e-9L);
        Scalar dw = 1;
        for (int x : w) dw *= C.qdim[std::size_t(x)];
        CHECK(std::abs(qtrace(id_mor(C, A)) - dw) < 1e-9L);
    }
}

TEST_CASE("tensor product is functorial and associative") {
    for (int fi = 0; fi < 3; ++fi) {
        const CategoryData& C = fix(fi);
        int nl = C.num_labels;
        Rng rng(test_seed());
        Word w1{nl - 1}, w2{nl - 1, 0}, w3{nl - 1};
        SumObj A = SumObj::word(w1), B = SumObj::word(w2),
               D = SumObj::word(w3);
        Morphism f = random_morphism(C, A, A, rng);
        Morphism f2 = random_morphism(C, A, A, rng);
        Morphism g = random_morphism(C, B, B, rng);
        Morphism g2 = random_morphism(C, B, B, rng);
        CHECK(mor_dist(tensor_mor(compose(f2, f), compose(g2, g)),
                       compose(tensor_mor(f2, g2), tensor_mor(f, g))) <
              1e-9L);
        Morphism h = random_morphism(C, D, D, rng);
        CHECK(mor_dist(tensor_mor(tensor_mor(f, g), h),
                       tensor_mor(f, tensor_mor(g, h))) < 1e-9L);
        Morphism iu = id_mor(C, SumObj::unit());
        CHECK(mor_dist(tensor_mor(iu, f), f) < 1e-9L);
        CHECK(mor_dist(tensor_mor(f, iu), f) < 1e-9L);
    }
}

TEST_CASE("adjacent braidings satisfy yang-baxter and invert") {
    for (int fi = 0; fi < 3; ++fi) {
        const CategoryData& C = fix(fi);
        int nl = C.num_labels;
        for (int a = 0; a < nl; ++a)
            for (int b = 0; b < nl; ++b)
                for (int c = 0; c < nl; ++c) {
                    Word w{a, b, c};
                    Morphism s1 = braid_adjacent(C, w, 1, true);
                    Word w1{b, a, c};
                    Morphism s2 = braid_adjacent(C, w1, 2, true);
                    Word w2{b, c, a};
                    Morphism s3 = braid_adjacent(C, w2, 1, true);
                    Morphism lhs = compose(s3, compose(s2, s1));
                    Morphism t1 = braid_adjacent(C, w, 2, true);
                    Word v1{a, c, b};
                    Morphism t2 = braid_adjacent(C, v1, 1, true);
                    Word v2{c, a, b};
                    Morphism t3 = braid_adjacent(C, v2, 2, true);
                    Morphism rhs = compose(t3, compose(t2, t1));
                    CHECK(mor_dist(lhs, rhs) < 1e-9L);
                }
        Word w{nl - 1, nl - 1};
        Morphism bo = braid_adjacent(C, w, 1, true);
        Morphism bu = braid_adjacent(C, w, 1, false);
        CHECK(mor_dist(compose(bu, bo), id_mor(C, SumObj::word(w))) < 1e-9L);
    }
}

TEST_CASE("braiding is natural and ribbon-compatible on sums") {
    for (int fi = 0; fi < 3; ++fi) {
        const CategoryData& C = fix(fi);
        int nl = C.num_labels;
        Rng rng(test_seed());
        SumObj A{{Word{0}, Word{nl - 1}}};
        SumObj B{{Word{nl - 1, nl - 1}}};
        Morphism f = random_morphism(C, A, A, rng);
        Morphism g = random_morphism(C, B, B, rng);
        Morphism cab = braid_mor(C, A, B, true);
        CHECK(mor_dist(compose(cab, tensor_mor(f, g)),
                       compose(tensor_mor(g, f), cab)) < 1e-9L);
        Morphism cba_inv = braid_mor(C, A, B, false);
        Morphism cba = braid_mor(C, B, A, true);
        CHECK(mor_dist(compose(cba, cba_inv),
                       id_mor(C, tensor_obj(A, B))) < 1e-9L);

        SumObj A2 = SumObj::word(Word{nl - 1});
        SumObj B2 = SumObj::word(Word{nl - 1, 0});
        Morphism mono =
            compose(braid_mor(C, B2, A2, true), braid_mor(C, A2, B2, true));
        Morphism th =
            compose(twist_mor(C, tensor_obj(A2, B2), false),
                    tensor_mor(twist_mor(C, A2, true), twist_mor(C, B2, true)));
        CHECK(mor_dist(mono, th) < 1e-9L);
    }
}

TEST_CASE("simple decomposition is complete") {
    for (int fi = 0; fi < 3; ++fi) {
        const CategoryData& C = fix(fi);
        int nl = C.num_labels;
        SumObj A{{Word{nl - 1, nl - 1}, Word{0}}};
        Morphism acc = zero_mor(C, A, A);
        for (int c = 0; c < nl; ++c) {
            auto basis = hom_from_simple(C, c, A);
            for (std::size_t p = 0; p < basis.size(); ++p)
                acc = add(acc, compose(basis[p],
                                       coordinate_functional(C, c, A, int(p))));
        }
        CHECK(mor_dist(acc, id_mor(C, A)) < 1e-9L);
    }
}

TEST_CASE("hopf links through the engine match the twist formula") {
    for (int fi = 0; fi < 3; ++fi) {
        const CategoryData& C = fix(fi);
        CHECK(max_abs(Mat(smatrix(C) - C.stilde)) < 1e-9L);
    }
}

TEST_CASE("fusion channels account for the full trace") {
    for (int fi = 0; fi < 3; ++fi) {
        const CategoryData& C = fix(fi);
        int nl = C.num_labels;
        for (int a = 0; a < nl; ++a)
            for (int b = 0; b < nl; ++b) {
                SumObj W = SumObj::word(Word{a, b});
                Scalar tr = 0;
                for (int c = 0; c < nl; ++c)
                    tr += Real(C.nfus(a, b, c)) * C.qdim[std::size_t(c)];
                CHECK(std::abs(qtrace(id_mor(C, W)) - tr) < 1e-9L);
            }
    }
}
