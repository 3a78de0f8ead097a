#include "doctest.h"
#include "sewnet/center.hpp"
#include "tutil.hpp"

using namespace sewnet;

namespace {

void run_center(const CategoryData& C) {
    int nl = C.num_labels;
    Rng rng(test_seed());
    SumObj unit = SumObj::unit();
    CenterObj L1c = L_of_obj(C, unit);
    SumObj L1 = underlying(L1c);

    // encircling a simple reads off a Hopf-link ratio
    for (int k = 0; k < nl; ++k)
        for (int l = 0; l < nl; ++l) {
            Morphism E = encircle(C, SumObj::simple(l), k);
            Morphism want = scale(C.stilde(k, l) / C.qdim[std::size_t(l)],
                                  id_mor(C, SumObj::simple(l)));
            CHECK(mor_dist(E, want) < 1e-9L);
        }

    // the cloaking projector is idempotent
    SumObj W = SumObj::word(Word{nl - 1, nl - 1});
    Morphism P = projector_P(C, W);
    CHECK(mor_dist(compose(P, P), P) < 1e-9L);
    Morphism PL = projector_P(C, L1);
    CHECK(mor_dist(compose(PL, PL), PL) < 1e-9L);

    // lax/colax structure of the induction
    Morphism phi11 = phi_L(C, unit, unit);
    Morphism psi11 = psi_L(C, unit, unit);
    CHECK(mor_dist(compose(phi11, psi11), id_mor(C, L1)) < 1e-9L);
    Morphism e = compose(psi11, phi11);
    CHECK(mor_dist(compose(e, e), e) < 1e-9L);
    if (nl > 1)
        CHECK(mor_dist(e, id_mor(C, tensor_obj(L1, L1))) > 1e-3L);

    Morphism phi1 = phi_L_unit(C);
    Morphism psi1 = psi_L_unit(C);
    CHECK(mor_dist(compose(phi11, tensor_mor(phi1, id_mor(C, L1))),
                   id_mor(C, L1)) < 1e-9L);
    CHECK(mor_dist(compose(phi11, tensor_mor(id_mor(C, L1), phi1)),
                   id_mor(C, L1)) < 1e-9L);
    CHECK(mor_dist(compose(tensor_mor(psi1, id_mor(C, L1)), psi11),
                   id_mor(C, L1)) < 1e-9L);
    CHECK(mor_dist(compose(tensor_mor(id_mor(C, L1), psi1), psi11),
                   id_mor(C, L1)) < 1e-9L);

    SumObj A = SumObj::word(Word{nl - 1});
    SumObj B{{Word{nl - 1}, Word{}}};
    Morphism phiAB = phi_L(C, A, B);
    Morphism psiAB = psi_L(C, A, B);
    CHECK(mor_dist(compose(phiAB, psiAB),
                   id_mor(C, underlying(L_of_obj(C, tensor_obj(A, B))))) <
          1e-9L);
    SumObj D = SumObj::word(Word{0});
    Morphism lhs =
        compose(phi_L(C, tensor_obj(A, B), D),
                tensor_mor(phi_L(C, A, B),
                           id_mor(C, underlying(L_of_obj(C, D)))));
    Morphism rhs =
        compose(phi_L(C, A, tensor_obj(B, D)),
                tensor_mor(id_mor(C, underlying(L_of_obj(C, A))),
                           phi_L(C, B, D)));
    CHECK(mor_dist(lhs, rhs) < 1e-9L);

    // everything the induction produces is a morphism of the center
    CenterObj LA = L_of_obj(C, A), LB = L_of_obj(C, B);
    CenterObj LAB = L_of_obj(C, tensor_obj(A, B));
    CHECK(center_naturality_defect(C, center_tensor(LA, LB), LAB,
                                   phi_L(C, A, B)) < 1e-9L);
    CHECK(center_naturality_defect(C, LAB, center_tensor(LA, LB),
                                   psi_L(C, A, B)) < 1e-9L);
    CHECK(center_naturality_defect(C, center_unit(), L1c, phi1) < 1e-9L);
    CHECK(center_naturality_defect(C, L1c, center_unit(), psi1) < 1e-9L);
    Morphism f = random_morphism(C, B, A, rng);
    CHECK(center_naturality_defect(C, LA, LB, L_of_mor(f)) < 1e-9L);

    // the multiplication on L(1) is commutative with trivial twist
    Morphism cz = z_braiding(C, L1c, L1c);
    CHECK(mor_dist(compose(phi11, cz), phi11) < 1e-9L);
    CHECK(mor_dist(z_twist(C, L1c), id_mor(C, L1)) < 1e-9L);
    CHECK(mor_dist(z_twist(C, L1c, true), id_mor(C, L1)) < 1e-9L);

    // hom into L(1) from a center simple is one class function per diagonal
    for (int a = 0; a < nl; ++a)
        for (int b = 0; b < nl; ++b) {
            auto basis = center_hom_basis(C, a, b, L1c);
            CHECK(int(basis.size()) == (a == b ? 1 : 0));
            for (auto& g : basis)
                CHECK(center_naturality_defect(C, center_simple(a, b), L1c,
                                               g) < 1e-9L);
        }
}

}  // namespace

TEST_CASE("center structure on vect") { run_center(make_vect()); }
TEST_CASE("center structure on fibonacci") { run_center(make_fibonacci()); }
TEST_CASE("center structure on ising") { run_center(make_ising()); }

TEST_CASE("cylinder expansion inverts on elements") {
    for (auto mk : {make_vect, make_fibonacci, make_ising}) {
        CategoryData C = mk();
        int nl = C.num_labels;
        Rng rng(test_seed());
        SumObj unit = SumObj::unit();
        std::vector<SumObj> f1{SumObj::word(Word{nl - 1, nl - 1})};
        Morphism f = random_morphism(C, f1[0], unit, rng);
        CHECK(mor_dist(map_Y(C, f1, map_Z(C, f1, f)), f) < 1e-9L);
        std::vector<SumObj> f2{SumObj::word(Word{nl - 1}),
                               SumObj::word(Word{nl - 1})};
        Morphism g = random_morphism(C, tensor_obj(f2[0], f2[1]), unit, rng);
        CHECK(mor_dist(map_Y(C, f2, map_Z(C, f2, g)), g) < 1e-9L);
        std::vector<SumObj> f3{SumObj::word(Word{nl - 1}),
                               SumObj::word(Word{0}),
                               SumObj::word(Word{nl - 1})};
        Morphism h = random_morphism(
            C, tensor_obj(tensor_obj(f3[0], f3[1]), f3[2]), unit, rng);
        CHECK(mor_dist(map_Y(C, f3, map_Z(C, f3, h)), h) < 1e-9L);
    }
}
