#include <cmath>

#include "doctest.h"
#include "sewnet/category.hpp"

using namespace sewnet;

namespace {

void all_axioms(const CategoryData& C) {
    for (const auto& r : check_category(C, 1e-9L)) {
        INFO(r.name, " residual ", double(r.residual), " ", r.detail);
        CHECK(r.pass);
    }
}

const Real kPi = 3.14159265358979323846264338327950288L;

}  // namespace

TEST_CASE("vect satisfies every axiom and has trivial data") {
    CategoryData C = make_vect();
    all_axioms(C);
    CHECK(C.num_labels == 1);
    CHECK(std::abs(C.qdim[0] - Scalar(1)) < 1e-15L);
    CHECK(std::abs(C.global_dim2 - Scalar(1)) < 1e-15L);
    CHECK(C.stilde.rows() == 1);
    CHECK(std::abs(C.stilde(0, 0) - Scalar(1)) < 1e-15L);
}

TEST_CASE("fibonacci satisfies every axiom with golden-ratio data") {
    CategoryData C = make_fibonacci();
    all_axioms(C);
    Real phi = (1 + std::sqrt(5.0L)) / 2;
    CHECK(std::abs(C.qdim[1] - Scalar(phi)) < 1e-15L);
    CHECK(std::abs(C.global_dim2 - Scalar((5 + std::sqrt(5.0L)) / 2)) <
          1e-15L);
    Scalar th_tau(std::cos(4 * kPi / 5), std::sin(4 * kPi / 5));
    CHECK(std::abs(C.twist[1] - th_tau) < 1e-15L);
}

TEST_CASE("ising satisfies every axiom with sqrt2 data") {
    CategoryData C = make_ising();
    all_axioms(C);
    CHECK(std::abs(C.qdim[1] - Scalar(std::sqrt(2.0L))) < 1e-15L);
    CHECK(std::abs(C.qdim[2] - Scalar(1)) < 1e-15L);
    CHECK(std::abs(C.global_dim2 - Scalar(4)) < 1e-15L);
    Scalar th_sigma(std::cos(kPi / 8), std::sin(kPi / 8));
    CHECK(std::abs(C.twist[1] - th_sigma) < 1e-15L);
    CHECK(std::abs(C.twist[2] + Scalar(1)) < 1e-15L);
}

TEST_CASE("killing ring annihilates every nonunit label") {
    for (auto mk : {make_vect, make_fibonacci, make_ising}) {
        CategoryData C = mk();
        for (int l = 0; l < C.num_labels; ++l) {
            CheckResult r = verify_killing_ring(C, l, 1e-9L);
            INFO("label ", l, " residual ", double(r.residual));
            CHECK(r.pass);
        }
    }
}

TEST_CASE("hopf-link matrix is invertible on every fixture") {
    for (auto mk : {make_vect, make_fibonacci, make_ising}) {
        CategoryData C = mk();
        Eigen::FullPivLU<Mat> lu(C.stilde);
        CHECK(lu.isInvertible());
    }
}

TEST_CASE("perturbed fusion data is rejected at load") {
    CategoryData C = make_fibonacci();
    C.dual = {1, 0};
    CHECK_THROWS_AS(C.finalize(), ConsistencyError);

    CategoryData D = make_fibonacci();
    D.N[(1 * 2 + 1) * 2 + 0] = 0;  // remove tau (x) tau -> 1
    CHECK_THROWS_AS(D.finalize(), ConsistencyError);
}

TEST_CASE("perturbed F table fails pentagon but loads") {
    CategoryData C = make_fibonacci();
    C.F.at(CategoryData::fkey(1, 1, 1, 1, 0, 0, 0, 0, 0, 0)) *=
        Scalar(1.01L);
    C.finalize();
    CheckResult r = check_pentagon(C, 1e-9L);
    CHECK(!r.pass);
    CHECK(r.residual > 1e-4L);
}
