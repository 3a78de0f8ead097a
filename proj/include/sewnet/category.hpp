#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "sewnet/scalars.hpp"

namespace sewnet {

struct EngineCache;  // tree bases and split transforms, owned per category

// Skeletal modular-tensor-category data. Labels are dense ints, label 0 is
// the tensor unit. F/R tables are sparse maps keyed on packed index tuples.
//
// Conventions fixed here and consumed by every other module:
//  * splitting vertices: hom(c, U_i (x) U_j) has basis |i,j;c,mu>,
//    mu in [0, N_{ij}^c).
//  * F entry (i,j,k; l; m,a,b; n,c,d) is the coefficient of the right-nested
//    tree |(i(jk)_n)_l; c,d> in the expansion of the left-nested tree
//    |((ij)_m k)_l; a,b>.
//  * R entry (i,j; k; a,b) is the coefficient of |j,i;k,b> in
//    beta_{i,j} o |i,j;k,a>, where beta_{i,j} crosses the i strand over j.
class CategoryData {
public:
    int num_labels = 0;
    std::vector<std::string> names;
    std::vector<int> dual;
    // fusion multiplicities, N[(i*nl+j)*nl+k]
    std::vector<int> N;
    std::unordered_map<std::uint64_t, Scalar> F;
    std::unordered_map<std::uint64_t, Scalar> R;
    std::vector<Scalar> pivotal;  // ~coev normalization per label, default 1

    // derived at load time
    std::vector<Scalar> qdim;     // d_i
    Scalar global_dim2 = 0;       // D^2 = sum_i d_i^2
    std::vector<Scalar> cap_ev;   // ev_i coefficient e_i
    std::vector<Scalar> cap_evt;  // ~ev_i coefficient
    std::vector<Scalar> twist;    // theta_i
    Mat stilde;                   // Hopf-link matrix from the twist formula

    int nfus(int i, int j, int k) const {
        return N[std::size_t((i * num_labels + j) * num_labels + k)];
    }
    std::vector<int> fusion(int i, int j) const;

    static std::uint64_t fkey(int i, int j, int k, int l, int m, int a, int b,
                              int n, int c, int d);
    static std::uint64_t rkey(int i, int j, int k, int a, int b);

    Scalar fsym(int i, int j, int k, int l, int m, int a, int b, int n, int c,
                int d) const;
    Scalar rsym(int i, int j, int k, int a, int b) const;

    // Coordinate change on hom(l, i(x)j(x)k): left-nested coords to
    // right-nested coords. Row/column enumerations follow enum_mid order.
    Mat fmat_LR(int i, int j, int k, int l) const;
    Mat fmat_RL(int i, int j, int k, int l) const;
    // Vertex-coordinate map of the over-crossing beta_{i,j} on hom(k, i(x)j),
    // and of the under-crossing (beta_{j,i})^{-1}.
    Mat rmat_over(int i, int j, int k) const;
    Mat rmat_under(int i, int j, int k) const;

    // (m, a, b) triples enumerating the left-nested basis of hom(l, (ij)k):
    // m ascending, a in [0,N_{ij}^m), b in [0,N_{mk}^l).
    struct MidIdx {
        int mid, a, b;
    };
    std::vector<MidIdx> enum_mid_left(int i, int j, int k, int l) const;
    std::vector<MidIdx> enum_mid_right(int i, int j, int k, int l) const;

    void finalize();  // computes derived data, throws ConsistencyError

    // Lazy diagram-engine cache; finalize() drops it, so mutating F/R/N
    // without re-finalizing leaves stale entries behind.
    mutable std::shared_ptr<EngineCache> cache;
};

struct CheckResult {
    std::string name;
    Real residual = 0;
    bool pass = false;
    std::string detail;
};

// Structural and numerical validators. Each returns the worst residual over
// its index range; pentagon/hexagon iterate all admissible tuples.
CheckResult check_fusion_ring(const CategoryData& C);
CheckResult check_unit_and_duals(const CategoryData& C);
CheckResult check_pentagon(const CategoryData& C, Real tol);
CheckResult check_hexagon(const CategoryData& C, bool inverse, Real tol);
CheckResult check_dim_homomorphism(const CategoryData& C, Real tol);
CheckResult check_sphericality(const CategoryData& C, Real tol);
CheckResult check_ribbon(const CategoryData& C, Real tol);
CheckResult check_modularity(const CategoryData& C, Real tol);

// sum_i d_i stilde_{il} / d_l, compared against D^2 delta_{l,0}.
CheckResult verify_killing_ring(const CategoryData& C, int l, Real tol);

std::vector<CheckResult> check_category(const CategoryData& C, Real tol);

// Hopf-link matrix computed as honest traces of double braidings through the
// diagram engine (defined in morphism.cpp); the loader's stilde member uses
// the twist formula, and check-category compares the two.
Mat smatrix(const CategoryData& C);

// Programmatic fixtures (also used to generate the shipped data files).
CategoryData make_vect();
CategoryData make_fibonacci();
CategoryData make_ising();

}  // namespace sewnet
