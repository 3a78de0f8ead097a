#pragma once

#include "sewnet/morphism.hpp"

namespace sewnet {

// Drinfeld-center objects realized as tagged words: a passing strand crosses
// under every Over letter and over every Under letter. Any tag assignment
// yields a valid half-braiding (it is built from braidings, so naturality
// and the hexagon hold strand by strand); the simples of Z(C) for modular C
// are the pairs (a,b) = [a Over, b Under].
enum class Tag : int { Over = 0, Under = 1 };

struct TLetter {
    int label;
    Tag tag;
    bool operator==(const TLetter& o) const {
        return label == o.label && tag == o.tag;
    }
};

using TWord = std::vector<TLetter>;

struct CenterObj {
    std::vector<TWord> summands;

    bool operator==(const CenterObj& o) const { return summands == o.summands; }
    bool operator!=(const CenterObj& o) const { return !(*this == o); }
};

SumObj underlying(const CenterObj& X);
CenterObj center_unit();
CenterObj center_simple(int a, int b);
CenterObj center_tensor(const CenterObj& X, const CenterObj& Y);
CenterObj center_dual(const CategoryData& C, const CenterObj& X);
std::vector<std::pair<int, int>> center_simples(const CategoryData& C);

Word over_part(const TWord& w);
Word under_part(const TWord& w);

// c_{X,A} : U(X) (x) A -> A (x) U(X) by the tag rule, and its inverse sense.
Morphism half_braiding(const CategoryData& C, const CenterObj& X, const SumObj& A);
Morphism half_braiding_inv(const CategoryData& C, const CenterObj& X, const SumObj& A);

// Braiding and twist of Z(C) on realized objects.
Morphism z_braiding(const CategoryData& C, const CenterObj& X, const CenterObj& Y);
Morphism z_twist(const CategoryData& C, const CenterObj& X, bool inverse = false);

// Worst naturality defect of f : U(X) -> U(Y) against the half-braidings of
// all single-letter objects; ~0 exactly when f is a morphism in Z(C).
Real center_naturality_defect(const CategoryData& C, const CenterObj& X,
                              const CenterObj& Y, const Morphism& f);

// The induction L(A) = sum_i A (x) i* (x) i with tags [A Over..., i* Over,
// i Under]; summand order is i outer, A-summand inner.
CenterObj L_of_obj(const CategoryData& C, const SumObj& A);
Morphism L_of_mor(const Morphism& f);

// Interleaver J_X : over-part (x) under-part -> U(X) for a single tagged
// word; Under letters pass under Over letters on the way in.
Morphism interleaver(const CategoryData& C, const TWord& w);

// hom_Z((a,b), X) basis, realized as J o (t_o (x) t_u) per summand of X.
std::vector<Morphism> center_hom_basis(const CategoryData& C, int a, int b,
                                       const CenterObj& X);

// Basis of hom_Z(X, Y) inside hom_C(U(X), U(Y)): nullspace of the
// naturality constraints against every single-letter passing strand.
std::vector<Morphism> center_hom_space(const CategoryData& C,
                                       const CenterObj& X, const CenterObj& Y);

// Lax/colax monoidal structure on L and the unit maps.
Morphism phi_L(const CategoryData& C, const SumObj& A, const SumObj& B);
Morphism psi_L(const CategoryData& C, const SumObj& A, const SumObj& B);
Morphism phi_L_unit(const CategoryData& C);  // 1 -> L(1)
Morphism psi_L_unit(const CategoryData& C);  // L(1) -> 1

// E_k wraps a k-labeled loop around the object (plain double braiding closed
// off on the right); P = sum_k (d_k/D^2) E_k.
Morphism encircle(const CategoryData& C, const SumObj& A, int k);
Morphism projector_P(const CategoryData& C, const SumObj& A);

// Z maps hom(1, A_1 (x) ... (x) A_n) into hom(1, L(A_1) (x) ... (x) L(A_n))
// via L and the colax chain; Y is the reverse section via the lax chain and
// the counit-style collapse L(W) -> W. Y o Z = id.
Morphism map_Z(const CategoryData& C, const std::vector<SumObj>& factors,
               const Morphism& f);
Morphism map_Y(const CategoryData& C, const std::vector<SumObj>& factors,
               const Morphism& g);

Morphism mor_inverse(const Morphism& f);

}  // namespace sewnet
