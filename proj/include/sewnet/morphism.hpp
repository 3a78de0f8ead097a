#pragma once

#include <vector>

#include "sewnet/obj.hpp"

namespace sewnet {

// A morphism between direct sums of words, stored as one matrix per simple
// channel c: block(c) maps the concatenated tree bases of hom(c, src) to
// hom(c, tgt). Composition is matrix product; everything else reduces to
// assembling these blocks.
class Morphism {
public:
    const CategoryData* C = nullptr;
    SumObj src, tgt;
    std::vector<Mat> blk;

    Morphism() = default;
    Morphism(const CategoryData& cat, SumObj target, SumObj source);

    Mat& block(int c) { return blk[std::size_t(c)]; }
    const Mat& block(int c) const { return blk[std::size_t(c)]; }
};

Morphism id_mor(const CategoryData& C, const SumObj& A);
Morphism zero_mor(const CategoryData& C, const SumObj& tgt, const SumObj& src);

Morphism compose(const Morphism& f, const Morphism& g);  // f after g
Morphism add(const Morphism& f, const Morphism& g);
Morphism sub(const Morphism& f, const Morphism& g);
Morphism scale(Scalar z, const Morphism& f);

Morphism tensor_mor(const Morphism& f, const Morphism& g);

// Adjacent braid on a single word, swapping letters pos and pos+1
// (1-based); over = true crosses the left letter over the right one.
Morphism braid_adjacent(const CategoryData& C, const Word& w, int pos, bool over);
// c_{A,B}: A (x) B -> B (x) A, A crossing over B; over = false gives the
// inverse sense (c_{B,A})^{-1}.
Morphism braid_mor(const CategoryData& C, const SumObj& A, const SumObj& B, bool over);

Morphism ev_mor(const CategoryData& C, const SumObj& A);     // A* (x) A -> 1
Morphism coev_mor(const CategoryData& C, const SumObj& A);   // 1 -> A (x) A*
Morphism evt_mor(const CategoryData& C, const SumObj& A);    // A (x) A* -> 1
Morphism coevt_mor(const CategoryData& C, const SumObj& A);  // 1 -> A* (x) A

Morphism twist_mor(const CategoryData& C, const SumObj& A, bool inverse);

Scalar qtrace(const Morphism& f);  // quantum trace of an endomorphism
Real mor_norm(const Morphism& f);
Real mor_dist(const Morphism& f, const Morphism& g);
bool approx_eq(const Morphism& f, const Morphism& g, Real tol);

// Basis t_p of hom([c], A) as morphisms, and the coordinate functionals
// t^p : A -> [c] dual to them; sum_c sum_p t_p o t^p = Id_A exactly.
std::vector<Morphism> hom_from_simple(const CategoryData& C, int c, const SumObj& A);
Morphism coordinate_functional(const CategoryData& C, int c, const SumObj& A, int p);

// Elementary-matrix basis of hom(src, tgt), channel-major then column-major.
std::vector<Morphism> hom_basis(const CategoryData& C, const SumObj& src,
                                const SumObj& tgt);

Morphism random_morphism(const CategoryData& C, const SumObj& tgt,
                         const SumObj& src, Rng& rng);

// Restriction of f to single summands of src/tgt, as a morphism of words.
Morphism submorphism(const Morphism& f, int t_tgt, int s_src);
// Insert g : src.summands[s] -> tgt.summands[t] into a zero morphism layout.
void place_submorphism(Morphism& f, int t_tgt, int s_src, const Morphism& g);

}  // namespace sewnet
