#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "sewnet/algebra.hpp"

namespace sewnet {

// The twelve generating world sheets: open and closed (co)multiplication,
// (co)unit, propagators, and the two mixed cylinders I, I-dagger.
enum class GeneratorTag : int {
    OProp = 0,
    OMul,
    OComul,
    OUnit,
    OCounit,
    CProp,
    CMul,
    CComul,
    CUnit,
    CCounit,
    Iota,
    IotaDag,
};

constexpr int kGeneratorCount = 12;

const char* tag_name(GeneratorTag t);

// Fundamental correlators, one morphism per generator. Open correlators are
// plain morphisms on op; closed and mixed ones live on the realization of
// zcl (respectively L(op)) and are morphisms of Z(C) there.
struct CorrelatorSet {
    const CategoryData* C = nullptr;
    SumObj op;
    CenterObj zcl;
    std::map<GeneratorTag, Morphism> corr;

    const Morphism& at(GeneratorTag t) const;
};

struct RelationResult {
    int id = 0;  // 1..32
    Morphism lhs, rhs;
    Real residual = 0;
    bool pass = false;
};

struct IdempotentData {
    Morphism p_op;  // endomorphism of op
    Morphism p_cl;  // Z(C)-endomorphism of zcl
    CorrelatorSet hatted;
};

// A retract of an idempotent: e is the section, r the retraction,
// r o e = id on the image and e o r reproduces the idempotent.
struct Retract {
    bool in_center = false;
    SumObj image;
    CenterObj zimage;  // tagged-word presentation, valid iff in_center
    Morphism e;
    Morphism r;
};

struct SewingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UnknownRelation : SewingError {
    using SewingError::SewingError;
};
struct NotIdempotent : SewingError {
    using SewingError::SewingError;
};
struct RelationFailure : SewingError {
    using SewingError::SewingError;
};

// Correlators of a verified Cardy algebra: structure morphisms on the two
// state objects, iota and its Frobenius adjoint on the cylinders, identity
// propagators.
CorrelatorSet canonical_correlators(const CardyAlgebra& Cd);

// Zero-filled set with the twelve generator shapes implied by (op, zcl);
// the file loader fills its blocks and shape audits reuse the same table.
CorrelatorSet empty_correlators(const CategoryData& C, const SumObj& op,
                                const CenterObj& zcl);

// Dress a correlator set with a random retract onto a larger carrier on both
// sectors: G +-> G (+) junk with conjugated projection propagators. The
// result still satisfies all 32 relations and extract_cardy recovers an
// algebra isomorphic to the input's.
CorrelatorSet inflate_correlators(const CorrelatorSet& base, std::uint64_t seed);

// One-line description of the algebraic encoding used for a relation id;
// report generators embed these next to the residuals.
const char* relation_encoding(int id);

RelationResult check_relation(int id, const CorrelatorSet& corr,
                              Real tol = kDefaultTol);
std::vector<RelationResult> check_all(const CorrelatorSet& corr,
                                      Real tol = kDefaultTol);

IdempotentData idempotent_data(const CorrelatorSet& corr,
                               Real tol = kDefaultTol);

// Per-channel rank factorization of an idempotent in C. A nonzero seed mixes
// the image coordinates by a random invertible map, giving a different but
// equivalent retract.
Retract split_idempotent(const Morphism& p, Real tol = kDefaultTol,
                         std::uint64_t seed = 0);

// Same for a Z(C)-idempotent on the realization of X; the image is assembled
// from center-simple multiplicities so that it carries tagged words again.
Retract split_center_idempotent(const CategoryData& C, const CenterObj& X,
                                const Morphism& p, Real tol = kDefaultTol,
                                std::uint64_t seed = 0);

// || sum over center-simples of the isotypic reconstruction of p, minus p ||;
// the completeness lemma behind the closed splitting and the R32 chain.
Real center_completeness_residual(const CategoryData& C, const CenterObj& X,
                                  const Morphism& p);

// Split both propagators and conjugate the ten structure correlators onto the
// retract images. Requires check_all to pass first.
CardyAlgebra extract_cardy(const CorrelatorSet& corr, Real tol = kDefaultTol,
                           std::uint64_t seed = 0);

// dim hom_Z(1, A_1 (x) ... (x) A_n (x) H^g) with the handle object
// H = sum over center-simples X of X (x) X*, by fusion-ring arithmetic.
long long stringnet_dim(const CategoryData& C, int genus,
                        const std::vector<CenterObj>& boundary);

// Gluing of coupon-form correlators f : 1 -> K (x) X, g : 1 -> X* (x) T by
// evaluation over the glued slots. insert dresses the glued strand (the
// projector of a new closed boundary), pre and post compose extra maps on f
// and on the result (the Z and Y dressings of the mixed gluing cases). An
// empty glued object is the disjoint union.
struct GlueSpec {
    SumObj glued;
    std::optional<Morphism> insert;
    std::optional<Morphism> pre;
    std::optional<Morphism> post;
};

Morphism glue_correlators(const Morphism& f, const Morphism& g,
                          const GlueSpec& spec);

}  // namespace sewnet
