#pragma once

#include <string>

#include "sewnet/algebra.hpp"
#include "sewnet/sewing.hpp"

namespace sewnet {

// Sections-text data files. The three formats share one lexical layer:
// '#' starts a comment, blank lines are ignored, a line "[name]" opens a
// section, every other line is a whitespace-separated record. Complex
// scalars are stored as re/im pairs with full long-double precision, so
// save/load round-trips are exact. Loaders throw ParseError on malformed
// input or out-of-range indices; load_category additionally runs
// finalize(), which throws ConsistencyError on broken axioms.

CategoryData load_category(const std::string& path);
void save_category(const CategoryData& C, const std::string& path);

// Algebra files carry either a single Frobenius algebra (kind "frobenius")
// or a full Cardy triple (kind "cardy"). Carriers are word lists; a closed
// carrier is a list of tagged words, letters suffixed '+' for Over and '-'
// for Under. Structure morphisms are sparse block entries "c row col re im".
// Both loaders resolve shapes against an already finalized category and
// refuse files whose label count disagrees with it.
FrobeniusAlgebra load_frobenius(const CategoryData& C, const std::string& path);
void save_frobenius(const FrobeniusAlgebra& A, const std::string& path);

CardyAlgebra load_cardy(const CategoryData& C, const std::string& path);
void save_cardy(const CardyAlgebra& Cd, const std::string& path);

// Correlator files store the two carriers plus one section per generator
// tag. All twelve sections must be present even when empty.
CorrelatorSet load_correlators(const CategoryData& C, const std::string& path);
void save_correlators(const CorrelatorSet& S, const std::string& path);

}  // namespace sewnet
