#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "sewnet/category.hpp"

namespace sewnet {

// A Word is a tensor product of simple objects, left to right; the empty
// word is the tensor unit. Objects are formal direct sums of words, which
// is enough for every construction downstream (L(A), split carriers, hom
// spaces between them).
using Word = std::vector<int>;

std::string word_key(const Word& w);
Word dual_word(const CategoryData& C, const Word& w);  // reversed letter duals

struct SumObj {
    std::vector<Word> summands;

    static SumObj unit() { return SumObj{{Word{}}}; }
    static SumObj word(Word w) { return SumObj{{std::move(w)}}; }
    static SumObj simple(int a) { return SumObj{{Word{a}}}; }

    bool operator==(const SumObj& o) const { return summands == o.summands; }
    bool operator!=(const SumObj& o) const { return !(*this == o); }
};

std::string obj_key(const SumObj& A);
// all pairs (s,t), s outer, each pair concatenated
SumObj tensor_obj(const SumObj& A, const SumObj& B);
SumObj dual_obj(const CategoryData& C, const SumObj& A);

// Fusion-tree basis of hom(c, w): left-nested paths. mids[k] is the
// intermediate label after fusing the first k+1 letters (so mids.back() == c
// and mids[0] == w[0]); mus[k] indexes the multiplicity of the vertex
// (mids[k], w[k+1]) -> mids[k+1]. The empty word has the single empty path
// at c == 0 only.
struct TreePath {
    std::vector<int> mids;
    std::vector<int> mus;
};

std::string path_key(const TreePath& p);

struct ChannelBasis {
    std::vector<TreePath> paths;
    std::unordered_map<std::string, int> index;
};

struct EngineCache {
    std::unordered_map<std::string, std::vector<ChannelBasis>> tree;
    std::unordered_map<std::string, std::vector<Mat>> split;
    std::unordered_map<std::string, std::vector<Mat>> split_inv;
};

EngineCache& cache_of(const CategoryData& C);

const ChannelBasis& tree_basis(const CategoryData& C, const Word& w, int c);
int tree_dim(const CategoryData& C, const Word& w, int c);
int path_index(const CategoryData& C, const Word& w, int c, const TreePath& p);

int obj_dim(const CategoryData& C, const SumObj& A, int c);
// column offset of summand t inside the channel-c block
int summand_offset(const CategoryData& C, const SumObj& A, int c, int t);

// Split-basis index (j,k,p,q,mu): p in hom(j,A), q in hom(k,B), mu in
// N_{jk}^c, enumerated j asc, k asc, then p, q, mu nested.
struct SplitIdx {
    int j, k, p, q, mu;
};
std::vector<SplitIdx> enum_split(const CategoryData& C, const Word& A,
                                 const Word& B, int c);

// Split transform S_{A,B} in channel c: maps the split basis to the tree
// basis of hom(c, A.B). Cached together with its inverse.
const Mat& split_transform(const CategoryData& C, const Word& A, const Word& B, int c);
const Mat& split_transform_inv(const CategoryData& C, const Word& A, const Word& B, int c);

}  // namespace sewnet
