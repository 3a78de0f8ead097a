#include "sewnet/obj.hpp"

#include <algorithm>

namespace sewnet {

std::string word_key(const Word& w) {
    std::string s;
    s.reserve(w.size() * 3);
    for (int a : w) {
        s += std::to_string(a);
        s += '.';
    }
    return s;
}

Word dual_word(const CategoryData& C, const Word& w) {
    Word d;
    d.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) d.push_back(C.dual[*it]);
    return d;
}

std::string obj_key(const SumObj& A) {
    std::string s;
    for (auto& w : A.summands) {
        s += word_key(w);
        s += '|';
    }
    return s;
}

SumObj tensor_obj(const SumObj& A, const SumObj& B) {
    SumObj out;
    for (auto& wa : A.summands)
        for (auto& wb : B.summands) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out.summands.push_back(std::move(w));
        }
    return out;
}

SumObj dual_obj(const CategoryData& C, const SumObj& A) {
    SumObj out;
    for (auto& w : A.summands) out.summands.push_back(dual_word(C, w));
    return out;
}

std::string path_key(const TreePath& p) {
    std::string s;
    for (int m : p.mids) {
        s += std::to_string(m);
        s += ',';
    }
    s += ';';
    for (int m : p.mus) {
        s += std::to_string(m);
        s += ',';
    }
    return s;
}

EngineCache& cache_of(const CategoryData& C) {
    if (!C.cache) C.cache = std::make_shared<EngineCache>();
    return *C.cache;
}

namespace {

std::vector<ChannelBasis> build_tree(const CategoryData& C, const Word& w) {
    int nl = C.num_labels;
    std::vector<ChannelBasis> out(nl);
    if (w.empty()) {
        out[0].paths.push_back(TreePath{});
        out[0].index[path_key(TreePath{})] = 0;
        return out;
    }
    // grow paths letter by letter
    std::vector<TreePath> cur;
    cur.push_back(TreePath{{w[0]}, {}});
    for (std::size_t k = 1; k < w.size(); ++k) {
        std::vector<TreePath> next;
        for (auto& p : cur) {
            int u = p.mids.back();
            for (int v = 0; v < nl; ++v)
                for (int mu = 0; mu < C.nfus(u, w[k], v); ++mu) {
                    TreePath q = p;
                    q.mids.push_back(v);
                    q.mus.push_back(mu);
                    next.push_back(std::move(q));
                }
        }
        cur = std::move(next);
    }
    // bucket by root channel, keeping the generation order inside each bucket
    for (auto& p : cur) {
        ChannelBasis& b = out[std::size_t(p.mids.back())];
        b.index[path_key(p)] = int(b.paths.size());
        b.paths.push_back(std::move(p));
    }
    return out;
}

}  // namespace

const ChannelBasis& tree_basis(const CategoryData& C, const Word& w, int c) {
    EngineCache& cache = cache_of(C);
    std::string key = word_key(w);
    auto it = cache.tree.find(key);
    if (it == cache.tree.end())
        it = cache.tree.emplace(key, build_tree(C, w)).first;
    return it->second[std::size_t(c)];
}

int tree_dim(const CategoryData& C, const Word& w, int c) {
    return int(tree_basis(C, w, c).paths.size());
}

int path_index(const CategoryData& C, const Word& w, int c, const TreePath& p) {
    auto& b = tree_basis(C, w, c);
    auto it = b.index.find(path_key(p));
    return it == b.index.end() ? -1 : it->second;
}

int obj_dim(const CategoryData& C, const SumObj& A, int c) {
    int d = 0;
    for (auto& w : A.summands) d += tree_dim(C, w, c);
    return d;
}

int summand_offset(const CategoryData& C, const SumObj& A, int c, int t) {
    int off = 0;
    for (int s = 0; s < t; ++s) off += tree_dim(C, A.summands[std::size_t(s)], c);
    return off;
}

std::vector<SplitIdx> enum_split(const CategoryData& C, const Word& A,
                                 const Word& B, int c) {
    std::vector<SplitIdx> out;
    for (int j = 0; j < C.num_labels; ++j) {
        int da = tree_dim(C, A, j);
        if (da == 0) continue;
        for (int k = 0; k < C.num_labels; ++k) {
            int db = tree_dim(C, B, k);
            int nm = C.nfus(j, k, c);
            if (db == 0 || nm == 0) continue;
            for (int p = 0; p < da; ++p)
                for (int q = 0; q < db; ++q)
                    for (int mu = 0; mu < nm; ++mu) out.push_back({j, k, p, q, mu});
        }
    }
    return out;
}

namespace {

// build the transform from the split basis to the tree basis of the
// concatenation, by induction on |B|
int split_pos(const std::vector<SplitIdx>& e, int j, int k, int p, int q, int mu) {
    for (std::size_t s = 0; s < e.size(); ++s)
        if (e[s].j == j && e[s].k == k && e[s].p == p && e[s].q == q && e[s].mu == mu)
            return int(s);
    return -1;
}

std::vector<Mat> build_split(const CategoryData& C, const Word& A, const Word& B);

const std::vector<Mat>& split_all(const CategoryData& C, const Word& A, const Word& B) {
    EngineCache& cache = cache_of(C);
    std::string key = word_key(A) + "|" + word_key(B);
    auto it = cache.split.find(key);
    if (it == cache.split.end())
        it = cache.split.emplace(key, build_split(C, A, B)).first;
    return it->second;
}

std::vector<Mat> build_split(const CategoryData& C, const Word& A, const Word& B) {
    int nl = C.num_labels;
    std::vector<Mat> out(nl);
    Word AB = A;
    AB.insert(AB.end(), B.begin(), B.end());
    if (B.empty() || AB.size() <= 1) {
        // no reassociation happens: the split basis has a single (j,k)
        // cell per channel and already coincides with the tree basis
        for (int c = 0; c < nl; ++c) {
            int d = tree_dim(C, AB, c);
            out[c] = Mat::Identity(d, d);
        }
        return out;
    }
    int b = B.back();
    Word Bp(B.begin(), B.end() - 1);
    const std::vector<Mat>& Sp = split_all(C, A, Bp);
    Word ABp = A;
    ABp.insert(ABp.end(), Bp.begin(), Bp.end());

    for (int c = 0; c < nl; ++c) {
        auto src = enum_split(C, A, B, c);
        auto& tgt = tree_basis(C, AB, c);
        Mat S = zeros(Eigen::Index(tgt.paths.size()), Eigen::Index(src.size()));
        for (std::size_t s = 0; s < src.size(); ++s) {
            int j = src[s].j, k = src[s].k, mu = src[s].mu;
            // decompose q: last vertex of the B tree fuses (kpp, b) -> k
            const TreePath& qp = tree_basis(C, B, k).paths[std::size_t(src[s].q)];
            int kpp, nu, qpp;
            if (Bp.empty()) {
                // B is the single letter b, no inner vertex; reassociation
                // below is the identity with u = j
                kpp = 0, nu = 0, qpp = 0;
                (void)kpp;
                // hom(c, A.b): tree last vertex is (u=j, b) -> c with mult mu
                auto srcp = enum_split(C, A, Bp, j);  // identity enumeration
                (void)srcp;
                int u = j;
                for (int r = 0; r < tree_dim(C, ABp, u); ++r) {
                    Scalar base = Sp[u](r, split_pos(enum_split(C, A, Bp, u), j, 0, src[s].p, 0, 0));
                    if (base == Scalar(0)) continue;
                    const TreePath& rp = tree_basis(C, ABp, u).paths[std::size_t(r)];
                    TreePath full = rp;
                    full.mids.push_back(c);
                    full.mus.push_back(mu);
                    int t = path_index(C, AB, c, full);
                    if (t >= 0) S(t, s) += base;
                }
                continue;
            }
            TreePath qtrim = qp;
            kpp = qtrim.mids[qtrim.mids.size() - 2];
            nu = qtrim.mus.back();
            qtrim.mids.pop_back();
            qtrim.mus.pop_back();
            qpp = path_index(C, Bp, kpp, qtrim);
            // reassociate (j (kpp b)_k)_c -> ((j kpp)_u b)_c
            Mat FRL = C.fmat_RL(j, kpp, b, c);
            auto Lidx = C.enum_mid_left(j, kpp, b, c);
            auto Ridx = C.enum_mid_right(j, kpp, b, c);
            int rpos = -1;
            for (std::size_t z = 0; z < Ridx.size(); ++z)
                if (Ridx[z].mid == k && Ridx[z].a == nu && Ridx[z].b == mu) rpos = int(z);
            if (rpos < 0) continue;
            for (std::size_t z = 0; z < Lidx.size(); ++z) {
                Scalar fz = FRL(Eigen::Index(z), rpos);
                if (fz == Scalar(0)) continue;
                int u = Lidx[z].mid, sg = Lidx[z].a, rho = Lidx[z].b;
                // inner split of hom(u, A.Bp) at (j, kpp, p, qpp, sg)
                auto srcp = enum_split(C, A, Bp, u);
                int sp = split_pos(srcp, j, kpp, src[s].p, qpp, sg);
                if (sp < 0) continue;
                for (int r = 0; r < Sp[u].rows(); ++r) {
                    Scalar base = Sp[u](r, sp);
                    if (base == Scalar(0)) continue;
                    TreePath full = tree_basis(C, ABp, u).paths[std::size_t(r)];
                    full.mids.push_back(c);
                    full.mus.push_back(rho);
                    int t = path_index(C, AB, c, full);
                    if (t >= 0) S(t, s) += fz * base;
                }
            }
        }
        out[c] = std::move(S);
    }
    return out;
}

}  // namespace

const Mat& split_transform(const CategoryData& C, const Word& A, const Word& B, int c) {
    return split_all(C, A, B)[std::size_t(c)];
}

const Mat& split_transform_inv(const CategoryData& C, const Word& A, const Word& B, int c) {
    EngineCache& cache = cache_of(C);
    std::string key = word_key(A) + "|" + word_key(B);
    auto it = cache.split_inv.find(key);
    if (it == cache.split_inv.end()) {
        const std::vector<Mat>& S = split_all(C, A, B);
        std::vector<Mat> inv(S.size());
        for (std::size_t c2 = 0; c2 < S.size(); ++c2)
            inv[c2] = S[c2].rows() ? Mat(S[c2].inverse()) : S[c2];
        it = cache.split_inv.emplace(key, std::move(inv)).first;
    }
    return it->second[std::size_t(c)];
}

}  // namespace sewnet
