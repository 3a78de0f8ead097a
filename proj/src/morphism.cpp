#include "sewnet/morphism.hpp"

#include <map>

namespace sewnet {

Morphism::Morphism(const CategoryData& cat, SumObj target, SumObj source)
    : C(&cat), src(std::move(source)), tgt(std::move(target)) {
    blk.resize(std::size_t(cat.num_labels));
    for (int c = 0; c < cat.num_labels; ++c)
        blk[std::size_t(c)] = zeros(obj_dim(cat, tgt, c), obj_dim(cat, src, c));
}

Morphism id_mor(const CategoryData& C, const SumObj& A) {
    Morphism f(C, A, A);
    for (int c = 0; c < C.num_labels; ++c)
        f.block(c) = Mat::Identity(f.block(c).rows(), f.block(c).cols());
    return f;
}

Morphism zero_mor(const CategoryData& C, const SumObj& tgt, const SumObj& src) {
    return Morphism(C, tgt, src);
}

Morphism compose(const Morphism& f, const Morphism& g) {
    if (f.C != g.C) throw ShapeMismatch("compose across categories");
    if (!(f.src == g.tgt)) throw ShapeMismatch("compose: source/target mismatch");
    Morphism h(*f.C, f.tgt, g.src);
    for (int c = 0; c < f.C->num_labels; ++c) h.block(c) = f.block(c) * g.block(c);
    return h;
}

static void require_same_shape(const Morphism& f, const Morphism& g) {
    if (f.C != g.C || !(f.src == g.src) || !(f.tgt == g.tgt))
        throw ShapeMismatch("morphism shape mismatch");
}

Morphism add(const Morphism& f, const Morphism& g) {
    require_same_shape(f, g);
    Morphism h = f;
    for (int c = 0; c < f.C->num_labels; ++c) h.block(c) += g.block(c);
    return h;
}

Morphism sub(const Morphism& f, const Morphism& g) {
    require_same_shape(f, g);
    Morphism h = f;
    for (int c = 0; c < f.C->num_labels; ++c) h.block(c) -= g.block(c);
    return h;
}

Morphism scale(Scalar z, const Morphism& f) {
    Morphism h = f;
    for (int c = 0; c < f.C->num_labels; ++c) h.block(c) *= z;
    return h;
}

Morphism submorphism(const Morphism& f, int t_tgt, int s_src) {
    const CategoryData& C = *f.C;
    Morphism g(C, SumObj::word(f.tgt.summands[std::size_t(t_tgt)]),
               SumObj::word(f.src.summands[std::size_t(s_src)]));
    for (int c = 0; c < C.num_labels; ++c) {
        int ro = summand_offset(C, f.tgt, c, t_tgt);
        int co = summand_offset(C, f.src, c, s_src);
        g.block(c) = f.block(c).block(ro, co, g.block(c).rows(), g.block(c).cols());
    }
    return g;
}

void place_submorphism(Morphism& f, int t_tgt, int s_src, const Morphism& g) {
    const CategoryData& C = *f.C;
    for (int c = 0; c < C.num_labels; ++c) {
        int ro = summand_offset(C, f.tgt, c, t_tgt);
        int co = summand_offset(C, f.src, c, s_src);
        f.block(c).block(ro, co, g.block(c).rows(), g.block(c).cols()) += g.block(c);
    }
}

namespace {

// tensor product of morphisms between single words
Morphism word_tensor(const Morphism& f, const Morphism& g) {
    const CategoryData& C = *f.C;
    const Word &As = f.src.summands[0], &At = f.tgt.summands[0];
    const Word &Bs = g.src.summands[0], &Bt = g.tgt.summands[0];
    Word st = As, tt = At;
    st.insert(st.end(), Bs.begin(), Bs.end());
    tt.insert(tt.end(), Bt.begin(), Bt.end());
    Morphism h(C, SumObj::word(tt), SumObj::word(st));
    for (int c = 0; c < C.num_labels; ++c) {
        auto es = enum_split(C, As, Bs, c);
        auto et = enum_split(C, At, Bt, c);
        Mat mid = zeros(Eigen::Index(et.size()), Eigen::Index(es.size()));
        for (std::size_t s = 0; s < es.size(); ++s)
            for (std::size_t t = 0; t < et.size(); ++t) {
                if (es[s].j != et[t].j || es[s].k != et[t].k || es[s].mu != et[t].mu)
                    continue;
                mid(Eigen::Index(t), Eigen::Index(s)) =
                    f.block(es[s].j)(et[t].p, es[s].p) *
                    g.block(es[s].k)(et[t].q, es[s].q);
            }
        h.block(c) = split_transform(C, At, Bt, c) * mid *
                     split_transform_inv(C, As, Bs, c);
    }
    return h;
}

}  // namespace

Morphism tensor_mor(const Morphism& f, const Morphism& g) {
    if (f.C != g.C) throw ShapeMismatch("tensor across categories");
    const CategoryData& C = *f.C;
    SumObj src = tensor_obj(f.src, g.src), tgt = tensor_obj(f.tgt, g.tgt);
    int nsB = int(g.src.summands.size()), ntB = int(g.tgt.summands.size());
    Morphism h(C, tgt, src);
    for (std::size_t sa = 0; sa < f.src.summands.size(); ++sa)
        for (std::size_t sb = 0; sb < g.src.summands.size(); ++sb)
            for (std::size_t ta = 0; ta < f.tgt.summands.size(); ++ta)
                for (std::size_t tb = 0; tb < g.tgt.summands.size(); ++tb) {
                    Morphism wf = submorphism(f, int(ta), int(sa));
                    Morphism wg = submorphism(g, int(tb), int(sb));
                    Morphism wt = word_tensor(wf, wg);
                    place_submorphism(h, int(ta) * ntB + int(tb),
                                      int(sa) * nsB + int(sb), wt);
                }
    return h;
}

Morphism braid_adjacent(const CategoryData& C, const Word& w, int pos, bool over) {
    int n = int(w.size());
    if (pos < 1 || pos >= n) throw ShapeMismatch("braid position out of range");
    Word wt = w;
    std::swap(wt[std::size_t(pos - 1)], wt[std::size_t(pos)]);
    Morphism h(C, SumObj::word(wt), SumObj::word(w));
    auto rmat = [&](int i, int j, int k) {
        return over ? C.rmat_over(i, j, k) : C.rmat_under(i, j, k);
    };
    for (int c = 0; c < C.num_labels; ++c) {
        auto& bs = tree_basis(C, w, c);
        if (pos == 1) {
            for (std::size_t s = 0; s < bs.paths.size(); ++s) {
                const TreePath& p = bs.paths[s];
                int x = w[0], y = w[1];
                if (n == 1) throw ShapeMismatch("braid needs two letters");
                int u2 = p.mids[1];
                Mat rm = rmat(x, y, u2);
                for (int ap = 0; ap < rm.rows(); ++ap) {
                    Scalar z = rm(ap, p.mus[0]);
                    if (z == Scalar(0)) continue;
                    TreePath q = p;
                    q.mids[0] = y;
                    q.mus[0] = ap;
                    int t = path_index(C, wt, c, q);
                    if (t >= 0) h.block(c)(t, Eigen::Index(s)) += z;
                }
            }
            continue;
        }
        int x = w[std::size_t(pos - 1)], y = w[std::size_t(pos)];
        // local three-letter reassociate/braid/reassociate maps keyed by the
        // surrounding channels (u_{p-1}, u_{p+1})
        std::map<std::pair<int, int>, Mat> local;
        for (std::size_t s = 0; s < bs.paths.size(); ++s) {
            const TreePath& p = bs.paths[s];
            int um = p.mids[std::size_t(pos - 2)];
            int up = p.mids[std::size_t(pos - 1)];
            int uq = p.mids[std::size_t(pos)];
            auto key = std::make_pair(um, uq);
            auto it = local.find(key);
            if (it == local.end()) {
                auto Ridx = C.enum_mid_right(um, x, y, uq);
                auto Rtgt = C.enum_mid_right(um, y, x, uq);
                Mat rb = zeros(Eigen::Index(Rtgt.size()), Eigen::Index(Ridx.size()));
                for (std::size_t a = 0; a < Ridx.size(); ++a) {
                    Mat rm = rmat(x, y, Ridx[a].mid);
                    for (int gp = 0; gp < rm.rows(); ++gp) {
                        Scalar z = rm(gp, Ridx[a].a);
                        if (z == Scalar(0)) continue;
                        for (std::size_t b = 0; b < Rtgt.size(); ++b)
                            if (Rtgt[b].mid == Ridx[a].mid && Rtgt[b].a == gp &&
                                Rtgt[b].b == Ridx[a].b)
                                rb(Eigen::Index(b), Eigen::Index(a)) += z;
                    }
                }
                Mat L = C.fmat_RL(um, y, x, uq) * rb * C.fmat_LR(um, x, y, uq);
                it = local.emplace(key, std::move(L)).first;
            }
            const Mat& L = it->second;
            auto Lsrc = C.enum_mid_left(um, x, y, uq);
            auto Ltgt = C.enum_mid_left(um, y, x, uq);
            int spos = -1;
            for (std::size_t z2 = 0; z2 < Lsrc.size(); ++z2)
                if (Lsrc[z2].mid == up && Lsrc[z2].a == p.mus[std::size_t(pos - 2)] &&
                    Lsrc[z2].b == p.mus[std::size_t(pos - 1)])
                    spos = int(z2);
            for (std::size_t z2 = 0; z2 < Ltgt.size(); ++z2) {
                Scalar coeff = L(Eigen::Index(z2), spos);
                if (coeff == Scalar(0)) continue;
                TreePath q = p;
                q.mids[std::size_t(pos - 1)] = Ltgt[z2].mid;
                q.mus[std::size_t(pos - 2)] = Ltgt[z2].a;
                q.mus[std::size_t(pos - 1)] = Ltgt[z2].b;
                int t = path_index(C, wt, c, q);
                if (t >= 0) h.block(c)(t, Eigen::Index(s)) += coeff;
            }
        }
    }
    return h;
}

namespace {

// braid of whole words by a sequence of adjacent transpositions; the word
// with m letters crosses over (or under) the next n letters
Morphism word_braid(const CategoryData& C, const Word& wa, const Word& wb, bool over) {
    Word cur = wa;
    cur.insert(cur.end(), wb.begin(), wb.end());
    int m = int(wa.size()), n = int(wb.size());
    Morphism acc = id_mor(C, SumObj::word(cur));
    for (int i = m; i >= 1; --i)
        for (int j = 0; j < n; ++j) {
            int p = i + j;
            Morphism step = braid_adjacent(C, cur, p, over);
            std::swap(cur[std::size_t(p - 1)], cur[std::size_t(p)]);
            acc = compose(step, acc);
        }
    return acc;
}

}  // namespace

Morphism braid_mor(const CategoryData& C, const SumObj& A, const SumObj& B, bool over) {
    SumObj src = tensor_obj(A, B), tgt = tensor_obj(B, A);
    Morphism h(C, tgt, src);
    int nB = int(B.summands.size()), nA = int(A.summands.size());
    for (int s = 0; s < nA; ++s)
        for (int t = 0; t < nB; ++t) {
            Morphism wb = word_braid(C, A.summands[std::size_t(s)],
                                     B.summands[std::size_t(t)], over);
            place_submorphism(h, t * nA + s, s * nB + t, wb);
        }
    return h;
}

namespace {

Morphism word_id(const CategoryData& C, const Word& w) {
    return id_mor(C, SumObj::word(w));
}

Morphism word_ev(const CategoryData& C, const Word& w);

Morphism letter_ev(const CategoryData& C, int a) {
    Morphism h(C, SumObj::unit(), SumObj::word(Word{C.dual[a], a}));
    h.block(0)(0, 0) = C.cap_ev[std::size_t(a)];
    return h;
}

Morphism word_ev(const CategoryData& C, const Word& w) {
    if (w.empty()) return id_mor(C, SumObj::unit());
    if (w.size() == 1) return letter_ev(C, w[0]);
    int a = w.back();
    Word wp(w.begin(), w.end() - 1);
    Morphism inner = tensor_mor(
        tensor_mor(word_id(C, Word{C.dual[a]}), word_ev(C, wp)),
        word_id(C, Word{a}));
    return compose(letter_ev(C, a), inner);
}

Morphism word_coev(const CategoryData& C, const Word& w);

Morphism letter_coev(const CategoryData& C, int a) {
    Morphism h(C, SumObj::word(Word{a, C.dual[a]}), SumObj::unit());
    h.block(0)(0, 0) = 1;
    return h;
}

Morphism word_coev(const CategoryData& C, const Word& w) {
    if (w.empty()) return id_mor(C, SumObj::unit());
    if (w.size() == 1) return letter_coev(C, w[0]);
    int a = w.back();
    Word wp(w.begin(), w.end() - 1);
    Morphism inner = tensor_mor(
        tensor_mor(word_id(C, wp), letter_coev(C, a)),
        word_id(C, dual_word(C, wp)));
    return compose(inner, word_coev(C, wp));
}

Morphism letter_evt(const CategoryData& C, int a) {
    Morphism h(C, SumObj::unit(), SumObj::word(Word{a, C.dual[a]}));
    h.block(0)(0, 0) = C.cap_evt[std::size_t(a)];
    return h;
}

Morphism word_evt(const CategoryData& C, const Word& w) {
    if (w.empty()) return id_mor(C, SumObj::unit());
    if (w.size() == 1) return letter_evt(C, w[0]);
    int a = w.back();
    Word wp(w.begin(), w.end() - 1);
    Morphism inner = tensor_mor(
        tensor_mor(word_id(C, wp), letter_evt(C, a)),
        word_id(C, dual_word(C, wp)));
    return compose(word_evt(C, wp), inner);
}

Morphism letter_coevt(const CategoryData& C, int a) {
    Morphism h(C, SumObj::word(Word{C.dual[a], a}), SumObj::unit());
    h.block(0)(0, 0) = C.pivotal[std::size_t(a)];
    return h;
}

Morphism word_coevt(const CategoryData& C, const Word& w) {
    if (w.empty()) return id_mor(C, SumObj::unit());
    if (w.size() == 1) return letter_coevt(C, w[0]);
    int a = w.back();
    Word wp(w.begin(), w.end() - 1);
    Morphism inner = tensor_mor(
        tensor_mor(word_id(C, Word{C.dual[a]}), word_coevt(C, wp)),
        word_id(C, Word{a}));
    return compose(inner, letter_coevt(C, a));
}

Morphism sum_cap(const CategoryData& C, const SumObj& A,
                 Morphism (*wordfn)(const CategoryData&, const Word&), bool dual_left) {
    // dual_left: source pairs are (dual, A); otherwise (A, dual)
    SumObj D = dual_obj(C, A);
    SumObj src = dual_left ? tensor_obj(D, A) : tensor_obj(A, D);
    Morphism h(C, SumObj::unit(), src);
    int n = int(A.summands.size());
    for (int s = 0; s < n; ++s) {
        Morphism w = wordfn(C, A.summands[std::size_t(s)]);
        place_submorphism(h, 0, s * n + s, w);
    }
    return h;
}

Morphism sum_cup(const CategoryData& C, const SumObj& A,
                 Morphism (*wordfn)(const CategoryData&, const Word&), bool dual_left) {
    SumObj D = dual_obj(C, A);
    SumObj tgt = dual_left ? tensor_obj(D, A) : tensor_obj(A, D);
    Morphism h(C, tgt, SumObj::unit());
    int n = int(A.summands.size());
    for (int s = 0; s < n; ++s) {
        Morphism w = wordfn(C, A.summands[std::size_t(s)]);
        place_submorphism(h, s * n + s, 0, w);
    }
    return h;
}

}  // namespace

Morphism ev_mor(const CategoryData& C, const SumObj& A) {
    return sum_cap(C, A, &word_ev, true);
}

Morphism coev_mor(const CategoryData& C, const SumObj& A) {
    return sum_cup(C, A, &word_coev, false);
}

Morphism evt_mor(const CategoryData& C, const SumObj& A) {
    return sum_cap(C, A, &word_evt, false);
}

Morphism coevt_mor(const CategoryData& C, const SumObj& A) {
    return sum_cup(C, A, &word_coevt, true);
}

Morphism twist_mor(const CategoryData& C, const SumObj& A, bool inverse) {
    Morphism h = id_mor(C, A);
    for (int c = 0; c < C.num_labels; ++c) {
        Scalar th = C.twist[std::size_t(c)];
        h.block(c) *= inverse ? Scalar(1) / th : th;
    }
    return h;
}

Scalar qtrace(const Morphism& f) {
    if (!(f.src == f.tgt)) throw ShapeMismatch("qtrace of a non-endomorphism");
    Scalar s = 0;
    for (int c = 0; c < f.C->num_labels; ++c)
        s += f.C->qdim[std::size_t(c)] * f.block(c).trace();
    return s;
}

Real mor_norm(const Morphism& f) {
    Real best = 0;
    for (auto& m : f.blk) best = std::max(best, max_abs(m));
    return best;
}

Real mor_dist(const Morphism& f, const Morphism& g) {
    require_same_shape(f, g);
    Real best = 0;
    for (int c = 0; c < f.C->num_labels; ++c)
        best = std::max(best, max_abs(Mat(f.block(c) - g.block(c))));
    return best;
}

bool approx_eq(const Morphism& f, const Morphism& g, Real tol) {
    return mor_dist(f, g) <= tol;
}

std::vector<Morphism> hom_from_simple(const CategoryData& C, int c, const SumObj& A) {
    std::vector<Morphism> out;
    int d = obj_dim(C, A, c);
    for (int p = 0; p < d; ++p) {
        Morphism f(C, A, SumObj::simple(c));
        f.block(c)(p, 0) = 1;
        out.push_back(std::move(f));
    }
    return out;
}

Morphism coordinate_functional(const CategoryData& C, int c, const SumObj& A, int p) {
    Morphism f(C, SumObj::simple(c), A);
    f.block(c)(0, p) = 1;
    return f;
}

std::vector<Morphism> hom_basis(const CategoryData& C, const SumObj& src,
                                const SumObj& tgt) {
    std::vector<Morphism> out;
    for (int c = 0; c < C.num_labels; ++c) {
        int dc = obj_dim(C, src, c), dr = obj_dim(C, tgt, c);
        for (int q = 0; q < dc; ++q)
            for (int p = 0; p < dr; ++p) {
                Morphism f(C, tgt, src);
                f.block(c)(p, q) = 1;
                out.push_back(std::move(f));
            }
    }
    return out;
}

Morphism random_morphism(const CategoryData& C, const SumObj& tgt,
                         const SumObj& src, Rng& rng) {
    Morphism f(C, tgt, src);
    for (int c = 0; c < C.num_labels; ++c)
        for (Eigen::Index j = 0; j < f.block(c).cols(); ++j)
            for (Eigen::Index i = 0; i < f.block(c).rows(); ++i)
                f.block(c)(i, j) = rng.gaussian();
    return f;
}

Mat smatrix(const CategoryData& C) {
    Mat s = zeros(C.num_labels, C.num_labels);
    for (int i = 0; i < C.num_labels; ++i)
        for (int j = 0; j < C.num_labels; ++j) {
            Word w{i, j};
            Word wswap{j, i};
            Morphism m1 = braid_adjacent(C, w, 1, true);
            Morphism m2 = braid_adjacent(C, wswap, 1, true);
            s(i, j) = qtrace(compose(m2, m1));
        }
    return s;
}

}  // namespace sewnet
