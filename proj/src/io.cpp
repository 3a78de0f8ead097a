#include "sewnet/io.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace sewnet {

namespace {

// Lexical layer shared by the three formats: comment stripping, section
// headers, tokenized records with line numbers kept for error messages.

struct Record {
    int line = 0;
    std::vector<std::string> tok;
};

struct Section {
    std::string name;
    int line = 0;
    std::vector<Record> rec;
};

struct Doc {
    std::string path;
    std::vector<Record> head;  // records before the first section
    std::vector<Section> sec;

    const Section* find(const std::string& name) const {
        for (const auto& s : sec)
            if (s.name == name) return &s;
        return nullptr;
    }
    const Section& need(const std::string& name) const {
        const Section* s = find(name);
        if (s == nullptr)
            throw ParseError(path + ": missing section [" + name + "]");
        return *s;
    }
};

[[noreturn]] void fail(const Doc& d, int line, const std::string& msg) {
    throw ParseError(d.path + ":" + std::to_string(line) + ": " + msg);
}

Doc read_doc(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    Doc d;
    d.path = path;
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        auto lb = raw.find_first_not_of(" \t\r");
        if (lb == std::string::npos) continue;
        if (raw[lb] == '[') {
            auto rb = raw.find(']', lb);
            if (rb == std::string::npos)
                throw ParseError(path + ":" + std::to_string(lineno) +
                                 ": unterminated section header");
            if (raw.find_first_not_of(" \t\r", rb + 1) != std::string::npos)
                throw ParseError(path + ":" + std::to_string(lineno) +
                                 ": trailing text after section header");
            d.sec.push_back({raw.substr(lb + 1, rb - lb - 1), lineno, {}});
            continue;
        }
        Record r;
        r.line = lineno;
        std::istringstream ss(raw);
        std::string t;
        while (ss >> t) r.tok.push_back(t);
        if (d.sec.empty())
            d.head.push_back(std::move(r));
        else
            d.sec.back().rec.push_back(std::move(r));
    }
    return d;
}

long field_int(const Doc& d, const Record& r, std::size_t k) {
    if (k >= r.tok.size()) fail(d, r.line, "missing field");
    const std::string& s = r.tok[k];
    char* end = nullptr;
    long v = std::strtol(s.c_str(), &end, 10);
    if (end == s.c_str() || *end != '\0')
        fail(d, r.line, "bad integer '" + s + "'");
    return v;
}

Real field_real(const Doc& d, const Record& r, std::size_t k) {
    if (k >= r.tok.size()) fail(d, r.line, "missing field");
    const std::string& s = r.tok[k];
    char* end = nullptr;
    Real v = std::strtold(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0')
        fail(d, r.line, "bad number '" + s + "'");
    return v;
}

Scalar field_scalar(const Doc& d, const Record& r, std::size_t k) {
    return {field_real(d, r, k), field_real(d, r, k + 1)};
}

void expect_fields(const Doc& d, const Record& r, std::size_t n,
                   const char* what) {
    if (r.tok.size() != n)
        fail(d, r.line, std::string("expected '") + what + "'");
}

const Record* head_record(const Doc& d, const std::string& key) {
    for (const auto& r : d.head)
        if (!r.tok.empty() && r.tok[0] == key) return &r;
    return nullptr;
}

void check_format(const Doc& d, const std::string& kind) {
    const Record* r = head_record(d, "format");
    if (r == nullptr)
        throw ParseError(d.path + ": missing 'format " + kind + " 1' line");
    if (r->tok.size() != 3 || r->tok[1] != kind || r->tok[2] != "1")
        fail(d, r->line, "expected 'format " + kind + " 1'");
}

void check_labels_stamp(const Doc& d, const CategoryData& C) {
    const Record* r = head_record(d, "labels");
    if (r == nullptr) throw ParseError(d.path + ": missing 'labels N' line");
    long n = field_int(d, *r, 1);
    if (n != C.num_labels)
        fail(d, r->line,
             "file is for " + std::to_string(n) + " labels, category has " +
                 std::to_string(C.num_labels));
}

void check_sections(const Doc& d, const std::set<std::string>& allowed) {
    for (const auto& s : d.sec)
        if (allowed.count(s.name) == 0)
            fail(d, s.line, "unknown section [" + s.name + "]");
}

// ---- value formatting ----

std::string fmt_real(Real x) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.21Lg", x);
    return buf;
}

std::string fmt_scalar(Scalar z) {
    return fmt_real(z.real()) + " " + fmt_real(z.imag());
}

// ---- carriers ----

void write_carrier(std::ostream& os, const SumObj& A) {
    for (const auto& w : A.summands) {
        os << "w";
        for (int a : w) os << ' ' << a;
        os << '\n';
    }
}

void write_zcarrier(std::ostream& os, const CenterObj& X) {
    for (const auto& w : X.summands) {
        os << "z";
        for (const auto& l : w)
            os << ' ' << l.label << (l.tag == Tag::Over ? '+' : '-');
        os << '\n';
    }
}

SumObj read_carrier(const Doc& d, const Section& s, int nl) {
    SumObj A;
    A.summands.clear();
    for (const auto& r : s.rec) {
        if (r.tok[0] != "w")
            fail(d, r.line, "carrier record must start with 'w'");
        Word w;
        for (std::size_t k = 1; k < r.tok.size(); ++k) {
            long a = field_int(d, r, k);
            if (a < 0 || a >= nl) fail(d, r.line, "label out of range");
            w.push_back(int(a));
        }
        A.summands.push_back(std::move(w));
    }
    if (A.summands.empty()) fail(d, s.line, "carrier has no summands");
    return A;
}

CenterObj read_zcarrier(const Doc& d, const Section& s, int nl) {
    CenterObj X;
    for (const auto& r : s.rec) {
        if (r.tok[0] != "z")
            fail(d, r.line, "center carrier record must start with 'z'");
        TWord w;
        for (std::size_t k = 1; k < r.tok.size(); ++k) {
            const std::string& t = r.tok[k];
            char suf = t.empty() ? '\0' : t.back();
            if (suf != '+' && suf != '-')
                fail(d, r.line, "tagged letter must end in '+' or '-'");
            std::string num = t.substr(0, t.size() - 1);
            char* end = nullptr;
            long a = std::strtol(num.c_str(), &end, 10);
            if (num.empty() || end == num.c_str() || *end != '\0')
                fail(d, r.line, "bad tagged letter '" + t + "'");
            if (a < 0 || a >= nl) fail(d, r.line, "label out of range");
            w.push_back({int(a), suf == '+' ? Tag::Over : Tag::Under});
        }
        X.summands.push_back(std::move(w));
    }
    if (X.summands.empty()) fail(d, s.line, "carrier has no summands");
    return X;
}

// ---- morphism blocks ----

void write_mor(std::ostream& os, const std::string& name, const Morphism& f) {
    os << "[mor " << name << "]\n";
    for (std::size_t c = 0; c < f.blk.size(); ++c) {
        const Mat& B = f.blk[c];
        for (int r = 0; r < B.rows(); ++r)
            for (int k = 0; k < B.cols(); ++k)
                if (std::abs(B(r, k)) != Real(0))
                    os << c << ' ' << r << ' ' << k << ' '
                       << fmt_scalar(B(r, k)) << '\n';
    }
}

void read_mor_into(const Doc& d, const Section& s, Morphism& f) {
    for (const auto& r : s.rec) {
        expect_fields(d, r, 5, "channel row col re im");
        long c = field_int(d, r, 0);
        long row = field_int(d, r, 1);
        long col = field_int(d, r, 2);
        if (c < 0 || c >= long(f.blk.size()))
            fail(d, r.line, "channel out of range");
        Mat& B = f.blk[std::size_t(c)];
        if (row < 0 || row >= B.rows() || col < 0 || col >= B.cols())
            fail(d, r.line, "block entry out of range");
        B(row, col) = field_scalar(d, r, 3);
    }
}

void read_flags(const Doc& d, const Section& s, FrobeniusAlgebra& A) {
    for (const auto& r : s.rec) {
        expect_fields(d, r, 2, "flag 0|1");
        long v = field_int(d, r, 1);
        if (v != 0 && v != 1) fail(d, r.line, "flag must be 0 or 1");
        if (r.tok[0] == "symmetric")
            A.symmetric_flag = (v == 1);
        else if (r.tok[0] == "commutative")
            A.commutative_flag = (v == 1);
        else
            fail(d, r.line, "unknown flag '" + r.tok[0] + "'");
    }
}

void write_flags(std::ostream& os, const FrobeniusAlgebra& A) {
    os << "symmetric " << (A.symmetric_flag ? 1 : 0) << '\n'
       << "commutative " << (A.commutative_flag ? 1 : 0) << '\n';
}

// Frobenius structure shapes are implied by the carrier.
void frobenius_shell(const CategoryData& C, FrobeniusAlgebra& A) {
    SumObj GG = tensor_obj(A.carrier, A.carrier);
    SumObj one = SumObj::unit();
    A.m = zero_mor(C, A.carrier, GG);
    A.eta = zero_mor(C, A.carrier, one);
    A.Delta = zero_mor(C, GG, A.carrier);
    A.eps = zero_mor(C, one, A.carrier);
}

void read_frobenius_mors(const Doc& d, const std::string& prefix,
                         FrobeniusAlgebra& A) {
    read_mor_into(d, d.need("mor " + prefix + "m"), A.m);
    read_mor_into(d, d.need("mor " + prefix + "eta"), A.eta);
    read_mor_into(d, d.need("mor " + prefix + "Delta"), A.Delta);
    read_mor_into(d, d.need("mor " + prefix + "eps"), A.eps);
}

void write_frobenius_mors(std::ostream& os, const std::string& prefix,
                          const FrobeniusAlgebra& A) {
    write_mor(os, prefix + "m", A.m);
    write_mor(os, prefix + "eta", A.eta);
    write_mor(os, prefix + "Delta", A.Delta);
    write_mor(os, prefix + "eps", A.eps);
}

std::ofstream open_out(const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot write " + path);
    return os;
}

std::string head_kind(const Doc& d) {
    const Record* r = head_record(d, "kind");
    if (r == nullptr) throw ParseError(d.path + ": missing 'kind' line");
    if (r->tok.size() != 2) fail(d, r->line, "expected 'kind NAME'");
    return r->tok[1];
}

void check_head(const Doc& d, const std::set<std::string>& allowed) {
    for (const auto& r : d.head)
        if (allowed.count(r.tok[0]) == 0) fail(d, r.line, "unexpected line");
}

}  // namespace

// ---- category files ----

void save_category(const CategoryData& C, const std::string& path) {
    std::ofstream os = open_out(path);
    int nl = C.num_labels;
    os << "# category data: labels (unit first), duals, fusion "
          "multiplicities,\n"
       << "# then sparse F and R tables and the pivotal normalization.\n"
       << "format category 1\n\n";

    os << "[labels]\n";
    for (int i = 0; i < nl; ++i) {
        std::string n = i < int(C.names.size()) ? C.names[i] : "";
        bool safe = !n.empty();
        for (char ch : n)
            if (ch == '#' || ch == '[' || std::isspace((unsigned char)ch))
                safe = false;
        os << (i ? " " : "") << (safe ? n : std::to_string(i));
    }
    os << "\n\n[duals]\n";
    for (int i = 0; i < nl; ++i) os << (i ? " " : "") << C.dual[i];

    os << "\n\n[fusion]\n";
    for (int i = 0; i < nl; ++i)
        for (int j = 0; j < nl; ++j)
            for (int k = 0; k < nl; ++k)
                if (C.nfus(i, j, k) > 0)
                    os << i << ' ' << j << ' ' << k << ' ' << C.nfus(i, j, k)
                       << '\n';

    os << "\n[F]\n";
    for (int i = 0; i < nl; ++i)
        for (int j = 0; j < nl; ++j)
            for (int k = 0; k < nl; ++k)
                for (int l = 0; l < nl; ++l)
                    for (int m = 0; m < nl; ++m) {
                        if (C.nfus(i, j, m) == 0 || C.nfus(m, k, l) == 0)
                            continue;
                        for (int n = 0; n < nl; ++n) {
                            if (C.nfus(j, k, n) == 0 || C.nfus(i, n, l) == 0)
                                continue;
                            for (int a = 0; a < C.nfus(i, j, m); ++a)
                                for (int b = 0; b < C.nfus(m, k, l); ++b)
                                    for (int c = 0; c < C.nfus(j, k, n); ++c)
                                        for (int e = 0; e < C.nfus(i, n, l);
                                             ++e) {
                                            Scalar v = C.fsym(i, j, k, l, m, a,
                                                              b, n, c, e);
                                            if (std::abs(v) == Real(0))
                                                continue;
                                            os << i << ' ' << j << ' ' << k
                                               << ' ' << l << ' ' << m << ' '
                                               << a << ' ' << b << ' ' << n
                                               << ' ' << c << ' ' << e << ' '
                                               << fmt_scalar(v) << '\n';
                                        }
                        }
                    }

    os << "\n[R]\n";
    for (int i = 0; i < nl; ++i)
        for (int j = 0; j < nl; ++j)
            for (int k = 0; k < nl; ++k)
                for (int a = 0; a < C.nfus(i, j, k); ++a)
                    for (int b = 0; b < C.nfus(j, i, k); ++b) {
                        Scalar v = C.rsym(i, j, k, a, b);
                        if (std::abs(v) == Real(0)) continue;
                        os << i << ' ' << j << ' ' << k << ' ' << a << ' ' << b
                           << ' ' << fmt_scalar(v) << '\n';
                    }

    os << "\n[pivotal]\n";
    for (int i = 0; i < nl; ++i)
        os << i << ' '
           << fmt_scalar(i < int(C.pivotal.size()) ? C.pivotal[i] : Scalar(1))
           << '\n';
}

CategoryData load_category(const std::string& path) {
    Doc d = read_doc(path);
    check_format(d, "category");
    check_head(d, {"format"});
    check_sections(d, {"labels", "duals", "fusion", "F", "R", "pivotal"});

    CategoryData C;
    const Section& lab = d.need("labels");
    for (const auto& r : lab.rec)
        for (const auto& t : r.tok) C.names.push_back(t);
    if (C.names.empty()) fail(d, lab.line, "no labels");
    int nl = int(C.names.size());
    C.num_labels = nl;

    const Section& du = d.need("duals");
    for (const auto& r : du.rec)
        for (std::size_t k = 0; k < r.tok.size(); ++k) {
            long v = field_int(d, r, k);
            if (v < 0 || v >= nl) fail(d, r.line, "dual label out of range");
            C.dual.push_back(int(v));
        }
    if (int(C.dual.size()) != nl) fail(d, du.line, "dual table size mismatch");

    C.N.assign(std::size_t(nl) * nl * nl, 0);
    for (const auto& r : d.need("fusion").rec) {
        expect_fields(d, r, 4, "i j k N");
        long i = field_int(d, r, 0), j = field_int(d, r, 1),
             k = field_int(d, r, 2), n = field_int(d, r, 3);
        if (i < 0 || i >= nl || j < 0 || j >= nl || k < 0 || k >= nl)
            fail(d, r.line, "label out of range");
        if (n < 0) fail(d, r.line, "negative multiplicity");
        std::size_t idx = std::size_t((i * nl + j) * nl + k);
        if (C.N[idx] != 0) fail(d, r.line, "duplicate fusion entry");
        C.N[idx] = int(n);
    }

    for (const auto& r : d.need("F").rec) {
        expect_fields(d, r, 12, "i j k l m a b n c d re im");
        long v[10];
        for (int q = 0; q < 10; ++q) v[q] = field_int(d, r, std::size_t(q));
        long i = v[0], j = v[1], k = v[2], l = v[3], m = v[4], a = v[5],
             b = v[6], n = v[7], c = v[8], e = v[9];
        for (long lb : {i, j, k, l, m, n})
            if (lb < 0 || lb >= nl) fail(d, r.line, "label out of range");
        if (a < 0 || a >= C.nfus(int(i), int(j), int(m)) || b < 0 ||
            b >= C.nfus(int(m), int(k), int(l)) || c < 0 ||
            c >= C.nfus(int(j), int(k), int(n)) || e < 0 ||
            e >= C.nfus(int(i), int(n), int(l)))
            fail(d, r.line, "inadmissible F entry");
        auto key = CategoryData::fkey(int(i), int(j), int(k), int(l), int(m),
                                      int(a), int(b), int(n), int(c), int(e));
        if (C.F.count(key) != 0) fail(d, r.line, "duplicate F entry");
        C.F[key] = field_scalar(d, r, 10);
    }

    for (const auto& r : d.need("R").rec) {
        expect_fields(d, r, 7, "i j k a b re im");
        long i = field_int(d, r, 0), j = field_int(d, r, 1),
             k = field_int(d, r, 2), a = field_int(d, r, 3),
             b = field_int(d, r, 4);
        for (long lb : {i, j, k})
            if (lb < 0 || lb >= nl) fail(d, r.line, "label out of range");
        if (a < 0 || a >= C.nfus(int(i), int(j), int(k)) || b < 0 ||
            b >= C.nfus(int(j), int(i), int(k)))
            fail(d, r.line, "inadmissible R entry");
        auto key = CategoryData::rkey(int(i), int(j), int(k), int(a), int(b));
        if (C.R.count(key) != 0) fail(d, r.line, "duplicate R entry");
        C.R[key] = field_scalar(d, r, 5);
    }

    if (const Section* ps = d.find("pivotal")) {
        C.pivotal.assign(std::size_t(nl), Scalar(1));
        for (const auto& r : ps->rec) {
            expect_fields(d, r, 3, "i re im");
            long i = field_int(d, r, 0);
            if (i < 0 || i >= nl) fail(d, r.line, "label out of range");
            C.pivotal[std::size_t(i)] = field_scalar(d, r, 1);
        }
    }

    C.finalize();
    return C;
}

// ---- algebra files ----

void save_frobenius(const FrobeniusAlgebra& A, const std::string& path) {
    std::ofstream os = open_out(path);
    os << "# frobenius algebra: carrier words, flags, sparse structure "
          "blocks\n"
       << "format algebra 1\nkind frobenius\nlabels " << A.C->num_labels
       << "\n\n[carrier]\n";
    write_carrier(os, A.carrier);
    if (A.in_center) {
        os << "\n[zcarrier]\n";
        write_zcarrier(os, A.zcarrier);
    }
    os << "\n[flags]\n";
    write_flags(os, A);
    os << '\n';
    write_frobenius_mors(os, "", A);
}

FrobeniusAlgebra load_frobenius(const CategoryData& C,
                                const std::string& path) {
    Doc d = read_doc(path);
    check_format(d, "algebra");
    check_head(d, {"format", "kind", "labels"});
    check_labels_stamp(d, C);
    if (head_kind(d) != "frobenius")
        throw ParseError(d.path + ": kind is not 'frobenius'");
    check_sections(d, {"carrier", "zcarrier", "flags", "mor m", "mor eta",
                       "mor Delta", "mor eps"});

    FrobeniusAlgebra A;
    A.C = &C;
    A.carrier = read_carrier(d, d.need("carrier"), C.num_labels);
    if (const Section* zs = d.find("zcarrier")) {
        A.in_center = true;
        A.zcarrier = read_zcarrier(d, *zs, C.num_labels);
        if (underlying(A.zcarrier).summands != A.carrier.summands)
            fail(d, zs->line, "zcarrier does not realize the carrier");
    }
    read_flags(d, d.need("flags"), A);
    frobenius_shell(C, A);
    read_frobenius_mors(d, "", A);
    return A;
}

void save_cardy(const CardyAlgebra& Cd, const std::string& path) {
    std::ofstream os = open_out(path);
    os << "# cardy algebra: open and closed carriers, flags, sparse "
          "structure blocks, iota\n"
       << "format algebra 1\nkind cardy\nlabels " << Cd.Hop.C->num_labels
       << "\n\n[open-carrier]\n";
    write_carrier(os, Cd.Hop.carrier);
    os << "\n[closed-carrier]\n";
    write_zcarrier(os, Cd.Hcl.zcarrier);
    os << "\n[open-flags]\n";
    write_flags(os, Cd.Hop);
    os << "\n[closed-flags]\n";
    write_flags(os, Cd.Hcl);
    os << '\n';
    write_frobenius_mors(os, "open-", Cd.Hop);
    write_frobenius_mors(os, "closed-", Cd.Hcl);
    write_mor(os, "iota", Cd.iota);
}

CardyAlgebra load_cardy(const CategoryData& C, const std::string& path) {
    Doc d = read_doc(path);
    check_format(d, "algebra");
    check_head(d, {"format", "kind", "labels"});
    check_labels_stamp(d, C);
    if (head_kind(d) != "cardy")
        throw ParseError(d.path + ": kind is not 'cardy'");
    check_sections(
        d, {"open-carrier", "closed-carrier", "open-flags", "closed-flags",
            "mor open-m", "mor open-eta", "mor open-Delta", "mor open-eps",
            "mor closed-m", "mor closed-eta", "mor closed-Delta",
            "mor closed-eps", "mor iota"});

    CardyAlgebra Cd;
    Cd.Hop.C = &C;
    Cd.Hop.carrier = read_carrier(d, d.need("open-carrier"), C.num_labels);
    read_flags(d, d.need("open-flags"), Cd.Hop);
    frobenius_shell(C, Cd.Hop);
    read_frobenius_mors(d, "open-", Cd.Hop);

    Cd.Hcl.C = &C;
    Cd.Hcl.in_center = true;
    Cd.Hcl.zcarrier = read_zcarrier(d, d.need("closed-carrier"), C.num_labels);
    Cd.Hcl.carrier = underlying(Cd.Hcl.zcarrier);
    read_flags(d, d.need("closed-flags"), Cd.Hcl);
    frobenius_shell(C, Cd.Hcl);
    read_frobenius_mors(d, "closed-", Cd.Hcl);

    SumObj UL = underlying(L_of_obj(C, Cd.Hop.carrier));
    Cd.iota = zero_mor(C, UL, Cd.Hcl.carrier);
    read_mor_into(d, d.need("mor iota"), Cd.iota);
    return Cd;
}

// ---- correlator files ----

void save_correlators(const CorrelatorSet& S, const std::string& path) {
    std::ofstream os = open_out(path);
    os << "# fundamental correlators: carriers, then one sparse block "
          "section per generator\n"
       << "format correlators 1\nlabels " << S.C->num_labels
       << "\n\n[open-carrier]\n";
    write_carrier(os, S.op);
    os << "\n[closed-carrier]\n";
    write_zcarrier(os, S.zcl);
    os << '\n';
    for (int t = 0; t < 12; ++t) {
        GeneratorTag g = GeneratorTag(t);
        write_mor(os, std::string("corr:") + tag_name(g), S.at(g));
    }
}

CorrelatorSet load_correlators(const CategoryData& C,
                               const std::string& path) {
    Doc d = read_doc(path);
    check_format(d, "correlators");
    check_head(d, {"format", "labels"});
    check_labels_stamp(d, C);
    std::set<std::string> allowed = {"open-carrier", "closed-carrier"};
    for (int t = 0; t < 12; ++t)
        allowed.insert(std::string("mor corr:") + tag_name(GeneratorTag(t)));
    check_sections(d, allowed);

    SumObj op = read_carrier(d, d.need("open-carrier"), C.num_labels);
    CenterObj zcl = read_zcarrier(d, d.need("closed-carrier"), C.num_labels);
    CorrelatorSet S = empty_correlators(C, op, zcl);
    for (int t = 0; t < 12; ++t) {
        GeneratorTag g = GeneratorTag(t);
        read_mor_into(d, d.need(std::string("mor corr:") + tag_name(g)),
                      S.corr[g]);
    }
    return S;
}

}  // namespace sewnet
