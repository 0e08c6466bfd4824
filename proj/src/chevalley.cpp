#include "satcr/chevalley.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace satcr::lie {

namespace {

struct Frac {
    long long num = 0, den = 1;
    void reduce() {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(std::abs(num), den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }
    Frac operator+(const Frac& o) const {
        Frac r{num * o.den + o.num * den, den * o.den};
        r.reduce();
        return r;
    }
    Frac operator*(const Frac& o) const {
        Frac r{num * o.num, den * o.den};
        r.reduce();
        return r;
    }
};

RootCoords negate(const RootCoords& c) {
    RootCoords r(c.size());
    for (size_t i = 0; i < c.size(); ++i) r[i] = -c[i];
    return r;
}

RootCoords add(const RootCoords& a, const RootCoords& b) {
    RootCoords r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

bool is_zero(const RootCoords& c) {
    for (int v : c)
        if (v) return false;
    return true;
}

} // namespace

ChevalleyBasis::ChevalleyBasis(const RootSystem& rs) : rs_(rs), P_(rs.num_positive()) {
    build_structure_constants();
}

RootCoords ChevalleyBasis::root_of(int signed_id) const {
    if (signed_id < P_) return rs_.positive_roots[size_t(signed_id)];
    return negate(rs_.positive_roots[size_t(signed_id - P_)]);
}

namespace {
// p in N(a,b) = +-(p+1): number of steps down the alpha-string through beta
int string_down(const RootSystem& rs, const RootCoords& alpha, const RootCoords& beta) {
    int p = 0;
    RootCoords c = beta;
    for (;;) {
        RootCoords next(c.size());
        for (size_t i = 0; i < c.size(); ++i) next[i] = c[i] - alpha[i];
        if (is_zero(next) || !rs.is_root(next)) break;
        c = next;
        ++p;
    }
    return p;
}
} // namespace

void ChevalleyBasis::build_structure_constants() {
    special_.assign(size_t(P_), {});
    // helper: positive-pair N via table, any index order
    auto table_n = [&](int ia, int ib) -> long long {
        if (ia < ib) {
            for (const auto& [b, n] : special_[size_t(ia)])
                if (b == ib) return n;
        } else {
            for (const auto& [b, n] : special_[size_t(ib)])
                if (b == ia) return -n;
        }
        fail(Errc::BadInput, "special pair not yet computed (ordering bug)");
    };

    // general N for signed ids, using only positive pairs of strictly smaller
    // sum height; sum must be a nonzero root
    std::function<long long(int, int)> n_of = [&](int sa, int sb) -> long long {
        RootCoords a = root_of(sa), b = root_of(sb);
        bool a_neg = sa >= P_, b_neg = sb >= P_;
        if (!a_neg && !b_neg) return table_n(sa, sb);
        if (a_neg && b_neg) return -n_of(sa - P_, sb - P_);
        if (a_neg && !b_neg) return -n_of(sb, sa);
        // a positive, b negative: b = -mu
        RootCoords mu = negate(b);
        int hs = RootSystem::height(a) - RootSystem::height(mu);
        if (hs > 0) {
            // a = mu + nu with nu = a - mu positive; triple (a, -mu, -nu):
            // N(a,-mu) = hn(nu)/hn(a) * N(-mu,-nu) = -hn(nu)/hn(a) * N(mu,nu)
            RootCoords nu = add(a, b);
            int imu = *rs_.positive_index(mu), inu = *rs_.positive_index(nu);
            long long n = table_n(imu, inu);
            long long num = -rs_.half_norm(nu) * n;
            long long den = rs_.half_norm(a);
            if (num % den != 0) fail(Errc::BadInput, "non-integral structure constant");
            return num / den;
        }
        // mu = a + nu with nu = mu - a positive; triple (a, -mu, nu):
        // N(a,-mu) = hn(nu)/hn(mu) * N(nu,a)
        RootCoords nu = negate(add(a, b));
        int ia2 = sa, inu = *rs_.positive_index(nu);
        long long n = table_n(inu, ia2);
        long long num = rs_.half_norm(nu) * n;
        long long den = rs_.half_norm(mu);
        if (num % den != 0) fail(Errc::BadInput, "non-integral structure constant");
        return num / den;
    };

    // process sums by increasing height (positive_roots already sorted)
    for (int ig = 0; ig < P_; ++ig) {
        const RootCoords& gamma = rs_.positive_roots[size_t(ig)];
        if (RootSystem::height(gamma) < 2) continue;
        // collect special pairs (ia < ib) with sum gamma
        std::vector<std::pair<int, int>> pairs;
        for (int ia = 0; ia < P_; ++ia) {
            const RootCoords& alpha = rs_.positive_roots[size_t(ia)];
            RootCoords beta(gamma.size());
            bool ok = true;
            for (size_t i = 0; i < gamma.size(); ++i) {
                beta[i] = gamma[i] - alpha[i];
                if (beta[i] < 0) ok = false;
            }
            if (!ok || is_zero(beta)) continue;
            auto ib = rs_.positive_index(beta);
            if (!ib || ia >= *ib) continue;
            pairs.push_back({ia, *ib});
        }
        std::sort(pairs.begin(), pairs.end());
        for (size_t pi = 0; pi < pairs.size(); ++pi) {
            auto [ia, ib] = pairs[pi];
            const RootCoords& alpha = rs_.positive_roots[size_t(ia)];
            const RootCoords& beta = rs_.positive_roots[size_t(ib)];
            long long mag = string_down(rs_, alpha, beta) + 1;
            long long val;
            if (pi == 0) {
                val = mag; // extraspecial pair: positive sign
            } else {
                auto [ia1, ib1] = pairs[0]; // extraspecial for this sum
                const RootCoords& a1 = rs_.positive_roots[size_t(ia1)];
                const RootCoords& b1 = rs_.positive_roots[size_t(ib1)];
                // four-term relation on (a1, b1, -alpha, -beta)
                Frac t2{0, 1}, t3{0, 1};
                RootCoords b1ma = add(b1, negate(alpha));
                if (!is_zero(b1ma) && rs_.is_root(b1ma)) {
                    // N(b1,-alpha) * N(a1,-beta) / hn(b1-alpha)
                    long long n1 = n_of(ib1, P_ + ia);
                    long long n2 = n_of(ia1, P_ + ib);
                    t2 = Frac{n1 * n2, rs_.half_norm(b1ma)};
                    t2.reduce();
                }
                RootCoords a1ma = add(a1, negate(alpha));
                if (!is_zero(a1ma) && rs_.is_root(a1ma)) {
                    // N(-alpha,a1) * N(b1,-beta) / hn(a1-alpha)
                    long long n1 = -n_of(ia1, P_ + ia); // N(-alpha,a1) = -N(a1,-alpha)
                    long long n2 = n_of(ib1, P_ + ib);
                    t3 = Frac{n1 * n2, rs_.half_norm(a1ma)};
                    t3.reduce();
                }
                long long n_extra = table_n(ia1, ib1);
                // N(a1,b1) N(-alpha,-beta)/hn(gamma) + t2 + t3 = 0
                Frac sum = t2 + t3;
                Frac nab{-sum.num * rs_.half_norm(gamma), sum.den * n_extra};
                nab.reduce();
                if (nab.den != 1) fail(Errc::BadInput, "non-integral N from Jacobi relation");
                val = -nab.num; // N(alpha,beta) = -N(-alpha,-beta)
                if (std::abs(val) != mag)
                    fail(Errc::BadInput, "structure constant magnitude mismatch");
            }
            special_[size_t(ia)].push_back({ib, val});
        }
    }

    // freeze a lookup-capable closure for structure_constant()
    // (special_ now complete; nothing else to do)
}

long long ChevalleyBasis::special_lookup(int ia, int ib) const {
    if (ia < ib) {
        for (const auto& [b, n] : special_[size_t(ia)])
            if (b == ib) return n;
    } else {
        for (const auto& [b, n] : special_[size_t(ib)])
            if (b == ia) return -n;
    }
    fail(Errc::BadInput, "not a special pair");
}

long long ChevalleyBasis::structure_constant(int sa, int sb) const {
    RootCoords a = root_of(sa), b = root_of(sb);
    RootCoords s = add(a, b);
    if (is_zero(s) || !rs_.is_root(s)) fail(Errc::BadInput, "sum is not a root");
    bool a_neg = sa >= P_, b_neg = sb >= P_;
    if (!a_neg && !b_neg) return special_lookup(sa, sb);
    if (a_neg && b_neg) return -structure_constant(sa - P_, sb - P_);
    if (a_neg && !b_neg) return -structure_constant(sb, sa);
    RootCoords mu = negate(b);
    int hs = RootSystem::height(s);
    if (hs > 0) {
        RootCoords nu = s;
        int imu = *rs_.positive_index(mu), inu = *rs_.positive_index(nu);
        long long n = special_lookup(imu, inu);
        long long num = -rs_.half_norm(nu) * n;
        long long den = rs_.half_norm(a);
        if (num % den != 0) fail(Errc::BadInput, "non-integral structure constant");
        return num / den;
    }
    RootCoords nu = negate(s);
    int inu = *rs_.positive_index(nu);
    long long n = special_lookup(inu, sa);
    long long num = rs_.half_norm(nu) * n;
    long long den = rs_.half_norm(mu);
    if (num % den != 0) fail(Errc::BadInput, "non-integral structure constant");
    return num / den;
}

SparseVec ChevalleyBasis::bracket(int a, int b) const {
    int twoP = 2 * P_;
    auto simplify = [](SparseVec v) {
        std::sort(v.begin(), v.end());
        SparseVec out;
        for (auto& [i, c] : v) {
            if (!out.empty() && out.back().first == i)
                out.back().second += c;
            else
                out.push_back({i, c});
        }
        SparseVec nz;
        for (auto& [i, c] : out)
            if (c) nz.push_back({i, c});
        return nz;
    };
    if (a >= twoP && b >= twoP) return {}; // [H,H] = 0
    if (a >= twoP || b >= twoP) {
        // [H_i, X_beta] = <beta, alpha_i^vee> X_beta
        long long sign = 1;
        int h = a, x = b;
        if (b >= twoP) {
            h = b;
            x = a;
            sign = -1;
        }
        int i = h - twoP;
        RootCoords beta = root_of(x);
        long long c = sign * rs_.pairing_with_simple_coroot(beta, i);
        if (!c) return {};
        return {{x, c}};
    }
    RootCoords ra = root_of(a), rb = root_of(b);
    RootCoords s = add(ra, rb);
    if (is_zero(s)) {
        // [X_alpha, X_-alpha] = H_alpha^vee (sign: positive root first)
        long long sgn = a < P_ ? 1 : -1;
        RootCoords pos = a < P_ ? ra : rb;
        auto cv = rs_.coroot_coords(pos);
        SparseVec out;
        for (int i = 0; i < rs_.rank; ++i)
            if (cv[size_t(i)]) out.push_back({h_index(i), sgn * cv[size_t(i)]});
        return simplify(out);
    }
    if (!rs_.is_root(s)) return {};
    long long n = structure_constant(a, b);
    // locate signed id of s
    int sid;
    if (auto idx = rs_.positive_index(s))
        sid = *idx;
    else
        sid = P_ + *rs_.positive_index(negate(s));
    return {{sid, n}};
}

SparseVec ChevalleyBasis::bracket(const SparseVec& x, const SparseVec& y) const {
    std::map<int, long long> acc;
    for (const auto& [i, ci] : x)
        for (const auto& [j, cj] : y)
            for (const auto& [k, ck] : bracket(i, j)) acc[k] += ci * cj * ck;
    SparseVec out;
    for (const auto& [k, c] : acc)
        if (c) out.push_back({k, c});
    return out;
}

std::vector<std::vector<long long>> ChevalleyBasis::ad_matrix(int basis_idx) const {
    int n = dim();
    std::vector<std::vector<long long>> m(size_t(n), std::vector<long long>(size_t(n), 0));
    for (int j = 0; j < n; ++j)
        for (const auto& [k, c] : bracket(basis_idx, j)) m[size_t(k)][size_t(j)] = c;
    return m;
}

KillingGram killing_gram(const ChevalleyBasis& cb) {
    const RootSystem& rs = cb.root_system();
    int n = cb.dim(), P = cb.num_positive();
    KillingGram kg;
    kg.gram.assign(size_t(n), std::vector<long long>(size_t(n), 0));

    // Cartan block: kappa(H_i,H_j) = sum over roots of <gamma,i^vee><gamma,j^vee>
    for (int i = 0; i < rs.rank; ++i)
        for (int j = 0; j < rs.rank; ++j) {
            long long s = 0;
            for (const auto& g : rs.positive_roots) {
                long long a = rs.pairing_with_simple_coroot(g, i);
                long long b = rs.pairing_with_simple_coroot(g, j);
                s += 2 * a * b; // positive and negative root contribute equally
            }
            kg.gram[size_t(cb.h_index(i))][size_t(cb.h_index(j))] = s;
        }

    // kappa(X_beta, X_-beta) via sparse trace
    for (int ib = 0; ib < P; ++ib) {
        int xp = cb.x_index(ib, false), xm = cb.x_index(ib, true);
        long long tr = 0;
        for (int k = 0; k < n; ++k) {
            // coefficient of basis k in [X_beta, [X_-beta, k]]
            for (const auto& [m, cm] : cb.bracket(xm, k))
                for (const auto& [l, cl] : cb.bracket(xp, m))
                    if (l == k) tr += cm * cl;
        }
        kg.gram[size_t(xp)][size_t(xm)] = tr;
        kg.gram[size_t(xm)][size_t(xp)] = tr;
    }
    return kg;
}

gf::Mat reduce_mod(const std::vector<std::vector<long long>>& m, int p) {
    auto f = gf::make_field(uint32_t(p), 1);
    gf::Mat out(f, int(m.size()), m.empty() ? 0 : int(m[0].size()));
    for (int i = 0; i < out.rows(); ++i)
        for (int j = 0; j < out.cols(); ++j) out.at(i, j) = gf::El::of_int(f, m[size_t(i)][size_t(j)]);
    return out;
}

bool killing_nondegenerate_mod(const KillingGram& kg, int p) {
    gf::Mat m = reduce_mod(kg.gram, p);
    return m.rank() == m.rows();
}

ViReport check_vi_equivalence(char letter, int rank, int pmax) {
    auto rs = build_root_system(letter, rank);
    ChevalleyBasis cb(rs);
    KillingGram kg = killing_gram(cb);
    auto e = e_of_simple({rs.letter, rs.rank});
    ViReport rep;
    for (int p = 2; p <= pmax; ++p) {
        bool prime = p >= 2;
        for (int q = 2; q * q <= p; ++q)
            if (p % q == 0) prime = false;
        if (!prime) continue;
        ViRow row;
        row.p = p;
        row.killing_nondegenerate = killing_nondegenerate_mod(kg, p);
        row.very_good_and_e = is_very_good(rs, p) && (!e || *e % p != 0);
        if (row.killing_nondegenerate != row.very_good_and_e) rep.all_equal = false;
        rep.rows.push_back(row);
    }
    return rep;
}

} // namespace satcr::lie
