#include "satcr/weights.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>

namespace satcr::lie {

namespace {

void add_factorization(std::map<long long, long long>& exps, long long v, long long sign) {
    for (long long q = 2; q * q <= v; ++q)
        while (v % q == 0) {
            exps[q] += sign;
            v /= q;
        }
    if (v > 1) exps[v] += sign;
}

// (w, alpha) in the short-norm-2 scaling, w in fundamental coords, alpha in
// root coords: (omega_j, alpha_i) = delta_ij * d_i
long long weight_dot_root(const RootSystem& rs, const Weight& w, const RootCoords& alpha) {
    long long s = 0;
    for (size_t j = 0; j < alpha.size(); ++j) s += (long long)alpha[j] * rs.d[j] * w[j];
    return s;
}

bool is_dominant(const Weight& w) {
    for (int v : w)
        if (v < 0) return false;
    return true;
}

Weight sub_root(const RootSystem& rs, const Weight& w, int j, int k) {
    Weight r = w;
    for (int i = 0; i < rs.rank; ++i) r[size_t(i)] -= k * rs.cartan[size_t(j)][size_t(i)];
    return r;
}

} // namespace

std::optional<std::vector<long long>> weight_root_coords(const RootSystem& rs, const Weight& w) {
    // solve c * A = w over the rationals (A = Cartan matrix), demand integers
    int n = rs.rank;
    // augmented system: columns of A^T are rows of A
    std::vector<std::vector<double>> m(size_t(n), std::vector<double>(size_t(n) + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[size_t(i)][size_t(j)] = rs.cartan[size_t(j)][size_t(i)];
        m[size_t(i)][size_t(n)] = w[size_t(i)];
    }
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        double best = 1e-9;
        for (int r = col; r < n; ++r)
            if (std::abs(m[size_t(r)][size_t(col)]) > best) {
                best = std::abs(m[size_t(r)][size_t(col)]);
                piv = r;
            }
        if (piv < 0) return std::nullopt; // Cartan matrices are invertible; defensive
        std::swap(m[size_t(col)], m[size_t(piv)]);
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            double f = m[size_t(r)][size_t(col)] / m[size_t(col)][size_t(col)];
            if (f == 0) continue;
            for (int j = col; j <= n; ++j) m[size_t(r)][size_t(j)] -= f * m[size_t(col)][size_t(j)];
        }
    }
    std::vector<long long> c(size_t(n), 0);
    for (int i = 0; i < n; ++i) {
        double v = m[size_t(i)][size_t(n)] / m[size_t(i)][size_t(i)];
        c[size_t(i)] = std::llround(v);
    }
    // exact verification over the integers
    for (int j = 0; j < n; ++j) {
        long long s = 0;
        for (int i = 0; i < n; ++i) s += c[size_t(i)] * rs.cartan[size_t(i)][size_t(j)];
        if (s != w[size_t(j)]) return std::nullopt;
    }
    return c;
}

Weight dominant_rep(const RootSystem& rs, Weight w) {
    for (;;) {
        int j = -1;
        for (int i = 0; i < rs.rank; ++i)
            if (w[size_t(i)] < 0) {
                j = i;
                break;
            }
        if (j < 0) return w;
        w = rs.reflect_weight(w, j);
    }
}

long long weyl_dim(const RootSystem& rs, const Weight& lambda) {
    if (int(lambda.size()) != rs.rank) fail(Errc::ShapeMismatch, "weight has wrong rank");
    if (!is_dominant(lambda)) fail(Errc::BadInput, "weight is not dominant");
    std::map<long long, long long> exps;
    for (const auto& alpha : rs.positive_roots) {
        long long num = 0, den = 0;
        for (size_t j = 0; j < alpha.size(); ++j) {
            long long adj = (long long)alpha[j] * rs.d[j];
            num += adj * (lambda[j] + 1);
            den += adj;
        }
        add_factorization(exps, num, +1);
        add_factorization(exps, den, -1);
    }
    long long dim = 1;
    for (auto& [q, e] : exps) {
        if (e < 0) fail(Errc::BadInput, "non-integral Weyl dimension (internal)");
        for (long long i = 0; i < e; ++i) {
            if (dim > (long long)4e18 / q) fail(Errc::CapExceeded, "Weyl dimension overflows");
            dim *= q;
        }
    }
    return dim;
}

int min_fundamental_index(const RootSystem& rs) {
    int best = 0;
    long long bestd = -1;
    for (int i = 0; i < rs.rank; ++i) {
        Weight w(size_t(rs.rank), 0);
        w[size_t(i)] = 1;
        long long d = weyl_dim(rs, w);
        if (bestd < 0 || d < bestd) {
            bestd = d;
            best = i;
        }
    }
    return best;
}

long long min_fundamental_dim(const RootSystem& rs) {
    Weight w(size_t(rs.rank), 0);
    w[size_t(min_fundamental_index(rs))] = 1;
    return weyl_dim(rs, w);
}

WeightMultiset weyl_weights(const RootSystem& rs, const Weight& lambda, long long size_cap) {
    long long dim = weyl_dim(rs, lambda);
    if (dim > size_cap) fail(Errc::DimCap, "module dimension exceeds cap");

    // saturated weight set: walk simple-root strings downward from lambda
    std::set<Weight> wset{lambda};
    std::deque<Weight> queue{lambda};
    while (!queue.empty()) {
        Weight v = queue.front();
        queue.pop_front();
        for (int j = 0; j < rs.rank; ++j) {
            int t = v[size_t(j)];
            for (int k = 1; k <= t; ++k) {
                Weight u = sub_root(rs, v, j, k);
                if (wset.insert(u).second) queue.push_back(u);
            }
        }
    }

    // dominant weights ordered by distance below lambda in the root lattice
    struct Dom {
        Weight w;
        std::vector<long long> diff; // root coords of lambda - w
        long long ht;
    };
    std::vector<Dom> doms;
    for (const auto& w : wset) {
        if (!is_dominant(w)) continue;
        Weight d(size_t(rs.rank));
        for (int i = 0; i < rs.rank; ++i) d[size_t(i)] = lambda[size_t(i)] - w[size_t(i)];
        auto c = weight_root_coords(rs, d);
        if (!c) fail(Errc::BadInput, "weight not under lambda in the root lattice (internal)");
        long long ht = 0;
        for (auto v : *c) ht += v;
        doms.push_back({w, *c, ht});
    }
    std::sort(doms.begin(), doms.end(), [](const Dom& a, const Dom& b) { return a.ht < b.ht; });

    std::map<Weight, long long> dom_mult;
    for (const auto& dm : doms) {
        if (dm.ht == 0) {
            dom_mult[dm.w] = 1;
            continue;
        }
        // Freudenthal: ((l+r,l+r)-(m+r,m+r)) mult = 2 sum_{a>0,k>0} mult(m+ka) (m+ka, a)
        long long num = 0;
        for (const auto& alpha : rs.positive_roots) {
            Weight aw = rs.root_to_weight(alpha);
            long long mu_a = weight_dot_root(rs, dm.w, alpha);
            long long a_a = 2 * rs.half_norm(alpha);
            for (int k = 1;; ++k) {
                Weight up(size_t(rs.rank));
                for (int i = 0; i < rs.rank; ++i)
                    up[size_t(i)] = dm.w[size_t(i)] + k * aw[size_t(i)];
                if (!wset.count(up)) break;
                long long m_up = dom_mult.at(dominant_rep(rs, up));
                num += m_up * (mu_a + k * a_a);
            }
        }
        // denominator (l+m+2r, l-m) over the root coords of l-m
        long long den = 0;
        for (int i = 0; i < rs.rank; ++i)
            den += dm.diff[size_t(i)] * rs.d[size_t(i)] *
                   (lambda[size_t(i)] + dm.w[size_t(i)] + 2);
        if (den == 0 || (2 * num) % den != 0)
            fail(Errc::BadInput, "Freudenthal recursion produced a non-integer (internal)");
        dom_mult[dm.w] = 2 * num / den;
    }

    // expand over Weyl orbits
    WeightMultiset out{rs, {}};
    for (const auto& [w, m] : dom_mult) {
        if (m == 0) continue;
        std::set<Weight> orbit{w};
        std::deque<Weight> q{w};
        while (!q.empty()) {
            Weight v = q.front();
            q.pop_front();
            for (int j = 0; j < rs.rank; ++j) {
                Weight u = rs.reflect_weight(v, j);
                if (orbit.insert(u).second) q.push_back(u);
            }
        }
        for (const auto& v : orbit) out.entries[v] = m;
    }
    return out;
}

WeightMultiset tensor_square_weights(const RootSystem& rs, const Weight& lambda,
                                     long long size_cap) {
    long long dim = weyl_dim(rs, lambda);
    if (dim * dim > size_cap) fail(Errc::DimCap, "tensor square exceeds cap");
    WeightMultiset base = weyl_weights(rs, lambda, size_cap);
    WeightMultiset out{rs, {}};
    for (const auto& [mu, mm] : base.entries)
        for (const auto& [nu, mn] : base.entries) {
            Weight d(size_t(rs.rank));
            for (int i = 0; i < rs.rank; ++i) d[size_t(i)] = mu[size_t(i)] - nu[size_t(i)];
            out.entries[d] += mm * mn;
        }
    return out;
}

const std::vector<CharacterDeficit>& builtin_deficits() {
    static const std::vector<CharacterDeficit> table = {
        // G2, p = 7: the 27-dim Weyl module with highest weight 2*omega_2
        // reduces with a trivial composition factor split off
        {'G', 2, 7, Weight{0, 2}, {{Weight{0, 0}, 1}}},
    };
    return table;
}

namespace {
const CharacterDeficit* find_deficit(const std::vector<CharacterDeficit>& table,
                                     const RootSystem& rs, int p, const Weight& mu) {
    for (const auto& d : table)
        if (d.letter == rs.letter && d.rank == rs.rank && d.p == p && d.highest == mu) return &d;
    return nullptr;
}
} // namespace

long long factor_dim(const RootSystem& rs, const Weight& mu, int p,
                     const std::vector<CharacterDeficit>& overrides) {
    long long d = weyl_dim(rs, mu);
    if (const auto* def = find_deficit(overrides, rs, p, mu))
        for (auto& [w, m] : def->missing) d -= m;
    return d;
}

DecompositionResult decompose_by_subtraction(const WeightMultiset& ws, int p,
                                             const std::vector<CharacterDeficit>& overrides,
                                             bool tie_break_low) {
    const RootSystem& rs = ws.rs;
    std::map<Weight, long long> left = ws.entries;
    for (auto it = left.begin(); it != left.end();)
        it = it->second == 0 ? left.erase(it) : std::next(it);

    // coroot height: sum over positive coroots of <w, beta^vee>; strictly
    // monotone for the dominance order, so its argmax is a maximal weight
    std::vector<std::vector<long long>> pos_coroots;
    for (const auto& a : rs.positive_roots) {
        auto cc = rs.coroot_coords(a);
        pos_coroots.push_back(std::vector<long long>(cc.begin(), cc.end()));
    }
    auto coroot_height = [&](const Weight& w) {
        long long h = 0;
        for (const auto& b : pos_coroots)
            for (int j = 0; j < rs.rank; ++j) h += b[size_t(j)] * w[size_t(j)];
        return h;
    };

    DecompositionResult res;
    std::map<Weight, std::map<Weight, long long>> char_cache;
    while (!left.empty()) {
        const Weight* best = nullptr;
        long long besth = 0;
        for (const auto& [w, m] : left) {
            if (m < 0) fail(Errc::NegativeMultiplicity, "negative weight multiplicity");
            if (!is_dominant(w)) continue;
            long long h = coroot_height(w);
            if (!best || h > besth ||
                (h == besth && (tie_break_low ? w < *best : w > *best))) {
                best = &w;
                besth = h;
            }
        }
        if (!best)
            fail(Errc::NegativeMultiplicity,
                 "no dominant weight left; multiset is not a character");
        Weight mu = *best;
        long long count = left.at(mu);

        auto cit = char_cache.find(mu);
        if (cit == char_cache.end()) {
            auto full = weyl_weights(rs, mu).entries;
            if (const auto* def = find_deficit(overrides, rs, p, mu)) {
                for (auto& [w, m] : def->missing) {
                    full[w] -= m;
                    if (full[w] < 0)
                        fail(Errc::NegativeMultiplicity, "deficit exceeds Weyl multiplicity");
                }
            }
            cit = char_cache.emplace(mu, std::move(full)).first;
        }
        const auto* def = find_deficit(overrides, rs, p, mu);
        for (long long c = 0; c < count; ++c) {
            res.factors.push_back(mu);
            if (def) res.deficits_used.push_back({def->letter, def->rank, def->p, def->highest});
        }
        for (const auto& [w, m] : cit->second) {
            if (m == 0) continue;
            long long& slot = left[w];
            slot -= count * m;
            if (slot < 0)
                fail(Errc::NegativeMultiplicity,
                     "character subtraction went negative (missing modular data)");
            if (slot == 0) left.erase(w);
        }
    }
    std::sort(res.factors.begin(), res.factors.end());
    return res;
}

long long adjoint_multiplicity_in_tensor_square(const RootSystem& rs, const Weight& lambda_min,
                                                int p) {
    auto ws = tensor_square_weights(rs, lambda_min);
    auto dec = decompose_by_subtraction(ws, p, builtin_deficits());
    Weight adj = rs.root_to_weight(rs.highest_root());
    long long n = 0;
    for (const auto& f : dec.factors)
        if (f == adj) ++n;
    return n;
}

} // namespace satcr::lie
