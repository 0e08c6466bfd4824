#include "satcr/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <queue>

namespace satcr::lie {

namespace {

void check_rank(char letter, int rank) {
    int lo = 0, hi = 8;
    switch (letter) {
        case 'A': lo = 1; break;
        case 'B': lo = 2; break;
        case 'C': lo = 2; break;
        case 'D': lo = 4; break;
        case 'E': lo = 6; break;
        case 'F': lo = 4; hi = 4; break;
        case 'G': lo = 2; hi = 2; break;
        default: fail(Errc::UnknownType, std::string("type ") + letter);
    }
    if (rank < lo || rank > hi)
        fail(Errc::RankOutOfRange,
             std::string(1, letter) + std::to_string(rank) + " outside supported range");
}

// cartan[i][j] = <alpha_i, alpha_j^vee>; d[i] = half squared length.
// Single bond between equal-length nodes: -1/-1.  Double/triple bond:
// <long, short^vee> = -2 or -3, <short, long^vee> = -1.
void fill_cartan(char letter, int n, std::vector<std::vector<int>>& a, std::vector<int>& d) {
    a.assign(size_t(n), std::vector<int>(size_t(n), 0));
    d.assign(size_t(n), 1);
    for (int i = 0; i < n; ++i) a[size_t(i)][size_t(i)] = 2;
    auto chain_edge = [&](int i, int j) { a[size_t(i)][size_t(j)] = a[size_t(j)][size_t(i)] = -1; };
    switch (letter) {
        case 'A':
            for (int i = 0; i + 1 < n; ++i) chain_edge(i, i + 1);
            break;
        case 'B': // last node short
            for (int i = 0; i + 1 < n; ++i) chain_edge(i, i + 1);
            for (int i = 0; i + 1 < n; ++i) d[size_t(i)] = 2;
            a[size_t(n - 2)][size_t(n - 1)] = -2;
            a[size_t(n - 1)][size_t(n - 2)] = -1;
            break;
        case 'C': // last node long
            for (int i = 0; i + 1 < n; ++i) chain_edge(i, i + 1);
            d[size_t(n - 1)] = 2;
            a[size_t(n - 2)][size_t(n - 1)] = -1;
            a[size_t(n - 1)][size_t(n - 2)] = -2;
            break;
        case 'D':
            for (int i = 0; i + 1 < n - 1; ++i) chain_edge(i, i + 1);
            chain_edge(n - 3, n - 1);
            break;
        case 'E':
            // nodes 0-2-3-4-5(-6)(-7) in a chain, node 1 hangs off node 3
            chain_edge(0, 2);
            chain_edge(2, 3);
            chain_edge(1, 3);
            for (int i = 3; i + 1 < n; ++i) chain_edge(i, i + 1);
            break;
        case 'F':
            // 0-1=>2-3 with 0,1 long
            d[0] = d[1] = 2;
            chain_edge(0, 1);
            chain_edge(2, 3);
            a[1][2] = -2;
            a[2][1] = -1;
            break;
        case 'G':
            // first node long (adjoint fundamental weight at node 1)
            d[0] = 3;
            a[0][1] = -3;
            a[1][0] = -1;
            break;
    }
}

} // namespace

bool RootSystem::is_root(const RootCoords& c) const {
    if (index_.count(c)) return true;
    RootCoords neg(c.size());
    for (size_t i = 0; i < c.size(); ++i) neg[i] = -c[i];
    return index_.count(neg) > 0;
}

std::optional<int> RootSystem::positive_index(const RootCoords& c) const {
    auto it = index_.find(c);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int RootSystem::height(const RootCoords& c) {
    int h = 0;
    for (int v : c) h += v;
    return h;
}

int RootSystem::pairing_with_simple_coroot(const RootCoords& beta, int j) const {
    int s = 0;
    for (int i = 0; i < rank; ++i) s += beta[size_t(i)] * cartan[size_t(i)][size_t(j)];
    return s;
}

int RootSystem::inner(const RootCoords& beta, const RootCoords& gamma) const {
    // (alpha_i, alpha_j) = cartan[i][j] * d[j]
    int s = 0;
    for (int i = 0; i < rank; ++i) {
        if (!beta[size_t(i)]) continue;
        for (int j = 0; j < rank; ++j)
            s += beta[size_t(i)] * gamma[size_t(j)] * cartan[size_t(i)][size_t(j)] * d[size_t(j)];
    }
    return s;
}

int RootSystem::half_norm(const RootCoords& beta) const {
    int n2 = inner(beta, beta);
    if (n2 <= 0 || n2 % 2 != 0) fail(Errc::BadInput, "not a root-lattice vector of root norm");
    return n2 / 2;
}

RootCoords RootSystem::coroot_coords(const RootCoords& beta) const {
    int db = half_norm(beta);
    RootCoords cv(size_t(rank), 0);
    for (int i = 0; i < rank; ++i) {
        int num = beta[size_t(i)] * d[size_t(i)];
        if (num % db != 0) fail(Errc::BadInput, "coroot coordinates not integral");
        cv[size_t(i)] = num / db;
    }
    return cv;
}

int RootSystem::pairing_with_coroot(const RootCoords& beta, const RootCoords& gamma) const {
    int dg = half_norm(gamma);
    int ip = inner(beta, gamma);
    if (ip % dg != 0) fail(Errc::BadInput, "pairing not integral");
    return ip / dg;
}

RootCoords RootSystem::simple_reflection(const RootCoords& beta, int j) const {
    RootCoords r = beta;
    r[size_t(j)] -= pairing_with_simple_coroot(beta, j);
    return r;
}

RootCoords RootSystem::highest_root() const {
    return positive_roots.back(); // max height, unique for irreducible types
}

Weight RootSystem::root_to_weight(const RootCoords& c) const {
    Weight w(size_t(rank), 0);
    for (int j = 0; j < rank; ++j) w[size_t(j)] = pairing_with_simple_coroot(c, j);
    return w;
}

Weight RootSystem::reflect_weight(const Weight& w, int j) const {
    Weight r = w;
    int wj = w[size_t(j)];
    for (int i = 0; i < rank; ++i) r[size_t(i)] -= wj * cartan[size_t(j)][size_t(i)];
    return r;
}

RootSystem build_root_system(char letter, int rank) {
    letter = char(std::toupper(letter));
    check_rank(letter, rank);
    RootSystem rs;
    rs.letter = letter;
    rs.rank = rank;
    fill_cartan(letter, rank, rs.cartan, rs.d);

    // reflection closure from the simple roots
    std::set<RootCoords> seen;
    std::queue<RootCoords> work;
    for (int i = 0; i < rank; ++i) {
        RootCoords e(size_t(rank), 0);
        e[size_t(i)] = 1;
        seen.insert(e);
        work.push(e);
    }
    while (!work.empty()) {
        RootCoords b = work.front();
        work.pop();
        for (int j = 0; j < rank; ++j) {
            RootCoords r = rs.simple_reflection(b, j);
            if (seen.insert(r).second) work.push(r);
        }
    }
    for (const auto& c : seen) {
        bool pos = true, neg = true;
        for (int v : c) {
            if (v < 0) pos = false;
            if (v > 0) neg = false;
        }
        if (!pos && !neg) fail(Errc::BadInput, "reflection closure produced a mixed-sign vector");
        if (pos) rs.positive_roots.push_back(c);
    }
    std::sort(rs.positive_roots.begin(), rs.positive_roots.end(),
              [](const RootCoords& x, const RootCoords& y) {
                  int hx = RootSystem::height(x), hy = RootSystem::height(y);
                  if (hx != hy) return hx < hy;
                  return x < y;
              });
    for (int i = 0; i < int(rs.positive_roots.size()); ++i)
        rs.index_[rs.positive_roots[size_t(i)]] = i;
    return rs;
}

std::set<int> bad_primes(const RootSystem& rs) {
    std::set<int> out;
    for (const auto& c : rs.positive_roots)
        for (int v : c)
            for (int p = 2; p <= v; ++p)
                if (v % p == 0) {
                    bool prime = true;
                    for (int q = 2; q * q <= p; ++q)
                        if (p % q == 0) prime = false;
                    if (prime) out.insert(p);
                }
    return out;
}

bool is_good(const RootSystem& rs, int p) { return bad_primes(rs).count(p) == 0; }

bool is_very_good(const RootSystem& rs, int p) {
    if (!is_good(rs, p)) return false;
    if (rs.letter == 'A' && (rs.rank + 1) % p == 0) return false;
    return true;
}

bool check_h_identity(const RootSystem& rs) {
    long long dim = rs.dimension();
    long long h = h_of_simple({rs.letter, rs.rank});
    return dim % rs.rank == 0 && h + 1 == dim / rs.rank;
}

std::vector<SimpleType> parse_type_list(const std::string& s) {
    std::vector<SimpleType> out;
    size_t i = 0;
    while (i < s.size()) {
        char letter = char(std::toupper(s[i]));
        ++i;
        size_t j = i;
        while (j < s.size() && std::isdigit(s[j])) ++j;
        if (j == i) fail(Errc::ParseError, "missing rank in type string '" + s + "'");
        int rank = std::stoi(s.substr(i, j - i));
        if (letter == 'T') {
            // torus factor: contributes no simple component
        } else {
            check_rank(letter, rank);
            out.push_back({letter, rank});
        }
        i = j;
        if (i < s.size()) {
            if (s[i] != 'x' && s[i] != 'X') fail(Errc::ParseError, "expected 'x' in '" + s + "'");
            ++i;
        }
    }
    return out;
}

long long d_of_simple(SimpleType t) {
    int n = t.rank;
    switch (t.letter) {
        case 'A': return n + 1;
        case 'B': return n == 2 ? 4 : 2 * n + 1; // B2 reported via the C2 column
        case 'C': return 2 * n;
        case 'D': return 2 * n;
        case 'E': return n == 6 ? 27 : n == 7 ? 56 : 248;
        case 'F': return 26;
        case 'G': return 7;
    }
    fail(Errc::UnknownType, std::string("type ") + t.letter);
}

long long h_of_simple(SimpleType t) {
    int n = t.rank;
    switch (t.letter) {
        case 'A': return n + 1;
        case 'B':
        case 'C': return 2 * n;
        case 'D': return 2 * n - 2;
        case 'E': return n == 6 ? 12 : n == 7 ? 18 : 30;
        case 'F': return 12;
        case 'G': return 6;
    }
    fail(Errc::UnknownType, std::string("type ") + t.letter);
}

std::optional<long long> e_of_simple(SimpleType t) {
    int n = t.rank;
    switch (t.letter) {
        case 'A': return 2;
        case 'B': return n == 2 ? 3 : 2 * n - 1; // via C2: n + 1 = 3 = 2n - 1 at n = 2
        case 'C': return n + 1;
        case 'D': return n - 1;
        default: return std::nullopt;
    }
}

GroupInvariants invariants(const std::vector<SimpleType>& components, bool simply_connected) {
    GroupInvariants g;
    g.simply_connected = simply_connected;
    bool all_classical = !components.empty();
    for (const auto& t : components) {
        check_rank(char(std::toupper(t.letter)), t.rank);
        g.d = std::max(g.d, d_of_simple(t));
        g.a = std::max(g.a, (long long)t.rank + 1);
        g.h = std::max(g.h, h_of_simple(t));
        auto e = e_of_simple(t);
        if (e)
            g.e = std::max(g.e.value_or(1), *e);
        else
            all_classical = false;
        auto rs = build_root_system(t.letter, t.rank);
        auto bp = bad_primes(rs);
        g.bad_primes.insert(bp.begin(), bp.end());
    }
    if (!all_classical) g.e = std::nullopt;
    // a torus has trivial derived subgroup, hence h~ = h = 1
    g.h_tilde = components.empty() ? 1 : (simply_connected ? g.h : g.h + 1);
    return g;
}

} // namespace satcr::lie
