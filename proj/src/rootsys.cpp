#include "qsc/rootsys.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace qsc {

DynkinType dynkin_type_from_char(char c) {
    switch (c) {
        case 'A': case 'a': return DynkinType::A;
        case 'B': case 'b': return DynkinType::B;
        case 'C': case 'c': return DynkinType::C;
        case 'D': case 'd': return DynkinType::D;
        case 'E': case 'e': return DynkinType::E;
        case 'F': case 'f': return DynkinType::F;
        case 'G': case 'g': return DynkinType::G;
        default: throw ConfigError(std::string("unknown Dynkin type '") + c + "'");
    }
}

std::string to_string(DynkinType t) { return std::string(1, static_cast<char>(t)); }

namespace {

std::vector<std::vector<int>> cartan_matrix(DynkinType type, int n) {
    auto bad = [&](const char* why) {
        throw ConfigError("invalid type/rank " + to_string(type) + std::to_string(n) + ": " + why);
    };
    if (n < 1) bad("rank must be positive");
    std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) c[i][i] = 2;
    auto bond = [&](int a, int b) { c[a][b] = -1; c[b][a] = -1; };
    switch (type) {
        case DynkinType::A:
            for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
            break;
        case DynkinType::B:
            if (n < 2) bad("B requires rank >= 2");
            for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
            // alpha_{n-1} long, alpha_n short; cartan[i][j] = <alpha_j, alpha_i^vee>.
            c[n - 1][n - 2] = -2;
            c[n - 2][n - 1] = -1;
            break;
        case DynkinType::C:
            if (n < 2) bad("C requires rank >= 2");
            for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
            c[n - 1][n - 2] = -1;
            c[n - 2][n - 1] = -2;
            break;
        case DynkinType::D:
            if (n < 4) bad("D requires rank >= 4");
            for (int i = 0; i + 2 < n; ++i) bond(i, i + 1);
            bond(n - 3, n - 1);
            break;
        case DynkinType::E:
            if (n != 6 && n != 7 && n != 8) bad("E requires rank in {6,7,8}");
            bond(0, 2);
            bond(2, 3);
            bond(1, 3);
            for (int i = 3; i + 1 < n; ++i) bond(i, i + 1);
            break;
        case DynkinType::F:
            if (n != 4) bad("F requires rank 4");
            bond(0, 1);
            bond(2, 3);
            // alpha_2 long, alpha_3 short.
            c[2][1] = -2;
            c[1][2] = -1;
            break;
        case DynkinType::G:
            if (n != 2) bad("G requires rank 2");
            // alpha_1 short, alpha_2 long.
            c[0][1] = -3;
            c[1][0] = -1;
            break;
    }
    return c;
}

} // namespace

RootSystem RootSystem::build(DynkinType type, int rank) {
    RootSystem rs;
    rs.label_ = to_string(type) + std::to_string(rank);
    rs.rank_ = rank;
    rs.cartan_ = cartan_matrix(type, rank);
    rs.finish_construction();
    return rs;
}

RootSystem RootSystem::from_cartan(const std::vector<std::vector<int>>& cartan, std::string label) {
    RootSystem rs;
    rs.label_ = std::move(label);
    rs.rank_ = static_cast<int>(cartan.size());
    rs.cartan_ = cartan;
    for (int i = 0; i < rs.rank_; ++i) {
        if (static_cast<int>(cartan[i].size()) != rs.rank_ || cartan[i][i] != 2)
            throw ConfigError("malformed Cartan matrix");
        for (int j = 0; j < rs.rank_; ++j)
            if (i != j && cartan[i][j] > 0) throw ConfigError("Cartan off-diagonal must be <= 0");
    }
    rs.finish_construction();
    return rs;
}

void RootSystem::finish_construction() {
    const int n = rank_;

    // Half squared lengths: solve d_j*<alpha_i,alpha_j^vee> = d_i*<alpha_j,alpha_i^vee>
    // over the Dynkin graph, normalized to smallest = 1. Stored as fractions over
    // a common denominator during propagation; ratios are 1, 2 or 3.
    std::vector<long long> num(n, 0), den(n, 1);
    for (int start = 0; start < n; ++start) {
        if (num[start] != 0) continue;
        num[start] = 1;
        std::queue<int> bfs;
        bfs.push(start);
        while (!bfs.empty()) {
            int i = bfs.front();
            bfs.pop();
            for (int j = 0; j < n; ++j) {
                if (j == i || pairing_simple(i, j) == 0 || num[j] != 0) continue;
                // d_j = d_i * <alpha_j, alpha_i^vee> / <alpha_i, alpha_j^vee>
                num[j] = num[i] * pairing_simple(j, i);
                den[j] = den[i] * pairing_simple(i, j);
                if (num[j] < 0) { num[j] = -num[j]; den[j] = -den[j]; }
                long long g = std::gcd(num[j], den[j]);
                num[j] /= g;
                den[j] /= g;
                bfs.push(j);
            }
        }
    }
    long long common = 1;
    for (int i = 0; i < n; ++i) common = std::lcm(common, den[i]);
    half_len_.assign(n, 0);
    long long overall = 0;
    for (int i = 0; i < n; ++i) {
        half_len_[i] = num[i] * (common / den[i]);
        overall = std::gcd(overall, half_len_[i]);
    }
    for (auto& d : half_len_) d /= overall;

    // Positive roots: closure of the simple roots under simple reflections,
    // keeping only nonnegative tuples. Deterministic order: (height, lex).
    std::map<Root, int> seen;
    std::vector<Root> pool;
    for (int i = 0; i < n; ++i) {
        Root e(n, 0);
        e[i] = 1;
        seen.emplace(e, 0);
        pool.push_back(e);
    }
    for (size_t k = 0; k < pool.size(); ++k) {
        Root beta = pool[k];
        for (int i = 0; i < n; ++i) {
            Root img = reflect_root(i, beta);
            bool nonneg = std::all_of(img.begin(), img.end(), [](int c) { return c >= 0; });
            if (!nonneg) continue;
            if (seen.emplace(img, 0).second) pool.push_back(img);
        }
        if (pool.size() > 100000) throw ConfigError("Cartan matrix is not of finite type");
    }
    std::sort(pool.begin(), pool.end(), [](const Root& a, const Root& b) {
        int ha = std::accumulate(a.begin(), a.end(), 0);
        int hb = std::accumulate(b.begin(), b.end(), 0);
        if (ha != hb) return ha < hb;
        return a < b;
    });
    positive_roots_ = std::move(pool);
    for (size_t k = 0; k < positive_roots_.size(); ++k) {
        index_[positive_roots_[k]] = static_cast<int>(k);
        heights_.push_back(std::accumulate(positive_roots_[k].begin(), positive_roots_[k].end(), 0));
        positive_coroots_.push_back(coroot_of(positive_roots_[k]));
    }
}

long long RootSystem::pairing(const Root& beta, const Coroot& lambda) const {
    if (static_cast<int>(beta.size()) != rank_ || static_cast<int>(lambda.size()) != rank_)
        throw UsageError("pairing: vectors of wrong rank");
    long long acc = 0;
    for (int i = 0; i < rank_; ++i) {
        if (beta[i] == 0) continue;
        for (int j = 0; j < rank_; ++j)
            if (lambda[j] != 0) acc += static_cast<long long>(beta[i]) * lambda[j] * pairing_simple(i, j);
    }
    return acc;
}

std::optional<int> RootSystem::root_index(const Root& beta) const {
    auto it = index_.find(beta);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool RootSystem::is_root(const Root& beta) const {
    if (index_.count(beta)) return true;
    Root neg(beta.size());
    for (size_t i = 0; i < beta.size(); ++i) neg[i] = -beta[i];
    return index_.count(neg) > 0;
}

Coroot RootSystem::coroot_of(const Root& gamma) const {
    if (!is_root(gamma)) throw UsageError("coroot_of: not a root");
    long long len2 = 0; // (gamma,gamma), with (alpha_i,alpha_j) = half_len[j]*<alpha_i,alpha_j^vee>
    for (int i = 0; i < rank_; ++i) {
        if (gamma[i] == 0) continue;
        for (int j = 0; j < rank_; ++j)
            if (gamma[j] != 0)
                len2 += static_cast<long long>(gamma[i]) * gamma[j] * half_len_[j] * pairing_simple(i, j);
    }
    Coroot cov(rank_, 0);
    for (int i = 0; i < rank_; ++i) {
        if (gamma[i] == 0) continue;
        long long numer = static_cast<long long>(gamma[i]) * 2 * half_len_[i];
        if (numer % len2 != 0) throw ConsistencyError("coroot rescaling is not integral");
        cov[i] = static_cast<int>(numer / len2);
    }
    return cov;
}

Root RootSystem::reflect_root(int i, const Root& beta) const {
    if (i < 0 || i >= rank_) throw UsageError("simple index out of range");
    long long c = 0;
    for (int k = 0; k < rank_; ++k)
        if (beta[k] != 0) c += static_cast<long long>(beta[k]) * pairing_simple(k, i);
    Root out = beta;
    out[i] -= static_cast<int>(c);
    return out;
}

Coroot RootSystem::reflect_coroot(int i, const Coroot& lambda) const {
    if (i < 0 || i >= rank_) throw UsageError("simple index out of range");
    long long c = 0;
    for (int k = 0; k < rank_; ++k)
        if (lambda[k] != 0) c += static_cast<long long>(lambda[k]) * pairing_simple(i, k);
    Coroot out = lambda;
    out[i] -= static_cast<int>(c);
    return out;
}

long long RootSystem::two_rho_pairing(const Coroot& lambda) const {
    long long acc = 0;
    for (const Root& beta : positive_roots_) acc += pairing(beta, lambda);
    return acc;
}

unsigned long long RootSystem::weyl_order(DynkinType t, int rank) {
    auto fact = [](int m) {
        unsigned long long f = 1;
        for (int i = 2; i <= m; ++i) f *= static_cast<unsigned long long>(i);
        return f;
    };
    switch (t) {
        case DynkinType::A: return fact(rank + 1);
        case DynkinType::B:
        case DynkinType::C: return (1ULL << rank) * fact(rank);
        case DynkinType::D: return (1ULL << (rank - 1)) * fact(rank);
        case DynkinType::E:
            if (rank == 6) return 51840ULL;
            if (rank == 7) return 2903040ULL;
            if (rank == 8) return 696729600ULL;
            break;
        case DynkinType::F: if (rank == 4) return 1152ULL; break;
        case DynkinType::G: if (rank == 2) return 12ULL; break;
    }
    throw ConfigError("no Weyl order for " + to_string(t) + std::to_string(rank));
}

} // namespace qsc
