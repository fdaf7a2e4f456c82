#include "qsc/weyl.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace qsc {

WeylElement WeylElement::identity(int n) {
    WeylElement w;
    w.n_ = n;
    w.m_.assign(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) w.m_[static_cast<size_t>(i) * n + i] = 1;
    return w;
}

bool WeylElement::is_identity() const {
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (entry(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

Coroot WeylElement::apply(const Coroot& lambda) const {
    if (static_cast<int>(lambda.size()) != n_) throw UsageError("apply: wrong rank");
    Coroot out(n_, 0);
    for (int j = 0; j < n_; ++j) {
        if (lambda[j] == 0) continue;
        for (int i = 0; i < n_; ++i) out[i] += entry(i, j) * lambda[j];
    }
    return out;
}

WeylElement WeylElement::operator*(const WeylElement& other) const {
    if (n_ != other.n_) throw UsageError("product of elements of different rank");
    WeylElement out;
    out.n_ = n_;
    out.m_.assign(m_.size(), 0);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            int a = entry(i, k);
            if (a == 0) continue;
            for (int j = 0; j < n_; ++j) out.m_[static_cast<size_t>(i) * n_ + j] += a * other.entry(k, j);
        }
    return out;
}

size_t WeylElement::hash() const {
    size_t h = 1469598103934665603ULL;
    for (int v : m_) {
        h ^= static_cast<size_t>(static_cast<unsigned>(v) + 0x9e3779b9u);
        h *= 1099511628211ULL;
    }
    return h;
}

WeylElement WeylElement::reflection(const RootSystem& rs, const Root& gamma, const Coroot& gamma_vee) {
    const int n = rs.rank();
    WeylElement w = identity(n);
    for (int j = 0; j < n; ++j) {
        // s_gamma(alpha_j^vee) = alpha_j^vee - <gamma, alpha_j^vee> gamma^vee
        long long c = 0;
        for (int k = 0; k < n; ++k)
            if (gamma[k] != 0) c += static_cast<long long>(gamma[k]) * rs.pairing_simple(k, j);
        for (int i = 0; i < n; ++i)
            w.m_[static_cast<size_t>(i) * n + j] -= static_cast<int>(c) * gamma_vee[i];
    }
    return w;
}

WeylElement WeylElement::simple_reflection(const RootSystem& rs, int i) {
    if (i < 0 || i >= rs.rank()) throw UsageError("simple index out of range");
    Root alpha(rs.rank(), 0);
    Coroot alpha_vee(rs.rank(), 0);
    alpha[i] = 1;
    alpha_vee[i] = 1;
    return reflection(rs, alpha, alpha_vee);
}

WeylElement from_word(const RootSystem& rs, const std::vector<int>& word) {
    WeylElement w = WeylElement::identity(rs.rank());
    for (int i : word) w = w * WeylElement::simple_reflection(rs, i);
    return w;
}

namespace {

// Sign of w(beta) for a positive root beta given by index; the image of a root
// keeps one sign across all coordinates, so the coroot image's signs decide.
bool sends_negative(const RootSystem& rs, const WeylElement& w, int root_idx) {
    Coroot img = w.apply(rs.positive_coroot(root_idx));
    for (int c : img) {
        if (c < 0) return true;
        if (c > 0) return false;
    }
    throw ConsistencyError("root mapped to zero");
}

bool simple_image_negative(const RootSystem& rs, const WeylElement& w, int i) {
    for (int r = 0; r < rs.rank(); ++r) {
        int c = w.entry(r, i);
        if (c < 0) return true;
        if (c > 0) return false;
    }
    throw ConsistencyError("simple coroot mapped to zero");
}

} // namespace

std::vector<int> inversion_set(const RootSystem& rs, const WeylElement& w) {
    std::vector<int> inv;
    for (int k = 0; k < rs.num_positive_roots(); ++k)
        if (sends_negative(rs, w, k)) inv.push_back(k);
    return inv;
}

int length(const RootSystem& rs, const WeylElement& w) {
    int l = 0;
    for (int k = 0; k < rs.num_positive_roots(); ++k)
        if (sends_negative(rs, w, k)) ++l;
    return l;
}

bool is_right_descent(const RootSystem& rs, const WeylElement& w, int i) {
    return simple_image_negative(rs, w, i);
}

int sgn_alpha(const RootSystem& rs, const WeylElement& w, int i) {
    return is_right_descent(rs, w, i) ? 1 : 0;
}

std::vector<int> reduced_word(const RootSystem& rs, const WeylElement& w) {
    std::vector<int> word;
    WeylElement cur = w;
    int len = length(rs, cur);
    while (!cur.is_identity()) {
        // smallest left descent: l(s_i w) = l(w) - 1
        int pick = -1;
        WeylElement shortened;
        for (int i = 0; i < rs.rank() && pick < 0; ++i) {
            WeylElement cand = WeylElement::simple_reflection(rs, i) * cur;
            if (length(rs, cand) < len) {
                pick = i;
                shortened = cand;
            }
        }
        if (pick < 0) throw ConsistencyError("non-identity element with no descent");
        word.push_back(pick);
        cur = shortened;
        --len;
    }
    return word;
}

WeylElement inverse(const RootSystem& rs, const WeylElement& w) {
    std::vector<int> word = reduced_word(rs, w);
    std::reverse(word.begin(), word.end());
    return from_word(rs, word);
}

std::vector<WeylElement> enumerate_parabolic(const RootSystem& rs, const std::vector<int>& subset,
                                             size_t cap) {
    unsigned long long order = 0;
    bool know_order = true;
    try {
        order = parabolic_order(rs, subset);
    } catch (const ConfigError&) {
        know_order = false;
    }
    if (know_order && order > cap) {
        throw ResourceError("group enumeration cap exceeded: |W| = " + std::to_string(order) +
                            " > cap " + std::to_string(cap));
    }
    std::vector<WeylElement> out;
    std::map<WeylElement, int> seen;
    std::deque<WeylElement> queue;
    WeylElement id = WeylElement::identity(rs.rank());
    seen.emplace(id, 0);
    queue.push_back(id);
    out.push_back(id);
    while (!queue.empty()) {
        WeylElement w = queue.front();
        queue.pop_front();
        for (int i : subset) {
            WeylElement next = w * WeylElement::simple_reflection(rs, i);
            if (seen.emplace(next, 0).second) {
                out.push_back(next);
                queue.push_back(next);
                if (out.size() > cap)
                    throw ResourceError("group enumeration cap exceeded (cap " + std::to_string(cap) + ")");
            }
        }
    }
    if (know_order && out.size() != order)
        throw ConsistencyError("parabolic enumeration found " + std::to_string(out.size()) +
                               " elements, classical order is " + std::to_string(order));
    return out;
}

WeylElement longest_element(const RootSystem& rs, const std::vector<int>& subset) {
    WeylElement w = WeylElement::identity(rs.rank());
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i : subset) {
            if (!is_right_descent(rs, w, i)) {
                w = w * WeylElement::simple_reflection(rs, i);
                moved = true;
                break;
            }
        }
    }
    return w;
}

WeylElement min_coset_rep(const RootSystem& rs, const WeylElement& w, const std::vector<int>& subset) {
    WeylElement cur = w;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i : subset) {
            if (is_right_descent(rs, cur, i)) {
                cur = cur * WeylElement::simple_reflection(rs, i);
                moved = true;
                break;
            }
        }
    }
    return cur;
}

std::vector<WeylElement> min_coset_reps(const RootSystem& rs, const std::vector<int>& big,
                                        const std::vector<int>& small, size_t cap) {
    for (int s : small)
        if (std::find(big.begin(), big.end(), s) == big.end())
            throw UsageError("min_coset_reps: small subset not contained in big subset");
    std::vector<WeylElement> reps;
    for (const WeylElement& w : enumerate_parabolic(rs, big, cap)) {
        bool minimal = true;
        for (int i : small)
            if (is_right_descent(rs, w, i)) { minimal = false; break; }
        if (minimal) reps.push_back(w);
    }
    unsigned long long expect = parabolic_order(rs, big) / parabolic_order(rs, small);
    if (reps.size() != expect)
        throw ConsistencyError("coset representative count mismatch");
    return reps;
}

std::vector<WeylElement> parabolic_decompose(const RootSystem& rs, const WeylElement& w,
                                             const std::vector<std::vector<int>>& subsets) {
    for (size_t j = 0; j + 1 < subsets.size(); ++j)
        for (int s : subsets[j])
            if (std::find(subsets[j + 1].begin(), subsets[j + 1].end(), s) == subsets[j + 1].end())
                throw UsageError("parabolic_decompose: chain is not nested");
    const size_t m = subsets.size();
    // w must lie in the top parabolic; every root outside it must stay positive
    for (int idx = 0; idx < rs.num_positive_roots(); ++idx) {
        const Root& beta = rs.positive_roots()[idx];
        bool outside = false;
        for (int a = 0; a < rs.rank(); ++a)
            if (beta[a] != 0 &&
                std::find(subsets[m - 1].begin(), subsets[m - 1].end(), a) == subsets[m - 1].end())
                outside = true;
        if (outside && sends_negative(rs, w, idx))
            throw UsageError("parabolic_decompose: w is not in the top parabolic of the chain");
    }
    std::vector<WeylElement> factors(m, WeylElement::identity(rs.rank()));
    WeylElement rest = w; // stays in W_{subsets[j]} as j descends
    for (size_t j = m; j-- > 0;) {
        const std::vector<int> lower = (j == 0) ? std::vector<int>{} : subsets[j - 1];
        // peel: rest = rep * tail with rep minimal in rest W_{lower}, tail in W_{lower}
        WeylElement rep = rest;
        WeylElement tail = WeylElement::identity(rs.rank());
        bool moved = true;
        while (moved) {
            moved = false;
            for (int i : lower)
                if (is_right_descent(rs, rep, i)) {
                    rep = rep * WeylElement::simple_reflection(rs, i);
                    tail = WeylElement::simple_reflection(rs, i) * tail;
                    moved = true;
                    break;
                }
        }
        factors[j] = rep;
        rest = tail;
    }
    return factors;
}

bool bruhat_leq(const RootSystem& rs, const WeylElement& u, const WeylElement& v) {
    int lu = length(rs, u), lv = length(rs, v);
    WeylElement a = u, b = v;
    while (true) {
        if (a.is_identity()) return true;
        if (lu > lv) return false;
        if (lu == lv) return a == b;
        // smallest left descent i of b
        int pick = -1;
        for (int i = 0; i < rs.rank() && pick < 0; ++i) {
            WeylElement sb = WeylElement::simple_reflection(rs, i) * b;
            if (length(rs, sb) < lv) pick = i;
        }
        if (pick < 0) throw ConsistencyError("no descent on non-identity element");
        WeylElement s = WeylElement::simple_reflection(rs, pick);
        WeylElement sa = s * a;
        b = s * b;
        --lv;
        if (length(rs, sa) < lu) {
            a = sa;
            --lu;
        }
    }
}

std::vector<DiagramComponent> diagram_components(const RootSystem& rs, const std::vector<int>& subset) {
    std::vector<DiagramComponent> comps;
    std::vector<int> nodes = subset;
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    std::map<int, bool> used;
    auto adjacent = [&](int a, int b) { return a != b && rs.pairing_simple(a, b) != 0; };

    for (int seed : nodes) {
        if (used[seed]) continue;
        // gather the component
        std::vector<int> comp{seed};
        used[seed] = true;
        for (size_t k = 0; k < comp.size(); ++k)
            for (int b : nodes)
                if (!used[b] && adjacent(comp[k], b)) {
                    used[b] = true;
                    comp.push_back(b);
                }
        std::sort(comp.begin(), comp.end());
        const int m = static_cast<int>(comp.size());
        auto deg = [&](int a) {
            int d = 0;
            for (int b : comp) if (adjacent(a, b)) ++d;
            return d;
        };
        DiagramComponent dc;
        dc.rank = m;
        if (m == 1) {
            dc.type = DynkinType::A;
            dc.nodes = comp;
            comps.push_back(dc);
            continue;
        }
        // multiple bonds inside the component
        int double_a = -1, double_b = -1, triple = 0;
        for (int a : comp)
            for (int b : comp)
                if (adjacent(a, b)) {
                    int mult = rs.pairing_simple(a, b) * rs.pairing_simple(b, a);
                    if (mult == 2) { double_a = a; double_b = b; }
                    if (mult == 3) triple = 1;
                }
        int forks = 0, fork_node = -1;
        for (int a : comp)
            if (deg(a) >= 3) { ++forks; fork_node = a; }

        // Walk a path from `start` away from `avoid`, greedy along the chain.
        auto walk = [&](int start, int avoid) {
            std::vector<int> path{start};
            int prev = avoid, cur = start;
            while (true) {
                int next = -1;
                for (int b : comp)
                    if (b != prev && adjacent(cur, b)) { next = b; break; }
                if (next < 0) break;
                path.push_back(next);
                prev = cur;
                cur = next;
            }
            return path;
        };

        if (triple) {
            dc.type = DynkinType::G;
            // Bourbaki G2: alpha_1 short (receives -3 ... <alpha_2, alpha_1^vee> = -3)
            int a = comp[0], b = comp[1];
            if (rs.pairing_simple(b, a) == -3) dc.nodes = {a, b};
            else dc.nodes = {b, a};
        } else if (forks == 0 && double_a < 0) {
            dc.type = DynkinType::A;
            int end = -1;
            for (int a : comp) if (deg(a) == 1) { end = a; break; }
            dc.nodes = walk(end, -1);
        } else if (forks == 0) {
            // one double bond on a path: B/C if at an end, F4 if interior.
            // short side: the node x of the double bond with <other, x^vee> = -2
            int short_node = (rs.pairing_simple(double_b, double_a) == -2) ? double_a : double_b;
            int long_node = (short_node == double_a) ? double_b : double_a;
            bool short_at_end = deg(short_node) == 1;
            bool long_at_end = deg(long_node) == 1;
            if (!short_at_end && !long_at_end) {
                if (m != 4) throw ConfigError("diagram is not of finite type");
                dc.type = DynkinType::F;
                int end = -1;
                for (int a : comp) if (deg(a) == 1) { end = a; break; }
                std::vector<int> p0 = walk(end, -1);
                // orient so positions 2,3 carry (long, short) of the double bond
                if (p0[1] == short_node) std::reverse(p0.begin(), p0.end());
                dc.nodes = p0;
            } else if (short_at_end) {
                dc.type = DynkinType::B; // short root last
                dc.nodes = walk(short_node, -1);
                std::reverse(dc.nodes.begin(), dc.nodes.end());
            } else {
                dc.type = DynkinType::C; // long root last
                dc.nodes = walk(long_node, -1);
                std::reverse(dc.nodes.begin(), dc.nodes.end());
            }
        } else if (forks == 1) {
            // D or E; arms sorted by size
            std::vector<std::vector<int>> arms;
            for (int b : comp)
                if (adjacent(fork_node, b)) arms.push_back(walk(b, fork_node));
            std::sort(arms.begin(), arms.end(), [](const auto& x, const auto& y) {
                if (x.size() != y.size()) return x.size() < y.size();
                return x.front() < y.front();
            });
            if (arms.size() != 3) throw ConfigError("diagram is not of finite type");
            size_t a0 = arms[0].size(), a1 = arms[1].size();
            if (a0 == 1 && a1 == 1) {
                dc.type = DynkinType::D;
                // Bourbaki: long arm first, fork node at rank-2, short arms last
                std::vector<int> order;
                for (auto it = arms[2].rbegin(); it != arms[2].rend(); ++it) order.push_back(*it);
                order.push_back(fork_node);
                order.push_back(arms[0][0]);
                order.push_back(arms[1][0]);
                dc.nodes = order;
            } else if (a0 == 1 && a1 == 2) {
                dc.type = DynkinType::E;
                // Bourbaki E: alpha_2 = short arm; alpha_1,alpha_3 = 2-arm
                // outward-in; alpha_4 = fork; rest = long arm.
                std::vector<int> order;
                order.push_back(arms[1][1]);
                order.push_back(arms[0][0]);
                order.push_back(arms[1][0]);
                order.push_back(fork_node);
                for (int x : arms[2]) order.push_back(x);
                dc.nodes = order;
                if (m < 6 || m > 8) throw ConfigError("diagram is not of finite type");
            } else {
                throw ConfigError("diagram is not of finite type");
            }
        } else {
            throw ConfigError("diagram is not of finite type");
        }
        comps.push_back(dc);
    }
    // deterministic component order: by smallest ambient index
    std::sort(comps.begin(), comps.end(), [](const DiagramComponent& a, const DiagramComponent& b) {
        return *std::min_element(a.nodes.begin(), a.nodes.end()) <
               *std::min_element(b.nodes.begin(), b.nodes.end());
    });
    return comps;
}

unsigned long long parabolic_order(const RootSystem& rs, const std::vector<int>& subset) {
    unsigned long long order = 1;
    for (const DiagramComponent& c : diagram_components(rs, subset))
        order *= RootSystem::weyl_order(c.type, c.rank);
    return order;
}

int WeylTable::id(const WeylElement& w) {
    auto it = ids_.find(w);
    if (it != ids_.end()) return it->second;
    int nid = static_cast<int>(elems_.size());
    ids_.emplace(w, nid);
    elems_.push_back(w);
    lengths_.push_back(length(*rs_, w));
    return nid;
}

const std::vector<std::vector<int>>& WeylTable::by_length(size_t cap) {
    if (enumerated_) return by_length_;
    std::vector<int> full(rs_->rank());
    std::iota(full.begin(), full.end(), 0);
    std::vector<int> all;
    for (const WeylElement& w : enumerate_parabolic(*rs_, full, cap)) all.push_back(id(w));
    int maxlen = 0;
    for (int i : all) maxlen = std::max(maxlen, lengths_[i]);
    by_length_.assign(maxlen + 1, {});
    for (int i : all) by_length_[lengths_[i]].push_back(i);
    enumerated_ = true;
    return by_length_;
}

} // namespace qsc
