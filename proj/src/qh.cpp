#include "qsc/qh.hpp"

#include <algorithm>

namespace qsc {

void QHClass::add(const BasisKey& key, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

void QHClass::add_scaled(const QHClass& other, const Rational& c) {
    if (c == 0) return;
    for (const auto& [key, val] : other.terms_) add(key, val * c);
}

QHClass QHClass::q_shifted(const Coroot& mu) const {
    QHClass out;
    for (const auto& [key, val] : terms_) {
        BasisKey shifted = key;
        for (size_t i = 0; i < mu.size(); ++i) shifted.q[i] += mu[i];
        out.terms_.emplace(shifted, val);
    }
    return out;
}

Rational QHClass::coefficient(const BasisKey& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
}

bool QHClass::localized() const {
    for (const auto& [key, val] : terms_)
        for (int c : key.q)
            if (c < 0) return true;
    return false;
}

QuantumContext::QuantumContext(const RootSystem& rs, long long degree_cap, size_t group_cap)
    : rs_(&rs), degree_cap_(degree_cap), group_cap_(group_cap), table_(rs) {
    for (int idx = 0; idx < rs.num_positive_roots(); ++idx)
        reflections_.push_back(
            WeylElement::reflection(rs, rs.positive_roots()[idx], rs.positive_coroot(idx)));
}

QHClass QuantumContext::unit() { return basis(WeylElement::identity(rs_->rank())); }

QHClass QuantumContext::basis(const WeylElement& w, const Coroot& q) {
    QHClass x;
    x.add(BasisKey{table_.id(w), q}, Rational(1));
    return x;
}

QHClass QuantumContext::basis(const WeylElement& w) { return basis(w, Coroot(rs_->rank(), 0)); }

long long QuantumContext::degree_of(const BasisKey& key) const {
    long long d = table_.length_of(key.w);
    for (int c : key.q) d += 2LL * c;
    return d;
}

long long QuantumContext::degree_of(const QHClass& x) const {
    if (x.empty()) return 0;
    long long d = degree_of(x.terms().begin()->first);
    for (const auto& [key, val] : x.terms())
        if (degree_of(key) != d) throw UsageError("class is not homogeneous");
    return d;
}

const std::vector<QuantumContext::ChevEntry>& QuantumContext::chev_row(int u_id, int i) {
    auto key = std::make_pair(u_id, i);
    auto it = chev_cache_.find(key);
    if (it != chev_cache_.end()) return it->second;

    const RootSystem& rs = *rs_;
    const WeylElement& u = table_.element(u_id);
    const int lu = table_.length_of(u_id);
    std::vector<ChevEntry> row;
    for (int idx = 0; idx < rs.num_positive_roots(); ++idx) {
        const Coroot& gv = rs.positive_coroot(idx);
        long long coeff = gv[i]; // <omega_i, gamma^vee>
        if (coeff == 0) continue;
        WeylElement us = u * reflections_[idx];
        int target = table_.id(us);
        int lt = table_.length_of(target);
        long long deg_q = 0;
        for (int c : gv) deg_q += 2LL * c;
        if (lt == lu + 1) row.push_back({target, {}, coeff});
        if (lt == lu + 1 - deg_q) row.push_back({target, gv, coeff});
    }
    return chev_cache_.emplace(key, std::move(row)).first->second;
}

QHClass QuantumContext::chevalley_mul(const QHClass& x, int i) {
    if (i < 0 || i >= rs_->rank()) throw UsageError("chevalley_mul: index out of range");
    QHClass out;
    for (const auto& [key, val] : x.terms()) {
        for (const ChevEntry& e : chev_row(key.w, i)) {
            BasisKey nk{e.target, key.q};
            if (!e.q.empty())
                for (int c = 0; c < rs_->rank(); ++c) nk.q[c] += e.q[c];
            out.add(nk, val * Rational(static_cast<long>(e.coeff)));
        }
    }
    return out;
}

void QuantumContext::ensure_rules(int degree) {
    const auto& slices = table_.by_length(group_cap_);
    if (degree >= static_cast<int>(slices.size()))
        throw UsageError("no elements of the requested length");
    for (int d = rules_built_upto_ + 1; d <= degree; ++d) {
        // Sparse exact row reduction of the classical parts of all products
        // sigma^{u'} * sigma^{s_i} with l(u') = d-1, solved once per slice.
        struct RRow {
            std::map<int, Rational> vec;  // over ids of length-d elements
            std::map<int, Rational> expr; // over generator indices
        };
        std::vector<std::pair<int, int>> gens; // (u'_id, i)
        std::vector<RRow> rows;
        std::map<int, int> pivot_of; // leading id -> row index
        for (int u_id : slices[d - 1])
            for (int i = 0; i < rs_->rank(); ++i) gens.emplace_back(u_id, i);
        for (size_t g = 0; g < gens.size(); ++g) {
            RRow row;
            for (const ChevEntry& e : chev_row(gens[g].first, gens[g].second))
                if (e.q.empty()) row.vec[e.target] += Rational(static_cast<long>(e.coeff));
            for (auto it = row.vec.begin(); it != row.vec.end();)
                it = (it->second == 0) ? row.vec.erase(it) : std::next(it);
            row.expr[static_cast<int>(g)] = 1;
            // reduce against existing pivots
            while (!row.vec.empty()) {
                int lead = row.vec.begin()->first;
                auto p = pivot_of.find(lead);
                if (p == pivot_of.end()) break;
                Rational f = row.vec.begin()->second;
                const RRow& prow = rows[p->second];
                for (const auto& [c, v] : prow.vec) {
                    auto it = row.vec.find(c);
                    Rational nv = (it == row.vec.end() ? Rational(0) : it->second) - f * v;
                    if (nv == 0) {
                        if (it != row.vec.end()) row.vec.erase(it);
                    } else if (it == row.vec.end())
                        row.vec.emplace(c, nv);
                    else
                        it->second = nv;
                }
                for (const auto& [g2, v] : prow.expr) {
                    auto it = row.expr.find(g2);
                    Rational nv = (it == row.expr.end() ? Rational(0) : it->second) - f * v;
                    if (nv == 0) {
                        if (it != row.expr.end()) row.expr.erase(it);
                    } else if (it == row.expr.end())
                        row.expr.emplace(g2, nv);
                    else
                        it->second = nv;
                }
            }
            if (row.vec.empty()) continue;
            // normalize leading coefficient to 1
            Rational lead = row.vec.begin()->second;
            for (auto& [c, v] : row.vec) v /= lead;
            for (auto& [g2, v] : row.expr) v /= lead;
            pivot_of[row.vec.begin()->first] = static_cast<int>(rows.size());
            rows.push_back(std::move(row));
        }
        for (int t_id : slices[d]) {
            // express e_{t} over the generators by back-reduction
            std::map<int, Rational> u{{t_id, Rational(1)}};
            std::map<int, Rational> combo;
            while (!u.empty()) {
                int lead = u.begin()->first;
                auto p = pivot_of.find(lead);
                if (p == pivot_of.end())
                    throw ConsistencyError("divisor classes fail to span degree " + std::to_string(d));
                Rational f = u.begin()->second;
                const RRow& prow = rows[p->second];
                for (const auto& [c, v] : prow.vec) {
                    auto it = u.find(c);
                    Rational nv = (it == u.end() ? Rational(0) : it->second) - f * v;
                    if (nv == 0) {
                        if (it != u.end()) u.erase(it);
                    } else if (it == u.end())
                        u.emplace(c, nv);
                    else
                        it->second = nv;
                }
                for (const auto& [g2, v] : prow.expr) {
                    auto it = combo.find(g2);
                    Rational nv = (it == combo.end() ? Rational(0) : it->second) + f * v;
                    if (nv == 0) {
                        if (it != combo.end()) combo.erase(it);
                    } else if (it == combo.end())
                        combo.emplace(g2, nv);
                    else
                        it->second = nv;
                }
            }
            Rule rule;
            for (const auto& [g, c] : combo) {
                rule.pairs.emplace_back(c, gens[g].first, gens[g].second);
                for (const ChevEntry& e : chev_row(gens[g].first, gens[g].second))
                    if (!e.q.empty())
                        rule.corrections.emplace_back(-c * Rational(static_cast<long>(e.coeff)), e.q,
                                                      e.target);
            }
            rules_[t_id] = std::move(rule);
        }
        rules_built_upto_ = d;
    }
}

const QuantumContext::Rule& QuantumContext::rule(int u_id) {
    int l = table_.length_of(u_id);
    if (l == 0) throw UsageError("no reduction rule for the identity");
    ensure_rules(l);
    return rules_.at(u_id);
}

std::map<int, QHClass>& QuantumContext::sweep_for(int v_id) {
    for (auto& [vid, sweep] : sweeps_)
        if (vid == v_id) return sweep;
    sweeps_.emplace_back(v_id, std::map<int, QHClass>{});
    while (sweeps_.size() > 2) sweeps_.pop_front();
    return sweeps_.back().second;
}

QHClass QuantumContext::qmul_basis(const WeylElement& u, const WeylElement& v) {
    const int v_id = table_.id(v);
    std::map<int, QHClass>& sweep = sweep_for(v_id);
    // iterative reduction of the left factor, memoized per right factor
    std::vector<int> stack{table_.id(u)};
    while (!stack.empty()) {
        int cur = stack.back();
        if (sweep.count(cur)) {
            stack.pop_back();
            continue;
        }
        if (table_.length_of(cur) == 0) {
            sweep.emplace(cur, basis(v));
            stack.pop_back();
            continue;
        }
        const Rule& r = rule(cur);
        bool ready = true;
        for (const auto& [c, up, i] : r.pairs)
            if (!sweep.count(up)) {
                stack.push_back(up);
                ready = false;
            }
        for (const auto& [c, mu, w] : r.corrections)
            if (!sweep.count(w)) {
                stack.push_back(w);
                ready = false;
            }
        if (!ready) continue;
        QHClass acc;
        for (const auto& [c, up, i] : r.pairs) acc.add_scaled(chevalley_mul(sweep.at(up), i), c);
        for (const auto& [c, mu, w] : r.corrections) acc.add_scaled(sweep.at(w).q_shifted(mu), c);
        sweep.emplace(cur, std::move(acc));
        stack.pop_back();
    }
    return sweep.at(table_.id(u));
}

QHClass QuantumContext::qmul(const QHClass& x, const QHClass& y) {
    if (x.localized() || y.localized())
        throw UsageError("qmul requires unlocalized classes");
    for (const auto& [kx, cx] : x.terms())
        for (const auto& [ky, cy] : y.terms())
            if (degree_of(kx) + degree_of(ky) > degree_cap_)
                throw ResourceError("product degree exceeds cap " + std::to_string(degree_cap_));
    QHClass out;
    for (const auto& [kx, cx] : x.terms())
        for (const auto& [ky, cy] : y.terms()) {
            QHClass base = qmul_basis(table_.element(kx.w), table_.element(ky.w));
            Coroot shift(rs_->rank(), 0);
            for (int c = 0; c < rs_->rank(); ++c) shift[c] = kx.q[c] + ky.q[c];
            out.add_scaled(base.q_shifted(shift), cx * cy);
        }
    return out;
}

Rational QuantumContext::gw_invariant(const WeylElement& u, const WeylElement& v,
                                      const WeylElement& w, const Coroot& lambda) {
    QHClass prod = qmul_basis(u, v);
    return prod.coefficient(BasisKey{table_.id(w), lambda});
}

std::vector<QuantumContext::ExprTerm> QuantumContext::divisor_expression(const WeylElement& u) {
    const int lu = length(*rs_, u);
    if (lu > degree_cap_)
        throw ResourceError("divisor expression degree exceeds cap");
    // unfold reduction rules; combine like (q, word) terms as we go
    std::map<std::pair<Coroot, std::vector<int>>, Rational> acc;
    struct Item {
        int id;
        Rational coeff;
        Coroot q;
        std::vector<int> suffix; // divisor indices applied after sigma^{id}
    };
    std::vector<Item> work{{table_.id(u), Rational(1), Coroot(rs_->rank(), 0), {}}};
    while (!work.empty()) {
        Item it = std::move(work.back());
        work.pop_back();
        if (table_.length_of(it.id) == 0) {
            auto key = std::make_pair(it.q, it.suffix);
            acc[key] += it.coeff;
            if (acc[key] == 0) acc.erase(key);
            continue;
        }
        const Rule& r = rule(it.id);
        for (const auto& [c, up, i] : r.pairs) {
            Item next{up, it.coeff * c, it.q, it.suffix};
            next.suffix.insert(next.suffix.begin(), i);
            work.push_back(std::move(next));
        }
        for (const auto& [c, mu, w] : r.corrections) {
            Item next{w, it.coeff * c, it.q, it.suffix};
            for (int k = 0; k < rs_->rank(); ++k) next.q[k] += mu[k];
            work.push_back(std::move(next));
        }
    }
    std::vector<ExprTerm> out;
    for (const auto& [key, c] : acc)
        if (c != 0) out.push_back({c, key.first, key.second});
    return out;
}

QHClass QuantumContext::classical_cup(const WeylElement& u, const WeylElement& v) {
    QHClass prod = qmul_basis(u, v);
    QHClass out;
    for (const auto& [key, c] : prod.terms()) {
        bool classical = std::all_of(key.q.begin(), key.q.end(), [](int e) { return e == 0; });
        if (classical) out.add(key, c);
    }
    return out;
}

LeviFlag::LeviFlag(const ParabolicSetup& setup, long long degree_cap, size_t group_cap)
    : setup_(&setup) {
    const RootSystem& rs = setup.system();
    const int rr = setup.r();
    std::vector<std::vector<int>> cartan(rr, std::vector<int>(rr));
    for (int i = 0; i < rr; ++i)
        for (int j = 0; j < rr; ++j)
            cartan[i][j] = rs.cartan()[setup.delta_p()[i]][setup.delta_p()[j]];
    sub_ = std::make_unique<RootSystem>(RootSystem::from_cartan(cartan, rs.label() + "-levi"));
    ctx_ = std::make_unique<QuantumContext>(*sub_, degree_cap, group_cap);
}

WeylElement LeviFlag::to_levi(const WeylElement& w) const {
    std::vector<int> word;
    for (int a : reduced_word(setup_->system(), w)) {
        auto pos = setup_->paper_pos_of(a);
        if (!pos) throw UsageError("to_levi: element is not in the Levi subgroup");
        word.push_back(*pos - 1);
    }
    return from_word(*sub_, word);
}

Coroot LeviFlag::coroot_to_levi(const Coroot& lambda) const {
    Coroot out(setup_->r(), 0);
    for (int a = 0; a < setup_->n(); ++a) {
        if (lambda[a] == 0) continue;
        auto pos = setup_->paper_pos_of(a);
        if (!pos) throw UsageError("coroot_to_levi: support outside the Levi");
        out[*pos - 1] = lambda[a];
    }
    return out;
}

QHClass LeviFlag::classical_cup(const WeylElement& u, const WeylElement& v) {
    return ctx_->classical_cup(to_levi(u), to_levi(v));
}

QHClass LeviFlag::qmul(const WeylElement& u, const WeylElement& v) {
    return ctx_->qmul_basis(to_levi(u), to_levi(v));
}

QHClass QuantumContext::qhp_mul(const ParabolicSetup& setup, const WeylElement& u,
                                const WeylElement& v) {
    if (&setup.system() != rs_) throw UsageError("qhp_mul: setup for a different root system");
    if (!setup.in_min_reps(u) || !setup.in_min_reps(v))
        throw UsageError("qhp_mul: factors must be minimal coset representatives");
    QHClass prod = qmul_basis(u, v);
    QHClass out;
    for (const auto& [key, c] : prod.terms()) {
        ParabolicSetup::Lift lift = setup.pw_lift(key.q);
        if (lift.lambda_b != key.q) continue;
        const WeylElement& x = table_.element(key.w);
        WeylElement x1 = min_coset_rep(*rs_, x, setup.delta_p());
        if (x1 * lift.wp_wpprime != x) continue;
        out.add(BasisKey{table_.id(x1), setup.normalize_class(key.q)}, c);
    }
    return out;
}

} // namespace qsc
