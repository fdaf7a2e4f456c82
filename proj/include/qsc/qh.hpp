#pragma once

#include <deque>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "qsc/grading.hpp"
#include "qsc/numeric.hpp"
#include "qsc/parabolic.hpp"
#include "qsc/weyl.hpp"

namespace qsc {

/// Basis index of QH*(G/B)[q^{-1}]: an interned Weyl id plus a q-exponent
/// tuple over the simple coroots (negative entries only in localized classes).
struct BasisKey {
    int w = 0;
    Coroot q;
    bool operator<(const BasisKey& o) const {
        if (w != o.w) return w < o.w;
        return q < o.q;
    }
    bool operator==(const BasisKey& o) const { return w == o.w && q == o.q; }
};

/// Finite rational linear combination of basis elements q_lambda sigma^w.
class QHClass {
  public:
    using TermMap = std::map<BasisKey, Rational>;

    const TermMap& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    void add(const BasisKey& key, const Rational& c);
    void add_scaled(const QHClass& other, const Rational& c);
    QHClass q_shifted(const Coroot& mu) const;
    Rational coefficient(const BasisKey& key) const;

    bool localized() const;
    bool operator==(const QHClass& o) const { return terms_ == o.terms_; }

  private:
    TermMap terms_;
};

/// Product engine for QH*(G/B) of one root system: quantum Chevalley rows,
/// divisor-generation reduction rules (per-degree exact Gaussian elimination),
/// and memoized basis products. The caches make this class single-writer;
/// use one context per thread or serialize calls.
class QuantumContext {
  public:
    explicit QuantumContext(const RootSystem& rs, long long degree_cap = 48,
                            size_t group_cap = 1000000);

    const RootSystem& system() const { return *rs_; }
    WeylTable& table() { return table_; }

    QHClass unit();
    QHClass basis(const WeylElement& w, const Coroot& q);
    QHClass basis(const WeylElement& w);

    long long degree_of(const BasisKey& key) const; // l(w) + <2rho, q>
    long long degree_of(const QHClass& x) const;    // common degree; throws if mixed

    /// x * sigma^{s_i} by the quantum Chevalley formula.
    QHClass chevalley_mul(const QHClass& x, int i);

    /// sigma^u * sigma^v (unlocalized).
    QHClass qmul_basis(const WeylElement& u, const WeylElement& v);
    QHClass qmul(const QHClass& x, const QHClass& y);

    /// Coefficient of q_lambda sigma^w in sigma^u * sigma^v.
    Rational gw_invariant(const WeylElement& u, const WeylElement& v, const WeylElement& w,
                          const Coroot& lambda);

    struct ExprTerm {
        Rational coeff;
        Coroot q;
        std::vector<int> word;
    };
    /// sigma^u as a combination of q-monomials times products of divisor
    /// classes: evaluating each word by iterated Chevalley from sigma^id and
    /// summing reproduces sigma^u exactly.
    std::vector<ExprTerm> divisor_expression(const WeylElement& u);

    /// Classical cup product: the q = 0 truncation of the quantum product.
    QHClass classical_cup(const WeylElement& u, const WeylElement& v);

    /// sigma^u *_P sigma^v in QH*(G/P) read off the ambient product through
    /// the comparison formula. Keys hold normalized class representatives.
    QHClass qhp_mul(const ParabolicSetup& setup, const WeylElement& u, const WeylElement& v);

    long long degree_cap() const { return degree_cap_; }

  private:
    struct ChevEntry {
        int target;      // interned id of u s_gamma
        Coroot q;        // empty for classical terms, gamma^vee for quantum ones
        long long coeff; // <omega_i, gamma^vee>
    };
    const std::vector<ChevEntry>& chev_row(int u_id, int i);

    struct Rule {
        std::vector<std::tuple<Rational, int, int>> pairs;        // (c, u'_id, i)
        std::vector<std::tuple<Rational, Coroot, int>> corrections; // (c, mu, w_id)
    };
    const Rule& rule(int u_id);
    void ensure_rules(int degree);

    std::map<int, QHClass>& sweep_for(int v_id);

    const RootSystem* rs_;
    long long degree_cap_;
    size_t group_cap_;
    WeylTable table_;
    std::vector<WeylElement> reflections_; // per positive root
    std::map<std::pair<int, int>, std::vector<ChevEntry>> chev_cache_;
    std::map<int, Rule> rules_;
    int rules_built_upto_ = 0;
    // product sweeps keyed by the right factor, small LRU
    std::deque<std::pair<int, std::map<int, QHClass>>> sweeps_;
};

/// The Levi flag variety P/B of a parabolic setup, realized as a standalone
/// root system whose simple roots are the setup's in chain order. Elements of
/// W_P and coroots in Q_P^vee translate over by paper position.
class LeviFlag {
  public:
    explicit LeviFlag(const ParabolicSetup& setup, long long degree_cap = 48,
                      size_t group_cap = 1000000);

    const ParabolicSetup& setup() const { return *setup_; }
    const RootSystem& system() const { return *sub_; }
    QuantumContext& context() { return *ctx_; }

    WeylElement to_levi(const WeylElement& w) const;   // requires w in W_P
    Coroot coroot_to_levi(const Coroot& lambda) const; // requires support in Delta_P

    /// Cup product in H*(P/B): the q = 0 truncation of the standalone product,
    /// in standalone coordinates.
    QHClass classical_cup(const WeylElement& u, const WeylElement& v);
    /// Full quantum product in QH*(P/B), in standalone coordinates.
    QHClass qmul(const WeylElement& u, const WeylElement& v);

  private:
    const ParabolicSetup* setup_;
    std::unique_ptr<RootSystem> sub_;
    std::unique_ptr<QuantumContext> ctx_;
};

} // namespace qsc
