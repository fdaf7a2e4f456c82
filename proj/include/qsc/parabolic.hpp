#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qsc/lattice.hpp"
#include "qsc/rootsys.hpp"
#include "qsc/weyl.hpp"

namespace qsc {

/// Shape classification of an ordered parabolic subset. The C-tags name the
/// connected non-A configurations (sub-diagram type + how it sits in the
/// ambient diagram); orderings matching a shipped preset are "certified".
enum class CaseTag { TypeA, C1B, C1C, C2, C4, C5, C7, C9, C10, Composite };
std::string to_string(CaseTag tag);

/// An ordered subset Delta_P = (alpha_1, ..., alpha_r) of the ambient simple
/// roots together with everything derived from the induced chain
/// Delta_0 = {} < Delta_1 < ... < Delta_r = Delta_P < Delta_{r+1} = Delta:
/// root levels, chain longest elements, Peterson-Woodward lifts, the virtual
/// null coroot lattice, and the lifting table.
///
/// Logically immutable after construction. Lift results are memoized in an
/// unsynchronized cache, so concurrent readers must warm it single-threaded
/// (or guard it externally) before sharing.
class ParabolicSetup {
  public:
    /// `ordered` holds 0-based ambient indices; the order is the chain order.
    ParabolicSetup(const RootSystem& rs, std::vector<int> ordered);

    /// Preset names: "A:r", "C1B:r", "C1C:r", "C2:r", "C4:r", "C5:5",
    /// "C7:r", "C9:r", "C10:3" (r in decimal), validated against the ambient.
    static ParabolicSetup preset(const RootSystem& rs, const std::string& name);
    /// All preset names available for this ambient system.
    static std::vector<std::string> preset_names(const RootSystem& rs);

    const RootSystem& system() const { return *rs_; }
    int r() const { return static_cast<int>(delta_p_.size()); }
    int n() const { return rs_->rank(); }
    const std::vector<int>& delta_p() const { return delta_p_; }

    /// Paper position (1..r, or r+1 / r+2 for the labeled boundary nodes)
    /// -> ambient 0-based index.
    int ambient_of(int paper_pos) const;
    /// Ambient index -> paper position for members of Delta_P.
    std::optional<int> paper_pos_of(int ambient) const;

    CaseTag tag() const { return tag_; }
    bool table1_ordering() const { return table1_ordering_; }
    const std::vector<int>& boundary() const { return boundary_; }
    std::optional<int> boundary_r1() const { return alpha_r1_; }
    std::optional<int> boundary_r2() const { return alpha_r2_; }
    /// Paper positions 1..r grouped into Dynkin components (chain order).
    const std::vector<std::vector<int>>& components_paper() const { return components_paper_; }

    /// Delta_j as ambient indices, j = 0..r+1 (j = r+1 is the full set).
    const std::vector<int>& chain_subset(int j) const;
    /// Level of a positive root (index into positive_roots()): the smallest j
    /// with support inside Delta_j; r+1 for roots not supported on Delta_P.
    int root_level(int root_idx) const { return root_level_[root_idx]; }
    /// Positive-root indices at each level 1..r+1.
    const std::vector<std::vector<int>>& roots_by_level() const { return roots_by_level_; }

    const WeylElement& longest_wp() const { return chain_longest_[r()]; }
    const WeylElement& chain_longest(int j) const { return chain_longest_[j]; }

    bool in_min_reps(const WeylElement& w) const; // w in W^P
    bool in_levi(const WeylElement& w) const;     // w in W_P

    /// Canonical representative of lambda + Q_P^vee: Delta_P coordinates zeroed.
    Coroot normalize_class(const Coroot& rep) const;

    struct Lift {
        Coroot lambda_b;
        WeylElement wp_wpprime;        // w_{P_j} w_{P_j'}
        std::vector<int> minus_paper;  // paper positions with pairing -1
        std::vector<int> zero_paper;   // paper positions with pairing 0 (Delta')
        int k() const { return minus_paper.size() == 1 ? minus_paper[0] : 0; }
    };
    /// Unique lift of rep + Q^vee_{Delta_level} pairing into {0,-1} with every
    /// positive root of Delta_level. level defaults to r (the full Delta_P).
    Lift pw_lift(const Coroot& rep, int level = -1) const;

    bool is_virtual_null(const Coroot& lambda) const;
    bool is_virtual_null_class(const Coroot& rep) const;

    /// q_{rep + Q_P} sigma^w  |->  (w * w_P w_{P'}, lambda_B). Requires w in W^P.
    std::pair<WeylElement, Coroot> psi(const Coroot& rep, const WeylElement& w) const;

    struct NullLattice {
        IntMat lb_basis;                   // rows: basis of L_B inside Q^vee
        std::vector<Int> quotient_torsion; // invariant factors > 1 of (Q/Q_P)/L
        Int quotient_order;
        IntMat class_generators;           // rows: reps generating the cyclic factors
    };
    const NullLattice& virtual_null_lattice() const;

    struct LiftingRow {
        Coroot class_rep; // normalized representative
        Coroot lambda_b;
        WeylElement u;    // w_P w_{P'}
        std::vector<int> u_word;
        int k;            // paper position with pairing -1 (0 if none)
    };
    /// One row per nontrivial class of (Q^vee/Q_P^vee) / L, in deterministic
    /// order over the cyclic-factor exponents.
    std::vector<LiftingRow> lifting_table() const;

    /// Fundamental coweights of the semisimple Levi part: omega_{i,P}^vee as
    /// rational tuples over the paper simple coroots, <alpha_i, omega_j> = delta_ij.
    std::vector<std::vector<Rational>> levi_coweights() const;

    /// sum over the level-j layer of <beta, alpha_k^vee>, j = 1..r+1 (row j-1).
    const std::vector<std::vector<long long>>& layer_pairing() const { return layer_pairing_; }

  private:
    void classify();
    void build_chain();

    const RootSystem* rs_;
    std::vector<int> delta_p_;
    std::vector<int> paper_pos_;  // ambient -> 1..r or 0
    CaseTag tag_ = CaseTag::TypeA;
    bool table1_ordering_ = false;
    std::vector<int> boundary_;
    std::optional<int> alpha_r1_, alpha_r2_;
    std::vector<std::vector<int>> components_paper_;
    std::vector<std::vector<int>> chain_;
    std::vector<int> root_level_;
    std::vector<std::vector<int>> roots_by_level_;
    std::vector<WeylElement> chain_longest_;
    std::vector<std::vector<long long>> layer_pairing_;

    mutable std::map<std::pair<int, Coroot>, Lift> lift_cache_;
    mutable std::unique_ptr<NullLattice> null_lattice_;
};

} // namespace qsc
