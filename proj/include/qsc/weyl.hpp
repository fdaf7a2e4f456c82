#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "qsc/rootsys.hpp"

namespace qsc {

/// A Weyl group element in canonical form: its integer action on the coroot
/// lattice. Column j of the matrix is w(alpha_j^vee). Equality, ordering and
/// hashing all go through this matrix, so reduced-word ambiguity never leaks.
class WeylElement {
  public:
    WeylElement() = default;
    static WeylElement identity(int n);

    int rank() const { return n_; }
    const std::vector<int>& matrix() const { return m_; }
    int entry(int row, int col) const { return m_[static_cast<size_t>(row) * n_ + col]; }

    Coroot apply(const Coroot& lambda) const;
    WeylElement operator*(const WeylElement& other) const;

    bool operator==(const WeylElement& o) const { return n_ == o.n_ && m_ == o.m_; }
    bool operator!=(const WeylElement& o) const { return !(*this == o); }
    bool operator<(const WeylElement& o) const { return m_ < o.m_; }
    bool is_identity() const;

    size_t hash() const;

    /// Reflection matrix for a (root, coroot) pair: lambda -> lambda - <gamma,lambda> gamma^vee.
    static WeylElement reflection(const RootSystem& rs, const Root& gamma, const Coroot& gamma_vee);
    static WeylElement simple_reflection(const RootSystem& rs, int i);

  private:
    int n_ = 0;
    std::vector<int> m_; // row-major n x n
};

struct WeylElementHash {
    size_t operator()(const WeylElement& w) const { return w.hash(); }
};

/// Product of simple reflections s_{word[0]} s_{word[1]} ... (0-based indices);
/// the word need not be reduced.
WeylElement from_word(const RootSystem& rs, const std::vector<int>& word);

/// Positions (into rs.positive_roots()) of {beta > 0 : w(beta) < 0}.
std::vector<int> inversion_set(const RootSystem& rs, const WeylElement& w);
int length(const RootSystem& rs, const WeylElement& w);

/// True iff w(alpha_i) is a negative root, i.e. l(w s_i) < l(w).
bool is_right_descent(const RootSystem& rs, const WeylElement& w, int i);
/// 1 if right multiplication by s_{alpha_i} shortens w, else 0.
int sgn_alpha(const RootSystem& rs, const WeylElement& w, int i);

/// Reduced word for w; deterministic (always peels the smallest left-descent
/// index), so w == s_{word[0]} ... s_{word[m-1]}.
std::vector<int> reduced_word(const RootSystem& rs, const WeylElement& w);

WeylElement inverse(const RootSystem& rs, const WeylElement& w);

/// All elements of the parabolic subgroup generated by {s_i : i in subset},
/// BFS order (by length, then discovery). Throws ResourceError above cap.
std::vector<WeylElement> enumerate_parabolic(const RootSystem& rs, const std::vector<int>& subset,
                                             size_t cap = 1000000);

/// Longest element of W_{subset} (greedy ascent; no enumeration).
WeylElement longest_element(const RootSystem& rs, const std::vector<int>& subset);

/// Minimal-length representative of the coset w W_{subset}.
WeylElement min_coset_rep(const RootSystem& rs, const WeylElement& w, const std::vector<int>& subset);

/// Minimal-length representatives of W_{big} / W_{small}; requires small ⊆ big.
std::vector<WeylElement> min_coset_reps(const RootSystem& rs, const std::vector<int>& big,
                                        const std::vector<int>& small, size_t cap = 1000000);

/// Unique factorization w = v_m ... v_2 v_1 along a nested chain
/// subsets[0] ⊆ ... ⊆ subsets[m-1], with w in W_{subsets[m-1]}. Returns
/// (v_1, ..., v_m), where v_j lies in W_{subsets[j-1]} and is the minimal
/// representative of its coset modulo W_{subsets[j-2]}. Lengths add up.
std::vector<WeylElement> parabolic_decompose(const RootSystem& rs, const WeylElement& w,
                                             const std::vector<std::vector<int>>& subsets);

/// Bruhat order via the one-sided recursive criterion.
bool bruhat_leq(const RootSystem& rs, const WeylElement& u, const WeylElement& v);

/// Orders of the (possibly reducible) parabolic subgroup W_{subset}, from the
/// classical formulas applied to each Dynkin component.
unsigned long long parabolic_order(const RootSystem& rs, const std::vector<int>& subset);

/// Connected components of the sub-diagram on `subset`, each with a detected
/// classical type, its rank, and the member indices in a Bourbaki-compatible
/// order for that type.
struct DiagramComponent {
    DynkinType type;
    int rank;
    std::vector<int> nodes; // ambient indices, Bourbaki order for `type`
};
std::vector<DiagramComponent> diagram_components(const RootSystem& rs, const std::vector<int>& subset);

/// Interning table: dense ids for elements of one root system's Weyl group.
/// Ids are assigned in first-seen order; lengths are cached.
class WeylTable {
  public:
    explicit WeylTable(const RootSystem& rs) : rs_(&rs) { id(WeylElement::identity(rs.rank())); }

    int id(const WeylElement& w);
    const WeylElement& element(int id) const { return elems_[id]; }
    int length_of(int id) const { return lengths_[id]; }
    size_t size() const { return elems_.size(); }
    const RootSystem& system() const { return *rs_; }

    /// Interns the whole group (cap-guarded) and returns ids grouped by length.
    const std::vector<std::vector<int>>& by_length(size_t cap = 1000000);

  private:
    const RootSystem* rs_;
    std::vector<WeylElement> elems_;
    std::vector<int> lengths_;
    std::unordered_map<WeylElement, int, WeylElementHash> ids_;
    std::vector<std::vector<int>> by_length_;
    bool enumerated_ = false;
};

} // namespace qsc
