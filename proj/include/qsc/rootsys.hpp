#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qsc/errors.hpp"

namespace qsc {

enum class DynkinType : char {
    A = 'A',
    B = 'B',
    C = 'C',
    D = 'D',
    E = 'E',
    F = 'F',
    G = 'G',
};

DynkinType dynkin_type_from_char(char c);
std::string to_string(DynkinType t);

/// Integer coordinates over the simple roots (root lattice).
using Root = std::vector<int>;
/// Integer coordinates over the simple coroots (the lattice Q^vee).
using Coroot = std::vector<int>;

/// A finite crystallographic root system with Bourbaki numbering of the
/// simple roots. Immutable after construction; all queries are const.
///
/// Pairing convention: cartan()[i][j] = <alpha_j, alpha_i^vee>, so the
/// reflection formulas read
///   s_i(lambda) = lambda - <alpha_i, lambda> alpha_i^vee,
///   s_i(beta)   = beta   - <beta, alpha_i^vee> alpha_i.
/// In type B2 this stores <alpha_1(long), alpha_2^vee(short)> = -2.
class RootSystem {
  public:
    /// Builds types A..G at the given rank (E requires rank in {6,7,8},
    /// F rank 4, G rank 2, B/C rank >= 2, D rank >= 4).
    static RootSystem build(DynkinType type, int rank);

    /// Builds from an explicit Cartan matrix (entry[i][j] = <alpha_j, alpha_i^vee>).
    /// Used for Levi subsystems in arbitrary labelings.
    static RootSystem from_cartan(const std::vector<std::vector<int>>& cartan,
                                  std::string label = "custom");

    int rank() const { return rank_; }
    const std::string& label() const { return label_; }
    const std::vector<std::vector<int>>& cartan() const { return cartan_; }

    /// <alpha_i, alpha_j^vee> for simple roots (0-based indices).
    int pairing_simple(int i, int j) const { return cartan_[j][i]; }
    /// Bilinear extension of the Cartan pairing.
    long long pairing(const Root& beta, const Coroot& lambda) const;

    const std::vector<Root>& positive_roots() const { return positive_roots_; }
    int num_positive_roots() const { return static_cast<int>(positive_roots_.size()); }
    const Coroot& positive_coroot(int idx) const { return positive_coroots_[idx]; }
    int root_height(int idx) const { return heights_[idx]; }

    /// Position in positive_roots(), if beta is a positive root.
    std::optional<int> root_index(const Root& beta) const;
    bool is_root(const Root& beta) const;

    /// Coroot of an arbitrary root, via the length-ratio rescaling
    /// gamma^vee_i = c_i * (alpha_i,alpha_i) / (gamma,gamma).
    Coroot coroot_of(const Root& gamma) const;

    Root reflect_root(int i, const Root& beta) const;
    Coroot reflect_coroot(int i, const Coroot& lambda) const;

    /// sum_{beta in R^+} <beta, lambda>  (equals 2*sum of coordinates of lambda).
    long long two_rho_pairing(const Coroot& lambda) const;

    /// Half squared lengths of the simple roots, normalized to smallest = 1.
    const std::vector<long long>& half_lengths() const { return half_len_; }

    /// Classical |W| for a full system of this type, when known.
    static unsigned long long weyl_order(DynkinType t, int rank);

  private:
    RootSystem() = default;
    void finish_construction();

    std::string label_;
    int rank_ = 0;
    std::vector<std::vector<int>> cartan_;
    std::vector<long long> half_len_;
    std::vector<Root> positive_roots_;
    std::vector<Coroot> positive_coroots_;
    std::vector<int> heights_;
    std::map<Root, int> index_;
};

} // namespace qsc
