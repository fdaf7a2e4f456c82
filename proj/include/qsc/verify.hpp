#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "qsc/grading.hpp"
#include "qsc/parabolic.hpp"
#include "qsc/qh.hpp"

namespace qsc {

using Json = nlohmann::ordered_json;

struct CheckReport {
    std::string id;
    std::string setup;
    bool pass = true;
    bool skipped = false;
    long long instances = 0;
    std::string detail;
    Json counterexample; // minimal reproducing instance when failing
    double wall_ms = 0;

    Json to_json() const;
    void fail(const std::string& why, Json example);
};

/// Deliberate corruptions for the negative-control suite: each must make the
/// corresponding check fail, demonstrating the harness's sensitivity.
enum class Corruption { None, GradingOffByOne, TableTypo };

struct VerifyOptions {
    long long degree_cap = 48;
    size_t group_cap = 1000000;
    int surj_qsum_bound = 8; // bound on the q-exponent sum in image sweeps
    int box = 50;            // minimum number of coset classes per box sweep
    unsigned seed = 20240611;
    Corruption corruption = Corruption::None;
    int table4_u_rank_cap = 5; // u verified only up to this ambient rank (F4 always)
};

/// Owns root systems, product contexts, setups and gradings for the run, so
/// checks share caches. Single-threaded use.
class VerifyEnv {
  public:
    explicit VerifyEnv(VerifyOptions opt = {}) : opt_(opt) {}

    const VerifyOptions& options() const { return opt_; }

    const RootSystem& system(DynkinType t, int rank);
    const RootSystem& system(const std::string& label); // e.g. "B3"
    QuantumContext& context(const RootSystem& rs);

    struct Bundle {
        const RootSystem* rs;
        const ParabolicSetup* setup;
        const Grading* grading;
        std::string label;
    };
    /// `spec` is a preset name ("C1B:2") or a comma list of 1-based ambient
    /// simple indices in chain order ("1,3").
    const Bundle& bundle(const std::string& system_label, const std::string& spec);

    /// Paper-coordinate coroot (pairs of 1-based paper position, coefficient)
    /// converted to ambient coordinates.
    Coroot paper_coroot(const ParabolicSetup& setup,
                        const std::vector<std::pair<int, int>>& terms) const;
    WeylElement paper_word(const ParabolicSetup& setup, const std::vector<int>& word) const;

  private:
    VerifyOptions opt_;
    std::map<std::string, std::unique_ptr<RootSystem>> systems_;
    std::map<const RootSystem*, std::unique_ptr<QuantumContext>> contexts_;
    std::map<std::string, std::unique_ptr<Bundle>> bundles_;
    std::vector<std::unique_ptr<ParabolicSetup>> setups_;
    std::vector<std::unique_ptr<Grading>> gradings_;
};

/// Running tally of the product invariants applied to every product the
/// checks compute: coefficient nonnegativity, degree homogeneity, the descent
/// inequality bound, and commutativity of the recomputed swapped product.
struct ProductAudit {
    long long products = 0;
    long long term_checks = 0;
    long long violations = 0;
    bool check_commutativity = true;
    Json first_violation;

    void audit(QuantumContext& ctx, const WeylElement& u, const WeylElement& v,
               const QHClass& prod);
};

// ---- individual checks ------------------------------------------------

CheckReport check_root_counts(VerifyEnv& env);
CheckReport check_filtration(VerifyEnv& env, const std::string& system, const std::string& setup,
                             ProductAudit* audit = nullptr);
CheckReport check_grading_coincidence(VerifyEnv& env, const std::string& system,
                                      const std::string& setup, int sample = 0);
CheckReport check_coroot_grade_props(VerifyEnv& env, const std::string& system,
                                     const std::string& setup);
CheckReport check_psi_welldefined(VerifyEnv& env, const std::string& system,
                                  const std::string& setup);
CheckReport check_psi_injective_surjective(VerifyEnv& env, const std::string& system,
                                           const std::string& setup, bool expect_surjective);
CheckReport check_psi_morphism(VerifyEnv& env, const std::string& system, const std::string& setup,
                               int length_bound = -1, ProductAudit* audit = nullptr);
CheckReport check_prop_vu(VerifyEnv& env, const std::string& system, const std::string& setup,
                          ProductAudit* audit = nullptr);
CheckReport check_virtual_null_product(VerifyEnv& env, const std::string& system,
                                       const std::string& setup, ProductAudit* audit = nullptr);
CheckReport check_example12(VerifyEnv& env, ProductAudit* audit = nullptr);
CheckReport check_theorem_general(VerifyEnv& env, const std::string& system,
                                  const std::string& setup, ProductAudit* audit = nullptr);
CheckReport check_cup_vanishing(VerifyEnv& env, ProductAudit* audit = nullptr);
CheckReport check_associativity(VerifyEnv& env, const std::string& system, int triples,
                                int max_word_len = 4);
CheckReport check_grade_uniqueness(VerifyEnv& env, const std::string& system,
                                   const std::string& setup);
CheckReport check_semigroup(VerifyEnv& env, const std::string& system, const std::string& setup,
                            int bound);

std::vector<CheckReport> reproduce_tables(VerifyEnv& env, int which, ProductAudit* audit = nullptr);

// ---- suites ------------------------------------------------------------

/// Named suites: "all", "example12", "tables" (which in 2..7, 0 = all),
/// "filtration", "coincidence", "welldefined", "surjectivity", "morphism",
/// "propvu", "virtualnull", "theorem", "cup", "invariants", "negative".
std::vector<CheckReport> run_suite(VerifyEnv& env, const std::string& name, int which = 0);

/// The acceptance gate: every numbered criterion, one report each, with the
/// shared product audit reported as its own criterion.
std::vector<CheckReport> run_acceptance(VerifyEnv& env);

} // namespace qsc
