#include <doctest.h>

#include "qsc/verify.hpp"

using namespace qsc;

TEST_CASE("root count criterion") {
    VerifyEnv env;
    CheckReport r = check_root_counts(env);
    CHECK(r.pass);
}

TEST_CASE("filtration check passes on the smallest flag variety") {
    VerifyEnv env;
    ProductAudit audit;
    CheckReport r = check_filtration(env, "A2", "A:1", &audit);
    CHECK(r.pass);
    CHECK(r.instances == 36);
    CHECK(audit.violations == 0);
}

TEST_CASE("grading coincidence on mixed setups") {
    VerifyEnv env;
    CHECK(check_grading_coincidence(env, "A2", "A:1").pass);
    CHECK(check_grading_coincidence(env, "A3", "1,3").pass);
    CHECK(check_grading_coincidence(env, "B3", "C1B:2").pass);
    CHECK(check_grading_coincidence(env, "D4", "C2:3").pass);
    // composites mixing a chain component with a tail component
    CHECK(check_grading_coincidence(env, "B5", "1,4,5").pass);
    CHECK(check_grading_coincidence(env, "D5", "1,3,4,5").pass);
}

TEST_CASE("table reproduction") {
    VerifyEnv env;
    for (const CheckReport& r : reproduce_tables(env, 2)) CHECK(r.pass);
    for (const CheckReport& r : reproduce_tables(env, 3)) CHECK(r.pass);
    for (const CheckReport& r : reproduce_tables(env, 5)) CHECK(r.pass);
}

TEST_CASE("negative controls fail as designed") {
    VerifyOptions opt;
    opt.corruption = Corruption::GradingOffByOne;
    VerifyEnv bad_gr(opt);
    CheckReport r = check_filtration(bad_gr, "A2", "A:1");
    CHECK(!r.pass);
    CHECK(!r.counterexample.is_null());

    opt.corruption = Corruption::TableTypo;
    VerifyEnv bad_tab(opt);
    bool any_fail = false;
    for (const CheckReport& t : reproduce_tables(bad_tab, 3)) any_fail |= !t.pass;
    CHECK(any_fail);
}

TEST_CASE("filtration bound on a rank-four tail, bounded sweep") {
    VerifyEnv env;
    const auto& b = env.bundle("B4", "C1B:3");
    QuantumContext& ctx = env.context(*b.rs);
    const Grading& G = *b.grading;
    std::vector<int> full{0, 1, 2, 3};
    long long terms = 0;
    for (const WeylElement& u : enumerate_parabolic(*b.rs, full)) {
        if (length(*b.rs, u) > 4) continue;
        GradeVector gu = G.gr_w(u);
        for (const WeylElement& v : enumerate_parabolic(*b.rs, full)) {
            if (length(*b.rs, u) + length(*b.rs, v) > 8) continue;
            QHClass prod = ctx.qmul_basis(u, v);
            GradeVector bound = gu + G.gr_w(v);
            for (const auto& [key, c] : prod.terms()) {
                ++terms;
                CHECK(lex_leq(G.gr(ctx.table().element(key.w), key.q), bound));
                CHECK(c > 0);
            }
        }
    }
    CHECK(terms > 10000);
}

TEST_CASE("surjectivity dichotomy on the rank-three tails") {
    VerifyOptions opt;
    opt.surj_qsum_bound = 4; // small sweep for the unit test
    VerifyEnv env(opt);
    CHECK(check_psi_injective_surjective(env, "B3", "C1B:2", true).pass);
    CheckReport r = check_psi_injective_surjective(env, "C3", "C1C:2", false);
    CHECK(r.pass);
    CHECK(!r.counterexample.is_null()); // carries the witness
}

TEST_CASE("well-definedness, leading terms and null products on B3") {
    VerifyOptions opt;
    opt.box = 12;
    VerifyEnv env(opt);
    CHECK(check_psi_welldefined(env, "B3", "C1B:2").pass);
    CHECK(check_prop_vu(env, "B3", "C1B:2").pass);
    CHECK(check_virtual_null_product(env, "B3", "C1B:2").pass);
    CHECK(check_prop_vu(env, "A2", "A:1").pass);
}

TEST_CASE("morphism checks on the isomorphism case and a tail case") {
    VerifyEnv env;
    CHECK(check_psi_morphism(env, "A2", "A:1").pass);
    CHECK(check_psi_morphism(env, "B3", "C1B:2").pass);
}

TEST_CASE("walkthrough, quotient isomorphisms, cup vanishing") {
    VerifyEnv env;
    CHECK(check_example12(env).pass);
    CHECK(check_theorem_general(env, "A2", "A:1").pass);
    CHECK(check_theorem_general(env, "A3", "A:2").pass);
    CHECK(check_theorem_general(env, "B3", "C1B:2").pass);
    CHECK(check_cup_vanishing(env).pass);
}

TEST_CASE("grade uniqueness and the composite-order semigroup") {
    VerifyEnv env;
    CHECK(check_grade_uniqueness(env, "B3", "C1B:2").pass);
    CHECK(check_semigroup(env, "A3", "1,3", 8).pass);
}

TEST_CASE("sampled associativity") {
    VerifyEnv env;
    CheckReport r = check_associativity(env, "A2", 50);
    CHECK(r.pass);
    CHECK(r.instances == 50);
}

TEST_CASE("reports serialize to json") {
    VerifyEnv env;
    CheckReport r = check_root_counts(env);
    Json j = r.to_json();
    CHECK(j["pass"] == true);
    CHECK(j["id"] == "root-counts");
}
