#include <doctest.h>

#include <numeric>

#include "qsc/parabolic.hpp"

using namespace qsc;

namespace {
WeylElement w_of(const RootSystem& rs, std::initializer_list<int> one_based) {
    std::vector<int> word;
    for (int i : one_based) word.push_back(i - 1);
    return from_word(rs, word);
}
} // namespace

TEST_CASE("presets carry the advertised case tags") {
    RootSystem b3 = RootSystem::build(DynkinType::B, 3);
    ParabolicSetup s = ParabolicSetup::preset(b3, "C1B:2");
    CHECK(s.tag() == CaseTag::C1B);
    CHECK(s.table1_ordering());
    CHECK(s.delta_p() == std::vector<int>{1, 2});
    CHECK(s.boundary_r1().value() == 0);

    RootSystem f4 = RootSystem::build(DynkinType::F, 4);
    ParabolicSetup c9 = ParabolicSetup::preset(f4, "C9:2");
    CHECK(c9.tag() == CaseTag::C9);
    CHECK(c9.delta_p() == std::vector<int>{1, 2});
    CHECK(c9.boundary_r1().value() == 3); // adjacent to the chain end
    CHECK(c9.boundary_r2().value() == 0);
    CHECK(ParabolicSetup::preset(f4, "C10:3").delta_p() == std::vector<int>{3, 2, 1});

    RootSystem d4 = RootSystem::build(DynkinType::D, 4);
    CHECK(ParabolicSetup::preset(d4, "C2:3").tag() == CaseTag::C2);

    RootSystem a4 = RootSystem::build(DynkinType::A, 4);
    ParabolicSetup comp(a4, {0, 2});
    CHECK(comp.tag() == CaseTag::Composite);
    CHECK(comp.components_paper().size() == 2);

    CHECK_THROWS_AS(ParabolicSetup::preset(b3, "C9:2"), ConfigError);
    CHECK_THROWS_AS(ParabolicSetup(b3, {0, 1, 2}), ConfigError); // must be proper
}

TEST_CASE("the E6 rank-5 subset carries both labels with one ordering") {
    RootSystem e6 = RootSystem::build(DynkinType::E, 6);
    ParabolicSetup c5 = ParabolicSetup::preset(e6, "C5:5");
    ParabolicSetup c7 = ParabolicSetup::preset(e6, "C7:5");
    CHECK(c5.delta_p() == c7.delta_p());
    CHECK(c5.tag() == CaseTag::C5);
}

TEST_CASE("comparison lift in the SL(3) example") {
    RootSystem a2 = RootSystem::build(DynkinType::A, 2);
    ParabolicSetup s(a2, {0}); // Delta_P = {alpha_1}
    auto lift = s.pw_lift(Coroot{0, 1});
    CHECK(lift.lambda_b == Coroot{0, 1});
    CHECK(lift.zero_paper.empty());
    CHECK(lift.k() == 1);
    CHECK(lift.wp_wpprime == w_of(a2, {1}));
    auto [img, lam] = s.psi(Coroot{0, 1}, WeylElement::identity(2));
    CHECK(img == w_of(a2, {1}));
    CHECK(lam == Coroot{0, 1});
    CHECK_THROWS_AS(s.psi(Coroot{0, 1}, w_of(a2, {1})), UsageError); // s_1 not minimal
}

TEST_CASE("zero class lifts to zero with the full Levi") {
    RootSystem b3 = RootSystem::build(DynkinType::B, 3);
    ParabolicSetup s = ParabolicSetup::preset(b3, "C1B:2");
    auto lift = s.pw_lift(Coroot{0, 0, 0});
    CHECK(lift.lambda_b == Coroot{0, 0, 0});
    CHECK(lift.minus_paper.empty());
    CHECK(lift.wp_wpprime.is_identity());
}

TEST_CASE("B3 tail case: lift, lifted word, virtual null lattice") {
    RootSystem b3 = RootSystem::build(DynkinType::B, 3);
    ParabolicSetup s = ParabolicSetup::preset(b3, "C1B:2");
    // paper alpha_3 = ambient alpha_1
    auto lift = s.pw_lift(Coroot{1, 0, 0});
    CHECK(lift.lambda_b == Coroot{1, 0, 0});
    CHECK(lift.k() == 1);
    CHECK(lift.zero_paper == std::vector<int>{2});
    // w_P w_{P'} = s_2 s_3 s_2 in ambient letters
    CHECK(lift.wp_wpprime == w_of(b3, {2, 3, 2}));

    const auto& nl = s.virtual_null_lattice();
    REQUIRE(nl.quotient_torsion.size() == 1);
    CHECK(nl.quotient_torsion[0] == 2);
    // mu_B = 2 alpha_3^vee + alpha_2^vee + 2 alpha_1^vee in paper coordinates,
    // i.e. ambient (2, 2, 1)
    CHECK(s.is_virtual_null(Coroot{2, 2, 1}));
    CHECK(s.is_virtual_null_class(Coroot{2, 0, 0}));
    CHECK(!s.is_virtual_null_class(Coroot{1, 0, 0}));

    auto rows = s.lifting_table();
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].k == 1);
    CHECK(rows[0].u == w_of(b3, {2, 3, 2}));
}

TEST_CASE("C3 tail case has a trivial quotient") {
    RootSystem c3 = RootSystem::build(DynkinType::C, 3);
    ParabolicSetup s = ParabolicSetup::preset(c3, "C1C:2");
    CHECK(s.virtual_null_lattice().quotient_torsion.empty());
    CHECK(s.is_virtual_null(Coroot{1, 1, 1}));
    CHECK(s.lifting_table().empty());
}

TEST_CASE("F4 cases: lattice data and lifted words") {
    RootSystem f4 = RootSystem::build(DynkinType::F, 4);
    ParabolicSetup c9 = ParabolicSetup::preset(f4, "C9:2");
    const auto& nl = c9.virtual_null_lattice();
    REQUIRE(nl.quotient_torsion.size() == 1);
    CHECK(nl.quotient_torsion[0] == 2);
    // paper mu_1 = 2a4 + 2a1 + a2 -> ambient (2,2,1,0); mu_2 = a3+a1+a2 -> (0,1,1,1)
    CHECK(c9.is_virtual_null(Coroot{2, 2, 1, 0}));
    CHECK(c9.is_virtual_null(Coroot{0, 1, 1, 1}));
    auto rows = c9.lifting_table();
    REQUIRE(rows.size() == 1);
    // q_4-paper = ambient alpha_1: u = s_1 s_2 s_1 in paper letters = ambient {2,3,2}
    CHECK(rows[0].lambda_b == Coroot{1, 0, 0, 0});
    CHECK(rows[0].u == w_of(f4, {2, 3, 2}));
    CHECK(rows[0].k == 1);

    ParabolicSetup c10 = ParabolicSetup::preset(f4, "C10:3");
    auto rows10 = c10.lifting_table();
    REQUIRE(rows10.size() == 1);
    CHECK(rows10[0].lambda_b == Coroot{1, 0, 0, 0});
    CHECK(rows10[0].k == 3);
    // paper word 3,2,3,1,2,3 -> ambient letters 2,3,2,4,3,2
    CHECK(rows10[0].u == w_of(f4, {2, 3, 2, 4, 3, 2}));
}

TEST_CASE("detached simple coroots are virtual null") {
    RootSystem b4 = RootSystem::build(DynkinType::B, 4);
    ParabolicSetup s = ParabolicSetup::preset(b4, "C1B:2"); // alpha_1 detached
    CHECK(s.is_virtual_null(Coroot{1, 0, 0, 0}));
    CHECK(s.is_virtual_null_class(Coroot{1, 0, 0, 0}));
    auto lift = s.pw_lift(Coroot{1, 0, 0, 0});
    CHECK(lift.lambda_b == Coroot{1, 0, 0, 0});
    CHECK(lift.wp_wpprime.is_identity());
}

TEST_CASE("lift additivity under virtual null classes") {
    RootSystem b3 = RootSystem::build(DynkinType::B, 3);
    ParabolicSetup s = ParabolicSetup::preset(b3, "C1B:2");
    for (int a = 0; a <= 4; ++a) {
        Coroot lam{a, 0, 0};
        Coroot mu{2, 0, 0}; // virtual null class
        auto la = s.pw_lift(lam);
        auto lmu = s.pw_lift(mu);
        Coroot sum{a + 2, 0, 0};
        auto lsum = s.pw_lift(sum);
        Coroot expect(3, 0);
        for (int i = 0; i < 3; ++i) expect[i] = la.lambda_b[i] + lmu.lambda_b[i];
        CHECK(lsum.lambda_b == expect);
        CHECK(lsum.zero_paper == la.zero_paper);
    }
}

TEST_CASE("Levi coweights are dual to the Levi simple roots") {
    RootSystem f4 = RootSystem::build(DynkinType::F, 4);
    ParabolicSetup s = ParabolicSetup::preset(f4, "C9:3");
    auto om = s.levi_coweights();
    for (int i = 0; i < s.r(); ++i)
        for (int j = 0; j < s.r(); ++j) {
            Rational acc(0);
            for (int k = 0; k < s.r(); ++k)
                acc += Rational(f4.pairing_simple(s.delta_p()[i], s.delta_p()[k])) * om[j][k];
            CHECK(acc == (i == j ? 1 : 0));
        }
}

TEST_CASE("lift uniqueness holds across a box of classes") {
    RootSystem c4 = RootSystem::build(DynkinType::C, 4);
    ParabolicSetup s = ParabolicSetup::preset(c4, "C1C:3");
    for (int a = 0; a <= 3; ++a) {
        auto lift = s.pw_lift(Coroot{a, 0, 0, 0});
        for (int j = 1; j <= s.r(); ++j) {
            Root alpha(4, 0);
            alpha[s.delta_p()[j - 1]] = 1;
            long long v = c4.pairing(alpha, lift.lambda_b);
            CHECK((v == 0 || v == -1));
        }
    }
}
