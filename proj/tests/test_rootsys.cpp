#include <doctest.h>

#include "qsc/rootsys.hpp"

using namespace qsc;

TEST_CASE("positive root counts match the classical values") {
    CHECK(RootSystem::build(DynkinType::A, 2).num_positive_roots() == 3);
    CHECK(RootSystem::build(DynkinType::B, 3).num_positive_roots() == 9);
    CHECK(RootSystem::build(DynkinType::F, 4).num_positive_roots() == 24);
    CHECK(RootSystem::build(DynkinType::G, 2).num_positive_roots() == 6);
    CHECK(RootSystem::build(DynkinType::E, 6).num_positive_roots() == 36);
}

TEST_CASE("invalid type/rank pairs are rejected") {
    CHECK_THROWS_AS(RootSystem::build(DynkinType::E, 5), ConfigError);
    CHECK_THROWS_AS(RootSystem::build(DynkinType::F, 3), ConfigError);
    CHECK_THROWS_AS(RootSystem::build(DynkinType::D, 3), ConfigError);
    CHECK_THROWS_AS(RootSystem::build(DynkinType::B, 1), ConfigError);
}

TEST_CASE("A2 pairing values") {
    RootSystem rs = RootSystem::build(DynkinType::A, 2);
    Root a1{1, 0}, a12{1, 1};
    Coroot a1v{1, 0};
    CHECK(rs.pairing(a1, a1v) == 2);
    CHECK(rs.pairing(a12, a1v) == 1);
}

TEST_CASE("B2 pairing convention: <long, short-vee> = -2") {
    RootSystem rs = RootSystem::build(DynkinType::B, 2);
    Root a1{1, 0}, a2{0, 1};
    Coroot a1v{1, 0}, a2v{0, 1};
    CHECK(rs.pairing(a1, a2v) == -2);
    CHECK(rs.pairing(a2, a1v) == -1);
}

TEST_CASE("coroots: simply-laced coordinates copy, B2 long root rescales") {
    RootSystem a2 = RootSystem::build(DynkinType::A, 2);
    CHECK(a2.coroot_of(Root{1, 1}) == Coroot{1, 1});
    CHECK(a2.coroot_of(Root{1, 0}) == Coroot{1, 0});

    RootSystem b2 = RootSystem::build(DynkinType::B, 2);
    // the long root alpha_1 + 2 alpha_2 has coroot alpha_1^vee + alpha_2^vee
    Root long_root{1, 2};
    REQUIRE(b2.is_root(long_root));
    Coroot cov = b2.coroot_of(long_root);
    CHECK(cov == Coroot{1, 1});
    // the reflection built from (gamma, gamma^vee) is an involution sending
    // gamma to -gamma
    Coroot img = cov;
    long long p = b2.pairing(long_root, cov);
    CHECK(p == 2);
}

TEST_CASE("simple reflections act by the standard formulas") {
    RootSystem a2 = RootSystem::build(DynkinType::A, 2);
    CHECK(a2.reflect_coroot(0, Coroot{1, 0}) == Coroot{-1, 0});
    CHECK(a2.reflect_coroot(0, Coroot{0, 1}) == Coroot{1, 1});
    // involution on a batch of coroots
    for (int x = -2; x <= 2; ++x)
        for (int y = -2; y <= 2; ++y) {
            Coroot lam{x, y};
            CHECK(a2.reflect_coroot(1, a2.reflect_coroot(1, lam)) == lam);
        }
}

TEST_CASE("pairing of a root with its own coroot is 2, reflections permute roots") {
    for (auto [t, n] : {std::pair{DynkinType::B, 3}, {DynkinType::F, 4}, {DynkinType::G, 2},
                        {DynkinType::D, 4}}) {
        RootSystem rs = RootSystem::build(t, n);
        for (int idx = 0; idx < rs.num_positive_roots(); ++idx) {
            const Root& beta = rs.positive_roots()[idx];
            CHECK(rs.pairing(beta, rs.positive_coroot(idx)) == 2);
            for (int i = 0; i < rs.rank(); ++i) CHECK(rs.is_root(rs.reflect_root(i, beta)));
        }
    }
}

TEST_CASE("two-rho pairing is twice the coordinate sum") {
    RootSystem b3 = RootSystem::build(DynkinType::B, 3);
    CHECK(b3.two_rho_pairing(Coroot{1, 0, 0}) == 2);
    CHECK(b3.two_rho_pairing(Coroot{1, 2, 0}) == 6);
    CHECK(b3.two_rho_pairing(Coroot{1, 1, 1}) == 6);
    RootSystem a2 = RootSystem::build(DynkinType::A, 2);
    CHECK(a2.two_rho_pairing(Coroot{1, 1}) == 4);
}

TEST_CASE("reflections in arbitrary roots are involutions permuting the roots") {
    for (auto [t, n] : {std::pair{DynkinType::B, 3}, {DynkinType::F, 4}}) {
        RootSystem rs = RootSystem::build(t, n);
        for (int idx = 0; idx < rs.num_positive_roots(); ++idx) {
            const Root& gamma = rs.positive_roots()[idx];
            const Coroot& gv = rs.positive_coroot(idx);
            // s_gamma(lambda) = lambda - <gamma, lambda> gamma^vee on each coroot
            for (int k = 0; k < rs.num_positive_roots(); ++k) {
                const Coroot& lam = rs.positive_coroot(k);
                Coroot img = lam;
                long long p = rs.pairing(gamma, lam);
                for (int i = 0; i < rs.rank(); ++i) img[i] -= static_cast<int>(p) * gv[i];
                // involution
                Coroot back = img;
                long long p2 = rs.pairing(gamma, img);
                for (int i = 0; i < rs.rank(); ++i) back[i] -= static_cast<int>(p2) * gv[i];
                CHECK(back == lam);
            }
            // s_gamma sends gamma to its negative
            Coroot self = gv;
            long long p = rs.pairing(gamma, gv);
            CHECK(p == 2);
        }
    }
}

TEST_CASE("deterministic root ordering: by height then lexicographic") {
    RootSystem rs = RootSystem::build(DynkinType::B, 3);
    for (int i = 0; i + 1 < rs.num_positive_roots(); ++i) {
        CHECK(rs.root_height(i) <= rs.root_height(i + 1));
        if (rs.root_height(i) == rs.root_height(i + 1))
            CHECK(rs.positive_roots()[i] < rs.positive_roots()[i + 1]);
    }
    CHECK(rs.root_index(Root{1, 0, 0}).has_value());
    CHECK(!rs.root_index(Root{2, 0, 0}).has_value());
}
