#include <doctest.h>

#include <numeric>
#include <random>

#include "qsc/weyl.hpp"

using namespace qsc;

namespace {
WeylElement w_of(const RootSystem& rs, std::initializer_list<int> one_based) {
    std::vector<int> word;
    for (int i : one_based) word.push_back(i - 1);
    return from_word(rs, word);
}
std::vector<int> full_set(const RootSystem& rs) {
    std::vector<int> v(rs.rank());
    std::iota(v.begin(), v.end(), 0);
    return v;
}
} // namespace

TEST_CASE("braid relation in A2 and the B2 longest element") {
    RootSystem a2 = RootSystem::build(DynkinType::A, 2);
    CHECK(w_of(a2, {}) == WeylElement::identity(2));
    CHECK(w_of(a2, {1, 2, 1}) == w_of(a2, {2, 1, 2}));
    RootSystem b2 = RootSystem::build(DynkinType::B, 2);
    WeylElement w0 = w_of(b2, {1, 2, 1, 2});
    CHECK(length(b2, w0) == 4);
    CHECK(w0 == longest_element(b2, {0, 1}));
}

TEST_CASE("lengths and inversion sets") {
    RootSystem a2 = RootSystem::build(DynkinType::A, 2);
    CHECK(inversion_set(a2, WeylElement::identity(2)).empty());
    CHECK(inversion_set(a2, w_of(a2, {1})).size() == 1);
    CHECK(inversion_set(a2, w_of(a2, {1, 2, 1})).size() == 3);
    for (const WeylElement& w : enumerate_parabolic(a2, {0, 1}))
        CHECK(length(a2, w) == static_cast<int>(inversion_set(a2, w).size()));
}

TEST_CASE("reduced words: smallest-descent policy and round trip") {
    RootSystem a2 = RootSystem::build(DynkinType::A, 2);
    CHECK(reduced_word(a2, WeylElement::identity(2)).empty());
    CHECK(reduced_word(a2, w_of(a2, {1, 2, 1})) == std::vector<int>{0, 1, 0});

    RootSystem b3 = RootSystem::build(DynkinType::B, 3);
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> letter(0, 2), len(0, 12);
    for (int k = 0; k < 50; ++k) {
        std::vector<int> word(len(rng));
        for (int& c : word) c = letter(rng);
        WeylElement w = from_word(b3, word);
        std::vector<int> red = reduced_word(b3, w);
        CHECK(static_cast<int>(red.size()) == length(b3, w));
        CHECK(from_word(b3, red) == w);
    }
}

TEST_CASE("parabolic enumeration orders") {
    RootSystem a2 = RootSystem::build(DynkinType::A, 2);
    CHECK(enumerate_parabolic(a2, {}).size() == 1);
    CHECK(enumerate_parabolic(a2, {0, 1}).size() == 6);
    RootSystem f4 = RootSystem::build(DynkinType::F, 4);
    CHECK(enumerate_parabolic(f4, full_set(f4)).size() == 1152);
    CHECK_THROWS_AS(enumerate_parabolic(f4, full_set(f4), 100), ResourceError);
}

TEST_CASE("longest elements: Coxeter-word route in types B and D") {
    // (s_1 ... s_r)^{h/2} is reduced and equals the longest element
    RootSystem b3 = RootSystem::build(DynkinType::B, 3);
    std::vector<int> word;
    for (int rep = 0; rep < 3; ++rep) // h = 2r
        for (int i = 0; i < 3; ++i) word.push_back(i);
    CHECK(from_word(b3, word) == longest_element(b3, full_set(b3)));
    CHECK(length(b3, longest_element(b3, full_set(b3))) == 9);

    RootSystem d4 = RootSystem::build(DynkinType::D, 4);
    word.clear();
    for (int rep = 0; rep < 3; ++rep) // h = 2r - 2
        for (int i = 0; i < 4; ++i) word.push_back(i);
    CHECK(from_word(d4, word) == longest_element(d4, full_set(d4)));
    CHECK(length(d4, longest_element(d4, full_set(d4))) == 12);

    CHECK(longest_element(b3, {}) == WeylElement::identity(3));
}

TEST_CASE("longest element maps the Levi positives to negatives") {
    RootSystem b3 = RootSystem::build(DynkinType::B, 3);
    std::vector<int> sub{1, 2};
    WeylElement wp = longest_element(b3, sub);
    for (int idx = 0; idx < b3.num_positive_roots(); ++idx) {
        const Root& beta = b3.positive_roots()[idx];
        if (beta[0] != 0) continue; // outside the Levi
        Coroot img = wp.apply(b3.positive_coroot(idx));
        bool nonpos = true;
        for (int c : img) nonpos = nonpos && c <= 0;
        CHECK(nonpos);
    }
}

TEST_CASE("minimal coset representatives") {
    RootSystem a2 = RootSystem::build(DynkinType::A, 2);
    auto reps = min_coset_reps(a2, {0, 1}, {0});
    CHECK(reps.size() == 3);
    // {id, s_2, s_1 s_2}
    CHECK(std::find(reps.begin(), reps.end(), WeylElement::identity(2)) != reps.end());
    CHECK(std::find(reps.begin(), reps.end(), w_of(a2, {2})) != reps.end());
    CHECK(std::find(reps.begin(), reps.end(), w_of(a2, {1, 2})) != reps.end());
    CHECK_THROWS_AS(min_coset_reps(a2, {0}, {0, 1}), UsageError);
}

TEST_CASE("parabolic decomposition: A2 example and additive lengths in B3") {
    RootSystem a2 = RootSystem::build(DynkinType::A, 2);
    // s_1 s_2 s_1 = (s_1 s_2)(s_1) along {} < {alpha_1} < all
    auto f = parabolic_decompose(a2, w_of(a2, {1, 2, 1}), {{0}, {0, 1}});
    CHECK(f[0] == w_of(a2, {1}));
    CHECK(f[1] == w_of(a2, {1, 2}));

    RootSystem b3 = RootSystem::build(DynkinType::B, 3);
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> letter(0, 2), len(0, 14);
    std::vector<std::vector<int>> chain{{0}, {0, 1}, {0, 1, 2}};
    for (int k = 0; k < 100; ++k) {
        std::vector<int> word(len(rng));
        for (int& c : word) c = letter(rng);
        WeylElement w = from_word(b3, word);
        auto factors = parabolic_decompose(b3, w, chain);
        int total = 0;
        WeylElement prod = WeylElement::identity(3);
        for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
            total += length(b3, *it);
            prod = prod * *it;
        }
        CHECK(prod == w);
        CHECK(total == length(b3, w));
    }
}

TEST_CASE("Bruhat order against the exhaustive subword oracle") {
    auto oracle = [](const RootSystem& rs, const WeylElement& u, const WeylElement& v) {
        std::vector<int> vword = reduced_word(rs, v);
        const size_t m = vword.size();
        for (size_t mask = 0; mask < (1u << m); ++mask) {
            std::vector<int> sub;
            for (size_t i = 0; i < m; ++i)
                if (mask & (1u << i)) sub.push_back(vword[i]);
            if (from_word(rs, sub) == u) return true;
        }
        return false;
    };
    for (auto [t, n] : {std::pair{DynkinType::B, 2}, {DynkinType::A, 3}}) {
        RootSystem rs = RootSystem::build(t, n);
        auto all = enumerate_parabolic(rs, full_set(rs));
        for (const WeylElement& u : all)
            for (const WeylElement& v : all) CHECK(bruhat_leq(rs, u, v) == oracle(rs, u, v));
    }
    RootSystem a2 = RootSystem::build(DynkinType::A, 2);
    CHECK(!bruhat_leq(a2, w_of(a2, {1}), w_of(a2, {2})));
    CHECK(bruhat_leq(a2, WeylElement::identity(2), w_of(a2, {1, 2, 1})));
    CHECK(bruhat_leq(a2, w_of(a2, {1, 2}), w_of(a2, {1, 2})));
}

TEST_CASE("descent indicator") {
    RootSystem a2 = RootSystem::build(DynkinType::A, 2);
    CHECK(sgn_alpha(a2, WeylElement::identity(2), 0) == 0);
    CHECK(sgn_alpha(a2, w_of(a2, {1}), 0) == 1);
    CHECK(sgn_alpha(a2, w_of(a2, {1, 2}), 1) == 1);
    CHECK(sgn_alpha(a2, w_of(a2, {1, 2}), 0) == 0);
}

TEST_CASE("diagram component classification") {
    RootSystem f4 = RootSystem::build(DynkinType::F, 4);
    auto comps = diagram_components(f4, {1, 2});
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].type == DynkinType::B);
    CHECK(comps[0].rank == 2);
    comps = diagram_components(f4, {1, 2, 3});
    CHECK(comps[0].type == DynkinType::C);
    RootSystem a4 = RootSystem::build(DynkinType::A, 4);
    comps = diagram_components(a4, {0, 2});
    CHECK(comps.size() == 2);
    CHECK(parabolic_order(a4, {0, 2}) == 4);
    RootSystem e7 = RootSystem::build(DynkinType::E, 7);
    comps = diagram_components(e7, {1, 2, 3, 4, 5, 6});
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].type == DynkinType::D);
    CHECK(comps[0].rank == 6);
    comps = diagram_components(e7, {0, 1, 2, 3, 4, 5});
    CHECK(comps[0].type == DynkinType::E);
}
