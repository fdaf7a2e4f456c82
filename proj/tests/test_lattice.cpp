#include <doctest.h>

#include "qsc/lattice.hpp"

using namespace qsc;

namespace {
IntMat mat(std::initializer_list<std::initializer_list<long>> rows) {
    IntMat m;
    for (auto& r : rows) {
        std::vector<Int> row;
        for (long v : r) row.emplace_back(v);
        m.push_back(row);
    }
    return m;
}
} // namespace

TEST_CASE("smith normal form basics") {
    SmithResult r = smith_normal_form(mat({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}));
    CHECK(r.s[0][0] == 2);
    CHECK(r.s[1][1] == 6);
    CHECK(r.s[2][2] == 12);
    // left * a * right = s
    IntMat a = mat({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
    CHECK(mat_mul(mat_mul(r.left, a), r.right) == r.s);
}

TEST_CASE("divisibility chain is enforced") {
    IntMat a = mat({{2, 0}, {0, 3}});
    auto d = elementary_divisors(a);
    REQUIRE(d.size() == 2);
    CHECK(d[0] == 1);
    CHECK(d[1] == 6);
}

TEST_CASE("kernel basis") {
    // x + y + z = 0 over Z
    IntMat k = kernel_basis(mat({{1, 1, 1}}));
    REQUIRE(k.size() == 2);
    for (const auto& v : k) {
        Int s = v[0] + v[1] + v[2];
        CHECK(s == 0);
    }
    CHECK(kernel_basis(mat({{1, 0}, {0, 1}})).empty());
}

TEST_CASE("quotient structure") {
    QuotientStructure q = quotient_structure(mat({{2, 0}, {0, 1}}), 2);
    REQUIRE(q.torsion.size() == 1);
    CHECK(q.torsion[0] == 2);
    CHECK(q.free_rank == 0);
    CHECK(q.order() == 2);

    q = quotient_structure(mat({{2}, {0}}), 2);
    CHECK(q.free_rank == 1);
    CHECK(q.order() == 0);
}

TEST_CASE("row lattice equality") {
    CHECK(same_row_lattice(mat({{1, 0}, {0, 2}}), mat({{1, 2}, {0, 2}})));
    CHECK(!same_row_lattice(mat({{1, 0}, {0, 2}}), mat({{1, 0}, {0, 1}})));
    CHECK(same_row_lattice(mat({{2, 2, 1}}), mat({{-2, -2, -1}})));
}
