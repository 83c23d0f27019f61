#include <doctest.h>

#include "contextua/linalg.hpp"
#include "test_util.hpp"

using namespace contextua;
using namespace contextua::testutil;

namespace {
const cx kI{0.0, 1.0};
constexpr double kInvSqrt2 = 0.70710678118654752440084436210485;
}  // namespace

TEST_CASE("tensor basis and linearity cases") {
    CVec e0{1.0, 0.0};
    CVec e1{0.0, 1.0};
    CVec t = tensor(e0, e0);
    CHECK(max_abs_diff(t, CVec{1.0, 0.0, 0.0, 0.0}) == 0.0);

    CVec plus{kInvSqrt2, kInvSqrt2};
    CHECK(max_abs_diff(tensor(plus, e0), CVec{kInvSqrt2, 0.0, kInvSqrt2, 0.0}) == 0.0);
}

TEST_CASE("tensor matches the nested-loop oracle") {
    SplitMix64 rng(101);
    for (int rep = 0; rep < 50; ++rep) {
        CVec u = random_vec(rng, 2);
        CVec v = random_vec(rng, 2);
        CHECK(max_abs_diff(tensor(u, v), oracle_tensor(u, v)) == 0.0);
    }
}

TEST_CASE("kron identity and hand-expanded flipper lift") {
    CHECK(max_abs_diff(kron(CMat::identity(2), CMat::identity(2)), CMat::identity(4)) == 0.0);

    CMat path_flip{{0.0, 1.0}, {1.0, 0.0}};
    CVec aV{1.0, 0.0, 0.0, 0.0};
    CHECK(max_abs_diff(matvec(kron(path_flip, CMat::identity(2)), aV),
                       CVec{0.0, 0.0, 1.0, 0.0}) == 0.0);
}

TEST_CASE("kron mixed-product property on random inputs") {
    SplitMix64 rng(202);
    for (int rep = 0; rep < 50; ++rep) {
        CMat a = random_mat(rng, 2, 2);
        CMat b = random_mat(rng, 2, 2);
        CVec u = random_vec(rng, 2);
        CVec v = random_vec(rng, 2);
        CVec lhs = oracle_matvec(kron(a, b), oracle_tensor(u, v));
        CVec rhs = oracle_tensor(oracle_matvec(a, u), oracle_matvec(b, v));
        CHECK(max_abs_diff(lhs, rhs) <= 1e-12);
    }
}

TEST_CASE("matmul and matvec agree with the triple-loop oracle") {
    SplitMix64 rng(303);
    for (int rep = 0; rep < 30; ++rep) {
        CMat a = random_mat(rng, 4, 4);
        CMat b = random_mat(rng, 4, 4);
        CHECK(max_abs_diff(matmul(a, b), oracle_matmul(a, b)) <= 1e-13);
        CVec v = random_vec(rng, 4);
        CHECK(max_abs_diff(matvec(a, v), oracle_matvec(a, v)) <= 1e-13);
    }
}

TEST_CASE("inner product basics") {
    CVec e0{1.0, 0.0};
    CHECK(inner(e0, e0) == cx{1.0, 0.0});

    SplitMix64 rng(404);
    CVec u = random_vec(rng, 4);
    CVec v = random_vec(rng, 4);
    // conjugate-linear in the first argument
    CVec iu = u;
    for (auto& x : iu.c) x *= kI;
    CHECK(std::abs(inner(iu, v) - (-kI) * inner(u, v)) <= 1e-13);
    // inner(u, u) real and nonnegative
    cx uu = inner(u, u);
    CHECK(uu.imag() == 0.0);
    CHECK(uu.real() >= 0.0);
}

TEST_CASE("adjoint is an involution and reverses products") {
    SplitMix64 rng(505);
    CMat a = random_mat(rng, 4, 4);
    CMat b = random_mat(rng, 4, 4);
    CHECK(max_abs_diff(adjoint(adjoint(a)), a) == 0.0);
    CHECK(max_abs_diff(adjoint(matmul(a, b)), matmul(adjoint(b), adjoint(a))) <= 1e-12);
}

TEST_CASE("is_unitary accepts identities and rejects a scaled entry") {
    CHECK(is_unitary(CMat::identity(4), 1e-12));

    CMat bs{{kInvSqrt2, kI * kInvSqrt2}, {kI * kInvSqrt2, kInvSqrt2}};
    CHECK(is_unitary(bs, 1e-12));

    CMat off = bs;
    off.at(0, 0) *= 1.01;
    CHECK_FALSE(is_unitary(off, 1e-12));
}

TEST_CASE("shape errors name both dimensions") {
    CMat m(4, 4);
    CVec v{1.0, 0.0};
    CHECK_THROWS_WITH_AS(matvec(m, v), doctest::Contains("4"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(matvec(m, v), doctest::Contains("2"), std::invalid_argument);
    CHECK_THROWS_AS(matmul(CMat(4, 4), CMat(2, 2)), std::invalid_argument);
    CHECK_THROWS_AS(inner(CVec{1.0}, CVec{1.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(is_unitary(CMat(2, 3), 1e-12), std::invalid_argument);
}

TEST_CASE("non-finite components are rejected") {
    CHECK_THROWS_AS(CVec({cx{std::nan(""), 0.0}}), std::invalid_argument);
    CHECK_THROWS_AS(CMat(1, 1, {cx{0.0, INFINITY}}), std::invalid_argument);
}
