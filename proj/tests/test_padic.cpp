#include <random>

#include "doctest.h"
#include "siegel/padic.hpp"

using namespace siegel;
using P = PadicScalar;

namespace {

std::vector<std::pair<int, int>> fields() { return {{2, 1}, {3, 1}, {2, 2}, {5, 1}, {2, 3}}; }

}  // namespace

TEST_CASE("scalar arithmetic") {
    std::mt19937_64 rng(1);
    for (auto [p, f] : fields()) {
        const PadicCtx C(p, f, 20);
        const FqCtx& F = C.residue_field();
        for (int k = 0; k < 200; ++k) {
            const P a = random_element(C, rng), b = random_element(C, rng, 1), c = random_unit(C, rng);
            CHECK(padic_equal((a + b) * c, a * c + b * c));
            CHECK(padic_equal((a * b) / c * c, a * b));
            CHECK(padic_equal(a - a, P::zero(C)));
            CHECK(padic_equal(c * (P::from_int(C, 1) / c), P::from_int(C, 1)));
            CHECK(F.mul(a.residue(), c.residue()) == (a * c).residue());
            CHECK(F.add(a.residue(), c.residue()) == (a + c).residue());
            CHECK(b.val_at_least(1));
        }
        CHECK(P::from_int(C, p * p * 7).valuation() == (p == 7 ? 3 : 2));
        CHECK(P::pi_pow(C, -2).valuation() == -2);
        CHECK((P::pi_pow(C, -1) * P::pi_pow(C, 3)).valuation() == 2);
        for (Fq x : F.elements()) CHECK(P::lift(C, x).residue() == x);
    }
}

TEST_CASE("precision tracking") {
    const PadicCtx C(2, 1, 10);
    const P one = P::from_int(C, 1);
    const P x = one + P::pi_pow(C, 8);
    const P d = x - one;
    CHECK(d.valuation() == 8);
    const P z = (x - x);
    CHECK(z.is_zero());
    CHECK_FALSE(z.is_exact_zero());
    CHECK(z.val_at_least(5));
    CHECK_THROWS_AS(z.val_at_least(20), PrecisionExhausted);
    CHECK_THROWS_AS(one / z, PrecisionExhausted);
    CHECK_THROWS_AS(one / P::zero(C), BadArgument);
    CHECK_THROWS_AS(PadicCtx(2, 1, 70), UnsupportedSize);
}

TEST_CASE("similitudes of named elements") {
    for (int p : {2, 3}) {
        const PadicCtx C(p, 1, 24);
        for (int i = 0; i <= 3; ++i)
            for (int j = -1; j <= 5; ++j) CHECK(padic_equal(t_ij(C, i, j).mu, P::pi_pow(C, 2 * i + j)));
        for (int n = 0; n <= 6; ++n) {
            const GSp4Elem u = u_n(C, n);
            CHECK(padic_equal(u.mu, P::pi_pow(C, n)));
            CHECK(mat4_equal(gsp4_mul(u, u).mat, mat4_scale(P::pi_pow(C, n), mat4_identity(C))));
        }
        CHECK(padic_equal(similitude(mat4_J(C)), P::from_int(C, 1)));
        CHECK_NOTHROW(s1(C));
        CHECK_NOTHROW(s2(C));
        CHECK_NOTHROW(affine_reflection(C));
        Mat4 bad = mat4_identity(C);
        at(bad, 0, 1) = P::from_int(C, 1);
        CHECK_THROWS_AS(similitude(bad), NotSymplectic);
    }
}

TEST_CASE("group laws on random elements") {
    std::mt19937_64 rng(2);
    for (auto [p, f] : fields()) {
        const PadicCtx C(p, f, 24);
        for (int k = 0; k < 30; ++k) {
            const GSp4Elem a = random_K(C, rng), b = random_Si(C, 4, rng);
            CHECK(padic_equal(similitude(a.mat), a.mu));
            CHECK(padic_equal(similitude(b.mat), b.mu));
            CHECK(mat4_equal(gsp4_mul(a, gsp4_inv(a)).mat, mat4_identity(C)));
            CHECK(padic_equal(gsp4_mul(a, b).mu, similitude(mat4_mul(a.mat, b.mat))));
        }
    }
}

TEST_CASE("subgroup predicates") {
    std::mt19937_64 rng(3);
    for (auto [p, f] : fields()) {
        const PadicCtx C(p, f, 24);
        const GSp4Elem I = gsp4(mat4_identity(C));
        CHECK(in_G0(I));
        CHECK(in_K(I));
        CHECK(in_Kplus(I));
        CHECK(in_I(I));
        CHECK(in_Si(I, 3));
        const GSp4Elem u1 = u_n(C, 1);
        for (int k = 0; k < 100; ++k) {
            const GSp4Elem g = random_K(C, rng);
            CHECK(in_K(g));
            CHECK(in_K(gsp4_conj(u1, g)));
        }
        for (int k = 0; k < 30; ++k) {
            CHECK(in_I(random_iwahori(C, rng)));
            CHECK(in_K(random_iwahori(C, rng)));
        }
        CHECK_FALSE(in_K(t_ij(C, 0, 1)));
        CHECK_FALSE(in_K(u1));
        CHECK(in_K(affine_reflection(C)));
        CHECK_FALSE(in_I(affine_reflection(C)));
        CHECK_FALSE(in_G0(t_ij(C, 0, 1)));
        for (int n = 1; n <= 5; ++n) {
            const P one = P::from_int(C, 1), zero = P::zero(C);
            const std::array<P, 3> c{random_unit(C, rng), random_element(C, rng), random_element(C, rng)};
            const std::array<P, 4> a{one, zero, zero, one};
            const std::array<P, 3> b{random_element(C, rng), random_element(C, rng), random_element(C, rng)};
            CHECK(in_Si(siegel_element(n, c, a, one, b), n));
            const P pinv = P::pi_pow(C, -1);
            CHECK_FALSE(in_Si(siegel_element(n, {pinv * c[0], pinv * c[1], pinv * c[2]}, a, one, b), n));
        }
    }
}

TEST_CASE("siegel factorization round trip") {
    std::mt19937_64 rng(4);
    for (auto [p, f] : fields()) {
        const PadicCtx C(p, f, 24);
        for (int k = 0; k < 20; ++k) {
            const std::array<P, 3> c{random_element(C, rng), random_element(C, rng), random_element(C, rng)};
            const std::array<P, 3> b{random_element(C, rng), random_element(C, rng), random_element(C, rng)};
            const P lambda = random_unit(C, rng);
            std::array<P, 4> a;
            do {
                for (auto& x : a) x = random_element(C, rng);
            } while (!(a[0] * a[3] - a[1] * a[2]).is_unit());
            const int n = 1 + k % 5;
            const GSp4Elem s = siegel_element(n, c, a, lambda, b);
            CHECK(in_Si(s, n));
            const SiegelCoords sc = siegel_coords(s, n);
            for (int t = 0; t < 3; ++t) {
                CHECK(padic_equal(sc.c[t], c[t]));
                CHECK(padic_equal(sc.b[t], b[t]));
            }
            for (int t = 0; t < 4; ++t) CHECK(padic_equal(sc.a[t], a[t]));
            CHECK(padic_equal(sc.lambda, lambda));
        }
    }
}

TEST_CASE("reduction map") {
    std::mt19937_64 rng(5);
    for (auto [p, f] : fields()) {
        const PadicCtx C(p, f, 24);
        const FqCtx& F = C.residue_field();
        CHECK(reduce_K(gsp4(mat4_identity(C))) == gl22_identity(F));
        CHECK_THROWS_AS(reduce_K(u_n(C, 1)), NotInK);
        for (int k = 0; k < (p == 2 && f == 1 ? 1000 : 200); ++k) {
            const GSp4Elem a = random_K(C, rng), b = random_K(C, rng);
            const GL22Elem ra = reduce_K(a);
            CHECK(gl22_valid(F, ra));
            CHECK(reduce_K(gsp4_mul(a, b)) == gl22_mul(F, ra, reduce_K(b)));
        }
        // kernel
        const P one = P::from_int(C, 1);
        for (int k = 0; k < 50; ++k) {
            auto near1 = [&] { return one + random_element(C, rng, 1); };
            GSp4Elem kp = levi(near1(), random_element(C, rng), random_element(C, rng, 1), near1(), near1());
            kp = gsp4_mul(kp, S_xyz(random_element(C, rng, 1), random_element(C, rng, 1), random_element(C, rng, 2)));
            kp = gsp4_mul(kp, upper_B(random_element(C, rng), random_element(C, rng), random_element(C, rng, 1)));
            const GSp4Elem g = random_K(C, rng);
            const GSp4Elem conj = gsp4_conj(g, kp);
            CHECK(in_Kplus(kp));
            CHECK(in_Kplus(conj));
            CHECK(reduce_K(conj) == gl22_identity(F));
            CHECK((reduce_K(g) == gl22_identity(F)) == in_Kplus(g));
        }
    }
}

TEST_CASE("u1 conjugation descends to the u-action") {
    std::mt19937_64 rng(6);
    for (auto [p, f] : fields()) {
        const PadicCtx C(p, f, 24);
        const FqCtx& F = C.residue_field();
        const GSp4Elem u1 = u_n(C, 1);
        for (int k = 0; k < 100; ++k) {
            const GSp4Elem g = random_K(C, rng);
            CHECK(reduce_K(gsp4_conj(u1, g)) == u_action(F, reduce_K(g)));
        }
    }
}
