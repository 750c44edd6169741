#include <set>

#include "doctest.h"
#include "siegel/error.hpp"
#include "siegel/gl22.hpp"

using namespace siegel;

TEST_CASE("build_field tables") {
    for (auto [p, f] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {3, 2}, {2, 3}, {2, 4}, {11, 1}, {13, 1}}) {
        const FqCtx F(p, f);
        const int q = F.q();
        CAPTURE(q);
        // field axioms on all pairs via the Zech tables
        for (Fq a : F.elements()) {
            CHECK(F.add(a, F.neg(a)).is_zero());
            if (!a.is_zero()) CHECK(F.mul(a, F.inv(a)) == F.one());
            for (Fq b : F.elements()) {
                CHECK(F.add(a, b) == F.add(b, a));
                for (Fq c : F.elements()) CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
            }
        }
        // p * 1 = 0
        Fq s = F.zero();
        for (int i = 0; i < p; ++i) s = F.add(s, F.one());
        CHECK(s.is_zero());
        // norm surjective, N(g2) generates
        std::set<int> image;
        for (int k = 0; k < F.q2() - 1; ++k) image.insert(F.norm(F.from_log2(k)).v);
        CHECK(image.size() == size_t(q - 1));
        CHECK(F.norm(F.gen2()) == F.gen());
        // psi is a nontrivial additive character
        CharValue sum(0.0);
        for (Fq a : F.elements()) sum += F.psi(a);
        CHECK(certify_integer(sum) == 0);
        for (Fq a : F.elements())
            for (Fq b : F.elements())
                CHECK((F.psi_exponent(a) + F.psi_exponent(b)) % p == F.psi_exponent(F.add(a, b)));
    }
    CHECK(FqCtx(2, 1).q2() - 1 == 3);
    CHECK(FqCtx(3, 1).q2() - 1 == 8);
    CHECK_THROWS_AS(FqCtx(17, 1), UnsupportedSize);
    CHECK_THROWS_AS(FqCtx(2, 5), UnsupportedSize);
    CHECK_THROWS_AS(FqCtx(4, 1), BadArgument);
}

TEST_CASE("enumerate_gl22 sizes") {
    CHECK(enumerate_gl22(FqCtx(2, 1)).size() == 36);
    CHECK(enumerate_gl22(FqCtx(3, 1)).size() == 1152);
    CHECK(enumerate_gl22(FqCtx(2, 2)).size() == 10800);
    CHECK_THROWS_AS(enumerate_gl22(FqCtx(11, 1)), UnsupportedSize);
}

TEST_CASE("standard subgroups") {
    for (auto [p, f] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
        const FqCtx F(p, f);
        const int q = F.q();
        const auto T = subgroup_R(SubgroupKind::Torus, F);
        CHECK(T.size() == size_t((q - 1) * (q - 1) * (q - 1)));
        CHECK(is_subgroup(F, T));
        const auto U = subgroup_R(SubgroupKind::Unip, F);
        CHECK(U.size() == size_t(q * (q - 1)));
        CHECK(is_subgroup(F, U));
        CHECK(subgroup_R(SubgroupKind::U1, F).size() == size_t(q));
        CHECK(is_subgroup(F, subgroup_R(SubgroupKind::U2, F)));
        if (!F.odd()) {
            const auto A = subgroup_R(SubgroupKind::ArtinUnip, F);
            CHECK(A.size() == size_t(q * q * (q - 1) / 2));
            CHECK(is_subgroup(F, A));
            // Artin-Schreier image has q/2 elements
            std::set<int> as;
            for (Fq b : F.elements()) as.insert(F.add(F.mul(b, b), b).v);
            CHECK(as.size() == size_t(q / 2));
        } else {
            CHECK_THROWS_AS(subgroup_R(SubgroupKind::ArtinUnip, F), BadArgument);
        }
        for (const auto& x : T.elements) CHECK(gl22_valid(F, x));
    }
    CHECK(subgroup_R(SubgroupKind::Torus, FqCtx(3, 1)).size() == 8);
    CHECK(subgroup_R(SubgroupKind::Unip, FqCtx(2, 2)).size() == 12);
    CHECK(subgroup_R(SubgroupKind::ArtinUnip, FqCtx(2, 1)).size() == 2);
}

TEST_CASE("u_action") {
    const FqCtx F(3, 1);
    const auto all = enumerate_gl22(F);
    CHECK(u_action(F, gl22_identity(F)) == gl22_identity(F));
    const Fq a = F.from_int(1), b = F.from_int(2), c = F.from_int(2), d = F.from_int(1);
    const GL22Elem x{gl2_diag(F, a, b), gl2_diag(F, c, d)};
    CHECK(u_action(F, x) == GL22Elem{gl2_diag(F, d, c), gl2_diag(F, b, a)});
    for (const auto& g : all) {
        CHECK(u_action(F, u_action(F, g)) == g);
        CHECK(gl22_valid(F, u_action(F, g)));
    }
    // homomorphism on a sample
    for (size_t i = 0; i < all.size(); i += 37)
        for (size_t j = 0; j < all.size(); j += 41)
            CHECK(u_action(F, gl22_mul(F, all[i], all[j])) == gl22_mul(F, u_action(F, all[i]), u_action(F, all[j])));
}

TEST_CASE("extension group multiplication") {
    const FqCtx F(2, 1);
    const auto all = enumerate_gl22(F);
    std::vector<ExtElem> ext;
    for (const auto& g : all) {
        ext.push_back({g, false});
        ext.push_back({g, true});
    }
    const ExtElem e{gl22_identity(F), false};
    for (const auto& x : ext) {
        CHECK(ext_mul(F, x, ext_inv(F, x)) == e);
        for (size_t j = 0; j < ext.size(); j += 5)
            for (size_t k = 0; k < ext.size(); k += 7)
                CHECK(ext_mul(F, ext_mul(F, x, ext[j]), ext[k]) == ext_mul(F, x, ext_mul(F, ext[j], ext[k])));
    }
    const ExtElem u{gl22_identity(F), true};
    CHECK(ext_mul(F, u, u) == e);
}

TEST_CASE("closure and conjugacy") {
    const FqCtx F2(2, 1);
    const GL22Elem id = gl22_identity(F2);
    CHECK(subgroup_closure(F2, std::vector<GL22Elem>{id}).size() == 1);
    const auto U1 = subgroup_R(SubgroupKind::U1, F2);
    CHECK(subgroup_closure(F2, U1.elements) == U1);
    CHECK(conjugate_subgroups(F2, U1, U1).value() == id);
    CHECK_FALSE(conjugate_subgroups(F2, U1, subgroup_R(SubgroupKind::U2, F2)).has_value());

    const FqCtx F3(3, 1);
    const std::vector<GL22Elem> tg{{gl2_diag(F3, F3.gen(), F3.one()), gl2_diag(F3, F3.one(), F3.gen())},
                                   {gl2_diag(F3, F3.one(), F3.gen()), gl2_diag(F3, F3.one(), F3.gen())},
                                   {gl2_diag(F3, F3.one(), F3.one()), gl2_diag(F3, F3.gen(), F3.inv(F3.gen()))}};
    const auto T = subgroup_closure(F3, tg);
    CHECK(T.size() == 8);
    CHECK(T == subgroup_R(SubgroupKind::Torus, F3));
    CHECK(subgroup_closure(F3, T.elements) == T);

    const auto Un = subgroup_R(SubgroupKind::Unip, F3);
    const GL22Elem t{GL2Elem{F3.one(), F3.one(), F3.zero(), F3.one()}, gl2_diag(F3, F3.one(), F3.one())};
    const auto conj = conjugate_subgroup(F3, t, Un);
    const auto w = conjugate_subgroups(F3, Un, conj);
    REQUIRE(w.has_value());
    CHECK(conjugate_subgroup(F3, *w, Un) == conj);

    // generators really generate GL_{2,2}
    for (auto [p, f] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}}) {
        const FqCtx F(p, f);
        CHECK(subgroup_closure(F, gl22_generators(F)).size() == size_t(gl22_order(F.q())));
    }
    // orders divide the group order
    CHECK(gl22_order(3) % int64_t(T.size()) == 0);
}

TEST_CASE("center index two for q odd") {
    for (int p : {3, 5}) {
        const FqCtx F(p, 1);
        std::vector<GL22Elem> center, diagonal;
        for (Fq a : F.units())
            for (Fq b : F.units())
                if (F.mul(a, a) == F.mul(b, b)) center.push_back({gl2_diag(F, a, a), gl2_diag(F, b, b)});
        for (Fq a : F.units()) diagonal.push_back({gl2_diag(F, a, a), gl2_diag(F, a, a)});
        CHECK(center.size() == 2 * diagonal.size());
        const GL22Elem m{gl2_identity(F), gl2_diag(F, F.neg(F.one()), F.neg(F.one()))};
        CHECK(std::find(diagonal.begin(), diagonal.end(), m) == diagonal.end());
        CHECK(std::find(center.begin(), center.end(), m) != center.end());
    }
}
