#include <random>

#include "doctest.h"
#include "siegel/models.hpp"

using namespace siegel;

namespace {

std::vector<std::pair<int, int>> small_fields() { return {{2, 1}, {3, 1}, {2, 2}, {5, 1}}; }

double max_dev(const CMat& a, const CMat& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("Gelfand-Graev module") {
    CHECK(gelfand_graev(FqCtx(2, 1)).dim() == 3);
    CHECK(gelfand_graev(FqCtx(3, 1)).dim() == 16);
    CHECK_THROWS_AS(gelfand_graev(FqCtx(7, 1)), UnsupportedSize);
    for (auto [p, f] : small_fields()) {
        const FqCtx F(p, f);
        const auto gg = gelfand_graev(F);
        const auto G = enumerate_gl2(F);
        for (auto t : cuspidal_classes(F)) {
            std::complex<double> s = 0;
            for (const auto& g : G) s += gg.trace(g) * std::conj(cuspidal_char(F, t, g).value());
            CHECK(certify_integer(s / double(G.size())) == 1);
        }
    }
}

TEST_CASE("cuspidal models") {
    std::mt19937_64 rng(7);
    for (auto [p, f] : small_fields()) {
        const FqCtx F(p, f);
        const auto gg = gelfand_graev(F);
        const auto G = enumerate_gl2(F);
        for (auto t : cuspidal_classes(F)) {
            const auto rho = project_cuspidal(gg, t);
            CHECK(rho.dim() == F.q() - 1);
            for (const auto& g : G) CHECK(std::abs(rho.trace(g) - cuspidal_char(F, t, g).value()) < 1e-9);
            std::uniform_int_distribution<size_t> pick(0, G.size() - 1);
            double worst = 0;
            for (int k = 0; k < 1000; ++k) {
                const auto& a = G[pick(rng)];
                const auto& b = G[pick(rng)];
                worst = std::max(worst, max_dev(rho(gl2_mul(F, a, b)), rho(a) * rho(b)));
            }
            CHECK(worst < 1e-8);
            CHECK(max_dev(rho(gl2_identity(F)), CMat::Identity(rho.dim(), rho.dim())) < 1e-9);
        }
    }
    const FqCtx F3(3, 1);
    const auto rho = project_cuspidal(gelfand_graev(F3), {1});
    CHECK(certify_integer(rho.trace(gl2_lower(F3, F3.one(), F3.one()))) == -1);
    CHECK(certify_integer(rho.trace(gl2_diag(F3, F3.one(), F3.from_int(2)))) == 0);
    const FqCtx F2(2, 1);
    const auto sgn = project_cuspidal(gelfand_graev(F2), {1});
    CHECK(sgn.dim() == 1);
    CHECK(certify_integer(sgn.trace(gl2_make(F2, F2.one(), F2.one(), F2.zero(), F2.one()))) == -1);
}

TEST_CASE("tensor restriction and decomposition") {
    for (auto [p, f] : small_fields()) {
        const FqCtx F(p, f);
        ModelOracle oracle(F);
        const auto all = enumerate_gl22(F);
        for (const auto& s : sigma_labels(F, false)) {
            const Rep22 rep = oracle.sigma_rep(s);
            CHECK(rep.dim() == (F.q() - 1) * (F.q() - 1));
            for (size_t i = 0; i < all.size(); i += 37)
                CHECK(std::abs(rep.trace(all[i]) - sigma_char(F, s, all[i]).value()) < 1e-9);
            const auto P = decompose(rep);
            const bool split = F.odd() && split_restriction(F, s.theta1) && split_restriction(F, s.theta2);
            CHECK(P.size() == (split ? 2u : 1u));
            for (const auto& Pi : P)
                for (const auto& g : gl22_generators(F)) CHECK(max_dev(Pi * rep(g), rep(g) * Pi) < 1e-8);
            if (split) {
                CHECK(certify_integer(P[0].trace()) == certify_integer(P[1].trace()));
                // (diag(x,1), 1) with x a non-square normalizes GL_{2,2}(q) and interchanges the halves
                const GL2Elem d = gl2_diag(F, F.gen(), F.one());
                const CMat M = rep.ambient(GL22Elem{d, gl2_identity(F)});
                CHECK(max_dev(M * P[0] * M.inverse(), P[1]) < 1e-8);
            }
        }
    }
    CHECK(decompose(ModelOracle(FqCtx(2, 1)).sigma_rep({{1}, {1}})).size() == 1);
}

TEST_CASE("fixed ranks") {
    const FqCtx F3(3, 1);
    ModelOracle o3(F3);
    for (const auto& s : sigma_labels(F3, false))
        if (omega_minus_one(F3, s.theta2) == 1)
            CHECK(fixed_rank(o3.sigma_rep(s), subgroup_R(SubgroupKind::Torus, F3)) == 2);
    const FqCtx F4(2, 2);
    ModelOracle o4(F4);
    for (const auto& s : sigma_labels(F4, false))
        CHECK(fixed_rank(o4.sigma_rep(s), subgroup_R(SubgroupKind::ArtinUnip, F4)) == 1);
    const FqCtx F2(2, 1);
    ModelOracle o2(F2);
    CHECK(fixed_rank(o2.sigma_rep({{1}, {1}}), subgroup_R(SubgroupKind::U1, F2)) == 0);
    CHECK(fixed_rank(o2.sigma_rep({{1}, {1}}), subgroup_R(SubgroupKind::U2, F2)) == 0);
}

TEST_CASE("constituents through the oracle") {
    for (int p : {3, 5}) {
        const FqCtx F(p, 1);
        ModelOracle oracle(F);
        for (const auto& s : sigma_labels(F, true)) {
            if (s.constituent == Constituent::Full) continue;
            const Rep22 rep = oracle.sigma_rep(s);
            CHECK(rep.dim() == (F.q() - 1) * (F.q() - 1) / 2);
            for (auto kind : {SubgroupKind::Torus, SubgroupKind::Unip})
                CHECK(fixed_rank(rep, subgroup_R(kind, F)) == fixed_dim(F, s, subgroup_R(kind, F), &oracle));
            CHECK_NOTHROW(sigma_char(F, s, gl22_identity(F), &oracle));
        }
    }
}

TEST_CASE("u intertwiner") {
    const FqCtx F2(2, 1);
    ModelOracle o2(F2);
    const Rep22 r2 = o2.sigma_rep({{1}, {1}});
    const CMat T = u_intertwiner(r2);
    CHECK(max_dev(T * T, CMat::Identity(1, 1)) < 1e-9);
    CHECK(std::abs(std::abs(twisted_trace(r2, T, subgroup_R(SubgroupKind::Unip, F2)))) == 1);
    CHECK(twisted_trace(r2, CMat::Identity(1, 1), subgroup_R(SubgroupKind::Torus, F2)) == 1);

    for (auto [p, f] : small_fields()) {
        const FqCtx F(p, f);
        ModelOracle oracle(F);
        for (const auto& s : sigma_labels(F, true)) {
            if (s.constituent == Constituent::Full && F.odd() && split_restriction(F, s.theta1) &&
                split_restriction(F, s.theta2))
                continue;
            const Rep22 rep = oracle.sigma_rep(s);
            if (is_self_twisted(F, s, &oracle)) {
                const CMat U = u_intertwiner(rep);
                CHECK(max_dev(U * U, CMat::Identity(rep.dim(), rep.dim())) < 1e-8);
                for (const auto& g : gl22_generators(F)) CHECK(max_dev(U * rep(g), rep(u_action(F, g)) * U) < 1e-8);
            } else {
                CHECK_THROWS_AS(u_intertwiner(rep), NoIntertwiner);
            }
        }
    }
}

TEST_CASE("twisted traces of swap and (w,w)") {
    for (int p : {3, 5}) {
        const FqCtx F(p, 1);
        ModelOracle oracle(F);
        const auto R = subgroup_R(SubgroupKind::Torus, F);
        for (const auto& s : sigma_labels(F, false)) {
            const auto lw = lambda_omega_exponent(F, s);
            if (!lw || omega_minus_one(F, s.theta2) != 1 || split_restriction(F, s.theta2)) continue;
            const Rep22 rep = oracle.sigma_rep(s);
            const CMat S = rep.swap_operator();
            const GL2Elem w = gl2_w(F);
            const CMat W = rep(GL22Elem{w, w});
            CHECK(twisted_trace(rep, S, R) == twisted_trace_closed(F, s, TwistOperator::Swap, R.label));
            CHECK(twisted_trace(rep, W, R) == twisted_trace_closed(F, s, TwistOperator::WW, R.label));
            CHECK(twisted_trace(rep, W * S, R) == twisted_trace_closed(F, s, TwistOperator::SwapWW, R.label));
        }
    }
    const FqCtx F4(2, 2);
    ModelOracle o4(F4);
    for (const auto& s : sigma_labels(F4, false)) {
        const Rep22 rep = o4.sigma_rep(s);
        const GL2Elem w = gl2_w(F4);
        CHECK_THROWS_AS(twisted_trace(rep, rep(GL22Elem{w, w}), subgroup_R(SubgroupKind::Unip, F4)), NotNormalizing);
    }
}

TEST_CASE("induced representation traces") {
    for (auto [p, f] : std::vector<std::pair<int, int>>{{3, 1}, {2, 2}, {5, 1}}) {
    const FqCtx F(p, f);
    ModelOracle oracle(F);
    int seen = 0;
    for (const auto& s : sigma_labels(F, true)) {
        if (is_self_twisted(F, s, &oracle)) continue;
        ++seen;
        const InducedRep tau(oracle.sigma_rep(s));
        const auto R = subgroup_R(SubgroupKind::Torus, F);
        CHECK(induced_twisted_trace(tau, ExtElem{gl22_identity(F), true}, R) == 0);
        CHECK(induced_twisted_trace(tau, ExtElem{gl22_identity(F), false}, R) == 2 * fixed_rank(oracle.sigma_rep(s), R));
        const ExtElem u{gl22_identity(F), true};
        CHECK(max_dev(tau(ext_mul(F, u, u)), tau(u) * tau(u)) < 1e-12);
    }
    MESSAGE("non-self-twisted sigma at q=" << F.q() << ": " << seen);
    }
}
