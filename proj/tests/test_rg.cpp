#include "doctest.h"
#include "siegel/rg.hpp"

using namespace siegel;

namespace {

SubgroupKind table_kind(CosetType t) {
    switch (t) {
        case CosetType::I:
        case CosetType::II: return SubgroupKind::Torus;
        case CosetType::IIIa: return SubgroupKind::Unip;
        default: return SubgroupKind::ArtinUnip;
    }
}

struct Case {
    CosetParam c;
    int n;
};

}  // namespace

TEST_CASE("witness lifts reduce as predicted at q = 2, 4") {
    const std::vector<Case> cases = {
        {{CosetType::I, 0, 1}, 3},
        {{CosetType::I, 1, 2}, 6},
        {{CosetType::IIIa, 0, 3, 2}, 6},
        {{CosetType::IIIa, 1, 3, 2}, 8},
        {{CosetType::IIIb, 0, 5, 3, 0, 0}, 8},
        {{CosetType::IIIb, 0, 5, 3, 0, 1}, 8},
        {{CosetType::IV, 0, 4, 3, 3, 1}, 6},
        {{CosetType::IV, 1, 4, 3, 4, 1}, 8},
    };
    for (int f : {1, 2}) {
        const FqCtx F(2, f);
        for (Case cs : cases) {
            if (cs.c.type == CosetType::IV && f == 2) cs.c.uclass = 2;
            if (cs.c.type == CosetType::IIIb && f == 2 && cs.c.uclass == 1) cs.c.uclass = 3;
            const PadicCtx C(2, f, default_precision(cs.n, cs.c.i, cs.c.j));
            const RgResult w = compute_Rg_witness(C, cs.c, cs.n);
            INFO(to_string(cs.c), " q=", F.q());
            CHECK(w.failures.empty());
            const SubgroupR pred = predicted_Rg(F, cs.c);
            CHECK(w.group == pred);
            CHECK(conjugate_subgroups(F, subgroup_R(table_kind(cs.c.type), F), pred).has_value());
        }
    }
}

TEST_CASE("sampled R_g matches the witnessed group at q = 2") {
    const FqCtx F(2, 1);
    const std::vector<Case> cases = {
        {{CosetType::I, 0, 1}, 3},
        {{CosetType::II, 0, 2, 0, 2}, 5},
        {{CosetType::IIIa, 0, 3, 2}, 6},
        {{CosetType::IV, 0, 4, 3, 3, 1}, 6},
    };
    for (const Case& cs : cases) {
        const PadicCtx C(2, 1, default_precision(cs.n, cs.c.i, cs.c.j));
        const RgResult s = compute_Rg_sample(C, coset_representative(C, cs.c), cs.n);
        INFO(to_string(cs.c), " attempts=", s.attempts, " accepted=", s.accepted);
        CHECK(s.group == predicted_Rg(F, cs.c));
    }
}
