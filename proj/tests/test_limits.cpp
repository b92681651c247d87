#include <doctest.h>

#include "support.hpp"

using namespace gk0;
using namespace gk0::testing;

namespace {

GammaVector vec(const SimplicialGroup& g, std::vector<std::vector<long>> coords) {
    std::vector<CosetVector> cs;
    for (const auto& c : coords) cs.emplace_back(g.space(), std::vector<Integer>(c.begin(), c.end()));
    return GammaVector(g, std::move(cs));
}

// ℤ[ℤ₂] -> ℤ[ℤ₂] -> ... by multiplication with 1 + x, repeated forever.
Tower one_plus_x_tower(UnitMode mode = UnitMode::None) {
    auto z2 = cyclic_group(2);
    SimplicialGroup g(coset_space(trivial_subgroup(z2)), 1);
    GammaLinearMap f(g, g, {vec(g, {{1, 1}})});
    if (mode == UnitMode::None) return Tower({g}, {f}, {}, mode, true);
    return Tower({g, g}, {f, f}, {vec(g, {{1, 0}}), vec(g, {{1, 1}})}, mode, true);
}

Tower identity_tower(std::size_t rank = 1) {
    SimplicialGroup g(coset_space(trivial_subgroup(cyclic_group(1))), rank);
    return Tower({g}, {GammaLinearMap::identity(g)}, {}, UnitMode::None, true);
}

GammaVector random_colimit_value(Rng& rng, const Tower& t, std::size_t level) {
    return random_vector(rng, t.group(level), -2, 2);
}

} // namespace

TEST_CASE("tower construction") {
    auto z2 = cyclic_group(2);
    SimplicialGroup g(coset_space(trivial_subgroup(z2)), 1);
    auto id = GammaLinearMap::identity(g);
    CHECK_NOTHROW(Tower({g, g, g}, {id, id}));
    CHECK_NOTHROW(one_plus_x_tower(UnitMode::Interval));
    CHECK_NOTHROW(one_plus_x_tower(UnitMode::Unit));

    GammaLinearMap neg(g, g, {vec(g, {{1, -1}})});
    CHECK(error_code([&] { Tower({g, g}, {neg}); }) == Errc::NotPositiveMap);

    SimplicialGroup fixed(coset_space(whole_group(z2)), 1);
    CHECK(error_code([&] { Tower({g, fixed}, {id}); }) == Errc::DeltaMismatch);
    CHECK(error_code([&] { Tower({g, g}, {}); }) == Errc::ShapeMismatch);

    GammaLinearMap f(g, g, {vec(g, {{1, 1}})});
    // (1+x)·1 = 1+x is not below 1.
    CHECK(error_code([&] { Tower({g, g}, {f}, {vec(g, {{1, 0}}), vec(g, {{1, 0}})}, UnitMode::Interval); }) ==
          Errc::UnitNotPreserved);
    CHECK(error_code([&] { Tower({g, g}, {f}, {vec(g, {{1, 0}}), vec(g, {{2, 1}})}, UnitMode::Unit); }) ==
          Errc::UnitNotPreserved);
    CHECK_NOTHROW(Tower({g, g}, {f}, {vec(g, {{1, 0}}), vec(g, {{2, 1}})}, UnitMode::Interval));
    CHECK(error_code([&] { Tower({g}, {}, {vec(g, {{0, 0}})}, UnitMode::Unit); }) == Errc::NotOrderUnit);
}

TEST_CASE("levels of a repeating tower") {
    Tower t = one_plus_x_tower(UnitMode::Unit);
    CHECK_FALSE(t.last_level().has_value());
    // (1+x)^3 = 4 + 4x.
    CHECK(t.push(vec(t.group(0), {{1, 0}}), 0, 3) == vec(t.group(3), {{4, 4}}));
    CHECK(t.unit(5) == vec(t.group(5), {{16, 16}}));
    CHECK(map_apply(t.composite(1, 4), vec(t.group(1), {{1, 0}})) == vec(t.group(4), {{4, 4}}));
    Tower finite({t.group(0)}, {});
    CHECK(finite.last_level() == std::optional<std::size_t>(0));
    CHECK(error_code([&] { finite.group(1); }) == Errc::IndexOutOfRange);
}

TEST_CASE("colimit equality examples") {
    SimplicialGroup z(coset_space(trivial_subgroup(cyclic_group(1))), 1);
    Tower doubling({z}, {GammaLinearMap(z, z, {vec(z, {{2}})})}, {}, UnitMode::None, true);
    Query q = colimit_eq(doubling, {0, vec(z, {{1}})}, {1, vec(z, {{2}})}, 4);
    CHECK(q.answer == Answer::Yes);
    CHECK(q.level == 1);

    Tower t = one_plus_x_tower();
    const auto& g = t.group(0);
    q = colimit_eq(t, {0, vec(g, {{1, -1}})}, {0, vec(g, {{0, 0}})}, 4);
    CHECK(q.answer == Answer::Yes);
    CHECK(q.level == 1);
    // ker (1+x)^n is ker (1+x) for every n, so a nonzero difference outside it never dies.
    q = colimit_eq(t, {0, vec(g, {{1, 0}})}, {0, vec(g, {{0, 0}})}, 4);
    CHECK(q.answer == Answer::NoUpTo);

    Tower id = identity_tower();
    const auto& h = id.group(0);
    q = colimit_eq(id, {0, vec(h, {{1}})}, {0, vec(h, {{2}})}, 5);
    CHECK(q.answer == Answer::NoUpTo);
    CHECK(q.level == 1);

    q = colimit_eq(id, {3, vec(h, {{1}})}, {0, vec(h, {{1}})}, 2);
    CHECK(q.answer == Answer::Unknown);
    CHECK(q.horizon_too_small);
}

TEST_CASE("colimit equality with a kernel that keeps growing") {
    // Shift operator on Z^3: e0 -> e1 -> e2 -> 0. Kernels of its powers grow until the third power.
    SimplicialGroup g(coset_space(trivial_subgroup(cyclic_group(1))), 3);
    GammaLinearMap shift(g, g, {vec(g, {{0}, {1}, {0}}), vec(g, {{0}, {0}, {1}}), vec(g, {{0}, {0}, {0}})});
    Tower t({g}, {shift}, {}, UnitMode::None, true);
    auto e0 = GammaVector::basis(g, 0);
    Query q = colimit_eq(t, {0, e0}, {0, GammaVector(g)}, 1);
    CHECK(q.answer == Answer::Unknown);
    CHECK(q.horizon_too_small);
    q = colimit_eq(t, {0, e0}, {0, GammaVector(g)}, 10);
    CHECK(q.answer == Answer::Yes);
    CHECK(q.level == 3);
}

TEST_CASE("positivity and interval examples") {
    Tower t = one_plus_x_tower(UnitMode::Unit);
    const auto& g = t.group(0);
    Query q = colimit_positive(t, {0, vec(g, {{2, 1}})}, 3);
    CHECK(q.answer == Answer::Yes);
    CHECK(q.level == 0);
    q = colimit_positive(t, {0, vec(g, {{1, -1}})}, 3);
    CHECK(q.answer == Answer::Yes);
    CHECK(q.level == 1);
    q = colimit_positive(t, {0, vec(g, {{1, -2}})}, 3);
    CHECK(q.answer == Answer::NoUpTo);
    CHECK(q.level == 3);

    Tower id = identity_tower();
    q = colimit_positive(id, {0, vec(id.group(0), {{-1}})}, 6);
    CHECK(q.answer == Answer::NoUpTo);
    CHECK(q.level == 6);

    // u_0 = 1, so x lies in [0, u_0] only pushed forward once: (1+x)·x = 1+x = u_1.
    q = colimit_interval_contains(t, {0, vec(g, {{0, 1}})}, 3);
    CHECK(q.answer == Answer::Yes);
    CHECK(q.level == 1);
    q = colimit_interval_contains(t, {0, vec(g, {{2, 0}})}, 5);
    CHECK(q.answer == Answer::NoUpTo);
    CHECK(error_code([&] { colimit_interval_contains(id, {0, vec(id.group(0), {{0}})}, 2); }) == Errc::NotOrderUnit);
}

TEST_CASE("finite towers decide equality at the last level") {
    Rng rng(71);
    for (int trial = 0; trial < 150; ++trial) {
        Tower t = random_tower(rng, UnitMode::None, 4, 2);
        const std::size_t last = *t.last_level();
        const std::size_t lp = rng.below(last + 1), lq = rng.below(last + 1);
        auto p = random_colimit_value(rng, t, lp);
        // Half the time, q is p plus something killed on the way up.
        GammaVector qv = random_colimit_value(rng, t, lq);
        if (rng.coin() && lp == lq) {
            auto ker = map_kernel(t.composite(lp, last));
            qv = p;
            for (const auto& z : ker) qv += Integer(rng.uniform(-1, 1)) * z;
        }
        const bool oracle = t.push(p, lp, last) == t.push(qv, lq, last);
        Query q = colimit_eq(t, {lp, p}, {lq, qv}, last);
        CHECK(q.answer == (oracle ? Answer::Yes : Answer::NoUpTo));
        if (oracle) CHECK(t.push(p, lp, q.level) == t.push(qv, lq, q.level));
        Query short_horizon = colimit_eq(t, {lp, p}, {lq, qv}, std::max(lp, lq));
        if (!oracle && std::max(lp, lq) < last) CHECK(short_horizon.answer == Answer::Unknown);
    }
}

TEST_CASE("negative equality answers on repeating towers are sound") {
    Rng rng(72);
    for (int trial = 0; trial < 100; ++trial) {
        Tower t = random_tower(rng, UnitMode::None, 3, 2, true);
        const std::size_t level = rng.below(3);
        auto p = random_colimit_value(rng, t, level);
        auto zero = GammaVector(t.group(level));
        Query q = colimit_eq(t, {level, p}, {level, zero}, 12);
        if (q.answer == Answer::NoUpTo)
            for (std::size_t k = level; k <= 16; ++k) CHECK_FALSE(t.push(p, level, k).is_zero());
        if (q.answer == Answer::Yes) CHECK(t.push(p, level, q.level).is_zero());
    }
}

TEST_CASE("the colimit cone is closed under sums and translates") {
    Rng rng(73);
    int both = 0;
    for (int trial = 0; trial < 200; ++trial) {
        Tower t = random_tower(rng, UnitMode::None, 4, 2);
        const std::size_t last = *t.last_level();
        const std::size_t lp = rng.below(last + 1), lq = rng.below(last + 1);
        auto p = random_colimit_value(rng, t, lp), qv = random_colimit_value(rng, t, lq);
        Query a = colimit_positive(t, {lp, p}, last), b = colimit_positive(t, {lq, qv}, last);
        if (a.answer != Answer::Yes || b.answer != Answer::Yes) continue;
        ++both;
        const std::size_t c = std::max(a.level, b.level);
        GammaVector sum = t.push(p, lp, c) + t.push(qv, lq, c);
        CHECK(colimit_positive(t, {c, sum}, last).answer == Answer::Yes);
        CHECK(cone_contains(t.group(c), sum));
        const Elt g = rng.below(t.space()->group()->order());
        CHECK(colimit_positive(t, {lp, act(g, p)}, last).answer == Answer::Yes);
    }
    CHECK(both > 20);
}

TEST_CASE("unit mode images are order-units in the colimit") {
    Rng rng(74);
    for (int trial = 0; trial < 100; ++trial) {
        Tower t = random_tower(rng, rng.coin() ? UnitMode::Unit : UnitMode::Interval, 4, 2);
        const std::size_t last = *t.last_level();
        const std::size_t level = rng.below(last + 1);
        auto v = random_vector(rng, t.group(level), -3, 3);
        GroupRingElt a = dominating_multiplier(t.group(level), t.unit(level), v);
        CHECK(a.is_positive());
        GammaVector gap = act(a, t.unit(level)) - v;
        CHECK(colimit_positive(t, {level, gap}, last).answer == Answer::Yes);
        if (t.mode() == UnitMode::Unit) {
            for (std::size_t k = level; k <= last; ++k) CHECK(t.push(t.unit(level), level, k) == t.unit(k));
        }
        // Everything in [0, u_n] stays in the interval at later levels.
        if (t.mode() == UnitMode::Interval && level < last) {
            Query q = colimit_interval_contains(t, {level, t.unit(level)}, last);
            CHECK(q.answer == Answer::Yes);
            CHECK(q.level == level);
        }
    }
}

TEST_CASE("zero relations among colimit cone elements decompose") {
    Rng rng(75);
    for (int trial = 0; trial < 120; ++trial) {
        Tower t = random_tower(rng, UnitMode::None, 4, 2);
        const std::size_t last = *t.last_level();
        const std::size_t c = rng.below(last + 1);
        const auto& g = t.group(c);
        std::vector<GroupRingElt> a;
        std::vector<GammaVector> x;
        GammaVector s(g);
        for (int i = 0; i < 3; ++i) {
            const std::size_t level = rng.below(c + 1);
            GammaVector pos = random_vector(rng, t.group(level), 0, 2);
            x.push_back(t.push(pos, level, c));
            a.push_back(random_element(rng, g.group(), -2, 2));
            s += act(a.back(), x.back());
        }
        a.push_back(GroupRingElt::unit(g.group(), 0, -1));
        x.push_back(positive_part(s));
        a.push_back(GroupRingElt::unit(g.group(), 0, 1));
        x.push_back(negative_part(s));
        SdpWitness w = sdp_witness(g, a, x);
        CHECK(verify_sdp_witness(g, a, x, w).ok);
    }
}
