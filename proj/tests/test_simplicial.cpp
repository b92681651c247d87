#include <doctest.h>

#include <set>

#include "support.hpp"

using namespace gk0;
using namespace gk0::testing;

namespace {

SpacePtr z2_free() { return coset_space(trivial_subgroup(cyclic_group(2))); }

GammaVector vec(const SimplicialGroup& g, std::vector<std::vector<long>> coords) {
    std::vector<CosetVector> cs;
    for (const auto& c : coords) cs.emplace_back(g.space(), std::vector<Integer>(c.begin(), c.end()));
    return GammaVector(g, std::move(cs));
}

// Order-unit by brute force: some a with coefficients in {0, 1, 2} dominates every basis element.
bool order_unit_by_search(const SimplicialGroup& g, const GammaVector& u) {
    const auto& grp = g.group();
    const std::size_t n = grp->order();
    std::vector<int> digits(n, 0);
    while (true) {
        GroupRingElt a(grp);
        for (Elt e = 0; e < n; ++e) a.add_term(e, digits[e]);
        GammaVector au = act(a, u);
        bool all = true;
        for (std::size_t i = 0; i < g.rank() && all; ++i) all = leq(GammaVector::basis(g, i), au);
        if (all) return true;
        std::size_t k = 0;
        while (k < n && digits[k] == 2) digits[k++] = 0;
        if (k == n) return false;
        ++digits[k];
    }
}

} // namespace

TEST_CASE("cone membership examples") {
    SimplicialGroup g(z2_free(), 2);
    CHECK(cone_contains(g, vec(g, {{0, 0}, {1, 1}})));
    CHECK_FALSE(cone_contains(g, vec(g, {{1, -1}, {2, -1}})));
    CHECK(cone_contains(g, GammaVector(g)));

    auto d3 = dihedral_group(3);
    SimplicialGroup h(coset_space(subgroup_closure(d3, {3})), 1);
    auto v = vec(h, {{1, 2, 0}});
    CHECK(cone_contains(h, v));
    CHECK(v.str() == "(Δ + 2aΔ)");
    CHECK(error_code([&] { cone_contains(h, GammaVector(SimplicialGroup(h.space(), 2))); }) == Errc::ShapeMismatch);
    CHECK(error_code([&] { cone_contains(h, GammaVector(g)); }) == Errc::GroupMismatch);
}

TEST_CASE("order units") {
    auto z2 = cyclic_group(2);
    SimplicialGroup whole(coset_space(whole_group(z2)), 1);
    CHECK(is_order_unit(whole, GammaVector::basis(whole, 0)));
    SimplicialGroup g(z2_free(), 1);
    CHECK(is_order_unit(g, vec(g, {{2, 1}})));
    CHECK_FALSE(is_order_unit(g, GammaVector(g)));
    CHECK(is_order_unit(SimplicialGroup(z2_free(), 0), GammaVector(SimplicialGroup(z2_free(), 0))));
    CHECK(error_code([&] { is_order_unit(g, vec(g, {{1, -1}})); }) == Errc::NotInCone);
}

TEST_CASE("order-unit criterion agrees with exhaustive search") {
    Rng rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        GroupPtr grp;
        do grp = random_group(rng);
        while (grp->order() > 4);
        SimplicialGroup g(random_space(rng, grp), rng.below(3));
        GammaVector u = random_vector(rng, g, 0, 2);
        if (rng.coin(0.3) && g.rank() > 0) u[rng.below(g.rank())] = CosetVector(g.space());
        CAPTURE(u.str());
        CHECK(is_order_unit(g, u) == order_unit_by_search(g, u));
    }
}

TEST_CASE("dominating multipliers") {
    Rng rng(32);
    for (int trial = 0; trial < 300; ++trial) {
        auto grp = random_group(rng);
        SimplicialGroup g(random_space(rng, grp), 1 + rng.below(3));
        GammaVector u = random_order_unit(rng, g, 3);
        GammaVector v = random_vector(rng, g, -4, 4);
        GroupRingElt a = dominating_multiplier(g, u, v);
        CHECK(a.is_positive());
        CHECK(leq(v, act(a, u)));
    }
    SimplicialGroup g(z2_free(), 1);
    CHECK(error_code([&] { dominating_multiplier(g, GammaVector(g), GammaVector(g)); }) == Errc::NotOrderUnit);
}

TEST_CASE("interpolation") {
    SimplicialGroup g(z2_free(), 1);
    auto one = vec(g, {{1, 0}}), x = vec(g, {{0, 1}}), sum = vec(g, {{1, 1}});
    CHECK(interpolate(g, {one, x}, {sum}) == sum);
    CHECK(interpolate(g, {GammaVector(g)}, {GammaVector(g)}) == GammaVector(g));
    CHECK(error_code([&] { interpolate(g, {one}, {GammaVector(g)}); }) == Errc::PreorderViolated);
    CHECK(interpolate(g, {}, {sum, one}) == one);
    CHECK(interpolate(g, {}, {}) == GammaVector(g));
}

TEST_CASE("interpolants satisfy every bound") {
    Rng rng(33);
    for (int trial = 0; trial < 300; ++trial) {
        auto grp = random_group(rng);
        SimplicialGroup g(random_space(rng, grp), rng.below(4));
        std::vector<GammaVector> xs, ys;
        const std::size_t nx = 1 + rng.below(3), ny = 1 + rng.below(3);
        for (std::size_t k = 0; k < nx; ++k) xs.push_back(random_vector(rng, g, -3, 3));
        GammaVector top = interpolate(g, xs, {});
        for (std::size_t k = 0; k < ny; ++k) ys.push_back(top + random_vector(rng, g, 0, 3));
        GammaVector z = interpolate(g, xs, ys);
        for (const auto& x : xs) CHECK(leq(x, z));
        for (const auto& y : ys) CHECK(leq(z, y));
        // Least interpolant: below every other one, e.g. each y.
        GammaVector w = z + random_vector(rng, g, 0, 2);
        CHECK(leq(z, w));
    }
}

TEST_CASE("riesz refinement") {
    auto triv = coset_space(trivial_subgroup(cyclic_group(1)));
    SimplicialGroup z(triv, 1);
    auto n = [&](long k) { return vec(z, {{k}}); };
    Refinement r = riesz_refine(z, n(2), n(3), n(4), n(1));
    CHECK(r[0][0] == n(2));
    CHECK(r[0][1] == n(0));
    CHECK(r[1][0] == n(2));
    CHECK(r[1][1] == n(1));

    SimplicialGroup g(z2_free(), 1);
    auto one = vec(g, {{1, 0}}), x = vec(g, {{0, 1}}), sum = vec(g, {{1, 1}}), zero = GammaVector(g);
    Refinement s = riesz_refine(g, one, x, sum, zero);
    CHECK(s[0][0] == one);
    CHECK(s[0][1] == zero);
    CHECK(s[1][0] == x);
    CHECK(s[1][1] == zero);

    Refinement t = riesz_refine(g, zero, zero, zero, zero);
    for (const auto& row : t)
        for (const auto& e : row) CHECK(e.is_zero());

    CHECK(error_code([&] { riesz_refine(g, one, x, one, zero); }) == Errc::SumMismatch);
    CHECK(error_code([&] { riesz_refine(g, -one, x, sum - one - one, one); }) == Errc::NotInCone);
}

TEST_CASE("refinements satisfy marginals and positivity") {
    Rng rng(34);
    for (int trial = 0; trial < 300; ++trial) {
        auto grp = random_group(rng);
        SimplicialGroup g(random_space(rng, grp), rng.below(4));
        GammaVector x1 = random_vector(rng, g, 0, 4), x2 = random_vector(rng, g, 0, 4);
        GammaVector s = x1 + x2, y1(g);
        for (std::size_t i = 0; i < g.rank(); ++i)
            for (std::size_t c = 0; c < g.index(); ++c) y1[i][c] = rng.uniform(0, s[i][c].get_si());
        GammaVector y2 = s - y1;
        Refinement z = riesz_refine(g, x1, x2, y1, y2);
        CHECK(z[0][0] + z[0][1] == x1);
        CHECK(z[1][0] + z[1][1] == x2);
        CHECK(z[0][0] + z[1][0] == y1);
        CHECK(z[0][1] + z[1][1] == y2);
        for (const auto& row : z)
            for (const auto& e : row) CHECK(cone_contains(g, e));
    }
}

TEST_CASE("cone is strict and directed") {
    Rng rng(35);
    for (int trial = 0; trial < 300; ++trial) {
        auto grp = random_group(rng);
        SimplicialGroup g(random_space(rng, grp), rng.below(4));
        GammaVector v = random_vector(rng, g, -3, 3);
        if (cone_contains(g, v) && cone_contains(g, -v)) CHECK(v.is_zero());
        GammaVector w = positive_part(v);
        CHECK(cone_contains(g, w));
        CHECK(leq(v, w));
        CHECK(positive_part(v) - negative_part(v) == v);
    }
}

TEST_CASE("the interval [0, u] is directed and convex") {
    Rng rng(36);
    for (int trial = 0; trial < 80; ++trial) {
        GroupPtr grp;
        do grp = random_group(rng);
        while (grp->order() > 4);
        SimplicialGroup g(random_space(rng, grp), 1 + rng.below(2));
        GammaVector u = random_order_unit(rng, g, 2);
        std::size_t expect = 1;
        for (std::size_t i = 0; i < g.rank(); ++i)
            for (std::size_t c = 0; c < g.index(); ++c) expect *= u[i][c].get_ui() + 1;
        if (expect > 48) continue;
        std::vector<GammaVector> box;
        const std::size_t visited = for_each_in_box(GammaVector(g), u, [&](const GammaVector& v) { box.push_back(v); });
        CHECK(visited == box.size());
        CHECK(box.size() == expect);
        auto in = [&](const GammaVector& v) { return cone_contains(g, v) && leq(v, u); };
        for (const auto& a : box)
            for (const auto& b : box) {
                // Directed: some member of the interval lies above both.
                bool found = false;
                for (const auto& c : box) found = found || (leq(a, c) && leq(b, c));
                CHECK(found);
                // Convex: everything between two members is a member.
                if (leq(a, b))
                    for_each_in_box(a, b, [&](const GammaVector& c) { CHECK(in(c)); });
            }
    }
}

TEST_CASE("ideals from basis subsets") {
    SimplicialGroup g(z2_free(), 2);
    IdealSplit s = ideal_from_subset(g, {0});
    CHECK(s.ideal.rank() == 1);
    CHECK(s.quotient.rank() == 1);
    IdealSplit none = ideal_from_subset(g, {});
    CHECK(none.ideal.rank() == 0);
    CHECK(none.quotient == g);
    IdealSplit all = ideal_from_subset(g, {0, 1});
    CHECK(all.ideal == g);
    CHECK(all.quotient.rank() == 0);
    CHECK(error_code([&] { ideal_from_subset(g, {2}); }) == Errc::IndexOutOfRange);

    auto v = vec(g, {{1, -2}, {3, 4}});
    CHECK(s.project(v) == vec(s.quotient, {{3, 4}}));
    CHECK(s.embed(vec(s.ideal, {{1, -2}}), g) == vec(g, {{1, -2}, {0, 0}}));

    CHECK(is_gamma_ideal(g, {GammaVector::basis(g, 1)}));
    CHECK(is_gamma_ideal(g, {vec(g, {{0, 1}, {0, 0}})})); // x·e_1 generates the same ideal
    CHECK_FALSE(is_gamma_ideal(g, {vec(g, {{1, -1}, {0, 0}})}));
    CHECK_FALSE(is_gamma_ideal(g, {vec(g, {{1, 0}, {1, 0}})}));
    CHECK(is_gamma_ideal(g, {}));
}

TEST_CASE("every basis subset spans an ideal, with matching quotient") {
    Rng rng(37);
    for (int trial = 0; trial < 100; ++trial) {
        auto grp = random_group(rng);
        SimplicialGroup g(random_space(rng, grp), 1 + rng.below(4));
        std::vector<std::size_t> subset;
        for (std::size_t i = 0; i < g.rank(); ++i)
            if (rng.coin()) subset.push_back(i);
        IdealSplit s = ideal_from_subset(g, subset);
        std::vector<GammaVector> gens;
        for (std::size_t i : subset) gens.push_back(act(static_cast<Elt>(rng.below(grp->order())), GammaVector::basis(g, i)));
        CHECK(is_gamma_ideal(g, gens));
        CHECK(s.ideal.rank() + s.quotient.rank() == g.rank());
        GammaVector v = random_vector(rng, g, -3, 3);
        // v minus its quotient part lies in the ideal, and the projection is positive on the cone.
        GammaVector w = random_vector(rng, s.ideal, -3, 3);
        CHECK(s.project(s.embed(w, g)).is_zero());
        CHECK(cone_contains(s.quotient, s.project(positive_part(v))));
    }
}

TEST_CASE("stabilizers") {
    auto d3 = dihedral_group(3);
    SimplicialGroup g(coset_space(subgroup_closure(d3, {3})), 1);
    CHECK(group_stabilizer(g).members() == std::vector<Elt>{0});
    // Every basis element is fixed by Δ itself.
    for (Elt d : g.space()->sub().members()) CHECK(act(d, GammaVector::basis(g, 0)) == GammaVector::basis(g, 0));

    SimplicialGroup n(coset_space(subgroup_closure(d3, {1})), 2);
    CHECK(group_stabilizer(n) == n.space()->sub());
    SimplicialGroup w(coset_space(whole_group(d3)), 1);
    CHECK(group_stabilizer(w) == whole_group(d3));
    CHECK(group_stabilizer(SimplicialGroup(g.space(), 0)) == whole_group(d3));

    for (const auto& [name, grp] : group_catalog())
        for (const auto& sub : all_subgroups(grp)) {
            SimplicialGroup h(coset_space(sub), 1);
            Subgroup st = group_stabilizer(h);
            std::vector<Elt> brute;
            for (Elt x = 0; x < grp->order(); ++x) {
                bool fixes = true;
                for (std::size_t c = 0; c < h.index(); ++c) fixes &= h.space()->act(x, c) == c;
                if (fixes) brute.push_back(x);
            }
            CHECK(st.members() == brute);
            CHECK(is_subset(sub, st) == is_normal(sub));
        }
}
