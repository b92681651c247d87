#include "gk0/finite_group.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "gk0/error.hpp"

namespace gk0 {

std::string FiniteGroup::name(Elt a) const {
    if (a < names_.size()) return names_[a];
    return "g" + std::to_string(a);
}

std::vector<std::vector<Elt>> FiniteGroup::table() const {
    std::vector<std::vector<Elt>> t(order(), std::vector<Elt>(order()));
    for (Elt a = 0; a < order(); ++a)
        for (Elt b = 0; b < order(); ++b) t[a][b] = mul(a, b);
    return t;
}

bool FiniteGroup::same_as(const FiniteGroup& other) const { return table_ == other.table_; }

GroupPtr group_from_table(const std::vector<std::vector<Elt>>& table, std::vector<std::string> names) {
    const std::size_t n = table.size();
    if (n == 0) fail(Errc::NoIdentity, "empty table");
    for (const auto& row : table) {
        if (row.size() != n) fail(Errc::ShapeMismatch, "multiplication table is not square");
        for (Elt e : row)
            if (e >= n) fail(Errc::IndexOutOfRange, "table entry " + std::to_string(e) + " out of range");
    }
    if (!names.empty() && names.size() != n) fail(Errc::ShapeMismatch, "names table has wrong length");

    auto g = std::make_shared<FiniteGroup>();
    g->table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) g->table_[a * n + b] = table[a][b];

    // Checks run in the order left identity, invertibility, associativity; together they force a group.
    bool found = false;
    for (Elt e = 0; e < n && !found; ++e) {
        bool ok = true;
        for (Elt a = 0; a < n && ok; ++a) ok = table[e][a] == a;
        if (ok) {
            g->identity_ = e;
            found = true;
        }
    }
    if (!found) fail(Errc::NoIdentity, "no identity row");

    g->inv_.assign(n, n);
    for (Elt a = 0; a < n; ++a) {
        std::vector<bool> hit(n);
        for (Elt b = 0; b < n; ++b) hit[table[a][b]] = true;
        if (std::find(hit.begin(), hit.end(), false) != hit.end())
            fail(Errc::NoInverse, "multiplication by element " + std::to_string(a) + " is not bijective");
        for (Elt b = 0; b < n; ++b)
            if (table[a][b] == g->identity_ && table[b][a] == g->identity_) {
                g->inv_[a] = b;
                break;
            }
        if (g->inv_[a] == n) fail(Errc::NoInverse, "element " + std::to_string(a) + " has no inverse");
    }

    for (Elt a = 0; a < n; ++a)
        for (Elt b = 0; b < n; ++b)
            for (Elt c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    fail(Errc::NotAssociative, "(" + std::to_string(a) + "," + std::to_string(b) + "," +
                                                   std::to_string(c) + ")");
    for (Elt a = 0; a < n; ++a)
        if (table[a][g->identity_] != a) fail(Errc::NoIdentity, "identity row is not an identity column");
    g->names_ = std::move(names);
    return g;
}

bool same_group(const GroupPtr& a, const GroupPtr& b) { return a == b || (a && b && a->same_as(*b)); }

Subgroup::Subgroup(GroupPtr parent, std::vector<Elt> members) : parent_(std::move(parent)), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool Subgroup::contains(Elt g) const { return std::binary_search(members_.begin(), members_.end(), g); }

Subgroup subgroup_closure(const GroupPtr& g, const std::vector<Elt>& gens) {
    std::set<Elt> seen{g->identity()};
    std::vector<Elt> frontier{g->identity()};
    for (Elt x : gens) {
        if (x >= g->order()) fail(Errc::IndexOutOfRange, "generator " + std::to_string(x));
    }
    // Finite group: closure under right multiplication by generators suffices.
    while (!frontier.empty()) {
        Elt h = frontier.back();
        frontier.pop_back();
        for (Elt x : gens) {
            Elt p = g->mul(h, x);
            if (seen.insert(p).second) frontier.push_back(p);
        }
    }
    return Subgroup(g, {seen.begin(), seen.end()});
}

Subgroup trivial_subgroup(const GroupPtr& g) { return Subgroup(g, {g->identity()}); }

Subgroup whole_group(const GroupPtr& g) {
    std::vector<Elt> all(g->order());
    for (Elt a = 0; a < g->order(); ++a) all[a] = a;
    return Subgroup(g, std::move(all));
}

bool is_normal(const Subgroup& d) {
    const auto& g = d.parent();
    for (Elt x = 0; x < g->order(); ++x)
        for (Elt h : d.members())
            if (!d.contains(g->conj(x, h))) return false;
    return true;
}

Subgroup normal_closure(const Subgroup& d) {
    const auto& g = d.parent();
    std::vector<Elt> gens;
    for (Elt x = 0; x < g->order(); ++x)
        for (Elt h : d.members()) gens.push_back(g->conj(x, h));
    return subgroup_closure(g, gens);
}

Subgroup normalizer(const Subgroup& d) {
    const auto& g = d.parent();
    std::vector<Elt> out;
    for (Elt x = 0; x < g->order(); ++x) {
        bool ok = true;
        for (Elt h : d.members()) ok = ok && d.contains(g->conj(x, h));
        if (ok) out.push_back(x);
    }
    return Subgroup(g, std::move(out));
}

bool is_subset(const Subgroup& a, const Subgroup& b) {
    return std::includes(b.members().begin(), b.members().end(), a.members().begin(), a.members().end());
}

std::vector<Subgroup> all_subgroups(const GroupPtr& g) {
    std::set<std::vector<Elt>> found;
    std::vector<Subgroup> work{trivial_subgroup(g)};
    found.insert(work.front().members());
    for (std::size_t i = 0; i < work.size(); ++i) {
        for (Elt x = 0; x < g->order(); ++x) {
            if (work[i].contains(x)) continue;
            auto gens = work[i].members();
            gens.push_back(x);
            Subgroup s = subgroup_closure(g, gens);
            if (found.insert(s.members()).second) work.push_back(s);
        }
    }
    std::sort(work.begin(), work.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.members() < b.members();
    });
    return work;
}

CosetSpace::CosetSpace(Subgroup sub) : sub_(std::move(sub)) {
    const auto& g = sub_.parent();
    const std::size_t n = g->order();
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    elt_to_coset_.assign(n, unset);
    auto claim = [&](Elt r) {
        std::size_t c = reps_.size();
        reps_.push_back(r);
        for (Elt h : sub_.members()) elt_to_coset_[g->mul(r, h)] = c;
    };
    claim(g->identity());
    for (Elt x = 0; x < n; ++x)
        if (elt_to_coset_[x] == unset) claim(x);

    action_.resize(n * reps_.size());
    for (Elt x = 0; x < n; ++x)
        for (std::size_t c = 0; c < reps_.size(); ++c) action_[x * reps_.size() + c] = elt_to_coset_[g->mul(x, reps_[c])];
    normal_ = gk0::is_normal(sub_);
}

std::string CosetSpace::coset_name(std::size_t c) const {
    if (c == 0) return "Δ";
    return group()->name(reps_[c]) + "Δ";
}

SpacePtr coset_space(const Subgroup& sub) { return std::make_shared<const CosetSpace>(sub); }

bool same_space(const SpacePtr& a, const SpacePtr& b) { return a == b || (a && b && a->sub() == b->sub()); }

GroupPtr cyclic_group(std::size_t n) {
    std::vector<std::vector<Elt>> t(n, std::vector<Elt>(n));
    std::vector<std::string> names(n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
        names[a] = a == 0 ? "1" : a == 1 ? "x" : "x^" + std::to_string(a);
    }
    return group_from_table(t, names);
}

GroupPtr dihedral_group(std::size_t n) {
    const std::size_t m = 2 * n;
    std::vector<std::vector<Elt>> t(m, std::vector<Elt>(m));
    std::vector<std::string> names(m);
    auto power = [](std::size_t i) -> std::string {
        return i == 0 ? "" : i == 1 ? "a" : "a^" + std::to_string(i);
    };
    for (std::size_t x = 0; x < m; ++x) {
        std::size_t i = x % n, s = x / n;
        names[x] = s == 0 ? (i == 0 ? "1" : power(i)) : power(i) + "b";
        for (std::size_t y = 0; y < m; ++y) {
            std::size_t j = y % n, u = y / n;
            std::size_t k = s == 0 ? (i + j) % n : (i + n - j) % n;
            t[x][y] = k + n * ((s + u) % 2);
        }
    }
    return group_from_table(t, names);
}

GroupPtr quaternion_group() {
    // Index 2q + s encodes (-1)^s * unit[q], unit = 1, i, j, k.
    static constexpr std::array<std::array<int, 4>, 4> unit_mul{{{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}};
    static constexpr std::array<std::array<int, 4>, 4> unit_sign{{{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}}};
    std::vector<std::vector<Elt>> t(8, std::vector<Elt>(8));
    const char* units[] = {"1", "i", "j", "k"};
    std::vector<std::string> names(8);
    for (std::size_t x = 0; x < 8; ++x) {
        names[x] = (x % 2 ? "-" : "") + std::string(units[x / 2]);
        for (std::size_t y = 0; y < 8; ++y) {
            std::size_t p = x / 2, q = y / 2;
            std::size_t s = (x % 2 + y % 2 + unit_sign[p][q]) % 2;
            t[x][y] = 2 * unit_mul[p][q] + s;
        }
    }
    return group_from_table(t, names);
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b) {
    const std::size_t na = a->order(), nb = b->order(), n = na * nb;
    std::vector<std::vector<Elt>> t(n, std::vector<Elt>(n));
    std::vector<std::string> names(n);
    for (std::size_t x = 0; x < n; ++x) {
        names[x] = "(" + a->name(x / nb) + "," + b->name(x % nb) + ")";
        for (std::size_t y = 0; y < n; ++y) t[x][y] = a->mul(x / nb, y / nb) * nb + b->mul(x % nb, y % nb);
    }
    return group_from_table(t, names);
}

} // namespace gk0
