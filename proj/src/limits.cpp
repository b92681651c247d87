#include "gk0/limits.hpp"

#include "gk0/error.hpp"

namespace gk0 {

Tower::Tower(std::vector<SimplicialGroup> groups, std::vector<GammaLinearMap> maps, std::vector<GammaVector> units,
             UnitMode mode, bool repeat_last)
    : groups_(std::move(groups)), maps_(std::move(maps)), units_(std::move(units)), mode_(mode), repeat_(repeat_last) {
    if (groups_.empty()) fail(Errc::ShapeMismatch, "a tower needs at least one level");
    for (const auto& g : groups_) {
        require_same_group(g.group(), space()->group());
        if (!same_space(g.space(), space())) fail(Errc::DeltaMismatch, "levels use different subgroups");
    }
    const std::size_t want = repeat_ ? groups_.size() : groups_.size() - 1;
    if (maps_.size() != want)
        fail(Errc::ShapeMismatch, std::to_string(maps_.size()) + " maps for " + std::to_string(groups_.size()) +
                                      " levels" + (repeat_ ? " (repeating towers end with an endomorphism)" : ""));
    for (std::size_t k = 0; k < maps_.size(); ++k) {
        const auto& next = k + 1 < groups_.size() ? groups_[k + 1] : groups_.back();
        if (!same_space(maps_[k].source().space(), space()) || !same_space(maps_[k].target().space(), space()))
            fail(Errc::DeltaMismatch, "map " + std::to_string(k) + " uses a different subgroup");
        if (!(maps_[k].source() == groups_[k]) || !(maps_[k].target() == next))
            fail(Errc::ShapeMismatch, "map " + std::to_string(k) + " does not connect its levels");
        if (!is_positive_map(maps_[k])) fail(Errc::NotPositiveMap, "map " + std::to_string(k));
    }
    if (mode_ == UnitMode::None) {
        units_.clear();
        return;
    }
    if (units_.size() != groups_.size()) fail(Errc::ShapeMismatch, "one unit per level is required");
    for (std::size_t k = 0; k < units_.size(); ++k) {
        require_member(groups_[k], units_[k]);
        if (!is_order_unit(groups_[k], units_[k])) fail(Errc::NotOrderUnit, "unit at level " + std::to_string(k));
    }
    for (std::size_t k = 0; k + 1 < groups_.size(); ++k) {
        GammaVector img = map_apply(maps_[k], units_[k]);
        bool ok = mode_ == UnitMode::Unit ? img == units_[k + 1] : leq(img, units_[k + 1]);
        if (!ok) fail(Errc::UnitNotPreserved, "level " + std::to_string(k) + ": g(u) = " + img.str());
    }
    if (repeat_ && !is_order_unit(groups_.back(), map_apply(maps_.back(), units_.back())))
        fail(Errc::UnitNotPreserved, "the repeated map does not carry order-units to order-units");
}

const SimplicialGroup& Tower::group(std::size_t level) const {
    if (level < groups_.size()) return groups_[level];
    if (!repeat_) fail(Errc::IndexOutOfRange, "level " + std::to_string(level));
    return groups_.back();
}

const GammaLinearMap& Tower::map(std::size_t level) const {
    if (level < maps_.size()) return maps_[level];
    if (!repeat_) fail(Errc::IndexOutOfRange, "no map leaves level " + std::to_string(level));
    return maps_.back();
}

GammaVector Tower::unit(std::size_t level) const {
    if (!has_units()) fail(Errc::NotOrderUnit, "tower carries no units");
    if (level < units_.size()) return units_[level];
    return push(units_.back(), units_.size() - 1, level);
}

std::optional<std::size_t> Tower::last_level() const {
    if (repeat_) return std::nullopt;
    return groups_.size() - 1;
}

GammaVector Tower::push(const GammaVector& v, std::size_t from, std::size_t to) const {
    if (to < from) fail(Errc::IndexOutOfRange, "cannot push backwards");
    require_member(group(from), v);
    GammaVector cur = v;
    for (std::size_t k = from; k < to; ++k) cur = map_apply(map(k), cur);
    return cur;
}

GammaLinearMap Tower::composite(std::size_t from, std::size_t to) const {
    if (to < from) fail(Errc::IndexOutOfRange, "cannot compose backwards");
    GammaLinearMap acc = GammaLinearMap::identity(group(from));
    for (std::size_t k = from; k < to; ++k) acc = map_compose(map(k), acc);
    return acc;
}

namespace {

// Walks the forward images of a single element, which is what all three queries share.
// `hit` decides success at a level. Negative answers are definitive when the tower is a
// finite prefix; for repeating towers, `definitive_zero` enables the kernel-stabilization test.
template <class Hit>
Query walk(const Tower& t, std::size_t start, const GammaVector& v, std::size_t horizon, Hit hit, bool zero_test) {
    Query q;
    if (start > horizon) {
        q.horizon_too_small = true;
        q.note = "element level exceeds the horizon";
        return q;
    }
    auto last = t.last_level();
    if (last && start > *last) fail(Errc::IndexOutOfRange, "level " + std::to_string(start));
    const std::size_t stop = last ? std::min(horizon, *last) : horizon;
    const std::size_t base = t.explicit_levels() - 1;

    GammaVector cur = v;
    std::optional<GammaLinearMap> power; // T^j on the last explicit group, j = k - max(start, base)
    IntMatrix prev_kernel;
    for (std::size_t k = start; k <= stop; ++k) {
        if (k > start) cur = map_apply(t.map(k - 1), cur);
        if (hit(cur, k)) {
            q.answer = Answer::Yes;
            q.level = k;
            return q;
        }
        if (zero_test && !last && k >= base && k + 1 <= horizon) {
            const SimplicialGroup& g = t.group(base);
            if (!power) {
                power = GammaLinearMap::identity(g);
                prev_kernel = kernel_lattice(*power);
            }
            GammaLinearMap next = map_compose(t.map(base), *power);
            IntMatrix next_kernel = kernel_lattice(next);
            if (next_kernel == prev_kernel) {
                q.answer = Answer::NoUpTo;
                q.level = k + 1;
                q.note = "kernels stabilized";
                return q;
            }
            power = next;
            prev_kernel = std::move(next_kernel);
        }
    }
    if (last && horizon >= *last) {
        q.answer = Answer::NoUpTo;
        q.level = *last;
        q.note = "decided at the last level";
    } else if (!zero_test && !last) {
        q.answer = Answer::NoUpTo;
        q.level = horizon;
        q.note = "not witnessed within the horizon";
    } else {
        q.horizon_too_small = !last || horizon < *last;
        q.note = "undecided within the horizon";
    }
    return q;
}

} // namespace

Query colimit_eq(const Tower& t, const ColimitElt& p, const ColimitElt& q, std::size_t horizon) {
    const std::size_t c = std::max(p.level, q.level);
    if (c > horizon) {
        Query r;
        r.horizon_too_small = true;
        r.note = "element level exceeds the horizon";
        return r;
    }
    GammaVector d = t.push(p.value, p.level, c) - t.push(q.value, q.level, c);
    return walk(t, c, d, horizon, [](const GammaVector& v, std::size_t) { return v.is_zero(); }, true);
}

Query colimit_positive(const Tower& t, const ColimitElt& p, std::size_t horizon) {
    return walk(
        t, p.level, p.value, horizon,
        [&](const GammaVector& v, std::size_t k) { return cone_contains(t.group(k), v); }, false);
}

Query colimit_interval_contains(const Tower& t, const ColimitElt& p, std::size_t horizon) {
    if (!t.has_units()) fail(Errc::NotOrderUnit, "tower carries no units");
    return walk(
        t, p.level, p.value, horizon,
        [&](const GammaVector& v, std::size_t k) {
            return cone_contains(t.group(k), v) && leq(v, t.unit(k));
        },
        false);
}

std::string answer_name(Answer a, const char* yes, const char* no) {
    switch (a) {
    case Answer::Yes: return yes;
    case Answer::NoUpTo: return no;
    case Answer::Unknown: return "Unknown";
    }
    return "Unknown";
}

} // namespace gk0
