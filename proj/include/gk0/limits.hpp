#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gk0/gamma_map.hpp"

namespace gk0 {

enum class UnitMode { None, Unit, Interval };

/// A finite prefix G_0 -> G_1 -> ... -> G_L, optionally continued by repeating the last map forever.
/// Without repetition the colimit is G_L itself.
class Tower {
public:
    /// Throws DeltaMismatch, ShapeMismatch, NotPositiveMap, NotOrderUnit, or UnitNotPreserved.
    Tower(std::vector<SimplicialGroup> groups, std::vector<GammaLinearMap> maps, std::vector<GammaVector> units = {},
          UnitMode mode = UnitMode::None, bool repeat_last = false);

    std::size_t explicit_levels() const { return groups_.size(); }
    bool repeats() const { return repeat_; }
    UnitMode mode() const { return mode_; }
    bool has_units() const { return mode_ != UnitMode::None; }
    const SpacePtr& space() const { return groups_.front().space(); }

    /// Any level; levels past the prefix exist only when the last map repeats.
    const SimplicialGroup& group(std::size_t level) const;
    /// The map from `level` to `level + 1`.
    const GammaLinearMap& map(std::size_t level) const;
    /// Units past the prefix are pushed forward.
    GammaVector unit(std::size_t level) const;
    /// Highest level that exists, or nullopt when unbounded.
    std::optional<std::size_t> last_level() const;

    GammaVector push(const GammaVector& v, std::size_t from, std::size_t to) const;
    /// Composite map level `from` -> level `to`.
    GammaLinearMap composite(std::size_t from, std::size_t to) const;

    const std::vector<SimplicialGroup>& groups() const { return groups_; }
    const std::vector<GammaLinearMap>& maps() const { return maps_; }
    const std::vector<GammaVector>& units() const { return units_; }

private:
    std::vector<SimplicialGroup> groups_;
    std::vector<GammaLinearMap> maps_;
    std::vector<GammaVector> units_;
    UnitMode mode_;
    bool repeat_;
};

inline Tower tower_new(std::vector<SimplicialGroup> groups, std::vector<GammaLinearMap> maps,
                       std::vector<GammaVector> units = {}, UnitMode mode = UnitMode::None, bool repeat_last = false) {
    return Tower(std::move(groups), std::move(maps), std::move(units), mode, repeat_last);
}

struct ColimitElt {
    std::size_t level;
    GammaVector value;
};

enum class Answer { Yes, NoUpTo, Unknown };

/// Tri-state query result. For Yes, `level` is where it was witnessed; for NoUpTo,
/// the level up to which the negative answer is established.
struct Query {
    Answer answer = Answer::Unknown;
    std::size_t level = 0;
    bool horizon_too_small = false;
    std::string note;
};

Query colimit_eq(const Tower& t, const ColimitElt& p, const ColimitElt& q, std::size_t horizon);
Query colimit_positive(const Tower& t, const ColimitElt& p, std::size_t horizon);
Query colimit_interval_contains(const Tower& t, const ColimitElt& p, std::size_t horizon);

std::string answer_name(Answer a, const char* yes, const char* no);

} // namespace gk0
