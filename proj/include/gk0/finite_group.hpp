#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace gk0 {

using Elt = std::size_t;

/// A finite group given by its multiplication table.
class FiniteGroup {
public:
    std::size_t order() const { return inv_.size(); }
    Elt identity() const { return identity_; }
    Elt mul(Elt a, Elt b) const { return table_[a * order() + b]; }
    Elt inv(Elt a) const { return inv_[a]; }
    Elt conj(Elt g, Elt x) const { return mul(mul(g, x), inv(g)); }

    bool has_names() const { return !names_.empty(); }
    std::string name(Elt a) const;
    const std::vector<std::string>& names() const { return names_; }

    /// Row-major table, order() x order().
    std::vector<std::vector<Elt>> table() const;

    bool same_as(const FiniteGroup& other) const;

private:
    friend std::shared_ptr<const FiniteGroup> group_from_table(const std::vector<std::vector<Elt>>&,
                                                               std::vector<std::string>);
    std::vector<Elt> table_;
    std::vector<Elt> inv_;
    Elt identity_ = 0;
    std::vector<std::string> names_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Throws NotAssociative, NoIdentity, NoInverse, or ShapeMismatch for a ragged table.
GroupPtr group_from_table(const std::vector<std::vector<Elt>>& table, std::vector<std::string> names = {});

bool same_group(const GroupPtr& a, const GroupPtr& b);

class Subgroup {
public:
    Subgroup(GroupPtr parent, std::vector<Elt> members);

    const GroupPtr& parent() const { return parent_; }
    const std::vector<Elt>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool contains(Elt g) const;

    bool operator==(const Subgroup& o) const { return same_group(parent_, o.parent_) && members_ == o.members_; }

private:
    GroupPtr parent_;
    std::vector<Elt> members_; // sorted
};

Subgroup subgroup_closure(const GroupPtr& g, const std::vector<Elt>& gens);
Subgroup trivial_subgroup(const GroupPtr& g);
Subgroup whole_group(const GroupPtr& g);
bool is_normal(const Subgroup& d);
Subgroup normal_closure(const Subgroup& d);
Subgroup normalizer(const Subgroup& d);
bool is_subset(const Subgroup& a, const Subgroup& b);

/// Every subgroup, ordered by size then members. Exhaustive; meant for small groups.
std::vector<Subgroup> all_subgroups(const GroupPtr& g);

/// Left cosets g·Δ. Coset 0 is Δ with representative 1; the other cosets are
/// numbered by their smallest element, which is also their representative.
class CosetSpace {
public:
    CosetSpace(Subgroup sub);

    const GroupPtr& group() const { return sub_.parent(); }
    const Subgroup& sub() const { return sub_; }
    std::size_t size() const { return reps_.size(); }
    Elt rep(std::size_t c) const { return reps_[c]; }
    const std::vector<Elt>& reps() const { return reps_; }
    std::size_t coset_of(Elt g) const { return elt_to_coset_[g]; }
    /// Coset of g·rep(c).
    std::size_t act(Elt g, std::size_t c) const { return action_[g * size() + c]; }
    bool is_normal() const { return normal_; }

    std::string coset_name(std::size_t c) const;

private:
    Subgroup sub_;
    std::vector<Elt> reps_;
    std::vector<std::size_t> elt_to_coset_;
    std::vector<std::size_t> action_;
    bool normal_;
};

using SpacePtr = std::shared_ptr<const CosetSpace>;

SpacePtr coset_space(const Subgroup& sub);
bool same_space(const SpacePtr& a, const SpacePtr& b);

// Small groups used by tests, the acceptance harness, and sample files.
GroupPtr cyclic_group(std::size_t n);
/// Order 2n; elements a^i (index i) and a^i b (index n+i) with b a = a^{-1} b.
GroupPtr dihedral_group(std::size_t n);
GroupPtr quaternion_group();
GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b);

} // namespace gk0
