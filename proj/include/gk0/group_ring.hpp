#pragma once

#include <map>
#include <string>
#include <vector>

#include "gk0/finite_group.hpp"
#include "gk0/integer.hpp"

namespace gk0 {

/// Element of Z[Γ]; sparse, zero coefficients are never stored.
class GroupRingElt {
public:
    explicit GroupRingElt(GroupPtr g) : group_(std::move(g)) {}
    GroupRingElt(GroupPtr g, const std::map<Elt, Integer>& coeffs);

    static GroupRingElt unit(const GroupPtr& g, Elt e, const Integer& k = 1);

    const GroupPtr& group() const { return group_; }
    const std::map<Elt, Integer>& coeffs() const { return coeffs_; }
    Integer coeff(Elt e) const;
    bool is_zero() const { return coeffs_.empty(); }
    bool is_positive() const;
    /// Largest |coefficient|, 0 for the zero element.
    Integer max_abs() const;

    void add_term(Elt e, const Integer& k);

    GroupRingElt operator-() const;
    GroupRingElt& operator+=(const GroupRingElt& o);
    GroupRingElt& operator-=(const GroupRingElt& o);
    bool operator==(const GroupRingElt& o) const { return same_group(group_, o.group_) && coeffs_ == o.coeffs_; }

    std::string str() const;

private:
    GroupPtr group_;
    std::map<Elt, Integer> coeffs_;
};

GroupRingElt operator+(GroupRingElt a, const GroupRingElt& b);
GroupRingElt operator-(GroupRingElt a, const GroupRingElt& b);
GroupRingElt operator*(const GroupRingElt& a, const GroupRingElt& b);
GroupRingElt operator*(const Integer& k, const GroupRingElt& a);

inline GroupRingElt ring_add(const GroupRingElt& a, const GroupRingElt& b) { return a + b; }
inline GroupRingElt ring_mul(const GroupRingElt& a, const GroupRingElt& b) { return a * b; }

/// Element of Z[Γ/Δ], one coefficient per left coset.
class CosetVector {
public:
    explicit CosetVector(SpacePtr s);
    CosetVector(SpacePtr s, std::vector<Integer> coeffs);

    static CosetVector indicator(const SpacePtr& s, std::size_t c, const Integer& k = 1);

    const SpacePtr& space() const { return space_; }
    std::size_t size() const { return coeffs_.size(); }
    const Integer& operator[](std::size_t c) const { return coeffs_[c]; }
    Integer& operator[](std::size_t c) { return coeffs_[c]; }
    const std::vector<Integer>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_positive() const;
    Integer max_abs() const;

    CosetVector operator-() const;
    CosetVector& operator+=(const CosetVector& o);
    CosetVector& operator-=(const CosetVector& o);
    bool operator==(const CosetVector& o) const;

    /// Canonical lift: Σ_c coeff(c)·rep(c).
    GroupRingElt lift() const;
    std::string str() const;

private:
    SpacePtr space_;
    std::vector<Integer> coeffs_;
};

CosetVector operator+(CosetVector a, const CosetVector& b);
CosetVector operator-(CosetVector a, const CosetVector& b);
CosetVector operator*(const Integer& k, CosetVector a);

/// Componentwise order: a <= b iff b - a is positive.
bool leq(const CosetVector& a, const CosetVector& b);
CosetVector cmax(const CosetVector& a, const CosetVector& b);
CosetVector cmin(const CosetVector& a, const CosetVector& b);
CosetVector positive_part(const CosetVector& v);
CosetVector negative_part(const CosetVector& v);

CosetVector project_pi(const GroupRingElt& a, const SpacePtr& cs);
CosetVector act(const GroupRingElt& a, const CosetVector& v);
CosetVector act(Elt g, const CosetVector& v);
inline bool is_positive(const GroupRingElt& a) { return a.is_positive(); }
inline bool is_positive(const CosetVector& v) { return v.is_positive(); }

/// Throws GroupMismatch unless both sides use the same Γ.
void require_same_group(const GroupPtr& a, const GroupPtr& b);
/// Throws DeltaMismatch unless the coset spaces agree.
void require_same_space(const SpacePtr& a, const SpacePtr& b);

} // namespace gk0
