#include "gk0/group_ring.hpp"

#include <algorithm>

#include "gk0/error.hpp"

namespace gk0 {

void require_same_group(const GroupPtr& a, const GroupPtr& b) {
    if (!same_group(a, b)) fail(Errc::GroupMismatch, "operands live over different groups");
}

void require_same_space(const SpacePtr& a, const SpacePtr& b) {
    require_same_group(a->group(), b->group());
    if (!same_space(a, b)) fail(Errc::DeltaMismatch, "operands use different subgroups");
}

namespace {

std::string term_str(const Integer& k, const std::string& name, bool first) {
    std::string out;
    Integer a = abs(k);
    if (k < 0) out += first ? "-" : " - ";
    else if (!first) out += " + ";
    if (name == "1") return out + a.get_str();
    if (a != 1) out += a.get_str();
    return out + name;
}

} // namespace

GroupRingElt::GroupRingElt(GroupPtr g, const std::map<Elt, Integer>& coeffs) : group_(std::move(g)) {
    for (const auto& [e, k] : coeffs) add_term(e, k);
}

GroupRingElt GroupRingElt::unit(const GroupPtr& g, Elt e, const Integer& k) {
    GroupRingElt out(g);
    out.add_term(e, k);
    return out;
}

Integer GroupRingElt::coeff(Elt e) const {
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? Integer(0) : it->second;
}

bool GroupRingElt::is_positive() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& kv) { return kv.second > 0; });
}

Integer GroupRingElt::max_abs() const {
    Integer m = 0;
    for (const auto& kv : coeffs_) m = std::max<Integer>(m, abs(kv.second));
    return m;
}

void GroupRingElt::add_term(Elt e, const Integer& k) {
    if (e >= group_->order()) fail(Errc::IndexOutOfRange, "group element " + std::to_string(e));
    if (k == 0) return;
    auto [it, fresh] = coeffs_.try_emplace(e, k);
    if (!fresh) {
        it->second += k;
        if (it->second == 0) coeffs_.erase(it);
    }
}

GroupRingElt GroupRingElt::operator-() const {
    GroupRingElt out(group_);
    for (const auto& [e, k] : coeffs_) out.coeffs_.emplace(e, -k);
    return out;
}

GroupRingElt& GroupRingElt::operator+=(const GroupRingElt& o) {
    require_same_group(group_, o.group_);
    for (const auto& [e, k] : o.coeffs_) add_term(e, k);
    return *this;
}

GroupRingElt& GroupRingElt::operator-=(const GroupRingElt& o) {
    require_same_group(group_, o.group_);
    for (const auto& [e, k] : o.coeffs_) add_term(e, -k);
    return *this;
}

std::string GroupRingElt::str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, k] : coeffs_) {
        out += term_str(k, group_->name(e), first);
        first = false;
    }
    return out;
}

GroupRingElt operator+(GroupRingElt a, const GroupRingElt& b) { return a += b; }
GroupRingElt operator-(GroupRingElt a, const GroupRingElt& b) { return a -= b; }

GroupRingElt operator*(const GroupRingElt& a, const GroupRingElt& b) {
    require_same_group(a.group(), b.group());
    const auto& g = *a.group();
    GroupRingElt out(a.group());
    for (const auto& [x, k] : a.coeffs())
        for (const auto& [y, l] : b.coeffs()) out.add_term(g.mul(x, y), k * l);
    return out;
}

GroupRingElt operator*(const Integer& k, const GroupRingElt& a) {
    GroupRingElt out(a.group());
    for (const auto& [e, c] : a.coeffs()) out.add_term(e, k * c);
    return out;
}

CosetVector::CosetVector(SpacePtr s) : space_(std::move(s)), coeffs_(space_->size()) {}

CosetVector::CosetVector(SpacePtr s, std::vector<Integer> coeffs) : space_(std::move(s)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != space_->size())
        fail(Errc::ShapeMismatch, "coset vector has " + std::to_string(coeffs_.size()) + " entries, expected " +
                                      std::to_string(space_->size()));
}

CosetVector CosetVector::indicator(const SpacePtr& s, std::size_t c, const Integer& k) {
    if (c >= s->size()) fail(Errc::IndexOutOfRange, "coset " + std::to_string(c));
    CosetVector v(s);
    v.coeffs_[c] = k;
    return v;
}

bool CosetVector::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& k) { return k == 0; });
}

bool CosetVector::is_positive() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& k) { return k >= 0; });
}

Integer CosetVector::max_abs() const {
    Integer m = 0;
    for (const auto& k : coeffs_) m = std::max<Integer>(m, abs(k));
    return m;
}

CosetVector CosetVector::operator-() const {
    CosetVector out(space_);
    for (std::size_t c = 0; c < size(); ++c) out.coeffs_[c] = -coeffs_[c];
    return out;
}

CosetVector& CosetVector::operator+=(const CosetVector& o) {
    require_same_space(space_, o.space_);
    for (std::size_t c = 0; c < size(); ++c) coeffs_[c] += o.coeffs_[c];
    return *this;
}

CosetVector& CosetVector::operator-=(const CosetVector& o) {
    require_same_space(space_, o.space_);
    for (std::size_t c = 0; c < size(); ++c) coeffs_[c] -= o.coeffs_[c];
    return *this;
}

bool CosetVector::operator==(const CosetVector& o) const { return same_space(space_, o.space_) && coeffs_ == o.coeffs_; }

GroupRingElt CosetVector::lift() const {
    GroupRingElt out(space_->group());
    for (std::size_t c = 0; c < size(); ++c) out.add_term(space_->rep(c), coeffs_[c]);
    return out;
}

std::string CosetVector::str() const {
    std::string out;
    bool first = true;
    for (std::size_t c = 0; c < size(); ++c) {
        if (coeffs_[c] == 0) continue;
        std::string name = space_->sub().size() == 1 ? space_->group()->name(space_->rep(c)) : space_->coset_name(c);
        out += term_str(coeffs_[c], name, first);
        first = false;
    }
    return first ? "0" : out;
}

CosetVector operator+(CosetVector a, const CosetVector& b) { return a += b; }
CosetVector operator-(CosetVector a, const CosetVector& b) { return a -= b; }

CosetVector operator*(const Integer& k, CosetVector a) {
    for (std::size_t c = 0; c < a.size(); ++c) a[c] *= k;
    return a;
}

bool leq(const CosetVector& a, const CosetVector& b) { return (b - a).is_positive(); }

CosetVector cmax(const CosetVector& a, const CosetVector& b) {
    require_same_space(a.space(), b.space());
    CosetVector out(a.space());
    for (std::size_t c = 0; c < a.size(); ++c) out[c] = std::max(a[c], b[c]);
    return out;
}

CosetVector cmin(const CosetVector& a, const CosetVector& b) {
    require_same_space(a.space(), b.space());
    CosetVector out(a.space());
    for (std::size_t c = 0; c < a.size(); ++c) out[c] = std::min(a[c], b[c]);
    return out;
}

CosetVector positive_part(const CosetVector& v) {
    CosetVector out(v.space());
    for (std::size_t c = 0; c < v.size(); ++c) out[c] = v[c] > 0 ? v[c] : Integer(0);
    return out;
}

CosetVector negative_part(const CosetVector& v) {
    CosetVector out(v.space());
    for (std::size_t c = 0; c < v.size(); ++c) out[c] = v[c] < 0 ? Integer(-v[c]) : Integer(0);
    return out;
}

CosetVector project_pi(const GroupRingElt& a, const SpacePtr& cs) {
    require_same_group(a.group(), cs->group());
    CosetVector out(cs);
    for (const auto& [e, k] : a.coeffs()) out[cs->coset_of(e)] += k;
    return out;
}

CosetVector act(const GroupRingElt& a, const CosetVector& v) {
    require_same_group(a.group(), v.space()->group());
    const auto& cs = *v.space();
    CosetVector out(v.space());
    for (const auto& [e, k] : a.coeffs())
        for (std::size_t c = 0; c < v.size(); ++c)
            if (v[c] != 0) out[cs.act(e, c)] += k * v[c];
    return out;
}

CosetVector act(Elt g, const CosetVector& v) {
    const auto& cs = *v.space();
    CosetVector out(v.space());
    for (std::size_t c = 0; c < v.size(); ++c) out[cs.act(g, c)] += v[c];
    return out;
}

} // namespace gk0
