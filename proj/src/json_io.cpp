#include "gk0/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "gk0/error.hpp"

namespace gk0::io {

void schema_error(const std::string& what) { fail(Errc::SchemaError, what); }

const json& field(const json& j, const char* key) {
    if (!j.is_object()) schema_error(std::string("expected an object holding \"") + key + "\"");
    auto it = j.find(key);
    if (it == j.end()) schema_error(std::string("missing field \"") + key + "\"");
    return *it;
}

namespace {

std::size_t as_index(const json& j, const char* what) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
        schema_error(std::string(what) + " must be a nonnegative integer");
    return j.get<std::size_t>();
}

Elt as_elt(const GroupPtr& g, const json& j) {
    const std::size_t e = as_index(j, "group element");
    if (e >= g->order()) schema_error("group element " + std::to_string(e) + " out of range");
    return e;
}

const json& as_array(const json& j, const char* what) {
    if (!j.is_array()) schema_error(std::string(what) + " must be an array");
    return j;
}

bool flag(const json& j, const char* key, bool fallback) {
    auto it = j.find(key);
    if (it == j.end()) return fallback;
    if (!it->is_boolean()) schema_error(std::string("\"") + key + "\" must be a boolean");
    return it->get<bool>();
}

SpacePtr space_from_json(const GroupPtr& g, const json& j) {
    return coset_space(subgroup_from_gens(g, field(j, "delta_gens")));
}

} // namespace

json integer_to_json(const Integer& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

Integer integer_from_json(const json& j) {
    if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<unsigned long long>()));
    if (j.is_string()) {
        Integer v;
        if (v.set_str(j.get<std::string>(), 10) != 0) schema_error("bad integer \"" + j.get<std::string>() + "\"");
        return v;
    }
    schema_error("expected an integer");
}

json group_to_json(const FiniteGroup& g) {
    json j{{"order", g.order()}, {"mul", g.table()}};
    if (g.has_names()) j["names"] = g.names();
    return j;
}

GroupPtr group_from_json(const json& j) {
    const std::size_t n = as_index(field(j, "order"), "order");
    const json& mul = as_array(field(j, "mul"), "mul");
    if (mul.size() != n) schema_error("mul must have " + std::to_string(n) + " rows");
    std::vector<std::vector<Elt>> table;
    for (const auto& row : mul) {
        if (!row.is_array() || row.size() != n) schema_error("mul rows must have " + std::to_string(n) + " entries");
        std::vector<Elt> r;
        for (const auto& e : row) r.push_back(as_index(e, "table entry"));
        table.push_back(std::move(r));
    }
    std::vector<std::string> names;
    if (auto it = j.find("names"); it != j.end()) {
        for (const auto& s : as_array(*it, "names")) {
            if (!s.is_string()) schema_error("names must be strings");
            names.push_back(s.get<std::string>());
        }
        if (names.size() != n) schema_error("names must have " + std::to_string(n) + " entries");
    }
    return group_from_table(table, std::move(names));
}

Subgroup subgroup_from_gens(const GroupPtr& g, const json& gens) {
    std::vector<Elt> es;
    for (const auto& e : as_array(gens, "delta_gens")) es.push_back(as_elt(g, e));
    return subgroup_closure(g, es);
}

json subgroup_gens(const Subgroup& s) { return s.members(); }

json element_to_json(const GroupRingElt& a) {
    json coeffs = json::object();
    for (const auto& [e, k] : a.coeffs()) coeffs[std::to_string(e)] = integer_to_json(k);
    return json{{"coeffs", coeffs}};
}

GroupRingElt element_from_json(const GroupPtr& g, const json& j) {
    const json& coeffs = field(j, "coeffs");
    if (!coeffs.is_object()) schema_error("coeffs must be an object");
    GroupRingElt a(g);
    for (const auto& [key, val] : coeffs.items()) {
        std::size_t pos = 0;
        unsigned long e = 0;
        try {
            e = std::stoul(key, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != key.size() || key.empty()) schema_error("coefficient key \"" + key + "\" is not an element index");
        if (e >= g->order()) schema_error("group element " + key + " out of range");
        a.add_term(e, integer_from_json(val));
    }
    return a;
}

json coset_vector_to_json(const CosetVector& v) {
    json out = json::array();
    for (const auto& k : v.coeffs()) out.push_back(integer_to_json(k));
    return out;
}

CosetVector coset_vector_from_json(const SpacePtr& s, const json& j) {
    as_array(j, "coset vector");
    if (j.size() != s->size()) schema_error("coset vector needs " + std::to_string(s->size()) + " entries");
    std::vector<Integer> c;
    for (const auto& k : j) c.push_back(integer_from_json(k));
    return CosetVector(s, std::move(c));
}

json vector_to_json(const GammaVector& v) {
    json out = json::array();
    for (const auto& c : v.coords()) out.push_back(coset_vector_to_json(c));
    return out;
}

GammaVector vector_from_json(const SimplicialGroup& g, const json& j) {
    as_array(j, "vector");
    // A rank-one vector may be written as its single coset array.
    if (g.rank() == 1 && !j.empty() && !j.front().is_array()) return GammaVector(g, {coset_vector_from_json(g.space(), j)});
    if (j.size() != g.rank()) schema_error("vector needs " + std::to_string(g.rank()) + " coordinates");
    std::vector<CosetVector> coords;
    for (const auto& c : j) coords.push_back(coset_vector_from_json(g.space(), c));
    return GammaVector(g, std::move(coords));
}

SimplicialGroup simplicial_from_json(const GroupPtr& g, const json& j) {
    return SimplicialGroup(space_from_json(g, j), as_index(field(j, "rank"), "rank"));
}

json simplicial_to_json(const SimplicialGroup& g) {
    return json{{"delta_gens", subgroup_gens(g.space()->sub())}, {"rank", g.rank()}};
}

json map_to_json(const GammaLinearMap& f) {
    json cols = json::array();
    for (const auto& c : f.columns()) cols.push_back(vector_to_json(c));
    return json{{"source", simplicial_to_json(f.source())}, {"target", simplicial_to_json(f.target())}, {"columns", cols}};
}

GammaLinearMap map_from_json(const GroupPtr& g, const json& j) {
    SimplicialGroup src = simplicial_from_json(g, field(j, "source"));
    SimplicialGroup tgt = simplicial_from_json(g, field(j, "target"));
    const json& cols = as_array(field(j, "columns"), "columns");
    if (cols.size() != src.rank()) schema_error("one column per source basis element is required");
    std::vector<GammaVector> columns;
    for (const auto& c : cols) columns.push_back(vector_from_json(tgt, c));
    return GammaLinearMap(src, tgt, std::move(columns));
}

json ring_to_json(const MatricialRingDesc& r) {
    json comps = json::array();
    for (const auto& c : r.components()) comps.push_back(json{{"size", c.size()}, {"shifts", c.shifts}});
    return json{{"delta_gens", subgroup_gens(r.space()->sub())}, {"components", comps}};
}

MatricialRingDesc ring_from_json(const GroupPtr& g, const json& j) {
    SpacePtr s = space_from_json(g, j);
    std::vector<MatrixComponent> comps;
    for (const auto& c : as_array(field(j, "components"), "components")) {
        MatrixComponent m;
        for (const auto& e : as_array(field(c, "shifts"), "shifts")) m.shifts.push_back(as_elt(g, e));
        if (as_index(field(c, "size"), "size") != m.size()) schema_error("component size differs from its shift count");
        comps.push_back(std::move(m));
    }
    return MatricialRingDesc(std::move(s), std::move(comps));
}

json sdp_witness_to_json(const SdpWitness& w) {
    json b = json::array(), y = json::array();
    for (const auto& row : w.b) {
        json r = json::array();
        for (const auto& e : row) r.push_back(element_to_json(e));
        b.push_back(std::move(r));
    }
    for (const auto& v : w.y) y.push_back(vector_to_json(v));
    return json{{"kind", "sdp-witness"}, {"m", w.m}, {"b", b}, {"y", y}};
}

SdpWitness sdp_witness_from_json(const SimplicialGroup& g, const json& j) {
    SdpWitness w;
    w.m = as_index(field(j, "m"), "m");
    for (const auto& row : as_array(field(j, "b"), "b")) {
        std::vector<GroupRingElt> r;
        for (const auto& e : as_array(row, "b row")) r.push_back(element_from_json(g.group(), e));
        w.b.push_back(std::move(r));
    }
    for (const auto& v : as_array(field(j, "y"), "y")) w.y.push_back(vector_from_json(g, v));
    return w;
}

json unperf_witness_to_json(const UnperfWitness& w) {
    json b = json::array(), y = json::array();
    for (const auto& e : w.b) b.push_back(element_to_json(e));
    for (const auto& v : w.y) y.push_back(vector_to_json(v));
    return json{{"kind", "unperf-witness"}, {"m", w.m}, {"b", b}, {"y", y}};
}

UnperfWitness unperf_witness_from_json(const SimplicialGroup& g, const json& j) {
    UnperfWitness w;
    w.m = as_index(field(j, "m"), "m");
    for (const auto& e : as_array(field(j, "b"), "b")) w.b.push_back(element_from_json(g.group(), e));
    for (const auto& v : as_array(field(j, "y"), "y")) w.y.push_back(vector_from_json(g, v));
    return w;
}

json ext_element_to_json(const ExtElement& e) {
    return json{{"x", vector_to_json(e.x)}, {"t", coset_vector_to_json(e.t)}};
}

ExtElement ext_element_from_json(const ExtendedGroup& h, const json& j) {
    return h.make(vector_from_json(h.base(), field(j, "x")), coset_vector_from_json(h.base().space(), field(j, "t")));
}

json hom_spec_to_json(const HomSpec& h) {
    json cols = json::array();
    for (const auto& c : h.matrix.columns()) cols.push_back(vector_to_json(c));
    json cert = json::array();
    for (const auto& e : h.certificate)
        cert.push_back(json::array({e.source_component, e.copy, e.source_slot, e.target_component, e.target_slot}));
    return json{{"kind", "hom-spec"},
                {"source_ring", ring_to_json(h.source)},
                {"target_ring", ring_to_json(h.target)},
                {"matrix", cols},
                {"unital", h.unital},
                {"certificate", cert}};
}

HomSpec hom_spec_from_json(const GroupPtr& g, const json& j) {
    MatricialRingDesc r = ring_from_json(g, field(j, "source_ring"));
    MatricialRingDesc s = ring_from_json(g, field(j, "target_ring"));
    SimplicialGroup k0r(r.space(), r.count()), k0s(s.space(), s.count());
    const json& cols = as_array(field(j, "matrix"), "matrix");
    if (cols.size() != r.count()) schema_error("one matrix column per source component is required");
    std::vector<GammaVector> columns;
    for (const auto& c : cols) columns.push_back(vector_from_json(k0s, c));
    HomSpec h{r, s, GammaLinearMap(k0r, k0s, std::move(columns)), flag(j, "unital", false), {}};
    if (auto it = j.find("certificate"); it != j.end())
        for (const auto& e : as_array(*it, "certificate")) {
            if (!e.is_array() || e.size() != 5) schema_error("certificate entries have five indices");
            h.certificate.push_back({as_index(e[0], "index"), as_index(e[1], "index"), as_index(e[2], "index"),
                                     as_index(e[3], "index"), as_index(e[4], "index")});
        }
    return h;
}

json shen_to_json(const ShenFactorization& f) {
    return json{{"kind", "shen"}, {"g2", simplicial_to_json(f.g2)}, {"g12", map_to_json(f.g12)}, {"g2_map", map_to_json(f.g2_map)}};
}

Tower tower_from_json(const GroupPtr& g, const json& j) {
    SpacePtr s = space_from_json(g, j);
    std::vector<SimplicialGroup> groups;
    for (const auto& r : as_array(field(j, "ranks"), "ranks")) groups.emplace_back(s, as_index(r, "rank"));
    if (groups.empty()) schema_error("a tower needs at least one level");
    const bool repeat = flag(j, "repeat_last", false);
    const json& maps = as_array(field(j, "maps"), "maps");
    const std::size_t want = repeat ? groups.size() : groups.size() - 1;
    if (maps.size() != want) schema_error("tower needs " + std::to_string(want) + " maps");
    std::vector<GammaLinearMap> fs;
    for (std::size_t k = 0; k < maps.size(); ++k) {
        const auto& src = groups[k];
        const auto& tgt = groups[std::min(k + 1, groups.size() - 1)];
        const json& cols = as_array(maps[k], "map columns");
        if (cols.size() != src.rank()) schema_error("map " + std::to_string(k) + " needs one column per basis element");
        std::vector<GammaVector> columns;
        for (const auto& c : cols) columns.push_back(vector_from_json(tgt, c));
        fs.emplace_back(src, tgt, std::move(columns));
    }
    UnitMode mode = UnitMode::None;
    if (auto it = j.find("mode"); it != j.end()) {
        const std::string m = it->is_string() ? it->get<std::string>() : "";
        if (m == "unit") mode = UnitMode::Unit;
        else if (m == "interval") mode = UnitMode::Interval;
        else if (m != "none") schema_error("mode must be \"none\", \"unit\" or \"interval\"");
    }
    std::vector<GammaVector> units;
    if (auto it = j.find("units"); it != j.end()) {
        const json& us = as_array(*it, "units");
        if (us.size() != groups.size()) schema_error("one unit per level is required");
        for (std::size_t k = 0; k < us.size(); ++k) units.push_back(vector_from_json(groups[k], us[k]));
    }
    if (mode != UnitMode::None && units.empty()) schema_error("unit and interval modes need units");
    return Tower(std::move(groups), std::move(fs), std::move(units), mode, repeat);
}

json tower_to_json(const Tower& t) {
    json ranks = json::array(), maps = json::array(), units = json::array();
    for (const auto& g : t.groups()) ranks.push_back(g.rank());
    for (const auto& f : t.maps()) {
        json cols = json::array();
        for (const auto& c : f.columns()) cols.push_back(vector_to_json(c));
        maps.push_back(std::move(cols));
    }
    for (const auto& u : t.units()) units.push_back(vector_to_json(u));
    const char* mode = t.mode() == UnitMode::Unit ? "unit" : t.mode() == UnitMode::Interval ? "interval" : "none";
    json j{{"delta_gens", subgroup_gens(t.space()->sub())},
           {"ranks", ranks},
           {"maps", maps},
           {"mode", mode},
           {"repeat_last", t.repeats()}};
    if (!t.units().empty()) j["units"] = units;
    return j;
}

ProblemFile parse_problem(const std::string& text, std::filesystem::path dir) {
    ProblemFile p;
    try {
        p.doc = json::parse(text);
    } catch (const json::parse_error& e) {
        schema_error(std::string("invalid JSON: ") + e.what());
    }
    p.dir = std::move(dir);
    const json& kind = field(p.doc, "kind");
    if (!kind.is_string()) schema_error("kind must be a string");
    p.kind = kind.get<std::string>();
    static const char* kinds[] = {"group", "simplicial", "relation", "tower", "ring", "hom", "extension"};
    if (std::find(std::begin(kinds), std::end(kinds), p.kind) == std::end(kinds)) schema_error("unknown kind \"" + p.kind + "\"");
    if (auto it = p.doc.find("group"); it != p.doc.end()) {
        p.group = group_from_json(*it);
    } else if (p.kind == "extension" && p.doc.contains("base") && p.doc["base"].is_string()) {
        p.group = load_problem(p.dir / p.doc["base"].get<std::string>()).group;
    } else {
        schema_error("missing field \"group\"");
    }
    return p;
}

ProblemFile load_problem(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) schema_error("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_problem(ss.str(), path.parent_path());
}

ExtendedGroup extension_from_problem(const ProblemFile& p) {
    if (p.kind != "extension") schema_error("expected an extension file");
    const json& d = p.doc;
    json base = field(d, "base");
    std::optional<json> base_unit;
    if (base.is_string()) {
        ProblemFile b = load_problem(p.dir / base.get<std::string>());
        if (!same_group(b.group, p.group)) fail(Errc::GroupMismatch, "base file is over a different group");
        if (auto it = b.doc.find("unit"); it != b.doc.end()) base_unit = *it;
        base = b.doc;
    }
    SimplicialGroup g = simplicial_from_json(p.group, base);
    const json* unit = d.contains("unit") ? &d["unit"] : base_unit ? &*base_unit : nullptr;
    if (!unit) schema_error("missing field \"unit\"");
    return ExtendedGroup(g, vector_from_json(g, *unit));
}

} // namespace gk0::io
