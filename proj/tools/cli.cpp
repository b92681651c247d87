#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>

#include <CLI11.hpp>

#include "gk0/error.hpp"
#include "gk0/json_io.hpp"

namespace gk0::cli {

namespace {

using nlohmann::json;
using Report = nlohmann::ordered_json;
using io::field;
using io::ProblemFile;

struct Options {
    std::vector<std::string> files;
    std::string cert;
    std::optional<std::size_t> horizon;
    std::optional<std::string> unit;
    bool as_json = false;
};

struct Outcome {
    int code = 0;
    Report report = Report::object();
    std::optional<json> certificate;
};

void print(std::ostream& out, const Report& r, bool as_json) {
    if (as_json) {
        out << r.dump(2) << '\n';
        return;
    }
    for (const auto& [key, val] : r.items()) {
        if (val.is_string()) {
            out << key << ": " << val.get<std::string>() << '\n';
        } else if (val.is_array() && std::all_of(val.begin(), val.end(), [](const Report& v) { return v.is_string(); })) {
            out << key << ":\n";
            for (const auto& v : val) out << "  " << v.get<std::string>() << '\n';
        } else {
            out << key << ": " << val.dump() << '\n';
        }
    }
}

ProblemFile load(const Options& o, std::size_t i, std::initializer_list<const char*> kinds) {
    if (o.files.size() <= i) io::schema_error("missing input file");
    ProblemFile p = io::load_problem(o.files[i]);
    if (std::find_if(kinds.begin(), kinds.end(), [&](const char* k) { return p.kind == k; }) == kinds.end()) {
        std::string want;
        for (const char* k : kinds) want += std::string(want.empty() ? "" : " or ") + k;
        io::schema_error(o.files[i] + " has kind \"" + p.kind + "\", expected " + want);
    }
    return p;
}

std::string subgroup_str(const Subgroup& s) {
    std::string out = "{";
    for (std::size_t k = 0; k < s.size(); ++k) out += (k ? ", " : "") + s.parent()->name(s.members()[k]);
    return out + "}";
}

std::vector<GroupRingElt> elements(const GroupPtr& g, const json& j) {
    std::vector<GroupRingElt> out;
    if (!j.is_array()) io::schema_error("\"a\" must be an array of elements");
    for (const auto& e : j) out.push_back(io::element_from_json(g, e));
    return out;
}

std::vector<GammaVector> vectors(const SimplicialGroup& g, const json& j) {
    std::vector<GammaVector> out;
    if (!j.is_array()) io::schema_error("expected an array of vectors");
    for (const auto& v : j) out.push_back(io::vector_from_json(g, v));
    return out;
}

std::optional<GammaVector> unit_of(const ProblemFile& p, const SimplicialGroup& g, const Options& o) {
    if (o.unit) {
        json j;
        try {
            j = json::parse(*o.unit);
        } catch (const json::parse_error& e) {
            io::schema_error(std::string("--unit is not JSON: ") + e.what());
        }
        return io::vector_from_json(g, j);
    }
    if (auto it = p.doc.find("unit"); it != p.doc.end()) return io::vector_from_json(g, *it);
    return std::nullopt;
}

json verdict_json(const Verdict& v) { return v.ok ? json("ok") : json("FAILED: " + v.reason); }

Outcome check_simplicial(const Options& o) {
    ProblemFile p = load(o, 0, {"simplicial"});
    SimplicialGroup g = io::simplicial_from_json(p.group, p.doc);
    Outcome r;
    r.report["group order"] = g.group()->order();
    r.report["delta"] = subgroup_str(g.space()->sub());
    r.report["delta normal"] = g.space()->is_normal();
    r.report["index"] = g.index();
    r.report["rank"] = g.rank();
    r.report["stabilizer"] = subgroup_str(group_stabilizer(g));
    if (auto it = p.doc.find("vectors"); it != p.doc.end()) {
        Report lines = Report::array();
        for (const auto& v : vectors(g, *it))
            lines.push_back(v.str() + (cone_contains(g, v) ? " positive" : " not positive"));
        r.report["vectors"] = lines;
    }
    if (auto u = unit_of(p, g, o)) {
        const bool pos = cone_contains(g, *u);
        const bool ou = pos && is_order_unit(g, *u);
        r.report["unit"] = u->str();
        r.report["unit positive"] = pos;
        r.report["order unit"] = ou;
        if (!ou) r.code = 1;
    }
    return r;
}

Outcome sdp(const Options& o) {
    ProblemFile p = load(o, 0, {"relation", "extension"});
    Outcome r;
    if (p.kind == "extension") {
        ExtendedGroup h = io::extension_from_problem(p);
        const json& rel = field(p.doc, "relation");
        std::vector<GroupRingElt> a = elements(p.group, field(rel, "a"));
        std::vector<ExtElement> xs;
        for (const auto& e : field(rel, "x")) xs.push_back(io::ext_element_from_json(h, e));
        SdpWitness w = ext_sdp_witness(h, a, xs);
        Verdict v = verify_ext_sdp_witness(h, a, xs, w);
        r.report["m"] = w.m;
        r.report["verified"] = verdict_json(v);
        r.certificate = io::sdp_witness_to_json(w);
        r.code = v.ok ? 0 : 1;
        return r;
    }
    SimplicialGroup g = io::simplicial_from_json(p.group, p.doc);
    std::vector<GroupRingElt> a = elements(p.group, field(p.doc, "a"));
    std::vector<GammaVector> x = vectors(g, field(p.doc, "x"));
    SdpWitness w = sdp_witness(g, a, x);
    Verdict v = verify_sdp_witness(g, a, x, w);
    r.report["m"] = w.m;
    Report rows = Report::array();
    for (const auto& row : w.b) {
        std::string s = "[";
        for (std::size_t j = 0; j < row.size(); ++j) s += (j ? ", " : "") + row[j].str();
        rows.push_back(s + "]");
    }
    r.report["b"] = rows;
    Report ys = Report::array();
    for (const auto& y : w.y) ys.push_back(y.str());
    r.report["y"] = ys;
    r.report["verified"] = verdict_json(v);
    r.certificate = io::sdp_witness_to_json(w);
    r.code = v.ok ? 0 : 1;
    return r;
}

Outcome unperf(const Options& o) {
    ProblemFile p = load(o, 0, {"relation"});
    SimplicialGroup g = io::simplicial_from_json(p.group, p.doc);
    GroupRingElt a = io::element_from_json(p.group, field(p.doc, "a"));
    GammaVector x = io::vector_from_json(g, field(p.doc, "x"));
    Outcome r;
    r.report["a"] = a.str();
    r.report["x"] = x.str();
    r.report["a·x"] = act(a, x).str();
    r.report["x positive"] = cone_contains(g, x);
    UnperfWitness w = unperforation_witness(g, a, x);
    Verdict v = verify_unperf_witness(g, a, x, w);
    r.report["m"] = w.m;
    Report bs = Report::array();
    for (const auto& b : w.b) bs.push_back(b.str());
    r.report["b"] = bs;
    Report ys = Report::array();
    for (const auto& y : w.y) ys.push_back(y.str());
    r.report["y"] = ys;
    r.report["verified"] = verdict_json(v);
    if (!cone_contains(g, x)) {
        auto single = search_single_term_witness(g, a, x);
        r.report["single-term witness"] = single ? "found" : "none within the search bound";
    }
    r.certificate = io::unperf_witness_to_json(w);
    r.code = v.ok ? 0 : 1;
    return r;
}

Outcome shen(const Options& o) {
    ProblemFile p = load(o, 0, {"hom"});
    GammaLinearMap g1 = io::map_from_json(p.group, p.doc);
    ShenFactorization f = shen_step(g1);
    Outcome r;
    const bool factors = map_compose(f.g2_map, f.g12) == g1;
    const bool kernels = kernel_lattice(f.g12) == kernel_lattice(g1);
    const bool positive = is_positive_map(f.g12) && is_positive_map(f.g2_map);
    r.report["source rank"] = g1.source().rank();
    r.report["middle rank"] = f.g2.rank();
    r.report["g2∘g12 = g1"] = factors;
    r.report["ker g12 = ker g1"] = kernels;
    r.report["positive"] = positive;
    r.certificate = io::shen_to_json(f);
    r.code = factors && kernels && positive ? 0 : 1;
    return r;
}

Outcome realize(const Options& o) {
    ProblemFile p = load(o, 0, {"simplicial"});
    SimplicialGroup g = io::simplicial_from_json(p.group, p.doc);
    auto u = unit_of(p, g, o);
    if (!u) io::schema_error("realize needs a unit (file field \"unit\" or --unit)");
    Realization real = realize_simplicial(g, *u);
    K0Data k0 = k0_of_matricial(real.ring);
    Outcome r;
    r.report["ring"] = real.ring.str();
    r.report["unit class"] = k0.unit_class.str();
    r.report["maps to"] = map_apply(real.iso, k0.unit_class).str();
    r.certificate = json{{"kind", "ring"}, {"group", io::group_to_json(*p.group)}};
    r.certificate->update(io::ring_to_json(real.ring));
    return r;
}

Outcome realize_tower_cmd(const Options& o) {
    ProblemFile p = load(o, 0, {"tower"});
    Tower t = io::tower_from_json(p.group, p.doc);
    RingTower rt = realize_tower(t);
    Outcome r;
    Report rings = Report::array(), maps = Report::array();
    json cert_rings = json::array(), cert_maps = json::array();
    bool ok = true;
    for (const auto& ring : rt.rings) {
        rings.push_back(ring.str());
        cert_rings.push_back(io::ring_to_json(ring));
    }
    for (std::size_t n = 0; n < rt.maps.size(); ++n) {
        const HomSpec& h = rt.maps[n];
        Verdict v = verify_hom_spec(h);
        ok = ok && v.ok;
        std::string cols;
        for (std::size_t i = 0; i < h.matrix.source().rank(); ++i) cols += (i ? ", " : "") + h.matrix.column(i).str();
        maps.push_back(std::to_string(n) + " -> " + std::to_string(n + 1) + ": [" + cols + "] " +
                       (v.ok ? "verified" : "FAILED: " + v.reason));
        cert_maps.push_back(io::hom_spec_to_json(h));
    }
    r.report["rings"] = rings;
    if (!maps.empty()) r.report["maps"] = maps;
    r.certificate = json{{"kind", "ring-tower"}, {"rings", cert_rings}, {"maps", cert_maps}};
    r.code = ok ? 0 : 1;
    return r;
}

Outcome k0(const Options& o) {
    ProblemFile p = load(o, 0, {"ring"});
    MatricialRingDesc ring = io::ring_from_json(p.group, p.doc);
    K0Data k = k0_of_matricial(ring);
    Outcome r;
    r.report["ring"] = ring.str();
    r.report["rank"] = k.group.rank();
    r.report["delta"] = subgroup_str(ring.space()->sub());
    r.report["unit class"] = k.unit_class.str();
    return r;
}

Outcome graded_iso_cmd(const Options& o) {
    ProblemFile a = load(o, 0, {"ring"});
    ProblemFile b = load(o, 1, {"ring"});
    if (!same_group(a.group, b.group)) fail(Errc::GroupMismatch, "rings over different groups");
    MatricialRingDesc r = io::ring_from_json(a.group, a.doc);
    MatricialRingDesc s = io::ring_from_json(a.group, b.doc);
    const bool iso = graded_iso(r, s);
    Outcome out;
    out.report["first"] = r.str();
    out.report["second"] = s.str();
    out.report["graded isomorphic"] = iso;
    out.report["same unit class"] = same_unit_class(r, s);
    out.code = iso ? 0 : 1;
    return out;
}

std::vector<ExtElement> default_probes(const ExtendedGroup& h) {
    const auto& g = h.base();
    std::vector<ExtElement> out;
    for (std::size_t c = 0; c < g.index(); ++c) {
        CosetVector t = CosetVector::indicator(g.space(), c);
        for (std::size_t i = 0; i < g.rank(); ++i) {
            GammaVector e(g);
            e[i] = t;
            out.push_back(h.iota(e));
            out.push_back(h.iota(-e));
        }
        out.push_back(h.make(GammaVector(g), t));
        out.push_back(h.make(GammaVector(g), -t));
    }
    return out;
}

Outcome extend(const Options& o) {
    ProblemFile p = load(o, 0, {"extension", "tower"});
    Outcome r;
    if (p.kind == "tower") {
        Tower t = io::tower_from_json(p.group, p.doc);
        ExtendedTower et = extend_tower(t);
        Report levels = Report::array();
        json maps = json::array();
        for (const auto& h : et.levels) levels.push_back("rank " + std::to_string(h.carrier().rank()) + ", unit " + h.unit().str());
        for (const auto& m : et.maps) maps.push_back(io::map_to_json(m));
        r.report["levels"] = levels;
        r.report["connecting maps"] = "commute with ι and p, preserve (0, Δ)";
        r.certificate = json{{"kind", "extended-tower"}, {"maps", maps}};
        return r;
    }
    ExtendedGroup h = io::extension_from_problem(p);
    std::vector<ExtElement> probes;
    if (auto it = p.doc.find("probes"); it != p.doc.end())
        for (const auto& e : *it) probes.push_back(io::ext_element_from_json(h, e));
    else
        probes = default_probes(h);
    ProbeReport pr = ext_order_unit_check(h, probes);
    IntervalReport ir = ext_interval_preimage(h);
    r.report["base unit"] = h.unit().str();
    r.report["order unit probes"] = std::to_string(pr.dominated) + "/" + std::to_string(pr.probes) + " dominated";
    r.report["interval preimage"] = std::to_string(ir.preimage_size) + " of " + std::to_string(ir.box_size) +
                                    " box elements, [0, u] has " + std::to_string(ir.interval_size);
    bool ok = pr.ok() && ir.ok();
    if (auto it = p.doc.find("relation"); it != p.doc.end()) {
        std::vector<GroupRingElt> a = elements(p.group, field(*it, "a"));
        std::vector<ExtElement> xs;
        for (const auto& e : field(*it, "x")) xs.push_back(io::ext_element_from_json(h, e));
        SdpWitness w = ext_sdp_witness(h, a, xs);
        Verdict v = verify_ext_sdp_witness(h, a, xs, w);
        r.report["relation witness"] = "m = " + std::to_string(w.m) + ", " + (v.ok ? "verified" : "FAILED: " + v.reason);
        r.certificate = io::sdp_witness_to_json(w);
        ok = ok && v.ok;
    }
    r.code = ok ? 0 : 1;
    return r;
}

ColimitElt colimit_elt(const Tower& t, const json& j) {
    const json& lv = field(j, "level");
    if (!lv.is_number_unsigned() && !(lv.is_number_integer() && lv.get<long long>() >= 0))
        io::schema_error("level must be a nonnegative integer");
    const std::size_t level = lv.get<std::size_t>();
    if (auto last = t.last_level(); last && level > *last) io::schema_error("level " + std::to_string(level) + " is past the tower");
    return {level, io::vector_from_json(t.group(level), field(j, "value"))};
}

Outcome colimit_eq_cmd(const Options& o) {
    ProblemFile p = load(o, 0, {"tower"});
    Tower t = io::tower_from_json(p.group, p.doc);
    const json& q = field(p.doc, "query");
    ColimitElt a = colimit_elt(t, field(q, "p"));
    ColimitElt b = colimit_elt(t, field(q, "q"));
    std::size_t horizon = std::max(a.level, b.level) + 8;
    if (auto it = q.find("horizon"); it != q.end() && it->is_number_unsigned()) horizon = it->get<std::size_t>();
    if (o.horizon) horizon = *o.horizon;
    Query res = colimit_eq(t, a, b, horizon);
    Outcome r;
    std::string verdict = answer_name(res.answer, "Equal", "NotEqualUpTo");
    if (res.answer != Answer::Unknown) verdict += "(" + std::to_string(res.level) + ")";
    r.report["p"] = a.value.str() + " at level " + std::to_string(a.level);
    r.report["q"] = b.value.str() + " at level " + std::to_string(b.level);
    r.report["horizon"] = horizon;
    r.report["verdict"] = verdict;
    if (res.horizon_too_small) r.report["horizon too small"] = true;
    if (!res.note.empty()) r.report["note"] = res.note;
    r.code = res.answer == Answer::Yes ? 0 : 1;
    return r;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"gamma-k0: ordered Γ-groups, simplicial realizations and graded matricial rings"};
    app.require_subcommand(1);
    Options o;
    std::string unit, cert;
    std::size_t horizon = 0;

    struct Command {
        const char* name;
        const char* help;
        std::size_t files;
        Outcome (*run)(const Options&);
    };
    const Command commands[] = {
        {"check-simplicial", "Validate a simplicial group file and test its unit", 1, check_simplicial},
        {"sdp-witness", "Decomposition witness for a zero relation", 1, sdp},
        {"unperf-witness", "Unperforation witness for a·x >= 0", 1, unperf},
        {"shen", "Factor a positive map through a simplicial group", 1, shen},
        {"realize", "Graded matricial ring with the given K0 and unit class", 1, realize},
        {"realize-tower", "Realize a unit or interval tower by rings", 1, realize_tower_cmd},
        {"k0", "K0 of a graded matricial ring", 1, k0},
        {"graded-iso", "Graded isomorphism of two rings", 2, graded_iso_cmd},
        {"extend", "Order-unit extension of a simplicial group or tower", 1, extend},
        {"colimit-eq", "Equality of two elements in the colimit of a tower", 1, colimit_eq_cmd},
    };
    std::vector<std::pair<CLI::App*, const Command*>> subs;
    for (const auto& c : commands) {
        CLI::App* sub = app.add_subcommand(c.name, c.help);
        sub->add_option("files", o.files, c.files == 2 ? "two ring files" : "problem file")
            ->required()
            ->expected(static_cast<int>(c.files));
        sub->add_option("--cert", cert, "write the JSON certificate here");
        sub->add_option("--horizon", horizon, "levels to explore");
        sub->add_option("--unit", unit, "unit vector as JSON");
        sub->add_flag("--json", o.as_json, "JSON report");
        subs.emplace_back(sub, &c);
    }

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    for (const auto& [sub, cmd] : subs) {
        if (!sub->parsed()) continue;
        if (sub->count("--unit")) o.unit = unit;
        if (sub->count("--horizon")) o.horizon = horizon;
        o.cert = cert;
        try {
            Outcome r = cmd->run(o);
            if (!o.cert.empty()) {
                if (!r.certificate) io::schema_error(std::string(cmd->name) + " emits no certificate");
                std::ofstream f(o.cert);
                if (!f) io::schema_error("cannot write " + o.cert);
                f << r.certificate->dump(2) << '\n';
                r.report["certificate"] = o.cert;
            }
            print(out, r.report, o.as_json);
            return r.code;
        } catch (const Error& e) {
            err << "error: " << e.what() << '\n';
            return 2;
        } catch (const nlohmann::json::exception& e) {
            err << "error: SchemaError: " << e.what() << '\n';
            return 2;
        }
    }
    return 2;
}

} // namespace gk0::cli
