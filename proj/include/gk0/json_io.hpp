#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "gk0/extension.hpp"
#include "gk0/hom_realization.hpp"
#include "gk0/limits.hpp"
#include "gk0/matricial.hpp"
#include "gk0/sdp.hpp"
#include "gk0/shen.hpp"

namespace gk0::io {

using nlohmann::json;

/// Malformed documents raise Error(SchemaError).
[[noreturn]] void schema_error(const std::string& what);
const json& field(const json& j, const char* key);

json integer_to_json(const Integer& v);
Integer integer_from_json(const json& j);

json group_to_json(const FiniteGroup& g);
GroupPtr group_from_json(const json& j);

Subgroup subgroup_from_gens(const GroupPtr& g, const json& gens);
json subgroup_gens(const Subgroup& s);

json element_to_json(const GroupRingElt& a);
GroupRingElt element_from_json(const GroupPtr& g, const json& j);

json coset_vector_to_json(const CosetVector& v);
CosetVector coset_vector_from_json(const SpacePtr& s, const json& j);

json vector_to_json(const GammaVector& v);
GammaVector vector_from_json(const SimplicialGroup& g, const json& j);

/// {"delta_gens": [...], "rank": n}
SimplicialGroup simplicial_from_json(const GroupPtr& g, const json& j);
json simplicial_to_json(const SimplicialGroup& g);

json map_to_json(const GammaLinearMap& f);
GammaLinearMap map_from_json(const GroupPtr& g, const json& j);

json ring_to_json(const MatricialRingDesc& r);
MatricialRingDesc ring_from_json(const GroupPtr& g, const json& j);

json sdp_witness_to_json(const SdpWitness& w);
SdpWitness sdp_witness_from_json(const SimplicialGroup& g, const json& j);

json unperf_witness_to_json(const UnperfWitness& w);
UnperfWitness unperf_witness_from_json(const SimplicialGroup& g, const json& j);

json ext_element_to_json(const ExtElement& e);
ExtElement ext_element_from_json(const ExtendedGroup& h, const json& j);

json hom_spec_to_json(const HomSpec& h);
HomSpec hom_spec_from_json(const GroupPtr& g, const json& j);

json shen_to_json(const ShenFactorization& f);

Tower tower_from_json(const GroupPtr& g, const json& j);
json tower_to_json(const Tower& t);

/// A problem file: {"kind": ..., "group": {...}, ...}. Relative paths inside it resolve against `dir`.
struct ProblemFile {
    std::string kind;
    json doc;
    GroupPtr group;
    std::filesystem::path dir;
};

ProblemFile load_problem(const std::filesystem::path& path);
ProblemFile parse_problem(const std::string& text, std::filesystem::path dir = {});

/// "base" is an inline {"delta_gens", "rank"} or the path of a simplicial file; "unit" falls back to the base's.
ExtendedGroup extension_from_problem(const ProblemFile& p);

} // namespace gk0::io
