#pragma once

#include <string>

#include <json.hpp>

#include "vglab/group.hpp"
#include "vglab/quantale.hpp"
#include "vglab/report.hpp"
#include "vglab/vgroup.hpp"
#include "vglab/vrel.hpp"

namespace vglab {

using json = nlohmann::json;

// Quantale descriptors:
//   {"kind":"chain","n":3}            {"kind":"lukasiewicz_chain","n":3}
//   {"kind":"two"}  {"kind":"pplus"}  {"kind":"pmax"}
//   {"kind":"unit_interval","tensor":"min"|"product"|"lukasiewicz"}
//   {"kind":"delta_grid","h":"1/2","N":4,"tensor":"min"|"conv"}
//   {"kind":"table","elements":[...],"leq":[[0/1,...]],
//    "tensor":[[name,...]],"unit":name}
// Rationals are "p/q" strings, infinity is "inf".
QuantaleSpec quantale_spec_from_json(const json& j);
json quantale_spec_to_json(const QuantaleSpec& s);

// Groups: {"kind":"cyclic","n":4} | {"kind":"klein"} | {"kind":"s3"} |
// {"kind":"dihedral","n":4} | {"kind":"trivial"} |
// {"kind":"product","factors":[...]} |
// {"kind":"table","labels":[...],"add":[[...]]}
FiniteGroup group_from_json(const json& j);
json group_to_json(const FiniteGroup& g);

// Actions: {"on": GROUP, "by": GROUP, "phi": [[perm], ...]}
GroupAction action_from_json(const json& j);
json action_to_json(const GroupAction& a);

// V-categories: {"quantale": SPEC, "carrier": [...], "matrix": [[...]]}
// with entries as quantale-element strings.
VRel vrel_from_json(const json& j, const Quantale& q);
json vcategory_to_json(const VCategory& a);

// V-groups: {"quantale": SPEC, "group": GROUP, "delta": ["1","1/2",...]}
VGroup vgroup_from_json(const json& j);
json vgroup_to_json(const VGroup& x);

// Hom files: {"source": VGROUP, "target": VGROUP, "map": [indices]}
VGroupHom vgroup_hom_from_json(const json& j);

// Split extension inputs:
// {"action": ACTION, "kernel": VGROUP, "quotient": VGROUP}
struct SplitExtensionInput {
  GroupAction action;
  VGroup kernel;
  VGroup quotient;
};
SplitExtensionInput split_input_from_json(const json& j);

// Reports as JSON lines; duration is deliberately left out so that reruns
// with the same config serialize byte-identically.
json law_report_to_json(const LawReport& r);

json parse_json_file(const std::string& path);
json parse_json_text(const std::string& text);

}  // namespace vglab
