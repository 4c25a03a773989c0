#pragma once

#include <json.hpp>
#include <string>

#include "hilbspine/dominance.hpp"
#include "hilbspine/macaulay.hpp"
#include "hilbspine/matroid.hpp"
#include "hilbspine/spine.hpp"

namespace hilbspine {

// ordered_json keeps insertion order, making every dump byte-stable.
using Json = nlohmann::ordered_json;

// {"colength":N,"vertices":[[4],[3,1],...],
//  "edges":[{"u":0,"v":2,"witnesses":[{"grading":[1,1],"hf":[1,1,1,1]}]}]}
Json spine_to_json(const SpineGraph& G);
SpineGraph spine_from_json(const Json& j);

Json poset_to_json(const DominancePoset& p);

// {"ideal":[...],"grading":[a,b],"degree":d,"bar":bool,
//  "rows":["x^4",...],"cols":[...],"entries":[["...poly..."]]}
Json macaulay_to_json(const MacaulayMatrix& R);

// {"ground":[...],"rank":r,"bases":[[...]],"circuits":[[...]],
//  "uniform":bool,"loops":[...],"coloops":[...]}
Json matroid_to_json(const Matroid& m);

// Parsers for the CLI's text encodings; all throw input_error on bad input.
std::vector<int> parse_int_list(const std::string& s);      // "6,4,2,1"
MonomialIdeal parse_ideal(const std::string& s);
Grading parse_grading(const std::string& s);                // "1,2"
HilbertFunction parse_hf(const std::string& s);             // "1,1,2,1,1"

}  // namespace hilbspine
