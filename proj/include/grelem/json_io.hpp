#pragma once

#include <string>

#include "json.hpp"

#include "grelem/localize.hpp"
#include "grelem/suites.hpp"
#include "grelem/words.hpp"

namespace grelem::io {

using json = nlohmann::ordered_json;

json to_json(const GradedPoly& p);
json to_json(const MatP& m);
json to_json(const ElemWord& w);
json to_json(const Witness& w);
json to_json(const ConjugatedWord& cw);
json to_json(const PatchWitness& pw);
json to_json(const Report& r, bool timing);

GradedPoly poly_from_json(const json& j);
// Accepts either the full polynomial object or a bare string in the
// polynomial grammar, in which case ring/nv supply the context.
GradedPoly poly_from_json_or_text(const json& j, const CoeffRing& ring, unsigned nv);
MatP matrix_from_json(const json& j);
ElemWord word_from_json(const json& j);

json load_json_file(const std::string& path);

}  // namespace grelem::io
