#pragma once

#include <string>
#include <vector>

#include "cobar/groups.hpp"
#include "cobar/simplicial.hpp"

namespace cobar {

// Presentation document:
//   { "name": "rp2",
//     "simplices": {
//       "0": [ { "id": "v" } ],
//       "1": [ { "id": "a", "faces": ["v", "v"] } ],
//       "2": [ { "id": "t", "faces": ["a", "s0 v", "a"] } ] } }
// Face expressions are degeneracy words applied to a generator id, as
// printed by SimplicialSetPresentation::show. The parsed presentation is
// validated; malformed documents raise input_error.
SimplicialSetPresentation presentation_from_json(const std::string& text);
std::string presentation_to_json(const SimplicialSetPresentation& s);

// Group table document:
//   { "name": "Z/2", "elements": ["1", "t"], "table": [[0, 1], [1, 0]] }
// table[a][b] is the index of a*b; element 0 is the identity. Validated.
FiniteGroupTable table_from_json(const std::string& text);
std::string table_to_json(const FiniteGroupTable& g);

// Edge label document for covers: { "a": "t", "b": "1" }, one entry per
// nondegenerate edge of S, values naming elements of G.
std::vector<int> edge_map_from_json(const std::string& text,
                                    const SimplicialSetPresentation& S,
                                    const FiniteGroupTable& G);

// Builtin example name, otherwise a path to a JSON document.
SimplicialSetPresentation space_from_spec(const std::string& spec);
// "Z/n", "S3", "Q8", otherwise a path to a JSON document.
FiniteGroupTable table_from_spec(const std::string& spec);

std::string read_text_file(const std::string& path);

}  // namespace cobar
