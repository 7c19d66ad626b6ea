#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "bergman/complex.hpp"
#include "bergman/matroid.hpp"
#include "bergman/treespace.hpp"
#include "bergman/weights.hpp"

namespace bergman {

// Parsers throw invalid_input on schema violations; rationals travel as
// "p/q" strings (bare integers are accepted on input).

Rational rational_from_json(const nlohmann::json& j);

Matroid matroid_from_json(const nlohmann::json& j);

WeightVector weights_from_json(const nlohmann::json& j);
nlohmann::json weights_to_json(const WeightVector& w);

// A flag is written as its proper sets; the empty set and the ground set
// are implied.
nlohmann::json flag_to_json(const Flag& f);

nlohmann::json lattice_to_json(const FlatLattice& lattice);

nlohmann::json complex_to_json(const SimplicialComplex& sc);
nlohmann::json coarse_to_json(const SimplicialComplex& fine,
                              const std::vector<CoarseCell>& cells);

DissimilarityMap dist_from_json(const nlohmann::json& j);
nlohmann::json dist_to_json(const DissimilarityMap& d);

EquidistantTree tree_from_json(const nlohmann::json& j);
nlohmann::json tree_to_json(const EquidistantTree& t);

// Graphviz output, only for complexes of dimension <= 1.
std::string complex_to_dot(const SimplicialComplex& sc,
                           const std::string& name);
std::string graph_to_dot(const SimpleGraph& g, const std::string& name,
                         const std::vector<std::string>& labels = {});

}  // namespace bergman
