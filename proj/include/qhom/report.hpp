#pragma once

// Serialization of results: homology tables as CSV and JSON, duality and
// algebra descriptors as JSON. All emitters are deterministic: fixed key
// order, exact rational rendering, no timestamps.

#include <json.hpp>

#include <string>

#include "qhom/homology.hpp"
#include "qhom/qalgebras.hpp"

namespace qhom {

using Json = nlohmann::ordered_json;

std::string rat_str(const Rat& r);

// internal degree as text: "4", or "0:-2" for multi-degrees
std::string deg_str(const Deg& d);

Json field_json(const ScalarField& f);

// columns: n, d, chainDim, rankOut, rankIn, homDim
std::string homology_csv(const HomologyTable& t);
Json homology_json(const HomologyTable& t);

Json duality_json(const DualityReport& r);

// generators, rules, certificate, dimension counts
Json presentation_json(const PresentedAlgebra& alg, int dimCutoff);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace qhom
