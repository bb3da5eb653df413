#pragma once

#include <string>

#include <json.hpp>

#include "stag/checks.hpp"
#include "stag/orbit_poset.hpp"

namespace stag {

/// JSON description of a root system (type, rank, Cartan matrix, roots in
/// simple-root coordinates); the golden-file format.
nlohmann::json root_system_json(const RootSystem& rs);

nlohmann::json lattice_vector_json(const LatticeVector& v);

/// Scod table serializations.  CSV columns:
/// min_word,max_word,length,codim,tau_sameL_2rho,scod
std::string scod_table_csv(const std::vector<ScodRow>& rows);
nlohmann::json scod_table_json(const RootSystem& rs, const ParabolicData& p,
                               const std::vector<ScodRow>& rows);

/// GraphViz export; node labels "word | scod=k" or "word | scod=k | p=j".
std::string poset_dot(const OrbitPoset& poset, const Perversity* perversity = nullptr);
nlohmann::json poset_json(const OrbitPoset& poset, const Perversity* perversity = nullptr);

/// Basis labels as CSV: coset word, then the weight in fundamental-weight
/// coordinates.
std::string basis_labels_csv(const OrbitPoset& poset,
                             const std::vector<BasisLabel>& labels);
nlohmann::json basis_labels_json(const OrbitPoset& poset,
                                 const std::vector<BasisLabel>& labels);

nlohmann::json torus_trials_json(const checks::TorusSweepResult& res);

} // namespace stag
