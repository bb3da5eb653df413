#include "stag/export.hpp"

#include <sstream>

namespace stag {

using nlohmann::json;

json lattice_vector_json(const LatticeVector& v) {
    json out = json::array();
    for (std::size_t i = 0; i < v.rank(); ++i) {
        if (is_integer(v[i]))
            out.push_back(static_cast<std::int64_t>(
                boost::multiprecision::numerator(v[i])));
        else
            out.push_back(v[i].str()); // exact "p/q" text, never a float
    }
    return out;
}

json root_system_json(const RootSystem& rs) {
    json cartan = json::array();
    for (int i = 0; i < rs.rank(); ++i) {
        json row = json::array();
        for (int j = 0; j < rs.rank(); ++j) row.push_back(rs.cartan()[i][j]);
        cartan.push_back(std::move(row));
    }
    json roots = json::array();
    for (int idx = 0; idx < rs.root_count(); ++idx)
        roots.push_back(lattice_vector_json(rs.root_vector(idx)));
    return json{{"type", std::string(1, static_cast<char>(rs.lie_type()))},
                {"rank", rs.rank()},
                {"cartan", cartan},
                {"symmetrizers", rs.symmetrizers()},
                {"positive_count", rs.positive_count()},
                {"roots", roots},
                {"two_rho", lattice_vector_json(rs.two_rho())}};
}

namespace {

std::string csv_word(const std::vector<int>& word) { return word_str(word); }

json parabolic_json(const ParabolicData& p) {
    json out = json::array();
    for (const int j : p.subset) out.push_back(j + 1);
    return out;
}

} // namespace

std::string scod_table_csv(const std::vector<ScodRow>& rows) {
    std::ostringstream os;
    os << "min_word,max_word,length,codim,tau_sameL_2rho,scod\n";
    for (const ScodRow& r : rows)
        os << csv_word(r.min_word) << ',' << csv_word(r.max_word) << ',' << r.length
           << ',' << r.codim << ',' << r.tau_same_L_two_rho << ',' << r.scod << '\n';
    return os.str();
}

json scod_table_json(const RootSystem& rs, const ParabolicData& p,
                     const std::vector<ScodRow>& rows) {
    json jrows = json::array();
    for (const ScodRow& r : rows)
        jrows.push_back(json{{"min_word", csv_word(r.min_word)},
                             {"max_word", csv_word(r.max_word)},
                             {"length", r.length},
                             {"codim", r.codim},
                             {"tau_sameL_2rho", r.tau_same_L_two_rho},
                             {"scod", r.scod}});
    return json{{"schema", 1},
                {"type", rs.label()},
                {"parabolic", parabolic_json(p)},
                {"rows", jrows}};
}

std::string poset_dot(const OrbitPoset& poset, const Perversity* perversity) {
    std::ostringstream os;
    os << "digraph orbit_poset {\n  rankdir=BT;\n  node [shape=box];\n";
    for (int i = 0; i < poset.size(); ++i) {
        os << "  n" << i << " [label=\"" << poset.label(i)
           << " | scod=" << poset.scod_of(i);
        if (perversity) os << " | p=" << perversity->values[static_cast<std::size_t>(i)];
        os << "\"];\n";
    }
    for (const auto& [below, above] : poset.covers())
        os << "  n" << below << " -> n" << above << ";\n";
    os << "}\n";
    return os.str();
}

json poset_json(const OrbitPoset& poset, const Perversity* perversity) {
    json nodes = json::array();
    for (int i = 0; i < poset.size(); ++i) {
        json node{{"word", poset.label(i)}, {"scod", poset.scod_of(i)}};
        if (poset.has_nodes()) {
            node["max_word"] = word_str(poset.nodes()[static_cast<std::size_t>(i)].max_rep);
            node["cell_dim"] = poset.nodes()[static_cast<std::size_t>(i)].cell_dim;
        }
        if (perversity)
            node["perversity"] = perversity->values[static_cast<std::size_t>(i)];
        nodes.push_back(std::move(node));
    }
    json covers = json::array();
    for (const auto& [below, above] : poset.covers())
        covers.push_back(json::array({below, above}));
    return json{{"schema", 1}, {"nodes", nodes}, {"covers", covers}};
}

std::string basis_labels_csv(const OrbitPoset& poset,
                             const std::vector<BasisLabel>& labels) {
    std::ostringstream os;
    os << "coset_word,weight\n";
    for (const BasisLabel& l : labels) {
        os << poset.label(l.node) << ',';
        for (std::size_t i = 0; i < l.weight_fundamental.size(); ++i) {
            if (i) os << ' ';
            os << l.weight_fundamental[i];
        }
        os << '\n';
    }
    return os.str();
}

json basis_labels_json(const OrbitPoset& poset, const std::vector<BasisLabel>& labels) {
    json out = json::array();
    for (const BasisLabel& l : labels)
        out.push_back(json{{"coset_word", poset.label(l.node)},
                           {"weight_fundamental", l.weight_fundamental},
                           {"weight_simple_root", lattice_vector_json(l.weight)}});
    return json{{"schema", 1}, {"labels", out}};
}

json torus_trials_json(const checks::TorusSweepResult& res) {
    json trials = json::array();
    for (const checks::TorusTrial& t : res.trials) {
        json weights = json::array();
        for (const LatticeVector& w : t.weights)
            weights.push_back(lattice_vector_json(w));
        json conormal_closed = json::array(), conormal_oracle = json::array();
        for (const LatticeVector& w : t.conormal_closed)
            conormal_closed.push_back(lattice_vector_json(w));
        for (const LatticeVector& w : t.conormal_from_oracle)
            conormal_oracle.push_back(lattice_vector_json(w));
        json degrees = json::array();
        for (const GradedPiece& piece : t.pieces)
            degrees.push_back(json{{"degree", piece.homological_degree},
                                   {"dimension", piece.dimension},
                                   {"weight", lattice_vector_json(piece.weight)}});
        trials.push_back(json{{"n", t.n},
                              {"m", t.m},
                              {"weights", weights},
                              {"mu", lattice_vector_json(t.mu)},
                              {"expected_weight", lattice_vector_json(t.shriek_weight)},
                              {"expected_shift", t.shriek_shift},
                              {"conormal_closed", conormal_closed},
                              {"conormal_oracle", conormal_oracle},
                              {"per_degree", degrees},
                              {"pass", t.pass}});
    }
    return trials;
}

} // namespace stag
