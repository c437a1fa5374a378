#include "su2hom/json_io.hpp"

#include <sstream>

namespace su2hom {

using nlohmann::json;

json to_json(const AbelianGroup& g) {
    json torsion = json::array();
    for (const Int& d : g.torsion) torsion.push_back(d.get_str());
    return json{{"free_rank", g.free_rank}, {"torsion", torsion}, {"pretty", g.to_string()}};
}

json to_json(const IntMatrix& m) {
    json triples = json::array();
    for (int i = 0; i < m.rows(); ++i)
        for (const auto& [j, v] : m.row(i)) triples.push_back({i, j, v.get_str()});
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", triples}};
}

json to_json(const ChainComplex& c) {
    json boundaries = json::array();
    for (int k = 1; k <= c.top_degree(); ++k) boundaries.push_back(to_json(c.boundary(k)));
    json out{{"dims", c.dims}, {"boundaries", boundaries}};
    if (!c.labels.empty()) out["labels"] = c.labels;
    return out;
}

json to_json(const GroupTable& t) {
    json rows = json::array();
    for (const auto& r : t.rows) {
        rows.push_back(
            {{"degree", r.degree}, {"group", to_json(r.group)}, {"formula", r.formula}});
    }
    return json{{"n", t.n}, {"rows", rows}, {"space", t.space}, {"theory", t.theory}};
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

std::string group_table_csv(const GroupTable& t) {
    std::ostringstream os;
    os << "space,theory,n,degree,group,formula\n";
    for (const auto& r : t.rows) {
        os << t.space << ',' << t.theory << ',' << t.n << ',' << r.degree << ','
           << csv_escape(r.group.to_string()) << ',' << csv_escape(r.formula) << '\n';
    }
    return os.str();
}

std::string group_table_markdown(const GroupTable& t) {
    std::ostringstream os;
    os << "### " << t.space << " / " << t.theory << ", n = " << t.n << "\n\n";
    os << "| degree | group | formula |\n|---|---|---|\n";
    for (const auto& r : t.rows)
        os << "| " << r.degree << " | " << r.group.to_string() << " | " << r.formula << " |\n";
    return os.str();
}

}  // namespace su2hom
