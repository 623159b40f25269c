#include "thinkit/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"
#include "thinkit/errors.hpp"

namespace thinkit {

using json = nlohmann::json;

namespace {

[[noreturn]] void fail_line(int line, const std::string& what) {
    throw InputError("line " + std::to_string(line) + ": " + what);
}

long long parse_int(const std::string& token, int line) {
    std::size_t used = 0;
    long long value = 0;
    try {
        value = std::stoll(token, &used);
    } catch (const std::exception&) {
        fail_line(line, "expected an integer, got '" + token + "'");
    }
    if (used != token.size()) fail_line(line, "expected an integer, got '" + token + "'");
    return value;
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    for (std::string t; in >> t;) out.push_back(t);
    return out;
}

std::vector<long long> int_list(const std::string& text, const char* keyword) {
    std::vector<long long> out;
    std::istringstream in(text);
    std::string line;
    for (int number = 1; std::getline(in, line); ++number) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto tokens = tokens_of(line);
        std::size_t start = 0;
        if (!tokens.empty() && tokens[0] == keyword) start = 1;
        for (std::size_t i = start; i < tokens.size(); ++i) out.push_back(parse_int(tokens[i], number));
    }
    return out;
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

std::int64_t bound_value(const json& v, const char* field) {
    if (v.is_string() && v.get<std::string>() == "inf") return kUnbounded;
    if (!v.is_number_integer()) throw InputError(std::string(field) + " must be an integer or \"inf\"");
    return v.get<std::int64_t>();
}

json bound_json(std::int64_t value) {
    return value == kUnbounded ? json("inf") : json(value);
}

SetMask combination(const json& arr, int r) {
    if (!arr.is_array()) throw InputError("a combination must be an array of set indices");
    SetMask m = 0;
    for (const auto& x : arr) {
        const int j = x.get<int>();
        if (j < 0 || j >= r) throw InputError("combination references set " + std::to_string(j));
        m |= SetMask{1} << j;
    }
    return m;
}

json combination_json(SetMask m) { return json(mask_indices(m)); }

std::vector<std::vector<std::int64_t>> int_matrix(const json& doc, const char* field) {
    std::vector<std::vector<std::int64_t>> out;
    if (!doc.contains(field)) return out;
    for (const auto& row : doc.at(field)) out.push_back(row.get<std::vector<std::int64_t>>());
    return out;
}

template <typename F>
auto guarded(F&& f) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw InputError(std::string("invalid document: ") + e.what());
    }
}

}  // namespace

GraphDocument parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1;
    long long declared_m = -1;
    std::vector<Edge> edges;
    std::vector<std::string> names;
    std::vector<std::string> warnings;
    std::set<Edge> seen;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto t = tokens_of(line);
        if (t.empty()) continue;
        if (t[0] == "p") {
            if (n >= 0) fail_line(number, "duplicate header");
            if (t.size() != 4 || t[1] != "thin") fail_line(number, "expected 'p thin <n> <m>'");
            const long long nn = parse_int(t[2], number);
            declared_m = parse_int(t[3], number);
            if (nn <= 0 || nn > (1 << 20)) fail_line(number, "n must be positive");
            if (declared_m < 0) fail_line(number, "m must be nonnegative");
            n = static_cast<int>(nn);
        } else if (t[0] == "e") {
            if (n < 0) fail_line(number, "edge before header");
            if (t.size() != 3) fail_line(number, "expected 'e <u> <v>'");
            const long long u = parse_int(t[1], number);
            const long long v = parse_int(t[2], number);
            if (u < 0 || v < 0 || u >= n || v >= n) {
                fail_line(number, "vertex id out of range (n=" + std::to_string(n) + ")");
            }
            if (u == v) fail_line(number, "loop at vertex " + std::to_string(u));
            const Edge key{static_cast<int>(std::min(u, v)), static_cast<int>(std::max(u, v))};
            if (!seen.insert(key).second) {
                warnings.push_back("line " + std::to_string(number) + ": duplicate edge " +
                                   std::to_string(key.first) + "-" + std::to_string(key.second));
            }
            edges.push_back(key);
        } else if (t[0] == "v") {
            if (n < 0) fail_line(number, "vertex line before header");
            if (t.size() != 3) fail_line(number, "expected 'v <id> <name>'");
            const long long v = parse_int(t[1], number);
            if (v < 0 || v >= n) fail_line(number, "vertex id out of range");
            names.resize(n);
            names[v] = t[2];
        } else {
            fail_line(number, "unknown line type '" + t[0] + "'");
        }
    }
    if (n < 0) throw InputError("missing 'p thin <n> <m>' header");
    if (declared_m != static_cast<long long>(edges.size())) {
        warnings.push_back("header declares m=" + std::to_string(declared_m) + " but " +
                           std::to_string(edges.size()) + " edge lines were read");
    }
    return {Graph(n, edges), std::move(names), std::move(warnings)};
}

std::string write_graph(const Graph& g, const std::vector<std::string>& names) {
    std::ostringstream out;
    out << "p thin " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (std::size_t v = 0; v < names.size(); ++v) {
        if (!names[v].empty()) out << "v " << v << ' ' << names[v] << '\n';
    }
    for (auto [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
    return out.str();
}

RepresentationDocument parse_representation_document(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::optional<ConsistencyMode> mode;
    std::optional<std::vector<int>> order;
    std::optional<std::vector<int>> classes;
    for (int number = 1; std::getline(in, line); ++number) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto t = tokens_of(line);
        if (t.empty()) continue;
        if (t[0] == "mode") {
            if (t.size() != 2 || (t[1] != "weak" && t[1] != "strong")) {
                fail_line(number, "expected 'mode weak' or 'mode strong'");
            }
            if (mode) fail_line(number, "duplicate mode line");
            mode = t[1] == "weak" ? ConsistencyMode::weak : ConsistencyMode::strong;
        } else if (t[0] == "order" || t[0] == "classes") {
            auto& target = t[0] == "order" ? order : classes;
            if (target) fail_line(number, "duplicate '" + t[0] + "' line");
            std::vector<int> values;
            for (std::size_t i = 1; i < t.size(); ++i) {
                values.push_back(static_cast<int>(parse_int(t[i], number)));
            }
            target = std::move(values);
        } else {
            fail_line(number, "unknown line type '" + t[0] + "'");
        }
    }
    if (!order || !classes) throw InputError("representation needs 'order' and 'classes' lines");
    if (order->size() != classes->size()) {
        throw InputError("'order' and 'classes' lines have different lengths");
    }
    return {mode.value_or(ConsistencyMode::weak), Ordering(std::move(*order)),
            Partition(std::move(*classes))};
}

ThinRepresentation parse_representation(const std::string& text, const Graph& g) {
    RepresentationDocument doc = parse_representation_document(text);
    if (doc.ordering.size() != g.vertex_count()) {
        throw InputError("representation has " + std::to_string(doc.ordering.size()) +
                         " vertices, the graph has " + std::to_string(g.vertex_count()));
    }
    return ThinRepresentation(g, std::move(doc.ordering), std::move(doc.partition), doc.mode);
}

std::string write_representation(const ThinRepresentation& rep) {
    std::ostringstream out;
    out << "mode " << (rep.mode() == ConsistencyMode::strong ? "strong" : "weak") << "\norder";
    for (Vertex v : rep.ordering().sequence()) out << ' ' << v;
    out << "\nclasses";
    for (int c : rep.partition().assignment()) out << ' ' << c;
    out << '\n';
    return out.str();
}

Ordering parse_ordering(const std::string& text) {
    const auto values = int_list(text, "order");
    return Ordering(std::vector<Vertex>(values.begin(), values.end()));
}

Partition parse_partition(const std::string& text) {
    const auto values = int_list(text, "classes");
    return Partition(std::vector<int>(values.begin(), values.end()));
}

SpecDocument parse_spec(const std::string& json_text, int n) {
    const json doc = parse_json(json_text);
    return guarded([&] {
        SpecDocument out;
        ProblemSpec& spec = out.spec;
        spec.r = doc.at("r").get<int>();
        if (spec.r < 1 || spec.r > kMaxSets) {
            throw InputError("r must be in 1.." + std::to_string(kMaxSets));
        }
        const int r = spec.r;
        const std::string sense = doc.value("sense", std::string("max"));
        if (sense == "max" || sense == "maximize") {
            spec.sense = Sense::maximize;
        } else if (sense == "min" || sense == "minimize") {
            spec.sense = Sense::minimize;
        } else {
            throw InputError("sense must be \"min\" or \"max\"");
        }
        spec.objective_weights = int_matrix(doc, "weights");
        spec.coefficients = int_matrix(doc, "c");
        spec.bounded_weights = int_matrix(doc, "b");
        spec.weight_cap = doc.value("q", std::int64_t{0});
        if (doc.contains("lists")) {
            const auto& lists = doc.at("lists");
            if (!lists.is_array() || static_cast<int>(lists.size()) != n) {
                throw InputError("lists must have one entry per vertex");
            }
            for (const auto& list : lists) {
                std::vector<SetMask> combos;
                for (const auto& combo : list) combos.push_back(combination(combo, r));
                spec.lists.push_back(std::move(combos));
            }
        } else {
            spec.lists = ProblemSpec::unconstrained(n, r).lists;
        }
        spec.matrix.assign(r, std::vector<MatrixEntry>(r, MatrixEntry::any));
        if (doc.contains("matrix")) {
            const auto& m = doc.at("matrix");
            if (!m.is_array() || static_cast<int>(m.size()) != r) {
                throw InputError("matrix must be r x r");
            }
            for (int i = 0; i < r; ++i) {
                if (!m[i].is_array() || static_cast<int>(m[i].size()) != r) {
                    throw InputError("matrix must be r x r");
                }
                for (int j = 0; j < r; ++j) {
                    const auto& e = m[i][j];
                    if (e.is_string() && e.get<std::string>() == "*") {
                        spec.matrix[i][j] = MatrixEntry::any;
                    } else if (e.is_number_integer() && (e.get<int>() == 0 || e.get<int>() == 1)) {
                        spec.matrix[i][j] = e.get<int>() == 0 ? MatrixEntry::zero : MatrixEntry::one;
                    } else {
                        throw InputError("matrix entries must be 0, 1 or \"*\"");
                    }
                }
            }
        }
        for (auto [field, target] : {std::pair{"capBounds", &spec.cap_bounds},
                                     std::pair{"cupBounds", &spec.cup_bounds}}) {
            if (!doc.contains(field)) continue;
            for (const auto& b : doc.at(field)) {
                WeightBound wb;
                wb.weight = b.at("i").get<int>();
                wb.sets = combination(b.at("J"), r);
                wb.lower = b.value("l", std::int64_t{0});
                wb.upper = b.contains("u") ? bound_value(b.at("u"), "u") : kUnbounded;
                target->push_back(wb);
            }
        }
        if (doc.contains("neighborhoodBounds")) {
            NeighborhoodBounds nb(r);
            for (const auto& b : doc.at("neighborhoodBounds")) {
                const std::string kind = b.at("kind").get<std::string>();
                if (kind != "open" && kind != "closed") {
                    throw InputError("neighborhood bound kind must be \"open\" or \"closed\"");
                }
                const int lower = b.value("l", 0);
                std::optional<int> upper;
                if (b.contains("u")) {
                    const std::int64_t u = bound_value(b.at("u"), "u");
                    if (u != kUnbounded) upper = static_cast<int>(u);
                }
                nb.set(kind == "open" ? NeighborhoodBounds::Kind::open
                                      : NeighborhoodBounds::Kind::closed,
                       b.at("i").get<int>(), b.at("j").get<int>(), lower, upper);
            }
            out.neighborhood = nb;
        }
        return out;
    });
}

std::string write_spec(const ProblemSpec& spec, const NeighborhoodBounds* nb) {
    json doc;
    doc["r"] = spec.r;
    doc["sense"] = spec.sense == Sense::maximize ? "max" : "min";
    doc["weights"] = spec.objective_weights;
    doc["c"] = spec.coefficients;
    doc["b"] = spec.bounded_weights;
    doc["q"] = spec.weight_cap;
    json lists = json::array();
    for (const auto& list : spec.lists) {
        json combos = json::array();
        for (SetMask m : list) combos.push_back(combination_json(m));
        lists.push_back(std::move(combos));
    }
    doc["lists"] = std::move(lists);
    json matrix = json::array();
    for (const auto& row : spec.matrix) {
        json out_row = json::array();
        for (MatrixEntry e : row) {
            out_row.push_back(e == MatrixEntry::any ? json("*") : json(e == MatrixEntry::one ? 1 : 0));
        }
        matrix.push_back(std::move(out_row));
    }
    doc["matrix"] = std::move(matrix);
    for (auto [field, source] : {std::pair{"capBounds", &spec.cap_bounds},
                                 std::pair{"cupBounds", &spec.cup_bounds}}) {
        json arr = json::array();
        for (const WeightBound& b : *source) {
            arr.push_back({{"i", b.weight},
                           {"J", combination_json(b.sets)},
                           {"l", b.lower},
                           {"u", bound_json(b.upper)}});
        }
        doc[field] = std::move(arr);
    }
    if (nb != nullptr) {
        json arr = json::array();
        for (auto kind : {NeighborhoodBounds::Kind::open, NeighborhoodBounds::Kind::closed}) {
            for (int i = 0; i < nb->set_count(); ++i) {
                for (int j = 0; j < nb->set_count(); ++j) {
                    const NeighborhoodBound& b = nb->get(kind, i, j);
                    if (!b.active()) continue;
                    arr.push_back({{"i", i},
                                   {"j", j},
                                   {"kind", kind == NeighborhoodBounds::Kind::open ? "open" : "closed"},
                                   {"l", b.lower},
                                   {"u", b.upper_is_one ? json(1) : json("inf")}});
                }
            }
        }
        doc["neighborhoodBounds"] = std::move(arr);
    }
    return doc.dump(2) + "\n";
}

std::string write_solution(const Solution& sol) {
    json doc;
    doc["objective"] = sol.objective;
    doc["sets"] = sol.sets;
    json labels = json::array();
    for (SetMask m : sol.labels) labels.push_back(combination_json(m));
    doc["labels"] = std::move(labels);
    return doc.dump(2) + "\n";
}

Solution parse_solution(const std::string& json_text) {
    const json doc = parse_json(json_text);
    return guarded([&] {
        Solution sol;
        sol.objective = doc.at("objective").get<std::int64_t>();
        sol.sets = doc.at("sets").get<std::vector<std::vector<Vertex>>>();
        for (const auto& combo : doc.at("labels")) {
            sol.labels.push_back(combination(combo, kMaxSets));
        }
        return sol;
    });
}

NonBetweennessInstance parse_nb_instance(const std::string& json_text) {
    const json doc = parse_json(json_text);
    return guarded([&] {
        auto elements = doc.at("elements").get<std::vector<std::string>>();
        std::vector<std::array<std::string, 3>> triples;
        for (const auto& t : doc.value("triples", json::array())) {
            if (!t.is_array() || t.size() != 3) throw InputError("each triple needs 3 elements");
            triples.push_back({t[0].get<std::string>(), t[1].get<std::string>(),
                               t[2].get<std::string>()});
        }
        return NonBetweennessInstance::from_names(std::move(elements), triples);
    });
}

std::string write_nb_instance(const NonBetweennessInstance& inst) {
    json doc;
    doc["elements"] = inst.ground_set();
    json triples = json::array();
    for (const auto& t : inst.triples()) {
        triples.push_back({inst.ground_set()[t[0]], inst.ground_set()[t[1]], inst.ground_set()[t[2]]});
    }
    doc["triples"] = std::move(triples);
    return doc.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace thinkit
