#pragma once

#include <optional>
#include <string>
#include <vector>

#include "thinkit/graph.hpp"
#include "thinkit/problem_spec.hpp"
#include "thinkit/representations.hpp"

namespace thinkit {

struct GraphDocument {
    Graph graph;
    /// Empty, or one name per vertex ("v <id> <name>" lines).
    std::vector<std::string> names;
    /// Non-fatal findings such as duplicate edges.
    std::vector<std::string> warnings;
};

/// Format: "p thin <n> <m>" header, "e <u> <v>" edge lines, optional
/// "v <id> <name>" lines, '#' comments, 0-based ids. Errors name the line.
GraphDocument parse_graph(const std::string& text);
std::string write_graph(const Graph& g, const std::vector<std::string>& names = {});

struct RepresentationDocument {
    ConsistencyMode mode = ConsistencyMode::weak;
    Ordering ordering;
    Partition partition;
};

/// Format: "mode weak|strong", "order <ids...>", "classes <class per vertex>".
/// A missing mode line means weak. Consistency is not checked here.
RepresentationDocument parse_representation_document(const std::string& text);
/// Also checks sizes against g and consistency in the document's mode.
ThinRepresentation parse_representation(const std::string& text, const Graph& g);
std::string write_representation(const ThinRepresentation& rep);

/// Whitespace-separated vertex ids, optionally after an "order" keyword.
Ordering parse_ordering(const std::string& text);
/// Whitespace-separated class ids (vertex-indexed), optionally after "classes".
Partition parse_partition(const std::string& text);

struct SpecDocument {
    ProblemSpec spec;
    std::optional<NeighborhoodBounds> neighborhood;
};

/// JSON document with fields r, sense, weights, c, b, q, lists, matrix,
/// capBounds, cupBounds and neighborhoodBounds. Set indices are 0-based.
/// Missing lists allow every combination; a missing matrix is all "*".
SpecDocument parse_spec(const std::string& json_text, int n);
std::string write_spec(const ProblemSpec& spec, const NeighborhoodBounds* nb = nullptr);

std::string write_solution(const Solution& sol);
Solution parse_solution(const std::string& json_text);

/// {"elements": [names...], "triples": [[x, y, z], ...]} with names.
NonBetweennessInstance parse_nb_instance(const std::string& json_text);
std::string write_nb_instance(const NonBetweennessInstance& inst);

/// Reads a whole file; throws InputError when it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace thinkit
