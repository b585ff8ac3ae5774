#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "potentia/graph.hpp"
#include "potentia/layoff.hpp"
#include "potentia/pattern.hpp"
#include "potentia/realize.hpp"
#include "potentia/seq.hpp"
#include "potentia/witness.hpp"

namespace potentia {

/// Malformed input file; line is 1-based.
struct ParseError : std::runtime_error {
  ParseError(const std::string& what, int line)
      : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_no(line) {}
  int line_no;
};

/// One sequence per line, whitespace-separated integers, run-length v^m
/// shorthand, # comments. Blank lines skipped.
std::vector<RawSequence> read_sequences(std::istream& in);
std::vector<RawSequence> read_sequence_file(const std::string& path);

/// First line "n <count>", then one "u v" edge per line, 1-based labels,
/// # comments.
LabeledGraph read_graph(std::istream& in);
LabeledGraph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const LabeledGraph& g);

/// Builtin pattern names (k3, k4, c5, paw, p4, k2_3, ks3_2, ...) or a path to
/// an edge-list file.
LabeledGraph load_pattern(const std::string& name_or_path);

nlohmann::json witness_json(const EmbeddingWitness& w);
nlohmann::json closeness_json(const ClosenessWitness& w);
nlohmann::json verdict_json(const PotentialVerdict& v);
nlohmann::json thm15_json(const Thm15Certificate& c);
nlohmann::json thm41_json(const Thm41Certificate& c);
nlohmann::json trace_json(const LayoffTrace& t);

}  // namespace potentia
