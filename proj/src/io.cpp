#include "potentia/io.hpp"

#include <fstream>
#include <sstream>

namespace potentia {

namespace {

std::string strip_comment(const std::string& line) {
  size_t pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

bool blank(const std::string& s) {
  return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

}  // namespace

std::vector<RawSequence> read_sequences(std::istream& in) {
  std::vector<RawSequence> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string body = strip_comment(line);
    if (blank(body)) continue;
    try {
      out.push_back(parse_sequence(body));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  return out;
}

std::vector<RawSequence> read_sequence_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open sequence file: " + path);
  return read_sequences(in);
}

LabeledGraph read_graph(std::istream& in) {
  std::string line;
  int line_no = 0;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    ++line_no;
    std::string body = strip_comment(line);
    if (blank(body)) continue;
    std::istringstream ss(body);
    if (n < 0) {
      std::string tag;
      ss >> tag >> n;
      if (tag != "n" || ss.fail() || n < 0) throw ParseError("expected header 'n <count>'", line_no);
      continue;
    }
    int u, v;
    ss >> u >> v;
    std::string extra;
    if (ss.fail() || (ss >> extra)) throw ParseError("expected edge 'u v'", line_no);
    if (u < 1 || u > n || v < 1 || v > n) throw ParseError("vertex label out of range", line_no);
    edges.emplace_back(u - 1, v - 1);
  }
  if (n < 0) throw ParseError("missing header 'n <count>'", 1);
  try {
    return graph_from_edges(n, edges);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), line_no);
  }
}

LabeledGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const LabeledGraph& g) {
  out << "n " << g.n() << "\n";
  for (auto [u, v] : g.edges()) out << u + 1 << ' ' << v + 1 << "\n";
}

LabeledGraph load_pattern(const std::string& name_or_path) {
  std::string s = name_or_path;
  for (char& c : s) c = static_cast<char>(tolower(c));
  auto num = [&](size_t from, size_t to) { return std::stoi(s.substr(from, to - from)); };
  try {
    if (s == "paw") return paw_graph();
    size_t us = s.find('_');
    if (s.size() >= 2 && s[0] == 'k' && isdigit(s[1]) && us == std::string::npos)
      return complete_graph(num(1, s.size()));
    if (s.size() >= 2 && s[0] == 'c' && isdigit(s[1]) && us == std::string::npos)
      return cycle_graph(num(1, s.size()));
    if (s.size() >= 2 && s[0] == 'p' && isdigit(s[1]) && us == std::string::npos)
      return path_graph(num(1, s.size()));
    // k<a>_<b>: complete bipartite; ks<r>_<s>: complete split K_r v K~_s
    if (s.size() >= 4 && s.rfind("ks", 0) == 0 && us != std::string::npos)
      return complete_split_graph(num(2, us), num(us + 1, s.size()));
    if (s.size() >= 3 && s[0] == 'k' && isdigit(s[1]) && us != std::string::npos)
      return complete_bipartite(num(1, us), num(us + 1, s.size()));
  } catch (const std::exception&) {
    // not a builtin name; treat as a path below
  }
  return read_graph_file(name_or_path);
}

nlohmann::json witness_json(const EmbeddingWitness& w) {
  nlohmann::json j;
  j["sequence"] = w.host.degrees();
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : w.host.edges()) edges.push_back({u + 1, v + 1});
  j["edges"] = edges;
  nlohmann::json pm = nlohmann::json::array();
  for (size_t p = 0; p < w.vertex_map.size(); ++p)
    pm.push_back({p + 1, w.vertex_map[p] + 1});
  j["pattern_map"] = pm;
  return j;
}

nlohmann::json closeness_json(const ClosenessWitness& w) {
  nlohmann::json j;
  j["a1"] = w.a1;
  j["a2"] = w.a2;
  j["leveled"] = w.leveled;
  j["edits"] = w.edits;
  j["total_edit"] = w.total_edit;
  j["target"] = w.target.terms();
  return j;
}

nlohmann::json verdict_json(const PotentialVerdict& v) {
  nlohmann::json j;
  switch (v.status) {
    case PotentialStatus::Potentially: j["status"] = "potentially_H"; break;
    case PotentialStatus::NotPotentially: j["status"] = "not_potentially_H"; break;
    case PotentialStatus::Unknown: j["status"] = "unknown"; break;
  }
  j["route"] = route_name(v.route);
  if (v.witness) j["witness"] = witness_json(*v.witness);
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

nlohmann::json thm15_json(const Thm15Certificate& c) {
  nlohmann::json j;
  j["theorem"] = "1.5";
  j["k"] = c.k;
  j["alpha"] = c.alpha;
  j["j"] = c.j;
  j["branch"] = c.branch == Thm15Branch::Majorization ? "majorization" : "closeness";
  j["sequence"] = c.seq.terms();
  j["target"] = c.target;
  if (c.parity_fix_excluded) j["parity_fix_excluded"] = true;
  if (c.branch == Thm15Branch::Closeness) j["closeness"] = closeness_json(c.close);
  j["valid"] = c.valid;
  return j;
}

nlohmann::json thm41_json(const Thm41Certificate& c) {
  nlohmann::json j;
  j["theorem"] = "4.1";
  switch (c.status) {
    case Thm41Status::Vacuous: j["status"] = "vacuous_potentially_H"; break;
    case Thm41Status::Certified: j["status"] = "certified"; break;
    case Thm41Status::Conditional: j["status"] = "conditional"; break;
  }
  j["k"] = c.k;
  j["i_star"] = c.i_star;
  j["ell_star"] = c.ell_star;
  j["alpha"] = c.alpha;
  j["b41"] = c.b41;
  j["b41_literal"] = c.b41_literal;
  j["b16"] = c.b16;
  j["verdict"] = verdict_json(c.verdict);
  if (c.status != Thm41Status::Vacuous) {
    j["closeness"] = closeness_json(c.close);
    j["within_b41"] = c.within_b41;
    j["within_b16"] = c.within_b16;
  }
  j["valid"] = c.valid;
  return j;
}

nlohmann::json trace_json(const LayoffTrace& t) {
  nlohmann::json j;
  j["n"] = t.n;
  j["k"] = t.k;
  j["r"] = t.r;
  j["good_count"] = t.good_count;
  nlohmann::json steps = nlohmann::json::array();
  for (const LayoffStep& s : t.steps) {
    nlohmann::json js;
    js["p"] = s.p;
    js["laid_off"] = s.laid_off + 1;
    js["ell"] = s.ell;
    nlohmann::json np = nlohmann::json::array();
    for (int v : s.neighborhood) np.push_back(v + 1);
    js["N_p"] = np;
    js["good"] = s.good;
    js["pi"] = format_runlength(s.pi_sorted);
    js["inconsistency"] = s.partition.inconsistency();
    steps.push_back(js);
  }
  j["steps"] = steps;
  if (!t.violations.empty()) j["violations"] = t.violations;
  return j;
}

}  // namespace potentia
