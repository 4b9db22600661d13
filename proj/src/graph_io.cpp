#include "ngon/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace ngon {

VertexSet GraphDocument::named(const std::string& name) const {
  auto it = subsets.find(name);
  if (it == subsets.end()) throw std::out_of_range("no subset named '" + name + "'");
  return graph.subset(it->second);
}

namespace {

std::vector<std::string> split_words(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> words;
  for (std::string w; is >> w;) words.push_back(w);
  return words;
}

std::int64_t parse_int(const std::string& word, int line) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc{} || ptr != word.data() + word.size())
    throw ParseError(line, "expected an integer, got '" + word + "'");
  return value;
}

}  // namespace

GraphDocument parse_graph(std::istream& in) {
  std::optional<int> n;
  std::vector<VertexDecl> vertices;
  std::set<VertexId> declared;
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::set<std::pair<VertexId, VertexId>> seen_edges;
  std::map<VertexId, int> part_of;
  GraphDocument doc;

  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    auto words = split_words(raw);
    if (words.empty()) continue;
    const std::string& kw = words[0];
    if (!n && kw != "ngon") throw ParseError(line_no, "'ngon <n>' header must come first");
    if (kw == "ngon") {
      if (n) throw ParseError(line_no, "duplicate ngon header");
      if (words.size() != 2) throw ParseError(line_no, "usage: ngon <n>");
      auto value = parse_int(words[1], line_no);
      if (value < 3 || value > 1000) throw ParseError(line_no, "n must be at least 3");
      n = static_cast<int>(value);
    } else if (kw == "vertex") {
      if (words.size() != 3) throw ParseError(line_no, "usage: vertex <id> <part>");
      VertexId id = parse_int(words[1], line_no);
      auto part = parse_int(words[2], line_no);
      if (part != 0 && part != 1) throw ParseError(line_no, "part must be 0 or 1");
      if (!declared.insert(id).second) throw ParseError(line_no, "duplicate vertex " + words[1]);
      vertices.push_back({id, static_cast<int>(part)});
      part_of[id] = static_cast<int>(part);
    } else if (kw == "edge") {
      if (words.size() != 3) throw ParseError(line_no, "usage: edge <id> <id>");
      VertexId a = parse_int(words[1], line_no);
      VertexId b = parse_int(words[2], line_no);
      if (!declared.count(a) || !declared.count(b)) throw ParseError(line_no, "edge references undeclared vertex");
      if (a == b) throw ParseError(line_no, "loop edge");
      if (part_of[a] == part_of[b]) throw ParseError(line_no, "edge joins two vertices of the same part");
      if (!seen_edges.insert({std::min(a, b), std::max(a, b)}).second)
        throw ParseError(line_no, "duplicate edge");
      edges.emplace_back(a, b);
    } else if (kw == "subset") {
      if (words.size() < 2) throw ParseError(line_no, "usage: subset <name> <id> ...");
      const std::string& name = words[1];
      if (doc.subsets.count(name)) throw ParseError(line_no, "duplicate subset " + name);
      std::vector<VertexId> members;
      std::set<VertexId> unique;
      for (std::size_t i = 2; i < words.size(); ++i) {
        VertexId id = parse_int(words[i], line_no);
        if (!declared.count(id)) throw ParseError(line_no, "subset references undeclared vertex " + words[i]);
        if (!unique.insert(id).second) throw ParseError(line_no, "subset lists vertex twice");
        members.push_back(id);
      }
      std::sort(members.begin(), members.end());
      doc.subsets.emplace(name, std::move(members));
    } else if (kw == "mu") {
      if (words.size() < 2) throw ParseError(line_no, "empty mu directive");
      std::string payload;
      for (std::size_t i = 1; i < words.size(); ++i) {
        if (i > 1) payload += ' ';
        payload += words[i];
      }
      doc.mu_lines.push_back(std::move(payload));
    } else {
      throw ParseError(line_no, "unknown directive '" + kw + "'");
    }
  }
  if (!n) throw ParseError(line_no, "missing 'ngon <n>' header");
  doc.graph = BipartiteGraph(*n, std::move(vertices), std::move(edges));
  return doc;
}

GraphDocument parse_graph_string(const std::string& text) {
  std::istringstream is(text);
  return parse_graph(is);
}

GraphDocument load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_graph(in);
}

std::string write_graph(const GraphDocument& doc) {
  std::ostringstream os;
  const auto& g = doc.graph;
  os << "ngon " << g.n() << '\n';
  for (const auto& v : g.vertex_decls()) os << "vertex " << v.id << ' ' << v.part << '\n';
  for (auto [a, b] : g.edge_ids()) os << "edge " << a << ' ' << b << '\n';
  for (const auto& [name, members] : doc.subsets) {
    os << "subset " << name;
    for (VertexId id : members) os << ' ' << id;
    os << '\n';
  }
  for (const auto& line : doc.mu_lines) os << "mu " << line << '\n';
  return os.str();
}

void save_graph(const GraphDocument& doc, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << write_graph(doc);
}

VertexSet resolve_subset(const GraphDocument& doc, const std::string& spec) {
  static const std::string literal = "ids:";
  if (spec.rfind(literal, 0) == 0) {
    std::vector<VertexId> ids;
    std::string rest = spec.substr(literal.size());
    std::istringstream is(rest);
    for (std::string tok; std::getline(is, tok, ',');) {
      if (tok.empty()) continue;
      ids.push_back(parse_int(tok, 0));
    }
    return doc.graph.subset(ids);
  }
  return doc.named(spec);
}

std::string format_ids(const std::vector<VertexId>& ids, char sep) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(ids[i]);
  }
  return out;
}

}  // namespace ngon
