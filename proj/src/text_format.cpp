#include "splitgraph/text_format.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace splitgraph {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    Line line{number, {}};
    for (std::string w; words >> w;) line.tokens.push_back(w);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

class Cursor {
 public:
  Cursor(const std::string& text, std::string file) : lines_(tokenize(text)), file_(std::move(file)) {}

  bool done() const { return pos_ >= lines_.size(); }
  const Line& peek() const { return lines_[pos_]; }
  const Line& next() { return lines_[pos_++]; }

  [[noreturn]] void fail(const Line& line, const std::string& what) const { throw ParseError(file_, line.number, what); }
  [[noreturn]] void fail_eof(const std::string& what) const {
    throw ParseError(file_, lines_.empty() ? 1 : lines_.back().number, what);
  }
  const std::string& file() const { return file_; }

 private:
  std::vector<Line> lines_;
  std::string file_;
  std::size_t pos_ = 0;
};

long long parse_count(const Cursor& c, const Line& line, const std::string& token) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || value < 0) {
    c.fail(line, "expected a nonnegative integer, got '" + token + "'");
  }
  return value;
}

BigInt parse_entry(const Cursor& c, const Line& line, const std::string& token) {
  const std::size_t start = token[0] == '-' ? 1 : 0;
  if (start == token.size() || token.find_first_not_of("0123456789", start) != std::string::npos) {
    c.fail(line, "expected an integer, got '" + token + "'");
  }
  return BigInt(token);
}

IntMatrix read_matrix(Cursor& c) {
  if (c.done()) c.fail_eof("expected 'matrix <rows> <cols>'");
  const Line& header = c.next();
  if (header.tokens[0] != "matrix" || header.tokens.size() != 3) c.fail(header, "expected 'matrix <rows> <cols>'");
  const auto rows = static_cast<std::size_t>(parse_count(c, header, header.tokens[1]));
  const auto cols = static_cast<std::size_t>(parse_count(c, header, header.tokens[2]));
  IntMatrix m(rows, cols);
  if (cols == 0) return m;  // rows of a zero-column matrix are not written
  for (std::size_t i = 0; i < rows; ++i) {
    if (c.done()) c.fail_eof("matrix ends after " + std::to_string(i) + " of " + std::to_string(rows) + " rows");
    const Line& row = c.next();
    if (row.tokens.size() != cols) {
      c.fail(row, "row has " + std::to_string(row.tokens.size()) + " entries, expected " + std::to_string(cols));
    }
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = parse_entry(c, row, row.tokens[j]);
  }
  return m;
}

}  // namespace

DirectedGraph parse_graph(const std::string& text, const std::string& file) {
  Cursor c(text, file);
  if (c.done()) c.fail_eof("empty graph file");
  const Line& header = c.next();
  if (header.tokens[0] != "graph" || header.tokens.size() != 2) c.fail(header, "expected 'graph <name>'");
  const std::string name = header.tokens[1];

  std::vector<std::string> vertices;
  std::vector<DirectedGraph::EdgeRecord> edges;
  std::map<std::string, std::size_t> vertex_line, edge_line;
  std::vector<std::size_t> edge_lines;
  while (!c.done()) {
    const Line& line = c.next();
    const auto& t = line.tokens;
    if (t[0] == "vertex") {
      if (t.size() != 2) c.fail(line, "expected 'vertex <id>'");
      if (!vertex_line.emplace(t[1], line.number).second) c.fail(line, "duplicate vertex id '" + t[1] + "'");
      vertices.push_back(t[1]);
    } else if (t[0] == "edge") {
      if (t.size() != 4) c.fail(line, "expected 'edge <id> <source> <range>'");
      if (!edge_line.emplace(t[1], line.number).second) c.fail(line, "duplicate edge id '" + t[1] + "'");
      edges.push_back({t[1], t[2], t[3]});
      edge_lines.push_back(line.number);
    } else {
      c.fail(line, "unknown record '" + t[0] + "'");
    }
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (const std::string* end : {&edges[i].source, &edges[i].range}) {
      if (!vertex_line.count(*end)) {
        throw ParseError(file, edge_lines[i], "edge '" + edges[i].id + "' uses unknown vertex '" + *end + "'");
      }
    }
  }
  return DirectedGraph(name, std::move(vertices), edges);
}

std::string serialize_graph(const DirectedGraph& g) {
  std::ostringstream os;
  os << "graph " << g.name() << '\n';
  for (const auto& v : g.vertices()) os << "vertex " << v << '\n';
  for (const auto& e : g.edges()) os << "edge " << e.id << ' ' << g.vertex(e.source) << ' ' << g.vertex(e.range) << '\n';
  return os.str();
}

namespace {

struct RawSpec {
  std::vector<std::string> new_vertices;
  std::vector<VertexIndex> alpha;
  std::vector<std::size_t> psi;
};

EdgePartition read_partition(const Cursor& c, const Line& line, const DirectedGraph& g, VertexIndex& w) {
  const auto& t = line.tokens;
  if (t.size() < 2) c.fail(line, "expected 'partition <vertex> { <edges> } ...'");
  auto v = g.find_vertex(t[1]);
  if (!v) c.fail(line, "unknown vertex '" + t[1] + "'");
  w = *v;
  EdgePartition classes;
  std::optional<std::vector<EdgeIndex>> open;
  for (std::size_t i = 2; i < t.size(); ++i) {
    if (t[i] == "{") {
      if (open) c.fail(line, "nested '{'");
      open.emplace();
    } else if (t[i] == "}") {
      if (!open) c.fail(line, "unmatched '}'");
      classes.push_back(std::move(*open));
      open.reset();
    } else {
      if (!open) c.fail(line, "edge '" + t[i] + "' outside braces");
      auto e = g.find_edge(t[i]);
      if (!e) c.fail(line, "unknown edge '" + t[i] + "'");
      open->push_back(*e);
    }
  }
  if (open) c.fail(line, "unclosed '{'");
  if (classes.empty()) c.fail(line, "partition has no classes");
  return classes;
}

}  // namespace

SplitSpecFile parse_split_spec(const std::string& text, const DirectedGraph& g, const std::string& file,
                               bool allow_empty_classes) {
  Cursor c(text, file);
  if (c.done()) c.fail_eof("empty spec file");
  const Line& header = c.next();
  if (header.tokens.size() != 1 || (header.tokens[0] != "insplit" && header.tokens[0] != "outsplit")) {
    c.fail(header, "expected 'insplit' or 'outsplit'");
  }
  const bool in = header.tokens[0] == "insplit";

  RawSpec raw;
  std::map<std::string, std::size_t> new_index;
  std::vector<bool> psi_set(g.edge_count(), false);
  raw.psi.assign(g.edge_count(), 0);
  bool general = false;
  std::optional<std::pair<VertexIndex, EdgePartition>> partition;
  std::size_t partition_line = 0;

  while (!c.done()) {
    const Line& line = c.next();
    const auto& t = line.tokens;
    if (t[0] == "newvertex") {
      if (t.size() != 4 || t[2] != "over") c.fail(line, "expected 'newvertex <id> over <vertex>'");
      auto v = g.find_vertex(t[3]);
      if (!v) c.fail(line, "unknown vertex '" + t[3] + "'");
      if (!new_index.emplace(t[1], raw.new_vertices.size()).second) c.fail(line, "duplicate new vertex '" + t[1] + "'");
      raw.new_vertices.push_back(t[1]);
      raw.alpha.push_back(*v);
      general = true;
    } else if (t[0] == "psi") {
      if (t.size() != 3) c.fail(line, "expected 'psi <edge> <new-vertex>'");
      auto e = g.find_edge(t[1]);
      if (!e) c.fail(line, "unknown edge '" + t[1] + "'");
      auto y = new_index.find(t[2]);
      if (y == new_index.end()) c.fail(line, "unknown new vertex '" + t[2] + "' (declare it with newvertex first)");
      if (psi_set[*e]) c.fail(line, "psi of '" + t[1] + "' given twice");
      psi_set[*e] = true;
      raw.psi[*e] = y->second;
      general = true;
    } else if (t[0] == "partition") {
      if (partition) c.fail(line, "only one partition line is supported");
      VertexIndex w = 0;
      auto classes = read_partition(c, line, g, w);
      partition.emplace(w, std::move(classes));
      partition_line = line.number;
    } else {
      c.fail(line, "unknown record '" + t[0] + "'");
    }
    if (general && partition) c.fail(line, "cannot mix partition shorthand with newvertex/psi lines");
  }

  if (partition) {
    try {
      if (in) return {in_split_from_partition(g, partition->first, partition->second)};
      return {out_split_from_partition(g, partition->first, partition->second, allow_empty_classes)};
    } catch (const SpecError& err) {
      throw ParseError(file, partition_line, err.what());
    }
  }
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (!psi_set[e]) c.fail_eof("psi is not given for edge '" + g.edge(e).id + "'");
  }
  if (in) return {InSplitSpec{raw.new_vertices, raw.alpha, raw.psi}};
  return {OutSplitSpec{raw.new_vertices, raw.alpha, raw.psi}};
}

namespace {

template <class Spec>
std::string serialize_general(const DirectedGraph& g, const Spec& spec, const char* header) {
  std::ostringstream os;
  os << header << '\n';
  for (std::size_t y = 0; y < spec.new_vertices.size(); ++y) {
    os << "newvertex " << spec.new_vertices[y] << " over " << g.vertex(spec.alpha[y]) << '\n';
  }
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    os << "psi " << g.edge(e).id << ' ' << spec.new_vertices[spec.psi[e]] << '\n';
  }
  return os.str();
}

}  // namespace

std::string serialize_spec(const DirectedGraph& g, const InSplitSpec& spec) {
  return serialize_general(g, spec, "insplit");
}

std::string serialize_spec(const DirectedGraph& g, const OutSplitSpec& spec) {
  return serialize_general(g, spec, "outsplit");
}

IntMatrix parse_matrix(const std::string& text, const std::string& file) {
  Cursor c(text, file);
  IntMatrix m = read_matrix(c);
  if (!c.done()) c.fail(c.peek(), "unexpected content after matrix");
  return m;
}

std::string serialize_matrix(const IntMatrix& m) {
  std::ostringstream os;
  os << "matrix " << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows() && m.cols() > 0; ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
    os << '\n';
  }
  return os.str();
}

SseWitness parse_witness(const std::string& text, const std::string& file) {
  Cursor c(text, file);
  SseWitness w;
  if (!c.done() && c.peek().tokens[0] == "roles") {
    const Line& line = c.next();
    if (line.tokens.size() != 2) c.fail(line, "expected 'roles A=RS,B=SR' or 'roles B=RS,A=SR'");
    auto roles = parse_roles(line.tokens[1]);
    if (!roles) c.fail(line, "unknown roles '" + line.tokens[1] + "'");
    w.roles = *roles;
  }
  w.r = read_matrix(c);
  w.s = read_matrix(c);
  if (!c.done()) c.fail(c.peek(), "unexpected content after witness");
  return w;
}

std::string serialize_witness(const SseWitness& w) {
  return "roles " + to_string(w.roles) + "\n" + serialize_matrix(w.r) + serialize_matrix(w.s);
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string export_dot(const DirectedGraph& g) {
  std::ostringstream os;
  os << "digraph " << quoted(g.name()) << " {\n";
  for (const auto& v : g.vertices()) os << "  " << quoted(v) << ";\n";
  for (const auto& e : g.edges()) {
    os << "  " << quoted(g.vertex(e.source)) << " -> " << quoted(g.vertex(e.range)) << " [label=" << quoted(e.id)
       << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << contents;
  if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace splitgraph
