#include "raag/io.hpp"

#include <cctype>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "raag/decide.hpp"
#include "raag/errors.hpp"
#include "raag/order.hpp"
#include "raag/pconj.hpp"
#include "raag/sil.hpp"

namespace raag {

using nlohmann::json;

namespace {

struct Position {
  std::size_t line = 1;
  std::size_t column = 1;
};

Position position_at(std::string_view text, std::size_t offset) {
  Position p;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++p.line;
      p.column = 1;
    } else {
      ++p.column;
    }
  }
  return p;
}

[[noreturn]] void fail_at(std::string_view text, std::size_t offset, const std::string& what) {
  const Position p = position_at(text, offset);
  throw ParseError(what, p.line, p.column);
}

// Records the end offset of every value, keyed by its JSON pointer. Offsets
// come from an input iterator that counts consumed characters, so they point
// just past the token that triggered the event.
class OffsetRecorder : public json::json_sax_t {
 public:
  explicit OffsetRecorder(const std::size_t* consumed) : consumed_(consumed) {}

  std::map<std::string, std::size_t> ends;
  std::map<std::string, std::size_t> starts;

  bool null() override { return scalar(); }
  bool boolean(bool) override { return scalar(); }
  bool number_integer(number_integer_t) override { return scalar(); }
  bool number_unsigned(number_unsigned_t) override { return scalar(); }
  bool number_float(number_float_t, const string_t&) override { return scalar(); }
  bool string(string_t&) override { return scalar(); }
  bool binary(binary_t&) override { return scalar(); }
  bool start_object(std::size_t) override { return open('{'); }
  bool key(string_t& k) override {
    stack_.back().key = k;
    return true;
  }
  bool end_object() override { return close(); }
  bool start_array(std::size_t) override { return open('['); }
  bool end_array() override { return close(); }
  bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception&) override { return false; }

 private:
  struct Frame {
    char kind;
    std::string path;
    std::size_t index = 0;
    std::string key;
  };

  std::string child_path() {
    if (stack_.empty()) return "";
    Frame& f = stack_.back();
    if (f.kind == '{') return f.path + "/" + f.key;
    return f.path + "/" + std::to_string(f.index++);
  }
  bool scalar() {
    const std::string p = child_path();
    starts[p] = ends[p] = *consumed_;
    return true;
  }
  bool open(char kind) {
    const std::string p = child_path();
    starts[p] = *consumed_;
    stack_.push_back({kind, p, 0, {}});
    return true;
  }
  bool close() {
    ends[stack_.back().path] = *consumed_;
    stack_.pop_back();
    return true;
  }

  const std::size_t* consumed_;
  std::vector<Frame> stack_;
};

class CountingIterator {
 public:
  using iterator_category = std::input_iterator_tag;
  using value_type = char;
  using difference_type = std::ptrdiff_t;
  using pointer = const char*;
  using reference = const char&;

  CountingIterator() = default;
  CountingIterator(const char* p, std::size_t* counter) : p_(p), counter_(counter) {}
  const char& operator*() const { return *p_; }
  CountingIterator& operator++() {
    ++p_;
    if (counter_) ++*counter_;
    return *this;
  }
  CountingIterator operator++(int) {
    CountingIterator c = *this;
    ++*this;
    return c;
  }
  bool operator==(const CountingIterator& o) const { return p_ == o.p_; }

 private:
  const char* p_ = nullptr;
  std::size_t* counter_ = nullptr;
};

SimplicialGraph parse_json_graph(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
    fail_at(text, offset, "malformed JSON");
  }

  std::size_t consumed = 0;
  OffsetRecorder rec(&consumed);
  json::sax_parse(CountingIterator(text.data(), &consumed), CountingIterator(text.data() + text.size(), nullptr),
                  &rec);
  auto at = [&](const std::string& path) -> std::size_t {
    auto it = rec.starts.find(path);
    if (it == rec.starts.end()) return 0;
    // start offsets of scalars are recorded after the token; walk back to its first character
    std::size_t off = it->second;
    auto end = rec.ends.find(path);
    if (end != rec.ends.end() && end->second == off && off > 0) {
      std::size_t i = off - 1;
      if (text[i] == '"') {
        while (i > 0) {
          --i;
          if (text[i] == '"' && (i == 0 || text[i - 1] != '\\')) break;
        }
      }
      return i;
    }
    return off > 0 ? off - 1 : 0;
  };

  if (!doc.is_object()) fail_at(text, at(""), "graph document must be an object");
  for (const auto& [k, v] : doc.items())
    if (k != "vertices" && k != "edges") fail_at(text, at("/" + k), "unexpected key \"" + k + "\"");
  if (!doc.contains("vertices") || !doc["vertices"].is_array())
    fail_at(text, at("/vertices"), "\"vertices\" must be an array of names");
  if (doc.contains("edges") && !doc["edges"].is_array()) fail_at(text, at("/edges"), "\"edges\" must be an array");

  std::vector<std::string> names;
  std::map<std::string, VertexIndex> index;
  const auto& vs = doc["vertices"];
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const std::string path = "/vertices/" + std::to_string(i);
    if (!vs[i].is_string()) fail_at(text, at(path), "vertex name must be a string");
    const std::string name = vs[i].get<std::string>();
    if (name.empty()) fail_at(text, at(path), "empty vertex name");
    if (!index.emplace(name, names.size()).second) fail_at(text, at(path), "duplicate vertex \"" + name + "\"");
    names.push_back(name);
  }
  if (names.size() > kMaxVertices) fail_at(text, at("/vertices"), "too many vertices");

  std::vector<std::pair<VertexIndex, VertexIndex>> edges;
  std::set<std::pair<VertexIndex, VertexIndex>> seen;
  if (doc.contains("edges")) {
    const auto& es = doc["edges"];
    for (std::size_t k = 0; k < es.size(); ++k) {
      const std::string path = "/edges/" + std::to_string(k);
      const auto& e = es[k];
      if (!e.is_array() || e.size() != 2) fail_at(text, at(path), "edge must be a pair of vertex names");
      VertexIndex ends[2];
      for (std::size_t j = 0; j < 2; ++j) {
        const std::string ep = path + "/" + std::to_string(j);
        if (!e[j].is_string()) fail_at(text, at(ep), "vertex name must be a string");
        auto it = index.find(e[j].get<std::string>());
        if (it == index.end()) fail_at(text, at(ep), "unknown vertex \"" + e[j].get<std::string>() + "\"");
        ends[j] = it->second;
      }
      if (ends[0] == ends[1]) fail_at(text, at(path), "self-loop at \"" + names[ends[0]] + "\"");
      const auto key = std::minmax(ends[0], ends[1]);
      if (!seen.insert(key).second) fail_at(text, at(path), "duplicate edge");
      edges.emplace_back(key.first, key.second);
    }
  }
  return SimplicialGraph(std::move(names), edges);
}

// DOT subset: [strict] graph [id] { stmt* } with node, edge, attribute and
// id = id statements. Attributes are skipped.
class DotParser {
 public:
  explicit DotParser(std::string_view text) : text_(text) {}

  SimplicialGraph parse() {
    Token t = next();
    if (t.kind == Kind::kId && lower(t.text) == "strict") t = next();
    if (t.kind != Kind::kId || lower(t.text) != "graph") {
      if (t.kind == Kind::kId && lower(t.text) == "digraph") error(t, "directed graphs are not supported");
      error(t, "expected \"graph\"");
    }
    t = next();
    if (t.kind == Kind::kId) t = next();
    if (t.kind != Kind::kLBrace) error(t, "expected '{'");
    statements();
    t = next();
    if (t.kind != Kind::kEnd) error(t, "trailing input after graph");
    return SimplicialGraph(std::move(names_), edges_);
  }

 private:
  enum class Kind { kId, kLBrace, kRBrace, kLBracket, kRBracket, kSemi, kComma, kEq, kEdgeOp, kArrow, kColon, kEnd };
  struct Token {
    Kind kind;
    std::string text;
    std::size_t offset;
    bool quoted = false;
  };

  static std::string lower(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
  }

  [[noreturn]] void error(const Token& t, const std::string& what) const { fail_at(text_, t.offset, what); }

  void skip_blank() {
    for (;;) {
      while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (text_.substr(pos_, 2) == "//") {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (text_.substr(pos_, 2) == "/*") {
        const std::size_t close = text_.find("*/", pos_ + 2);
        if (close == std::string_view::npos) fail_at(text_, pos_, "unterminated comment");
        pos_ = close + 2;
      } else if (pos_ < text_.size() && text_[pos_] == '#' && (pos_ == 0 || text_[pos_ - 1] == '\n')) {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        return;
      }
    }
  }

  Token next() {
    if (peeked_) {
      Token t = std::move(*peeked_);
      peeked_.reset();
      return t;
    }
    skip_blank();
    const std::size_t start = pos_;
    if (pos_ >= text_.size()) return {Kind::kEnd, "", start};
    const char c = text_[pos_];
    auto single = [&](Kind k) {
      ++pos_;
      return Token{k, std::string(1, c), start};
    };
    switch (c) {
      case '{': return single(Kind::kLBrace);
      case '}': return single(Kind::kRBrace);
      case '[': return single(Kind::kLBracket);
      case ']': return single(Kind::kRBracket);
      case ';': return single(Kind::kSemi);
      case ',': return single(Kind::kComma);
      case '=': return single(Kind::kEq);
      case ':': return single(Kind::kColon);
      default: break;
    }
    if (text_.substr(pos_, 2) == "--") {
      pos_ += 2;
      return {Kind::kEdgeOp, "--", start};
    }
    if (text_.substr(pos_, 2) == "->") {
      pos_ += 2;
      return {Kind::kArrow, "->", start};
    }
    if (c == '"') {
      std::string out;
      ++pos_;
      while (pos_ < text_.size() && text_[pos_] != '"') {
        if (text_[pos_] == '\\' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '"') ++pos_;
        out += text_[pos_++];
      }
      if (pos_ >= text_.size()) fail_at(text_, start, "unterminated string");
      ++pos_;
      return {Kind::kId, out, start, true};
    }
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-' ||
        static_cast<unsigned char>(c) >= 0x80) {
      while (pos_ < text_.size()) {
        const auto ch = static_cast<unsigned char>(text_[pos_]);
        if (!(std::isalnum(ch) || ch == '_' || ch == '.' || ch >= 0x80)) {
          // a lone '-' may start a negative numeral; "--" is the edge operator
          if (ch == '-' && pos_ == start && text_.substr(pos_, 2) != "--") {
            ++pos_;
            continue;
          }
          break;
        }
        ++pos_;
      }
      return {Kind::kId, std::string(text_.substr(start, pos_ - start)), start};
    }
    fail_at(text_, start, std::string("unexpected character '") + c + "'");
  }

  Token peek() {
    if (!peeked_) peeked_ = next();
    return *peeked_;
  }

  void skip_attr_list() {
    while (peek().kind == Kind::kLBracket) {
      next();
      for (;;) {
        Token t = next();
        if (t.kind == Kind::kRBracket) break;
        if (t.kind == Kind::kEnd) error(t, "unterminated attribute list");
      }
    }
  }

  VertexIndex vertex(const Token& t) {
    auto it = index_.find(t.text);
    if (it != index_.end()) return it->second;
    if (names_.size() == kMaxVertices) error(t, "too many vertices");
    index_.emplace(t.text, names_.size());
    names_.push_back(t.text);
    return names_.size() - 1;
  }

  void skip_port() {
    // node_id : port [: compass]
    while (peek().kind == Kind::kColon) {
      next();
      Token p = next();
      if (p.kind != Kind::kId) error(p, "expected port name");
    }
  }

  void statements() {
    for (;;) {
      Token t = next();
      if (t.kind == Kind::kRBrace) return;
      if (t.kind == Kind::kSemi) continue;
      if (t.kind == Kind::kEnd) error(t, "expected '}'");
      if (t.kind == Kind::kLBrace) error(t, "subgraphs are not supported");
      if (t.kind != Kind::kId) error(t, "expected a statement");
      const std::string kw = t.quoted ? "" : lower(t.text);
      if (kw == "subgraph") error(t, "subgraphs are not supported");
      if ((kw == "graph" || kw == "node" || kw == "edge") && peek().kind == Kind::kLBracket) {
        skip_attr_list();
        continue;
      }
      if (peek().kind == Kind::kEq) {
        next();
        Token v = next();
        if (v.kind != Kind::kId) error(v, "expected a value after '='");
        continue;
      }
      skip_port();
      Token prev = t;
      VertexIndex u = vertex(t);
      while (peek().kind == Kind::kEdgeOp || peek().kind == Kind::kArrow) {
        Token op = next();
        if (op.kind == Kind::kArrow) error(op, "directed edge '->' in an undirected graph");
        Token w = next();
        if (w.kind != Kind::kId) error(w, "expected a vertex after '--'");
        skip_port();
        const VertexIndex v = vertex(w);
        if (u == v) error(w, "self-loop at \"" + w.text + "\"");
        const auto key = std::minmax(u, v);
        if (!seen_.insert(key).second) error(w, "duplicate edge " + prev.text + " -- " + w.text);
        edges_.emplace_back(key.first, key.second);
        u = v;
        prev = w;
      }
      skip_attr_list();
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::optional<Token> peeked_;
  std::vector<std::string> names_;
  std::map<std::string, VertexIndex> index_;
  std::vector<std::pair<VertexIndex, VertexIndex>> edges_;
  std::set<std::pair<VertexIndex, VertexIndex>> seen_;
};

bool plain_dot_id(const std::string& s) {
  if (s.empty() || std::isdigit(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  const std::string l = [&] {
    std::string out = s;
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
  }();
  return l != "graph" && l != "digraph" && l != "node" && l != "edge" && l != "strict" && l != "subgraph";
}

std::string dot_id(const std::string& s) {
  if (plain_dot_id(s)) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

GraphFormat detect_format(std::string_view text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' ? GraphFormat::kJson : GraphFormat::kDot;
  }
  return GraphFormat::kDot;
}

SimplicialGraph parse_graph(std::string_view text, GraphFormat format) {
  try {
    if (format == GraphFormat::kJson) return parse_json_graph(text);
    return DotParser(text).parse();
  } catch (const InputError& e) {
    throw ParseError(e.what(), 0, 0);
  }
}

SimplicialGraph parse_graph(std::string_view text) { return parse_graph(text, detect_format(text)); }

json graph_to_json(const SimplicialGraph& g) {
  json out;
  out["vertices"] = g.names();
  out["edges"] = json::array();
  for (const auto& [u, v] : g.edges()) out["edges"].push_back({g.name(u), g.name(v)});
  return out;
}

std::string serialize_graph(const SimplicialGraph& g, GraphFormat format) {
  if (format == GraphFormat::kJson) return graph_to_json(g).dump(2) + "\n";
  std::string out = "graph G {\n";
  for (const auto& n : g.names()) out += "  " + dot_id(n) + ";\n";
  for (const auto& [u, v] : g.edges()) out += "  " + dot_id(g.name(u)) + " -- " + dot_id(g.name(v)) + ";\n";
  return out + "}\n";
}

json analysis_report(const SimplicialGraph& g) {
  json r;
  r["vertices"] = g.names();
  r["connected"] = is_connected(g);
  r["order_pairs"] = json::array();
  for (const auto& op : order_pairs(g)) r["order_pairs"].push_back({g.name(op.lower), g.name(op.upper)});
  r["equivalence_classes"] = json::array();
  for (const auto& c : equivalence_classes(g)) r["equivalence_classes"].push_back(names_json(g, c.members));
  r["sil_pairs"] = json::array();
  for (const auto& [a, b] : sil_pairs(g)) r["sil_pairs"].push_back({g.name(a), g.name(b)});
  r["separated_sil_pairs"] = json::array();
  for (const auto& [a, b] : separated_sil_pairs(g)) r["separated_sil_pairs"].push_back({g.name(a), g.name(b)});

  const auto system = maximal_sil_system(g);
  r["system"] = system ? system_json(g, *system) : json(nullptr);
  r["partial_conjugations"] = json::array();
  for (const auto& p : enumerate_pcs(g)) {
    json row = {{"name", pc_name(g, p)}, {"vertex", g.name(p.vertex)}, {"support", names_json(g, p.support)}};
    if (p.out_trivial)
      row["type"] = pc_type_label(PCType::kOutTrivial);
    else if (system)
      row["type"] = pc_type_label(classify_pc(g, *system, p));
    else
      row["type"] = nullptr;
    r["partial_conjugations"].push_back(std::move(row));
  }
  return r;
}

}  // namespace raag
