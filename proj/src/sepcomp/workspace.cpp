#include "sepcomp/workspace.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace sepcomp {
namespace {

struct Token {
  std::string text;
  int column = 0;  // 1-based
};

struct Line {
  int number = 0;  // 1-based
  std::vector<Token> tokens;
};

// Whitespace tokenization with '#' comments stripped.
std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = text.find('\n', pos);
    std::string raw = text.substr(
        pos, end == std::string::npos ? std::string::npos : end - pos);
    ++number;
    const std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    Line line;
    line.number = number;
    std::size_t i = 0;
    while (i < raw.size()) {
      if (std::isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
        continue;
      }
      const std::size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i])))
        ++i;
      line.tokens.push_back(
          {raw.substr(start, i - start), static_cast<int>(start) + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == std::string::npos) break;
    pos = end + 1;
  }
  return lines;
}

class Parser {
 public:
  Parser(std::string origin, const std::string& text)
      : origin_(std::move(origin)), lines_(tokenize(text)) {}

  bool done() const { return index_ >= lines_.size(); }
  const Line& peek() const { return lines_[index_]; }
  const Line& next() { return lines_[index_++]; }

  [[noreturn]] void error(const Line& line, int column,
                          const std::string& message) const {
    fail(Errc::parse_error, origin_ + ":" + std::to_string(line.number) + ":" +
                                std::to_string(column) + ": " + message);
  }

  int parse_int(const Line& line, const Token& tok) const {
    try {
      std::size_t used = 0;
      const int v = std::stoi(tok.text, &used);
      if (used != tok.text.size()) throw std::invalid_argument("trailing");
      return v;
    } catch (const std::exception&) {
      error(line, tok.column, "expected an integer, got '" + tok.text + "'");
    }
  }

  // A keyword line "key v0 v1 ..." with an exact token count when count >= 0.
  const Line& expect(const std::string& key, int count) {
    if (done())
      fail(Errc::parse_error,
           origin_ + ": unexpected end of file, expected '" + key + "'");
    const Line& line = next();
    if (line.tokens[0].text != key)
      error(line, line.tokens[0].column,
            "expected '" + key + "', got '" + line.tokens[0].text + "'");
    if (count >= 0 && static_cast<int>(line.tokens.size()) != count + 1)
      error(line, line.tokens[0].column,
            "'" + key + "' expects " + std::to_string(count) + " value(s)");
    return line;
  }

  std::vector<int> int_values(const Line& line, std::size_t from) const {
    std::vector<int> out;
    for (std::size_t i = from; i < line.tokens.size(); ++i)
      out.push_back(parse_int(line, line.tokens[i]));
    return out;
  }

  const std::string& origin() const { return origin_; }

 private:
  std::string origin_;
  std::vector<Line> lines_;
  std::size_t index_ = 0;
};

bool is_block_keyword(const std::string& s) {
  return s == "group" || s == "fgroup" || s == "hom" || s == "code";
}

GroupDef parse_group_block(Parser& p, const Line& head) {
  GroupDef def;
  def.name = head.tokens[1].text;
  {
    const Line& line = p.expect("order", 1);
    def.order = p.parse_int(line, line.tokens[1]);
    if (def.order < 1) p.error(line, line.tokens[1].column, "order must be positive");
  }
  p.expect("table", 0);
  for (int r = 0; r < def.order; ++r) {
    if (p.done())
      fail(Errc::parse_error, p.origin() + ": unexpected end of file in table of '" +
                                  def.name + "'");
    const Line& line = p.next();
    std::vector<int> row = p.int_values(line, 0);
    if (static_cast<int>(row.size()) != def.order)
      p.error(line, line.tokens[0].column,
              "table row needs " + std::to_string(def.order) + " entries");
    def.table.push_back(std::move(row));
  }
  return def;
}

FgroupDef parse_fgroup_block(Parser& p, const Line& head) {
  FgroupDef def;
  def.name = head.tokens[1].text;
  {
    const Line& line = p.expect("group", 1);
    def.group = line.tokens[1].text;
  }
  {
    const Line& line = p.expect("domain", 1);
    def.domain = p.parse_int(line, line.tokens[1]);
    if (def.domain < 1)
      p.error(line, line.tokens[1].column, "domain must be positive");
  }
  while (!p.done() && p.peek().tokens[0].text == "gen") {
    const Line& line = p.next();
    PointMap gen = p.int_values(line, 1);
    if (static_cast<int>(gen.size()) != def.domain)
      p.error(line, line.tokens[0].column,
              "generator needs " + std::to_string(def.domain) + " values");
    def.generators.push_back(std::move(gen));
  }
  return def;
}

HomDef parse_hom_block(Parser& p, const Line& head) {
  HomDef def;
  def.name = head.tokens[1].text;
  def.source = p.expect("source", 1).tokens[1].text;
  def.target = p.expect("target", 1).tokens[1].text;
  while (!p.done() && p.peek().tokens[0].text == "pair") {
    const Line& line = p.next();
    std::size_t arrow = 0;
    for (std::size_t i = 1; i < line.tokens.size(); ++i)
      if (line.tokens[i].text == "->") {
        arrow = i;
        break;
      }
    if (arrow == 0)
      p.error(line, line.tokens[0].column, "pair line needs '->'");
    PointMap lhs, rhs;
    for (std::size_t i = 1; i < arrow; ++i)
      lhs.push_back(p.parse_int(line, line.tokens[i]));
    for (std::size_t i = arrow + 1; i < line.tokens.size(); ++i)
      rhs.push_back(p.parse_int(line, line.tokens[i]));
    if (lhs.empty() || rhs.empty())
      p.error(line, line.tokens[0].column, "pair line needs values on both sides");
    def.pairs.emplace_back(std::move(lhs), std::move(rhs));
  }
  return def;
}

CodeDef parse_code_block(Parser& p, const Line& head) {
  CodeDef def;
  def.name = head.tokens[1].text;
  {
    const Line& line = p.expect("field", 1);
    def.p = p.parse_int(line, line.tokens[1]);
  }
  {
    const Line& line = p.expect("length", 1);
    def.n = p.parse_int(line, line.tokens[1]);
    if (def.n < 1) p.error(line, line.tokens[1].column, "length must be positive");
  }
  {
    const Line& line = p.expect("dim", 1);
    def.k = p.parse_int(line, line.tokens[1]);
    if (def.k < 0) p.error(line, line.tokens[1].column, "dim must be nonnegative");
  }
  for (int r = 0; r < def.k; ++r) {
    if (p.done() || p.peek().tokens[0].text != "row")
      fail(Errc::parse_error,
           p.origin() + ": code '" + def.name + "' needs " +
               std::to_string(def.k) + " row lines");
    const Line& line = p.next();
    std::vector<int> row;
    if (line.tokens.size() == 2 &&
        static_cast<int>(line.tokens[1].text.size()) == def.n) {
      for (char ch : line.tokens[1].text) {
        if (!std::isdigit(static_cast<unsigned char>(ch)))
          p.error(line, line.tokens[1].column, "row digits must be numeric");
        row.push_back(ch - '0');
      }
    } else {
      row = p.int_values(line, 1);
    }
    if (static_cast<int>(row.size()) != def.n)
      p.error(line, line.tokens[0].column,
              "row needs " + std::to_string(def.n) + " entries");
    def.rows.push_back(std::move(row));
  }
  return def;
}

}  // namespace

template <typename Def>
void Workspace::register_def(std::vector<Def>& defs, Def def, const char* kind) {
  for (const auto& existing : defs)
    if (existing.name == def.name)
      fail(Errc::duplicate_name,
           std::string(kind) + " '" + def.name + "' is defined twice");
  defs.push_back(std::move(def));
}

void Workspace::load_text(const std::string& origin, const std::string& text) {
  Parser p(origin, text);
  while (!p.done()) {
    const Line& head = p.next();
    const Token& kw = head.tokens[0];
    if (!is_block_keyword(kw.text))
      p.error(head, kw.column,
              "expected a block keyword (group/fgroup/hom/code), got '" +
                  kw.text + "'");
    if (head.tokens.size() != 2)
      p.error(head, kw.column, "'" + kw.text + "' expects a name");
    if (kw.text == "group")
      register_def(group_defs_, parse_group_block(p, head), "group");
    else if (kw.text == "fgroup")
      register_def(fgroup_defs_, parse_fgroup_block(p, head), "fgroup");
    else if (kw.text == "hom")
      register_def(hom_defs_, parse_hom_block(p, head), "hom");
    else
      register_def(code_defs_, parse_code_block(p, head), "code");
  }
}

void Workspace::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    fail(Errc::parse_error, path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  load_text(path, buffer.str());
}

const GroupDef* Workspace::find_group_def(const std::string& name) const {
  for (const auto& d : group_defs_)
    if (d.name == name) return &d;
  return nullptr;
}

const FgroupDef* Workspace::find_fgroup_def(const std::string& name) const {
  for (const auto& d : fgroup_defs_)
    if (d.name == name) return &d;
  return nullptr;
}

const HomDef* Workspace::find_hom_def(const std::string& name) const {
  for (const auto& d : hom_defs_)
    if (d.name == name) return &d;
  return nullptr;
}

const CodeDef* Workspace::find_code_def(const std::string& name) const {
  for (const auto& d : code_defs_)
    if (d.name == name) return &d;
  return nullptr;
}

GroupPtr Workspace::group(const std::string& name) {
  auto it = groups_.find(name);
  if (it != groups_.end()) return it->second;
  const GroupDef* def = find_group_def(name);
  if (!def)
    fail(Errc::dangling_reference, "unknown group '" + name + "'");
  try {
    GroupPtr g = make_from_table(def->table);
    groups_.emplace(name, g);
    return g;
  } catch (const Error& e) {
    throw Error(e.code(), "group '" + name + "': " + e.what());
  }
}

FunctionGroupPtr Workspace::fgroup(const std::string& name) {
  auto it = fgroups_.find(name);
  if (it != fgroups_.end()) return it->second;
  const FgroupDef* def = find_fgroup_def(name);
  if (!def)
    fail(Errc::dangling_reference, "unknown fgroup '" + name + "'");
  GroupPtr g = group(def->group);
  try {
    GenerateOptions options;
    options.max_elements = max_closure_;
    FunctionGroupPtr fg =
        closure_generate(g, def->domain, def->generators, options);
    fgroups_.emplace(name, fg);
    return fg;
  } catch (const Error& e) {
    throw Error(e.code(), "fgroup '" + name + "': " + e.what());
  }
}

const GroupHom& Workspace::hom(const std::string& name) {
  auto it = homs_.find(name);
  if (it != homs_.end()) return *it->second;
  const HomDef* def = find_hom_def(name);
  if (!def)
    fail(Errc::dangling_reference, "unknown hom '" + name + "'");
  FunctionGroupPtr source = fgroup(def->source);
  FunctionGroupPtr target = fgroup(def->target);
  try {
    auto hom = std::make_shared<GroupHom>(
        GroupHom::from_generator_images(source, target, def->pairs));
    auto [pos, inserted] = homs_.emplace(name, std::move(hom));
    return *pos->second;
  } catch (const Error& e) {
    throw Error(e.code(), "hom '" + name + "': " + e.what());
  }
}

LinearCodePtr Workspace::code(const std::string& name) {
  auto it = codes_.find(name);
  if (it != codes_.end()) return it->second;
  const CodeDef* def = find_code_def(name);
  if (!def)
    fail(Errc::dangling_reference, "unknown code '" + name + "'");
  try {
    LinearCodePtr c = code_from_matrix(def->p, def->k, def->n, def->rows);
    codes_.emplace(name, c);
    return c;
  } catch (const Error& e) {
    throw Error(e.code(), "code '" + name + "': " + e.what());
  }
}

}  // namespace sepcomp
