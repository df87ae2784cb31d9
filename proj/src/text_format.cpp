#include "cubical/text_format.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace cubical {

ParseError::ParseError(ErrorCode code, std::size_t line, std::size_t column, const std::string& message)
    : Error(code, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

bool identifier_char(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_' ||
         c == '~' || c == '\'';
}

bool element_char(char c) { return identifier_char(c) || c == '.'; }

/// Cursor over one line with 1-based columns.
class Cursor {
 public:
  Cursor(std::string_view line, std::size_t number) : line_(line), number_(number) {}

  void skip_space() {
    while (pos_ < line_.size() && (line_[pos_] == ' ' || line_[pos_] == '\t' || line_[pos_] == '\r')) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= line_.size();
  }
  std::size_t column() const { return pos_ + 1; }
  std::size_t line() const { return number_; }

  [[noreturn]] void fail(const std::string& message, ErrorCode code = ErrorCode::SyntaxError) const {
    throw ParseError(code, number_, column(), message);
  }
  [[noreturn]] void fail_at(std::size_t column, const std::string& message, ErrorCode code) const {
    throw ParseError(code, number_, column, message);
  }

  std::string word(bool (*accept)(char), const char* what) {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < line_.size() && accept(line_[pos_])) ++pos_;
    if (pos_ == start) fail(std::string("expected ") + what);
    return std::string(line_.substr(start, pos_ - start));
  }
  std::string identifier() { return word(identifier_char, "an identifier"); }

  bool consume(char c) {
    skip_space();
    if (pos_ < line_.size() && line_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!consume(c)) fail(std::string("expected '") + c + "'");
  }

  double number() {
    skip_space();
    double value = 0.0;
    const char* first = line_.data() + pos_;
    const char* last = line_.data() + line_.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr == first) fail("expected a number");
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

 private:
  std::string_view line_;
  std::size_t number_;
  std::size_t pos_ = 0;
};

/// Splits into lines with comments removed.
std::vector<std::string_view> content_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

/// "name=value" pairs after a keyword, resolved against names.
std::vector<double> parse_assignments(Cursor& c, const std::vector<std::string>& names, const char* what) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < names.size(); ++i) index.emplace(names[i], i);
  std::vector<std::optional<double>> values(names.size());
  while (!c.at_end()) {
    const std::size_t col = c.column();
    const std::string name = c.identifier();
    auto it = index.find(name);
    if (it == index.end())
      c.fail_at(col, std::string("unknown name '") + name + "' in " + what, ErrorCode::DistributionError);
    if (values[it->second]) c.fail_at(col, "'" + name + "' assigned twice", ErrorCode::DistributionError);
    c.expect('=');
    const std::size_t vcol = c.column();
    const double v = c.number();
    if (!std::isfinite(v) || v < 0.0)
      c.fail_at(vcol, std::string(what) + " values must be finite and non-negative", ErrorCode::DistributionError);
    values[it->second] = v;
  }
  std::vector<double> out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!values[i]) c.fail(std::string(what) + " is missing '" + names[i] + "'", ErrorCode::DistributionError);
    out.push_back(*values[i]);
  }
  const double sum = std::accumulate(out.begin(), out.end(), 0.0);
  if (std::abs(sum - 1.0) > 1e-9)
    c.fail(std::string(what) + " sums to " + format_double(sum) + ", not 1", ErrorCode::DistributionError);
  return out;
}

}  // namespace

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!identifier_char(c)) return false;
  return true;
}

SystemDocument parse_tks(std::string_view text) {
  std::optional<std::vector<std::string>> states;
  std::vector<std::pair<std::string, MoveTable>> tokens;
  std::set<std::string> token_names;
  struct Pending {
    Cursor cursor;
    bool uniform;
  };
  std::optional<Cursor> theta_line;
  std::optional<Pending> xi_line;

  const auto lines = content_lines(text);
  for (std::size_t n = 0; n < lines.size(); ++n) {
    Cursor c(lines[n], n + 1);
    if (c.at_end()) continue;
    const std::size_t kw_col = c.column();
    const std::string keyword = c.identifier();
    if (keyword == "states") {
      if (states) c.fail_at(kw_col, "second 'states' line", ErrorCode::SyntaxError);
      std::vector<std::string> names;
      std::set<std::string> seen;
      while (!c.at_end()) {
        const std::size_t col = c.column();
        names.push_back(c.identifier());
        if (!seen.insert(names.back()).second)
          c.fail_at(col, "duplicate state '" + names.back() + "'", ErrorCode::SyntaxError);
      }
      if (names.empty()) c.fail("'states' needs at least one name");
      states = std::move(names);
    } else if (keyword == "token") {
      if (!states) c.fail_at(kw_col, "'token' before 'states'", ErrorCode::SyntaxError);
      const std::size_t name_col = c.column();
      std::string name = c.identifier();
      if (!token_names.insert(name).second)
        c.fail_at(name_col, "duplicate token '" + name + "'", ErrorCode::SyntaxError);
      c.expect(':');
      MoveTable moves;
      std::set<std::string> sources;
      const std::set<std::string> known(states->begin(), states->end());
      while (!c.at_end()) {
        if (!moves.empty()) c.expect(',');
        const std::size_t from_col = c.column();
        std::string from = c.identifier();
        if (!known.count(from)) c.fail_at(from_col, "unknown state '" + from + "'", ErrorCode::UnknownState);
        if (!sources.insert(from).second)
          c.fail_at(from_col, "state '" + from + "' moved twice", ErrorCode::SyntaxError);
        c.expect('>');
        const std::size_t to_col = c.column();
        std::string to = c.identifier();
        if (!known.count(to)) c.fail_at(to_col, "unknown state '" + to + "'", ErrorCode::UnknownState);
        moves.emplace_back(std::move(from), std::move(to));
      }
      tokens.emplace_back(std::move(name), std::move(moves));
    } else if (keyword == "theta") {
      if (theta_line) c.fail_at(kw_col, "second 'theta' line", ErrorCode::SyntaxError);
      theta_line = c;
    } else if (keyword == "xi") {
      if (xi_line) c.fail_at(kw_col, "second 'xi' line", ErrorCode::SyntaxError);
      Cursor peek = c;
      const bool uniform = !peek.at_end() && peek.identifier() == "uniform" && peek.at_end();
      xi_line = Pending{uniform ? peek : c, uniform};
    } else {
      c.fail_at(kw_col, "unknown keyword '" + keyword + "'", ErrorCode::SyntaxError);
    }
  }
  if (!states) throw ParseError(ErrorCode::SyntaxError, 1, 1, "missing 'states' line");

  SystemDocument doc{TokenSystem::build(*states, tokens), std::nullopt, std::nullopt, false};
  if (theta_line) doc.theta = parse_assignments(*theta_line, doc.system.token_names(), "theta");
  if (xi_line) {
    doc.xi_uniform = xi_line->uniform;
    if (xi_line->uniform)
      doc.xi = std::vector<double>(doc.system.num_states(), 1.0 / static_cast<double>(doc.system.num_states()));
    else
      doc.xi = parse_assignments(xi_line->cursor, doc.system.state_names(), "xi");
  }
  return doc;
}

std::string format_tks(const SystemDocument& doc) {
  const TokenSystem& sys = doc.system;
  auto check = [](const std::string& name) {
    if (!is_identifier(name))
      throw Error(ErrorCode::SyntaxError, "'" + name + "' cannot be written as a .tks identifier");
    return name;
  };
  std::ostringstream out;
  out << "states";
  for (StateId s : sys.states()) out << ' ' << check(sys.state_name(s));
  out << '\n';
  for (TokenId t : sys.tokens()) {
    out << "token " << check(sys.token_name(t)) << ':';
    bool first = true;
    for (StateId s : sys.states()) {
      const StateId v = sys.step(s, t);
      if (v == s) continue;
      out << (first ? " " : ", ") << sys.state_name(s) << '>' << sys.state_name(v);
      first = false;
    }
    out << '\n';
  }
  if (doc.theta) {
    out << "theta";
    for (TokenId t : sys.tokens()) out << ' ' << sys.token_name(t) << '=' << format_double(doc.theta->at(t.value));
    out << '\n';
  }
  if (doc.xi_uniform) {
    out << "xi uniform\n";
  } else if (doc.xi) {
    out << "xi";
    for (StateId s : sys.states()) out << ' ' << sys.state_name(s) << '=' << format_double(doc.xi->at(s.value));
    out << '\n';
  }
  return out.str();
}

namespace {

Subset parse_set_body(Cursor& c, const std::map<std::string, std::size_t>& ground, char close) {
  Subset s;
  bool first = true;
  while (true) {
    c.skip_space();
    if (close != '\0' && c.consume(close)) break;
    if (close == '\0' && c.at_end()) break;
    if (!first && close != '\0') c.expect(',');
    const std::size_t col = c.column();
    const std::string name = c.word(element_char, "an element name");
    auto it = ground.find(name);
    if (it == ground.end()) c.fail_at(col, "unknown element '" + name + "'", ErrorCode::SyntaxError);
    if (s.contains(it->second)) c.fail_at(col, "element '" + name + "' repeated", ErrorCode::SyntaxError);
    s = s.with(it->second);
    first = false;
  }
  return s;
}

}  // namespace

FamilyDocument parse_fam(std::string_view text) {
  FamilyDocument doc;
  SetFamily& f = doc.graph.family;
  bool have_ground = false;
  std::map<std::string, std::size_t> ground;
  std::map<Subset, std::size_t> index;
  std::set<std::pair<std::size_t, std::size_t>> edges;

  const auto lines = content_lines(text);
  for (std::size_t n = 0; n < lines.size(); ++n) {
    Cursor c(lines[n], n + 1);
    if (c.at_end()) continue;
    const std::size_t kw_col = c.column();
    const std::string keyword = c.identifier();
    if (keyword == "ground") {
      if (have_ground) c.fail_at(kw_col, "second 'ground' line", ErrorCode::SyntaxError);
      have_ground = true;
      while (!c.at_end()) {
        const std::size_t col = c.column();
        std::string name = c.word(element_char, "an element name");
        if (!ground.emplace(name, f.ground.size()).second)
          c.fail_at(col, "duplicate element '" + name + "'", ErrorCode::SyntaxError);
        f.ground.push_back(std::move(name));
      }
      if (f.ground.size() > kMaxGround) c.fail("ground sets are limited to 64 elements");
    } else if (keyword == "member") {
      if (!have_ground) c.fail_at(kw_col, "'member' before 'ground'", ErrorCode::SyntaxError);
      if (doc.explicit_edges) c.fail_at(kw_col, "'member' after 'edge'", ErrorCode::SyntaxError);
      const Subset s = parse_set_body(c, ground, '\0');
      if (!index.emplace(s, f.members.size()).second)
        c.fail_at(kw_col, "duplicate member " + f.name_of(s), ErrorCode::SyntaxError);
      f.members.push_back(s);
    } else if (keyword == "edge") {
      if (!have_ground) c.fail_at(kw_col, "'edge' before 'ground'", ErrorCode::SyntaxError);
      doc.explicit_edges = true;
      std::size_t ends[2];
      for (int k = 0; k < 2; ++k) {
        if (k == 1) c.expect('|');
        const std::size_t col = c.column();
        c.expect('{');
        const Subset s = parse_set_body(c, ground, '}');
        auto it = index.find(s);
        if (it == index.end()) c.fail_at(col, f.name_of(s) + " is not a member", ErrorCode::SyntaxError);
        ends[k] = it->second;
      }
      if (!c.at_end()) c.fail("unexpected text after edge");
      if (distance(f.members[ends[0]], f.members[ends[1]]) != 1)
        c.fail_at(kw_col, "edge endpoints are not cube neighbours", ErrorCode::NotCubeEdge);
      edges.insert(std::minmax(ends[0], ends[1]));
    } else {
      c.fail_at(kw_col, "unknown keyword '" + keyword + "'", ErrorCode::SyntaxError);
    }
  }
  if (!have_ground) throw ParseError(ErrorCode::SyntaxError, 1, 1, "missing 'ground' line");
  if (doc.explicit_edges) {
    doc.graph.edges.assign(edges.begin(), edges.end());
  } else {
    doc.graph = CubeGraph::induced(std::move(doc.graph.family));
  }
  doc.graph.validate();
  return doc;
}

std::string format_fam(const FamilyDocument& doc) {
  const SetFamily& f = doc.graph.family;
  std::ostringstream out;
  out << "ground";
  for (const auto& x : f.ground) out << ' ' << x;
  out << '\n';
  for (Subset s : f.members) {
    out << "member";
    for (std::size_t e : s.elements()) out << ' ' << f.ground[e];
    out << '\n';
  }
  if (doc.explicit_edges) {
    auto edges = doc.graph.edges;
    std::sort(edges.begin(), edges.end());
    for (auto [a, b] : edges) {
      // The smaller set first.
      if (f.members[a].size() > f.members[b].size()) std::swap(a, b);
      out << "edge " << f.name_of(f.members[a]) << '|' << f.name_of(f.members[b]) << '\n';
    }
  }
  return out.str();
}

}  // namespace cubical
