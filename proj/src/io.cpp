#include "argeq/io.hpp"

#include <cctype>
#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "argeq/error.hpp"

namespace argeq {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> tokens(std::string_view line, bool allow_comma) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (is_space(line[i]) || (allow_comma && line[i] == ','))) ++i;
    std::size_t j = i;
    while (j < line.size() && !is_space(line[j]) && !(allow_comma && line[j] == ',')) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

double parse_number(std::string_view token, std::size_t line) {
  std::string s(token);
  char* end = nullptr;
  errno = 0;
  const double value = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE)
    throw ParseError(line, "expected a number, got '" + s + "'");
  return value;
}

unsigned long parse_count(std::string_view token, std::size_t line) {
  std::string s(token);
  char* end = nullptr;
  errno = 0;
  if (s.empty() || s.front() == '-') throw ParseError(line, "expected a vote count, got '" + s + "'");
  const unsigned long value = std::strtoul(s.c_str(), &end, 10);
  if (end != s.c_str() + s.size() || errno == ERANGE)
    throw ParseError(line, "expected a vote count, got '" + s + "'");
  return value;
}

double parse_unit(std::string_view token, std::size_t line) {
  const double value = parse_number(token, line);
  if (!(value >= 0.0 && value <= 1.0))
    throw ParseError(line, "value " + std::string(token) + " outside [0,1]");
  return value;
}

ArgIndex lookup(const Framework& fw, std::string_view name, std::size_t line) {
  if (auto i = fw.find(name)) return *i;
  throw ParseError(line, "unknown argument '" + std::string(name) + "'");
}

struct PendingAttack {
  std::string from;
  std::string to;
  std::size_t line;
};

Framework assemble(std::vector<std::string> names, const std::vector<PendingAttack>& pending) {
  std::unordered_map<std::string, ArgIndex> index;
  for (ArgIndex i = 0; i < names.size(); ++i) index.emplace(names[i], i);
  std::vector<Attack> attacks;
  std::set<Attack> seen;
  for (const auto& p : pending) {
    auto f = index.find(p.from);
    auto t = index.find(p.to);
    if (f == index.end()) throw ParseError(p.line, "attack references undeclared argument '" + p.from + "'");
    if (t == index.end()) throw ParseError(p.line, "attack references undeclared argument '" + p.to + "'");
    Attack a{f->second, t->second};
    if (!seen.insert(a).second) throw ParseError(p.line, "duplicate attack (" + p.from + "," + p.to + ")");
    attacks.push_back(a);
  }
  return Framework(std::move(names), std::move(attacks));
}

void declare(std::vector<std::string>& names, std::set<std::string>& declared, std::string name,
             std::size_t line) {
  if (!valid_argument_name(name)) throw ParseError(line, "invalid argument name '" + name + "'");
  if (!declared.insert(name).second) throw ParseError(line, "duplicate argument declaration '" + name + "'");
  names.push_back(std::move(name));
}

// Statement-level APX reader. Statements may span lines or share one.
Framework parse_apx(std::string_view text) {
  std::vector<std::string> names;
  std::set<std::string> declared;
  std::vector<PendingAttack> pending;

  std::size_t pos = 0;
  std::size_t line = 1;
  auto skip_blank = [&] {
    while (pos < text.size()) {
      if (text[pos] == '%') {
        while (pos < text.size() && text[pos] != '\n') ++pos;
      } else if (is_space(text[pos])) {
        if (text[pos] == '\n') ++line;
        ++pos;
      } else {
        break;
      }
    }
  };
  auto expect = [&](char c) {
    skip_blank();
    if (pos >= text.size() || text[pos] != c)
      throw ParseError(line, std::string("expected '") + c + "'");
    ++pos;
  };
  auto read_name = [&] {
    skip_blank();
    std::size_t start = pos;
    while (pos < text.size() && text[pos] != ',' && text[pos] != ')' && !is_space(text[pos]) && text[pos] != '(')
      ++pos;
    if (pos == start) throw ParseError(line, "expected an argument name");
    return std::string(text.substr(start, pos - start));
  };

  while (true) {
    skip_blank();
    if (pos >= text.size()) break;
    const std::size_t statement_line = line;
    std::size_t start = pos;
    while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
    const std::string keyword(text.substr(start, pos - start));
    if (keyword == "arg") {
      expect('(');
      std::string name = read_name();
      expect(')');
      expect('.');
      declare(names, declared, std::move(name), statement_line);
    } else if (keyword == "att") {
      expect('(');
      std::string from = read_name();
      expect(',');
      std::string to = read_name();
      expect(')');
      expect('.');
      pending.push_back({std::move(from), std::move(to), statement_line});
    } else {
      throw ParseError(statement_line, "expected 'arg' or 'att'");
    }
  }
  return assemble(std::move(names), pending);
}

Framework parse_edge_list(std::string_view text) {
  std::vector<std::string> names;
  std::set<std::string> declared;
  std::vector<PendingAttack> pending;
  bool in_attacks = false;

  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line = i + 1;
    const std::string_view content = trim(lines[i]);
    if (content.empty()) continue;
    if (content.front() == '#') {
      const std::string_view marker = trim(content.substr(1));
      if (marker == "args" || marker == "arguments")
        in_attacks = false;
      else if (marker.empty() || marker == "attacks" || marker == "edges")
        in_attacks = true;
      continue;  // any other '#' line is a comment
    }
    const auto parts = tokens(content, false);
    if (!in_attacks) {
      if (parts.size() != 1) throw ParseError(line, "expected one argument name per line");
      declare(names, declared, std::string(parts[0]), line);
    } else {
      if (parts.size() != 2) throw ParseError(line, "expected '<attacker> <target>'");
      pending.push_back({std::string(parts[0]), std::string(parts[1]), line});
    }
  }
  return assemble(std::move(names), pending);
}

}  // namespace

FrameworkFormat format_for_path(std::string_view path) {
  return path.size() >= 4 && path.substr(path.size() - 4) == ".apx" ? FrameworkFormat::apx
                                                                     : FrameworkFormat::edge_list;
}

FrameworkFormat parse_framework_format(std::string_view name) {
  if (name == "apx") return FrameworkFormat::apx;
  if (name == "edge-list" || name == "tgf") return FrameworkFormat::edge_list;
  throw InputError("unknown framework format '" + std::string(name) + "'");
}

Framework parse_framework(std::string_view text, FrameworkFormat format) {
  return format == FrameworkFormat::apx ? parse_apx(text) : parse_edge_list(text);
}

std::string write_framework(const Framework& fw, FrameworkFormat format) {
  std::ostringstream os;
  if (format == FrameworkFormat::apx) {
    for (const auto& n : fw.names()) os << "arg(" << n << ").\n";
    for (const auto& [from, to] : fw.attacks()) os << "att(" << fw.name(from) << "," << fw.name(to) << ").\n";
  } else {
    os << "# args\n";
    for (const auto& n : fw.names()) os << n << "\n";
    os << "# attacks\n";
    for (const auto& [from, to] : fw.attacks()) os << fw.name(from) << " " << fw.name(to) << "\n";
  }
  return os.str();
}

Valuation parse_initial_values(std::string_view text, const Framework& fw) {
  std::vector<double> values(fw.size(), 0.0);
  std::vector<bool> listed(fw.size(), false);
  double fallback = 0.5;
  bool have_default = false;

  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line = i + 1;
    const std::string_view content = trim(lines[i]);
    if (content.empty() || content.front() == '#') continue;
    const auto parts = tokens(content, true);
    if (parts.size() != 2) throw ParseError(line, "expected '<name> <value>'");
    const double value = parse_unit(parts[1], line);
    if (parts[0] == "default") {
      if (have_default) throw ParseError(line, "duplicate default");
      have_default = true;
      fallback = value;
      continue;
    }
    const ArgIndex x = lookup(fw, parts[0], line);
    if (listed[x]) throw ParseError(line, "duplicate entry for '" + std::string(parts[0]) + "'");
    listed[x] = true;
    values[x] = value;
  }
  for (ArgIndex x = 0; x < fw.size(); ++x)
    if (!listed[x]) values[x] = fallback;
  return Valuation(std::move(values));
}

std::map<Attack, double> parse_weights(std::string_view text, const Framework& fw) {
  std::map<Attack, double> weights;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line = i + 1;
    const std::string_view content = trim(lines[i]);
    if (content.empty() || content.front() == '#') continue;
    const auto parts = tokens(content, true);
    if (parts.size() != 3) throw ParseError(line, "expected '<attacker> <target> <weight>'");
    const Attack a{lookup(fw, parts[0], line), lookup(fw, parts[1], line)};
    if (!fw.has_attack(a.first, a.second)) throw ParseError(line, "no such attack");
    if (!weights.emplace(a, parse_unit(parts[2], line)).second) throw ParseError(line, "duplicate weight");
  }
  return weights;
}

SocialFramework parse_votes(std::string_view text, const Framework& fw, double epsilon) {
  SocialFramework sf;
  sf.framework = fw;
  sf.epsilon = epsilon;
  sf.argument_votes.assign(fw.size(), {});
  std::vector<bool> voted(fw.size(), false);

  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line = i + 1;
    const std::string_view content = trim(lines[i]);
    if (content.empty() || content.front() == '#') continue;
    const auto parts = tokens(content, false);
    if (parts[0] == "arg" && parts.size() == 4) {
      const ArgIndex x = lookup(fw, parts[1], line);
      if (voted[x]) throw ParseError(line, "duplicate votes for '" + std::string(parts[1]) + "'");
      voted[x] = true;
      sf.argument_votes[x] = {parse_count(parts[2], line), parse_count(parts[3], line)};
    } else if (parts[0] == "att" && parts.size() == 5) {
      const Attack a{lookup(fw, parts[1], line), lookup(fw, parts[2], line)};
      if (!fw.has_attack(a.first, a.second)) throw ParseError(line, "no such attack");
      if (!sf.attack_votes.emplace(a, VoteTally{parse_count(parts[3], line), parse_count(parts[4], line)}).second)
        throw ParseError(line, "duplicate attack votes");
    } else {
      throw ParseError(line, "expected 'arg <name> <pos> <neg>' or 'att <src> <tgt> <pos> <neg>'");
    }
  }
  for (ArgIndex x = 0; x < fw.size(); ++x)
    if (!voted[x]) throw InputError("no votes for argument '" + fw.name(x) + "'");
  sf.validate();
  return sf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace argeq
