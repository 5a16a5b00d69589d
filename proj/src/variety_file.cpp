#include "oscform/variety_file.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "oscform/errors.hpp"
#include "oscform/expression.hpp"

namespace oscform {

std::string to_string(VarietyKind kind) {
  switch (kind) {
    case VarietyKind::kParameterization:
      return "parameterization";
    case VarietyKind::kImplicit:
      return "implicit";
    case VarietyKind::kScroll:
      return "scroll";
  }
  return "parameterization";
}

namespace {

struct Item {
  std::string text;
  SourcePos pos;
};

struct Entry {
  std::string key;
  SourcePos key_pos;
  std::string value;
  SourcePos value_pos;
};

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s.front())) || s.front() == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

// Splits on the separators, trimming each piece and tracking its column.
// Whitespace runs never produce entries; a comma with nothing before it
// since the previous comma or the start does.
std::vector<Item> split(const std::string& value, SourcePos origin, std::string_view separators) {
  std::vector<Item> out;
  bool pending = false;  // a comma was seen with no entry after it yet
  bool any = false;
  std::size_t i = 0;
  while (i <= value.size()) {
    std::size_t end = i;
    while (end < value.size() && separators.find(value[end]) == std::string_view::npos) ++end;
    std::size_t a = i;
    std::size_t b = end;
    while (a < b && is_space(value[a])) ++a;
    while (b > a && is_space(value[b - 1])) --b;
    if (a < b) {
      out.push_back(Item{value.substr(a, b - a), SourcePos{origin.line, origin.column + a}});
      pending = false;
      any = true;
    }
    if (end < value.size() && value[end] == ',') {
      if (pending || !any) throw ParseError("empty entry", origin.line, origin.column + end);
      pending = true;
    }
    i = end + 1;
  }
  if (pending) throw ParseError("empty entry", origin.line, origin.column + value.size());
  return out;
}

std::vector<Item> split_names(const Entry& e) { return split(e.value, e.value_pos, " \t,"); }
std::vector<Item> split_list(const Entry& e) { return split(e.value, e.value_pos, ","); }

Rational parse_rational_at(const Item& item) {
  try {
    return parse_rational(item.text);
  } catch (const ParseError& err) {
    throw ParseError(err.message(), item.pos.line, item.pos.column);
  }
}

unsigned parse_count(const Item& item, bool allow_zero) {
  const bool digits = !item.text.empty() && std::all_of(item.text.begin(), item.text.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c));
  });
  if (!digits || item.text.size() > 6) throw ParseError("expected a non-negative integer", item.pos.line, item.pos.column);
  const unsigned v = static_cast<unsigned>(std::stoul(item.text));
  if (!allow_zero && v == 0) throw ParseError("expected a positive integer", item.pos.line, item.pos.column);
  return v;
}

std::vector<std::string> identifiers(const Entry& e) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const Item& item : split_names(e)) {
    if (!is_identifier(item.text)) throw ParseError("expected an identifier", item.pos.line, item.pos.column);
    if (!seen.insert(item.text).second) {
      throw ParseError("duplicate name '" + item.text + "'", item.pos.line, item.pos.column);
    }
    out.push_back(item.text);
  }
  return out;
}

const std::set<std::string> kKeys{"kind", "label", "params", "fiber", "coords", "vars", "equations", "free", "point", "degrees"};
// Keys whose values may be spread over several lines.
const std::set<std::string> kRepeatable{"coords", "equations"};

}  // namespace

VarietyFile parse_variety(std::string_view text) {
  std::map<std::string, std::vector<Entry>> entries;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(start, end - start));
    ++line_no;
    start = end + 1;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::size_t a = 0;
    while (a < line.size() && is_space(line[a])) ++a;
    if (a == line.size()) continue;
    const auto colon = line.find(':', a);
    if (colon == std::string::npos) throw ParseError("expected 'key: value'", line_no, a + 1);
    std::string key = line.substr(a, colon - a);
    while (!key.empty() && is_space(key.back())) key.pop_back();
    if (!kKeys.count(key)) throw ParseError("unknown key '" + key + "'", line_no, a + 1);
    if (entries.count(key) && !kRepeatable.count(key)) throw ParseError("duplicate key '" + key + "'", line_no, a + 1);
    entries[key].push_back(Entry{key, SourcePos{line_no, a + 1}, line.substr(colon + 1), SourcePos{line_no, colon + 2}});
  }

  const auto single = [&](const std::string& key) -> const Entry* {
    const auto it = entries.find(key);
    return it == entries.end() ? nullptr : &it->second.front();
  };
  const auto reject = [&](const std::string& key, VarietyKind kind) {
    if (const Entry* e = single(key)) {
      throw ConsistencyError(std::to_string(e->key_pos.line) + ":" + std::to_string(e->key_pos.column) + ": key '" + key +
                             "' does not apply to kind " + to_string(kind));
    }
  };

  VarietyFile out;
  const Entry* kind = single("kind");
  if (!kind) throw ConsistencyError("missing 'kind:' line");
  const auto kind_items = split_names(*kind);
  if (kind_items.size() != 1) throw ParseError("expected one kind", kind->value_pos.line, kind->value_pos.column);
  const std::string& k = kind_items.front().text;
  if (k == "parameterization") {
    out.kind = VarietyKind::kParameterization;
  } else if (k == "implicit") {
    out.kind = VarietyKind::kImplicit;
  } else if (k == "scroll") {
    out.kind = VarietyKind::kScroll;
  } else {
    throw ParseError("unknown kind '" + k + "' (expected parameterization, implicit or scroll)",
                     kind_items.front().pos.line, kind_items.front().pos.column);
  }
  if (const Entry* e = single("label")) {
    for (const Item& item : split_names(*e)) {
      if (!out.label.empty()) out.label += " ";
      out.label += item.text;
    }
  }
  if (const Entry* e = single("point")) {
    Point p;
    for (const Item& item : split_list(*e)) p.push_back(parse_rational_at(item));
    if (p.empty()) throw ParseError("empty point", e->value_pos.line, e->value_pos.column);
    out.point = p;
  }

  switch (out.kind) {
    case VarietyKind::kParameterization: {
      for (const char* key : {"vars", "equations", "free", "degrees"}) reject(key, out.kind);
      const Entry* params = single("params");
      if (!params) throw ConsistencyError("a parameterization needs a 'params:' line");
      out.params = identifiers(*params);
      if (out.params.empty()) throw ConsistencyError("a parameterization needs at least one parameter");
      const VarList vars = make_vars(out.params);
      if (!entries.count("coords")) throw ConsistencyError("a parameterization needs a 'coords:' line");
      for (const Entry& e : entries["coords"]) {
        for (const Item& item : split_list(e)) out.coords.push_back(parse_expression(item.text, vars, item.pos).to_string());
      }
      if (out.coords.size() < out.params.size() + 1) {
        throw ConsistencyError(std::to_string(out.params.size()) + " parameters need at least " +
                               std::to_string(out.params.size() + 1) + " coordinates, got " + std::to_string(out.coords.size()));
      }
      if (const Entry* e = single("fiber")) {
        out.fiber = identifiers(*e);
        for (const std::string& f : out.fiber) {
          if (std::find(out.params.begin(), out.params.end(), f) == out.params.end()) {
            throw ConsistencyError("fiber parameter '" + f + "' is not listed in params");
          }
        }
      }
      if (out.point && out.point->size() != out.params.size()) {
        throw ConsistencyError("point has " + std::to_string(out.point->size()) + " entries but there are " +
                               std::to_string(out.params.size()) + " parameters");
      }
      break;
    }
    case VarietyKind::kImplicit: {
      for (const char* key : {"params", "fiber", "coords", "degrees"}) reject(key, out.kind);
      if (!out.point) throw ConsistencyError("an implicit variety needs a 'point:' line");
      if (const Entry* e = single("vars")) {
        out.vars = identifiers(*e);
      } else {
        for (std::size_t i = 0; i < out.point->size(); ++i) out.vars.push_back("X" + std::to_string(i));
      }
      if (out.vars.size() != out.point->size()) {
        throw ConsistencyError("point has " + std::to_string(out.point->size()) + " entries but there are " +
                               std::to_string(out.vars.size()) + " coordinates");
      }
      const VarList vars = make_vars(out.vars);
      if (!entries.count("equations")) throw ConsistencyError("an implicit variety needs an 'equations:' line");
      for (const Entry& e : entries["equations"]) {
        for (const Item& item : split_list(e)) out.equations.push_back(parse_polynomial(item.text, vars, item.pos).to_string());
      }
      if (const Entry* e = single("free")) {
        std::vector<std::size_t> free;
        for (const Item& item : split_names(*e)) {
          const unsigned v = parse_count(item, true);
          if (v >= out.vars.size()) throw ParseError("coordinate index out of range", item.pos.line, item.pos.column);
          free.push_back(v);
        }
        out.free = free;
      }
      try {
        validate(out.implicit());
      } catch (const DomainError& err) {
        throw ConsistencyError(err.what());
      }
      break;
    }
    case VarietyKind::kScroll: {
      for (const char* key : {"params", "fiber", "coords", "vars", "equations", "free"}) reject(key, out.kind);
      const Entry* degrees = single("degrees");
      if (!degrees) throw ConsistencyError("a scroll needs a 'degrees:' line");
      for (const Item& item : split_names(*degrees)) out.degrees.push_back(parse_count(item, false));
      if (out.degrees.empty()) throw ConsistencyError("a scroll needs at least one degree");
      std::sort(out.degrees.begin(), out.degrees.end());
      if (out.point && out.point->size() != out.degrees.size()) {
        throw ConsistencyError("a scroll point has one entry per parameter (t, s1, ...)");
      }
      break;
    }
  }
  return out;
}

std::string print_variety(const VarietyFile& file) {
  std::ostringstream out;
  const auto join = [](const auto& items, const char* sep) {
    std::ostringstream s;
    for (std::size_t i = 0; i < items.size(); ++i) s << (i ? sep : "") << items[i];
    return s.str();
  };
  out << "kind: " << to_string(file.kind) << "\n";
  if (!file.label.empty()) out << "label: " << file.label << "\n";
  switch (file.kind) {
    case VarietyKind::kParameterization:
      out << "params: " << join(file.params, " ") << "\n";
      if (!file.fiber.empty()) out << "fiber: " << join(file.fiber, " ") << "\n";
      out << "coords: " << join(file.coords, ", ") << "\n";
      break;
    case VarietyKind::kImplicit:
      out << "vars: " << join(file.vars, " ") << "\n";
      for (const std::string& e : file.equations) out << "equations: " << e << "\n";
      if (file.free) out << "free: " << join(*file.free, " ") << "\n";
      break;
    case VarietyKind::kScroll:
      out << "degrees: " << join(file.degrees, ", ") << "\n";
      break;
  }
  if (file.point) out << "point: " << to_string(*file.point) << "\n";
  return out.str();
}

Parameterization VarietyFile::parameterization() const {
  if (kind == VarietyKind::kScroll) return scroll(scroll_spec()).chart;
  if (kind != VarietyKind::kParameterization) throw PreconditionError("this command needs a parameterized variety");
  const VarList vars = make_vars(params);
  std::vector<RationalFunction> values;
  for (const std::string& c : coords) values.push_back(parse_expression(c, vars));
  return Parameterization::make(params, std::move(values), label);
}

ImplicitVariety VarietyFile::implicit() const {
  if (kind != VarietyKind::kImplicit) throw PreconditionError("this command needs an implicit variety");
  ImplicitVariety iv;
  iv.coords = make_vars(vars);
  for (const std::string& e : equations) iv.equations.push_back(parse_polynomial(e, iv.coords));
  iv.point = *point;
  iv.label = label;
  return iv;
}

ScrollSpec VarietyFile::scroll_spec() const {
  if (kind != VarietyKind::kScroll) throw PreconditionError("this command needs a scroll");
  return ScrollSpec::make(degrees);
}

std::optional<RuledParameterization> VarietyFile::ruled() const {
  if (kind == VarietyKind::kScroll) return scroll(scroll_spec());
  if (kind == VarietyKind::kParameterization && !fiber.empty()) return RuledParameterization::make(parameterization(), fiber);
  return std::nullopt;
}

}  // namespace oscform
