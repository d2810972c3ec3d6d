#include "lietrees/decorations.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "json.hpp"
#include "lietrees/errors.hpp"
#include "lietrees/lie.hpp"

namespace lietrees {

GroupSpec::GroupSpec(std::vector<std::string> generators) : generators_(std::move(generators)) {
  std::set<std::string> seen;
  for (const auto& g : generators_) {
    if (!is_generator_name(g)) throw DomainError("invalid generator name '" + g + "'");
    if (!seen.insert(g).second) throw DomainError("generator '" + g + "' listed twice");
  }
}

GroupSpec GroupSpec::parse(std::string_view text) {
  std::vector<std::string> names;
  std::size_t start = 0;
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  if (trim(text).empty()) return GroupSpec({});
  while (true) {
    std::size_t comma = text.find(',', start);
    auto part = trim(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (part.empty()) throw ParseError("empty generator name in group spec", start);
    names.emplace_back(part);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return GroupSpec(std::move(names));
}

bool GroupSpec::contains(const FreeGroupWord& w) const {
  for (const auto& l : w.letters())
    if (std::find(generators_.begin(), generators_.end(), l.generator) == generators_.end()) return false;
  return true;
}

DecoratedCoordinates decorated_normal_form(const DecoratedVector& v) {
  std::map<DecorationTuple, TreeVector> parts;
  for (const auto& [dt, c] : v.vector) {
    for (const auto& w : dt.decorations)
      if (!v.group.contains(w))
        throw DomainError("decoration '" + w.to_string() + "' is not a word in the declared group");
    parts[dt.decorations].add(dt.tree, c);
  }
  DecoratedCoordinates out;
  for (const auto& [tuple, tv] : parts) {
    auto coords = to_lyndon_coordinates(tv);
    bool zero = std::all_of(coords.begin(), coords.end(), [](const BigInt& x) { return x == 0; });
    if (!zero) out.emplace(tuple, std::move(coords));
  }
  return out;
}

SnfResult decorated_rank(std::size_t n, const std::vector<DecorationTuple>& tuples) {
  std::set<DecorationTuple> distinct;
  for (const auto& t : tuples) {
    if (t.size() != n)
      throw DomainError("decoration tuple " + to_string(t) + " has " + std::to_string(t.size()) +
                        " entries, expected " + std::to_string(n));
    if (!distinct.insert(t).second) throw DomainError("decoration tuple " + to_string(t) + " is repeated");
  }
  std::vector<DecoratedTree> terms;
  for_each_tree(n, [&](const Tree& t) {
    for (const auto& tuple : tuples) terms.emplace_back(t, tuple);
  });
  TermBasis<DecoratedTree> basis(std::move(terms));
  RowSource rows = [&](const std::function<void(const SparseRow&)>& emit) {
    auto lift = [&](const Relation& r) {
      for (const auto& tuple : tuples) {
        DecoratedTreeVector dv;
        for (const auto& term : r.terms) dv.add(DecoratedTree(term.tree, tuple), term.sign);
        emit(basis.coordinates(dv));
      }
    };
    for_each_as_relation(n, lift);
    for_each_ihx_relation(n, lift);
  };
  return cokernel_of_rows(rows, basis.size());
}

std::vector<DecorationTuple> parse_decoration_tuples_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("invalid JSON: " + std::string(e.what()), e.byte > 0 ? e.byte - 1 : 0);
  }
  if (!j.is_array()) throw ParseError("expected a JSON array of tuples", 0);
  std::vector<DecorationTuple> out;
  for (const auto& tuple : j) {
    if (!tuple.is_array()) throw ParseError("each tuple must be a JSON array of word strings", 0);
    DecorationTuple t;
    for (const auto& w : tuple) {
      if (!w.is_string()) throw ParseError("each decoration must be a string", 0);
      std::string s = w.get<std::string>();
      t.push_back(s == "1" ? FreeGroupWord() : FreeGroupWord::parse(s));
    }
    out.push_back(std::move(t));
  }
  return out;
}

std::string to_string(const DecorationTuple& tuple) {
  std::string out = "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) out += ", ";
    out += tuple[i].is_identity() ? "1" : tuple[i].to_string();
  }
  return out + ")";
}

}  // namespace lietrees
