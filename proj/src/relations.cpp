#include "lietrees/relations.hpp"

#include <ostream>

#include "lietrees/errors.hpp"
#include "line_diagram.hpp"

namespace lietrees {

std::string to_string(RelationKind k) {
  switch (k) {
    case RelationKind::AS: return "as";
    case RelationKind::IHX: return "ihx";
    case RelationKind::STU2_ODD: return "stu2_odd";
    case RelationKind::STU2_EVEN: return "stu2_even";
  }
  return "?";
}

std::string to_string(Parity p) { return p == Parity::Odd ? "odd" : "even"; }

Parity parse_parity(std::string_view s) {
  if (s == "odd") return Parity::Odd;
  if (s == "even") return Parity::Even;
  throw DomainError("parity must be 'odd' or 'even', got '" + std::string(s) + "'");
}

TreeVector Relation::vector() const {
  TreeVector v;
  for (const auto& t : terms) v.add(t.tree, t.sign);
  return v;
}

std::string Relation::to_string() const {
  std::string out;
  for (const auto& t : terms) {
    if (!out.empty()) out += ' ';
    out += (t.sign > 0 ? "+1*" : "-1*") + t.tree.to_string();
  }
  return out;
}

void for_each_as_relation(std::size_t n, const RelationVisitor& visit) {
  if (n < 2) return;
  Relation r;
  for_each_tree(n, [&](const Tree& t) {
    for (const auto& path : internal_vertices(t)) {
      r.terms = {{1, t}, {1, swap_at(t, path)}};
      visit(r);
    }
  });
}

void for_each_ihx_relation(std::size_t n, const RelationVisitor& visit) {
  if (n < 3) return;
  Relation r;
  for_each_tree(n, [&](const Tree& t) {
    for (const auto& path : internal_vertices(t)) {
      Tree s = subtree_at(t, path);
      Tree l = s.left(), rt = s.right();
      if (!rt.is_leaf()) {
        const Tree& a = l;
        Tree b = rt.left(), c = rt.right();
        r.terms = {{1, t},
                   {-1, replace_at(t, path, graft(graft(a, b), c))},
                   {-1, replace_at(t, path, graft(b, graft(a, c)))}};
        visit(r);
      }
      if (!l.is_leaf()) {
        const Tree& a = rt;
        Tree b = l.left(), c = l.right();
        r.terms = {{1, t},
                   {-1, replace_at(t, path, graft(c, graft(a, b)))},
                   {-1, replace_at(t, path, graft(graft(a, c), b))}};
        visit(r);
      }
    }
  });
}

void for_each_stu2_relation(std::size_t n, Parity parity, const RelationVisitor& visit) {
  if (n < 3) return;
  Relation r;
  r.terms.reserve(4);
  for_each_tree(n, [&](const Tree& t) {
    LineDiagram base = LineDiagram::from_tree(t);
    for (std::size_t i = 0; i < n; ++i) {
      LineDiagram d = base;
      int v = d.merge_adjacent(i);
      auto [sv, uv] = d.resolve(v);
      auto others = d.loop_vertices_with_legs();
      std::vector<int> arrive;
      if (parity == Parity::Even) arrive = d.arrival_edges(v);
      for (int b : others) {
        if (b == v) continue;
        auto [sb, ub] = d.resolve(b);
        if (parity == Parity::Odd) {
          r.terms = {{1, sv}, {-1, uv}, {-1, sb}, {1, ub}};
        } else {
          std::size_t a = d.legs_strictly_between(v, b);
          int o = d.cyclic_edge(b, d.leg_slot(b) + 1) == arrive[b] ? 1 : 0;
          int s = (a + o) % 2 == 0 ? 1 : -1;
          r.terms = {{1, sv}, {1, uv}, {-s, sb}, {-s, ub}};
        }
        visit(r);
      }
    }
  });
}

void for_each_relation(RelationKind kind, std::size_t n, const RelationVisitor& visit) {
  switch (kind) {
    case RelationKind::AS: return for_each_as_relation(n, visit);
    case RelationKind::IHX: return for_each_ihx_relation(n, visit);
    case RelationKind::STU2_ODD: return for_each_stu2_relation(n, Parity::Odd, visit);
    case RelationKind::STU2_EVEN: return for_each_stu2_relation(n, Parity::Even, visit);
  }
}

namespace {

RelationSet collect(RelationKind kind, std::size_t n) {
  if (n == 0) throw DomainError("relation degree must be at least 1");
  RelationSet rs{n, kind, {}};
  for_each_relation(kind, n, [&](const Relation& r) { rs.relations.push_back(r); });
  return rs;
}

}  // namespace

RelationSet as_relations(std::size_t n) { return collect(RelationKind::AS, n); }
RelationSet ihx_relations(std::size_t n) { return collect(RelationKind::IHX, n); }
RelationSet stu2_relations(std::size_t n, Parity parity) {
  return collect(parity == Parity::Odd ? RelationKind::STU2_ODD : RelationKind::STU2_EVEN, n);
}

DecoratedRelationSet decorate_relations(const RelationSet& rs, const std::vector<DecorationTuple>& tuples) {
  for (const auto& tuple : tuples)
    if (tuple.size() != rs.degree)
      throw DomainError("decoration tuple has " + std::to_string(tuple.size()) + " entries, degree is " +
                        std::to_string(rs.degree));
  DecoratedRelationSet out{rs.degree, rs.kind, {}};
  out.vectors.reserve(rs.relations.size() * tuples.size());
  for (const auto& r : rs.relations)
    for (const auto& tuple : tuples) {
      DecoratedTreeVector v;
      for (const auto& term : r.terms) v.add(DecoratedTree(term.tree, tuple), term.sign);
      out.vectors.push_back(std::move(v));
    }
  return out;
}

void write_relations(std::ostream& out, const RelationSet& rs) {
  for (const auto& r : rs.relations) out << r.to_string() << '\n';
}

}  // namespace lietrees
