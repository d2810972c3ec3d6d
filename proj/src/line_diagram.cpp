#include "line_diagram.hpp"

#include <algorithm>
#include <stdexcept>

#include "tree_access.hpp"

namespace lietrees {

int LineDiagram::add_vertex(bool leg, int position) {
  Vertex v;
  v.leg = leg;
  v.position = position;
  vertices_.push_back(v);
  return static_cast<int>(vertices_.size()) - 1;
}

int LineDiagram::add_edge(int a, int b) {
  ends_.push_back({a, b});
  return static_cast<int>(ends_.size()) - 1;
}

void LineDiagram::redirect(int e, int from, int to) {
  for (auto& x : ends_[e])
    if (x == from) {
      x = to;
      return;
    }
}

int LineDiagram::build(const std::vector<std::uint8_t>& code, std::size_t& p) {
  if (code[p] != 0) return add_vertex(true, 4 * code[p++]);
  ++p;
  int t = add_vertex(false, 0);
  int a = build(code, p);
  int b = build(code, p);
  int ea = add_edge(t, a);
  int eb = add_edge(t, b);
  vertices_[t].edges[1] = ea;
  vertices_[t].edges[2] = eb;
  vertices_[a].edges[0] = ea;
  vertices_[b].edges[0] = eb;
  return t;
}

LineDiagram LineDiagram::from_tree(const Tree& t) {
  LineDiagram d;
  const auto& code = TreeAccess::code(t);
  d.vertices_.reserve(2 * code.size() + 8);
  d.ends_.reserve(2 * code.size() + 8);
  int root = d.add_vertex(true, 0);
  std::size_t p = 0;
  int top = d.build(code, p);
  int e = d.add_edge(root, top);
  d.vertices_[root].edges[0] = e;
  d.vertices_[top].edges[0] = e;
  return d;
}

int LineDiagram::merge_adjacent(std::size_t i) {
  int li = -1, lj = -1;
  for (std::size_t k = 0; k < vertices_.size(); ++k) {
    const auto& v = vertices_[k];
    if (!v.alive || !v.leg) continue;
    if (v.position == static_cast<int>(4 * i)) li = static_cast<int>(k);
    if (v.position == static_cast<int>(4 * i + 4)) lj = static_cast<int>(k);
  }
  if (li < 0 || lj < 0) throw std::logic_error("merge_adjacent: no legs at the requested positions");
  int ei = vertices_[li].edges[0];
  int ej = vertices_[lj].edges[0];
  int v = add_vertex(false, 0);
  int l = add_vertex(true, static_cast<int>(4 * i + 2));
  redirect(ei, li, v);
  redirect(ej, lj, v);
  vertices_[li].alive = false;
  vertices_[lj].alive = false;
  int el = add_edge(v, l);
  vertices_[v].edges = {el, ej, ei};
  vertices_[l].edges[0] = el;
  return v;
}

std::vector<bool> LineDiagram::loop_mask() const {
  std::vector<int> degree(vertices_.size(), 0);
  std::vector<bool> alive(vertices_.size(), false);
  std::vector<int> stack;
  for (std::size_t k = 0; k < vertices_.size(); ++k) {
    if (!vertices_[k].alive) continue;
    alive[k] = true;
    degree[k] = vertices_[k].leg ? 1 : 3;
    if (degree[k] == 1) stack.push_back(static_cast<int>(k));
  }
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    if (!alive[x]) continue;
    alive[x] = false;
    int nslots = vertices_[x].leg ? 1 : 3;
    for (int s = 0; s < nslots; ++s) {
      int y = other(vertices_[x].edges[s], x);
      if (alive[y] && --degree[y] == 1) stack.push_back(y);
    }
  }
  return alive;
}

std::vector<int> LineDiagram::loop_vertices_with_legs() const {
  auto mask = loop_mask();
  std::vector<int> out;
  for (std::size_t k = 0; k < vertices_.size(); ++k) {
    if (!mask[k] || vertices_[k].leg) continue;
    if (leg_slot(static_cast<int>(k)) >= 0) out.push_back(static_cast<int>(k));
  }
  return out;
}

int LineDiagram::leg_slot(int w) const {
  for (int s = 0; s < 3; ++s)
    if (vertices_[other(vertices_[w].edges[s], w)].leg) return s;
  return -1;
}

int LineDiagram::leg_position(int w) const {
  int s = leg_slot(w);
  return vertices_[other(vertices_[w].edges[s], w)].position;
}

std::size_t LineDiagram::legs_strictly_between(int a, int b) const {
  int pa = leg_position(a), pb = leg_position(b);
  if (pa > pb) std::swap(pa, pb);
  std::size_t count = 0;
  for (const auto& v : vertices_)
    if (v.alive && v.leg && v.position > pa && v.position < pb) ++count;
  return count;
}

std::vector<int> LineDiagram::arrival_edges(int v) const {
  auto mask = loop_mask();
  std::vector<int> arrive(vertices_.size(), -1);
  int s = leg_slot(v);
  int prev = vertices_[v].edges[(s + 2) % 3];
  int cur = other(prev, v);
  while (cur != v) {
    arrive[cur] = prev;
    int next = -1;
    for (int e : vertices_[cur].edges)
      if (e != prev && mask[other(e, cur)]) next = e;
    prev = next;
    cur = other(next, cur);
  }
  arrive[v] = prev;
  return arrive;
}

std::pair<Tree, Tree> LineDiagram::resolve(int w) const {
  int s = leg_slot(w);
  int el = vertices_[w].edges[s];
  int leg = other(el, w);
  int p = vertices_[leg].position;
  int e1 = vertices_[w].edges[(s + 1) % 3];
  int e2 = vertices_[w].edges[(s + 2) % 3];
  auto make = [&](int left, int right) {
    LineDiagram h = *this;
    h.vertices_[w].alive = false;
    h.vertices_[leg].alive = false;
    for (auto [e, q] : {std::pair{left, p - 1}, std::pair{right, p + 1}}) {
      int nl = h.add_vertex(true, q);
      h.redirect(e, w, nl);
      h.vertices_[nl].edges[0] = e;
    }
    return h.to_tree();
  };
  return {make(e2, e1), make(e1, e2)};
}

Tree LineDiagram::to_tree() const {
  std::vector<std::pair<int, int>> legs;
  for (std::size_t k = 0; k < vertices_.size(); ++k)
    if (vertices_[k].alive && vertices_[k].leg) legs.emplace_back(vertices_[k].position, static_cast<int>(k));
  std::sort(legs.begin(), legs.end());
  std::vector<int> rank(vertices_.size(), 0);
  for (std::size_t r = 0; r < legs.size(); ++r) rank[legs[r].second] = static_cast<int>(r);
  std::vector<std::uint8_t> code;
  code.reserve(2 * legs.size());
  // Iterative preorder: (vertex, entering edge).
  std::vector<std::pair<int, int>> stack;
  int root = legs.front().second;
  int e0 = vertices_[root].edges[0];
  stack.emplace_back(other(e0, root), e0);
  while (!stack.empty()) {
    auto [x, e] = stack.back();
    stack.pop_back();
    const auto& vx = vertices_[x];
    if (vx.leg) {
      code.push_back(static_cast<std::uint8_t>(rank[x]));
      continue;
    }
    code.push_back(0);
    int k = vx.edges[0] == e ? 0 : vx.edges[1] == e ? 1 : 2;
    int a = vx.edges[(k + 1) % 3];
    int b = vx.edges[(k + 2) % 3];
    stack.emplace_back(other(b, x), b);
    stack.emplace_back(other(a, x), a);
  }
  return TreeAccess::make(std::move(code));
}

}  // namespace lietrees
