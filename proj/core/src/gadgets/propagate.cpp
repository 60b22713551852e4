#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "gadgets/util.hpp"

namespace localcert {
namespace {

constexpr double kSnap = 1e-6;  // matching tolerance for forced positions

int role_index(const std::map<VertexId, VertexRole>* roles, VertexId u,
               VertexId v) {
  if (!roles) return 0;
  auto get = [&](VertexId w) {
    auto it = roles->find(w);
    return it == roles->end() ? 0 : it->second.index;
  };
  int iu = get(u);
  return iu ? iu : get(v);
}

bool close(Point p, Point q) {
  return std::abs(p.x - q.x) < kSnap && std::abs(p.y - q.y) < kSnap;
}

}  // namespace

PropagateResult rigid_propagate_triangles(
    const LabeledGraph& g, const std::array<VertexId, 3>& seed, double tol,
    const std::map<VertexId, VertexRole>* roles) {
  (void)tol;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (!g.has_edge(seed[i], seed[j]))
        fail(ErrorCode::kBadIndex, "seed is not a triangle");

  std::map<VertexId, Point> pos;
  pos[seed[0]] = {0, 0};
  pos[seed[1]] = {1, 0};
  pos[seed[2]] = {0.5, 0.86602540378443865};

  PropagateResult out;
  auto clash = [&](VertexId v, Point at) -> bool {
    // every placed non-neighbor has to stay at distance >= 1
    for (const auto& [w, pw] : pos) {
      if (w == v || g.has_edge(v, w)) continue;
      double d = dist(pw, at);
      if (d < 1 - kSnap) {
        Collision c;
        c.u = w;
        c.v = v;
        c.at_u = pw;
        c.at_v = at;
        c.index = role_index(roles, w, v);
        out.collision = c;
        return true;
      }
    }
    return false;
  };

  const auto& verts = g.vertices();
  while (pos.size() < verts.size()) {
    bool progress = false;
    for (VertexId v : verts) {
      if (pos.count(v)) continue;
      // two placed adjacent neighbors p,q pin v to one of two spots; a
      // placed disk on one spot forces the other
      const auto& nb = g.neighbors(v);
      Point forced{};
      bool found = false;
      for (std::size_t i = 0; i < nb.size() && !found; ++i) {
        if (!pos.count(nb[i])) continue;
        for (std::size_t j = i + 1; j < nb.size() && !found; ++j) {
          if (!pos.count(nb[j]) || !g.has_edge(nb[i], nb[j])) continue;
          Point p = pos[nb[i]], q = pos[nb[j]];
          double d = dist(p, q);
          if (d >= 2 - kSnap || d < kSnap) continue;
          double h = std::sqrt(std::max(0.0, 1 - d * d / 4));
          Point mid{(p.x + q.x) / 2, (p.y + q.y) / 2};
          Point perp{(q.y - p.y) / d * h, -(q.x - p.x) / d * h};
          Point x1{mid.x + perp.x, mid.y + perp.y};
          Point x2{mid.x - perp.x, mid.y - perp.y};
          bool occ1 = false, occ2 = false;
          for (VertexId r : g.neighbors(nb[i])) {
            if (r == v || !pos.count(r) || !g.has_edge(r, nb[j])) continue;
            if (close(pos[r], x1)) occ1 = true;
            if (close(pos[r], x2)) occ2 = true;
          }
          if (occ1 == occ2) continue;  // ambiguous, not forced by this pair
          forced = occ1 ? x2 : x1;
          found = true;
        }
      }
      if (!found) continue;
      if (clash(v, forced)) return out;
      pos[v] = forced;
      progress = true;
    }
    if (!progress)
      fail(ErrorCode::kNoValidOrdering,
           "propagation stuck with " + std::to_string(pos.size()) + " of " +
               std::to_string(verts.size()) + " placed");
  }

  Embedding e;
  e.points = std::move(pos);
  e.model = GeometryModel::kPenny;
  out.embedding = std::move(e);
  return out;
}

PropagateResult rigid_propagate_c4(
    const LabeledGraph& g, const std::array<VertexId, 4>& seed, double tol,
    const std::map<VertexId, VertexRole>* roles) {
  (void)tol;
  // cells: non-adjacent pairs with exactly two pairwise non-adjacent
  // common neighbors, stored in cycle order
  struct Cell {
    std::array<VertexId, 4> cyc;  // cyc[0]-cyc[1]-cyc[2]-cyc[3]-cyc[0]
  };
  std::vector<Cell> cells;
  std::set<std::array<VertexId, 4>> seen;
  const auto& verts = g.vertices();
  for (VertexId u : verts) {
    for (VertexId v : verts) {
      if (v <= u || g.has_edge(u, v)) continue;
      std::vector<VertexId> common;
      for (VertexId w : g.neighbors(u))
        if (g.has_edge(w, v)) common.push_back(w);
      if (common.size() != 2 || g.has_edge(common[0], common[1])) continue;
      std::array<VertexId, 4> key{u, common[0], v, common[1]};
      std::array<VertexId, 4> sorted = key;
      std::sort(sorted.begin(), sorted.end());
      if (seen.insert(sorted).second) cells.push_back(Cell{key});
    }
  }

  auto cell_with = [&](const std::array<VertexId, 4>& want) -> int {
    std::array<VertexId, 4> w = want;
    std::sort(w.begin(), w.end());
    for (std::size_t i = 0; i < cells.size(); ++i) {
      std::array<VertexId, 4> have = cells[i].cyc;
      std::sort(have.begin(), have.end());
      if (have == w) return static_cast<int>(i);
    }
    return -1;
  };
  int start = cell_with(seed);
  if (start < 0) fail(ErrorCode::kBadIndex, "seed is not a 4-cycle cell");

  std::map<std::pair<VertexId, VertexId>, std::vector<int>> by_edge;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const auto& c = cells[i].cyc;
    for (int j = 0; j < 4; ++j) {
      VertexId x = c[j], y = c[(j + 1) % 4];
      if (x > y) std::swap(x, y);
      by_edge[{x, y}].push_back(static_cast<int>(i));
    }
  }

  std::map<VertexId, Point> pos;
  std::map<std::pair<long long, long long>, VertexId> site;
  PropagateResult out;
  auto place = [&](VertexId v, Point at) -> bool {
    long long sx = std::llround(at.x), sy = std::llround(at.y);
    if (std::abs(at.x - sx) > kSnap || std::abs(at.y - sy) > kSnap)
      fail(ErrorCode::kNoValidOrdering, "forced position off the lattice");
    Point snapped{static_cast<double>(sx), static_cast<double>(sy)};
    auto it = pos.find(v);
    if (it != pos.end()) {
      if (!close(it->second, snapped)) {
        Collision c;
        c.u = v;
        c.v = v;
        c.at_u = it->second;
        c.at_v = snapped;
        c.index = role_index(roles, v, v);
        out.collision = c;
        return false;
      }
      return true;
    }
    auto [sit, fresh] = site.insert({{sx, sy}, v});
    if (!fresh) {
      Collision c;
      c.u = sit->second;
      c.v = v;
      c.at_u = snapped;
      c.at_v = snapped;
      c.index = role_index(roles, sit->second, v);
      out.collision = c;
      return false;
    }
    pos[v] = snapped;
    return true;
  };

  // seed cell as the unit square
  place(seed[0], {0, 0});
  place(seed[1], {1, 0});
  place(seed[2], {1, 1});
  place(seed[3], {0, 1});
  for (int j = 0; j < 4; ++j)
    if (!g.has_edge(seed[j], seed[(j + 1) % 4]))
      fail(ErrorCode::kBadIndex, "seed order is not the cycle order");

  std::vector<char> done(cells.size(), 0);
  done[start] = 1;
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t ci = 0; ci < cells.size(); ++ci) {
      if (done[ci]) continue;
      const auto& cyc = cells[ci].cyc;
      bool all = true;
      for (VertexId w : cyc) all = all && pos.count(w) > 0;
      if (!all) {
        // mirror a completed neighbor cell across a shared placed edge
        for (int j = 0; j < 4 && !all; ++j) {
          VertexId x = cyc[j], y = cyc[(j + 1) % 4];
          if (!pos.count(x) || !pos.count(y)) continue;
          VertexId far_y = cyc[(j + 2) % 4], far_x = cyc[(j + 3) % 4];
          VertexId ex = x > y ? y : x, ey = x > y ? x : y;
          for (int other : by_edge[{ex, ey}]) {
            if (other == static_cast<int>(ci) || !done[other]) continue;
            const auto& oc = cells[other].cyc;
            VertexId sx = 0, sy = 0;
            for (VertexId w : oc) {
              if (w == x || w == y) continue;
              if (g.has_edge(w, x)) sx = w;
              if (g.has_edge(w, y)) sy = w;
            }
            if (!sx || !sy || !pos.count(sx) || !pos.count(sy)) continue;
            Point nx{2 * pos[x].x - pos[sx].x, 2 * pos[x].y - pos[sx].y};
            Point ny{2 * pos[y].x - pos[sy].x, 2 * pos[y].y - pos[sy].y};
            if (!place(far_x, nx) || !place(far_y, ny)) return out;
            all = true;
            break;
          }
        }
      }
      if (all) {
        done[ci] = 1;
        progress = true;
      }
    }
  }

  if (pos.size() < verts.size())
    fail(ErrorCode::kNoValidOrdering,
         "cells cover " + std::to_string(pos.size()) + " of " +
             std::to_string(verts.size()) + " vertices");

  // induced check: occupied neighbor sites must be graph neighbors
  for (const auto& [v, p] : pos) {
    long long sx = std::llround(p.x), sy = std::llround(p.y);
    const long long off[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    for (const auto& o : off) {
      auto it = site.find({sx + o[0], sy + o[1]});
      if (it == site.end() || g.has_edge(v, it->second)) continue;
      if (it->second < v) continue;  // report each pair once
      Collision c;
      c.u = v;
      c.v = it->second;
      c.at_u = p;
      c.at_v = pos[it->second];
      c.index = role_index(roles, v, it->second);
      out.collision = c;
      return out;
    }
  }

  Embedding e;
  e.points = std::move(pos);
  e.model = GeometryModel::kInducedGrid;
  out.embedding = std::move(e);
  return out;
}

PropagateResult rigid_propagate(const GadgetInstance& inst, double tol) {
  switch (inst.cls) {
    case GadgetClass::kPenny:
    case GadgetClass::kUnitDistance: {
      std::array<VertexId, 3> seed{inst.seed[0], inst.seed[1], inst.seed[2]};
      auto r = rigid_propagate_triangles(inst.graph, seed, tol, &inst.roles);
      if (r.embedding)
        r.embedding->model = inst.cls == GadgetClass::kPenny
                                 ? GeometryModel::kPenny
                                 : GeometryModel::kUnitDistance;
      return r;
    }
    case GadgetClass::kGrid:
    case GadgetClass::kInducedGrid: {
      std::array<VertexId, 4> seed{inst.seed[0], inst.seed[1], inst.seed[2],
                                   inst.seed[3]};
      auto r = rigid_propagate_c4(inst.graph, seed, tol, &inst.roles);
      if (r.embedding)
        r.embedding->model = inst.cls == GadgetClass::kGrid
                                 ? GeometryModel::kGrid
                                 : GeometryModel::kInducedGrid;
      return r;
    }
    default:
      fail(ErrorCode::kInfeasibleParameters,
           "no rigid propagation engine for " + gadget_class_name(inst.cls));
  }
}

}  // namespace localcert
