#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "localcert/geometry.hpp"
#include "localcert/graph.hpp"

namespace localcert {

// Families of two-sided instances g(L(A), R(B)) glued along a small
// separator S.  penny/unit-distance and grid/induced-grid share builders;
// the tag picks the validation model.
enum class GadgetClass {
  kPenny,
  kUnitDistance,
  kGrid,
  kInducedGrid,
  kOnePlanar,
  kUnitSquare,
  kUnitDiskCorridor,
};

std::string gadget_class_name(GadgetClass cls);
std::optional<GadgetClass> gadget_class_from_name(const std::string& name);

// Vertex bookkeeping: role string plus the 1-based flag index for
// decoration vertices (0 for structural ones).
struct VertexRole {
  std::string role;
  int index = 0;
};

struct GadgetInstance {
  GadgetClass cls = GadgetClass::kPenny;
  int n = 0;                  // N for strips, k for the square family, r for corridors
  std::vector<int> a, b;      // sorted flag sets, subsets of 1..n (or 1..deco for corridors)
  LabeledGraph graph;
  std::vector<VertexId> shared;         // separator S, sorted
  std::vector<VertexId> shared_closed;  // N[S], sorted
  std::vector<VertexId> left, right;    // halves; left cap right == shared
  std::optional<Embedding> canonical;   // present only when member
  bool member = false;
  std::map<VertexId, VertexRole> roles;
  std::vector<VertexId> seed;  // rigid propagation seed (3 ids triangle, 4 ids cell)
};

// Builders.  Ids depend only on (class, n): flag slots are reserved whether
// or not the flag is present, so the left half is bit-identical across
// right-side choices and vice versa.  Each builder re-derives the induced
// subgraph on N[S] against the flagless instance and asserts it unchanged.
GadgetInstance penny_gadget(int n, std::vector<int> a, std::vector<int> b,
                            GadgetClass cls = GadgetClass::kPenny);
GadgetInstance grid_gadget(int n, std::vector<int> a, std::vector<int> b,
                           GadgetClass cls = GadgetClass::kGrid);
GadgetInstance one_planar_gadget(int n, std::vector<int> a, std::vector<int> b);
GadgetInstance unit_square_gadget(int k, std::vector<int> a, std::vector<int> b);
GadgetInstance corridor_instance(int r, std::vector<int> a, std::vector<int> b,
                                 int deco);

GadgetInstance gadget(GadgetClass cls, int n, std::vector<int> a,
                      std::vector<int> b);

// Worst-case vertex count of the family at parameter n (exact for the
// families whose size does not depend on the flag sets).
std::size_t class_size_bound(GadgetClass cls, int n);

// One chained-cells graph Pr_n (3n+1 vertices, 4n edges) with its staircase
// unit-square embedding.  spine holds u_0..u_n in order.
struct PropGraph {
  LabeledGraph graph;
  Embedding canonical;
  std::vector<VertexId> spine;
};
PropGraph prop_graph(int n);

// One square-family copy with every decoration grid present: the boundary
// cycle, two crossing props meeting at the center, and 2k attached 3x3
// grids.  82k+37 vertices.  diagonal holds the v_1..v_2 quarter in order.
struct UnitSquareCopy {
  LabeledGraph graph;
  Embedding canonical;
  VertexId v1 = 0, v2 = 0, v3 = 0, v4 = 0;
  std::vector<VertexId> diagonal;
};
UnitSquareCopy unit_square_copy(int k);

// Near-equilateral strip of 2l triangles bent into an annular arc.  Side
// lengths are exact by construction: k-delta on the inner chord, k+delta on
// the outer, k across.  delta = 0 is rejected; use a shrinking delta
// sequence to watch the curvature go to 0.
struct StripeArc {
  LabeledGraph graph;
  Embedding arc;              // not tied to a unit model; distances are ~k
  double rho = 0;             // inner circumradius
  double rho_outer = 0;
  double step_angle = 0;      // turn per triangle pair
  std::vector<VertexId> inner, outer;
};
StripeArc stripe(int len, double k, double delta);

// L1 ball of radius 2n+1 around a horizontal edge, a pendant vertex on each
// boundary grid vertex, and an outer cycle through the pendants closed by
// ten corner fillers.  far_a / far_b are cycle-antipodal pendants.
// independent is one parity class of the grid ball.
struct RingedGrid {
  LabeledGraph graph;
  Embedding canonical;
  int n = 0;
  std::vector<VertexId> ring;  // cycle order
  VertexId far_a = 0, far_b = 0;
  std::vector<VertexId> independent;
};
RingedGrid ringed_grid(int n);

// Two walls of r+1 vertices sharing both ends, with shortcut forks and a
// tip vertex at each end forcing a wide fan.  2r+10 vertices.
struct Corridor {
  LabeledGraph graph;
  Embedding canonical;
  int r = 0;
  VertexId u = 0, v = 0;
  VertexId z_near = 0, z_far = 0;
  std::vector<VertexId> wall_x, wall_y;  // x_1..x_{r+1}, y_1..y_{r+1}
};
Corridor corridor(int r);

// Adds two 3-vertex sculpture paths per flag: centers on x_{4i} (inside)
// and x_{4i+1} (outside) for i in a, mirrored on the y wall for b.
// Requires r >= 4*deco+8.  Canonical present iff a and b are disjoint.
struct DecoratedCorridor {
  LabeledGraph graph;
  std::optional<Embedding> canonical;
  int r = 0, deco = 0;
  std::vector<int> a, b;
};
DecoratedCorridor decorate_corridor(const Corridor& c, std::vector<int> a,
                                    std::vector<int> b, int deco);

// Same decorated graph with the walls pinned straight at separation just
// above 2: shared-index inside sculptures end up closer than 1 while
// non-adjacent, so validate() reports the clash.
struct PinchDemo {
  LabeledGraph graph;
  Embedding pinched;
  ValidationReport report;
};
PinchDemo corridor_pinch(int r, std::vector<int> a, std::vector<int> b,
                         int deco);

// Rigid propagation.  Given a placed seed, repeatedly places every vertex
// whose position is forced; emits a Collision when a forced position lands
// within 1-tol of a non-neighbor (index is filled from roles when given).
struct Collision {
  VertexId u = 0, v = 0;
  Point at_u, at_v;
  int index = 0;
};

struct PropagateResult {
  std::optional<Embedding> embedding;
  std::optional<Collision> collision;
};

// Triangle rule: a vertex with two placed adjacent neighbors goes to the
// free one of the two circle intersections (the other is held by a placed
// common neighbor).
PropagateResult rigid_propagate_triangles(
    const LabeledGraph& g, const std::array<VertexId, 3>& seed, double tol = 1e-9,
    const std::map<VertexId, VertexRole>* roles = nullptr);

// Cell rule: a 4-cycle sharing an edge with a placed cell is mirrored to
// the opposite side, snapping to integer sites.
PropagateResult rigid_propagate_c4(
    const LabeledGraph& g, const std::array<VertexId, 4>& seed, double tol = 1e-9,
    const std::map<VertexId, VertexRole>* roles = nullptr);

// Picks the family engine and seed recorded in the instance.
PropagateResult rigid_propagate(const GadgetInstance& inst, double tol = 1e-9);

// Independent membership oracle for the grid family: exhaustive
// backtracking search for an induced embedding into the integer lattice.
bool lattice_embeddable(const LabeledGraph& g);

}  // namespace localcert
