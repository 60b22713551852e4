#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "localcert/graph.hpp"

namespace localcert {

struct Point {
  double x = 0;
  double y = 0;
};

enum class Metric { kL2, kLInf };

double dist(Point p, Point q, Metric metric = Metric::kL2);

// Adjacency rule the validator enforces:
//   kUnitDisk      edge <=> d2 <= 1
//   kUnitSquare    edge <=> dinf <= 1
//   kPenny         contact graph of interior-disjoint unit-diameter disks:
//                  all pairs d2 >= 1, edges exactly at d2 = 1
//   kUnitDistance  edges at d2 = 1, non-edges anywhere except d2 = 1
//   kGrid          points on distinct integer lattice sites, edges at L1
//                  lattice distance 1 (subgraph of the grid)
//   kInducedGrid   kGrid plus: every lattice-adjacent pair is an edge
enum class GeometryModel {
  kUnitDisk,
  kUnitSquare,
  kPenny,
  kUnitDistance,
  kGrid,
  kInducedGrid,
};

const char* to_string(GeometryModel model);
std::optional<GeometryModel> model_from_string(const std::string& name);

struct Embedding {
  std::map<VertexId, Point> points;
  GeometryModel model = GeometryModel::kUnitDisk;
  double tol = 1e-9;
};

struct PairIssue {
  VertexId u = 0;
  VertexId v = 0;
  double measured = 0;
  std::string relation;  // the constraint that failed or is borderline
};

struct ValidationReport {
  bool valid = true;
  std::vector<PairIssue> violations;
  std::vector<PairIssue> fragile_pairs;  // within tol of an adjacency threshold
  // Smallest slack over all inequality comparisons; equality constraints
  // (penny contacts, unit-distance edges, lattice snapping) are excluded.
  // Canonical embeddings are tuned so this stays >= 1e-6.
  double min_margin = 0;
};

ValidationReport validate(const LabeledGraph& g, const Embedding& e);

// Clockwise cyclic neighbor order around each vertex, starting at the
// smallest neighbor id.  Valid intersection representations of triangle-free
// graphs make this a planar rotation system.
std::map<VertexId, std::vector<VertexId>> rotation_system(const LabeledGraph& g,
                                                          const Embedding& e);

// 4 * area(abc) / (|ab| |bc| |ca|); 0 for collinear triples.
double menger_curvature(Point a, Point b, Point c);

// An embedded path with unit-or-shorter steps.  delta is how much the path
// length exceeds the straight-line distance between its endpoints.
struct TightPath {
  std::vector<Point> points;

  std::size_t length() const { return points.empty() ? 0 : points.size() - 1; }
};

double tightness(const TightPath& path, double tol = 1e-9);
// Max deviation of the first s+1 path vertices from evenly spaced points on
// the endpoint segment; s = 0 (default) measures the whole path.
double regularity(const TightPath& path, std::size_t s = 0, double tol = 1e-9);

struct BoundReport {
  bool holds = true;
  double worst_ratio = 0;  // observed / bound, max over samples
  std::size_t samples = 0;
  std::string detail;
};

// Samples near-degenerate triangles a, b, c with |ab| = x and
// |ac| + |bc| = x + delta, plus a point c' within rho of c that gets closer
// to both a and b.  Checks that one of the two distances drops by at most
// rho * sqrt(2 delta / x) + C / x.
BoundReport midpoint_shortcut_check(double x, double delta, double rho,
                                    std::size_t samples, std::uint64_t seed);

// Checks the regularity law gamma <= sqrt(len * delta / 2) + C / sqrt(len)
// on generated tight paths, plus the prefix law
// lambda <= sqrt((2a - a^2) gamma^2 + a^2) with a = s / len.
BoundReport tight_path_regularity_check(std::size_t paths, std::uint64_t seed);

// Invariance of menger_curvature under rigid motions and 1/s scaling.
BoundReport curvature_invariance_check(std::size_t samples, std::uint64_t seed);

// A chain of vertex-glued 4-cycles found in a unit-square embedding.  spine
// holds the shared vertices u_0..u_n; cell i has side pair (high_i, low_i)
// sorted by the cross coordinate.  Chains shorter than 3 cells are skipped:
// below that, either diagonal of a 4-cycle could be the spine.
struct PropInstance {
  std::vector<VertexId> spine;
  std::vector<std::pair<VertexId, VertexId>> side_pairs;
  bool horizontal = true;
};

struct PropScanReport {
  std::vector<PropInstance> props;
  // Per vertex: neighbor counts by quadrant (x<, y<), (x<, y>=), (x>=, y<),
  // (x>=, y>=) relative to the vertex.
  std::map<VertexId, std::array<int, 4>> corner_counts;
  // Every found prop moves its spine by more than one unit per cell along its
  // axis and separates each side pair by more than 1 across it.
  bool displacement_ok = true;
  std::vector<std::string> failures;
};

PropScanReport prop_scan(const LabeledGraph& g, const Embedding& e);

struct SeparationReport {
  bool holds = true;
  double measured = 0;       // d2 between the two marked ring vertices
  double bound = 0;          // (pi sqrt 2 - 4) n - C' sqrt n
  std::size_t packing = 0;   // surviving independent-set disks, larger side
  double packing_bound = 0;  // 2 (n+1)^2 - C'' n
  bool packing_holds = true;
};

// Isoperimetry-flavored check on a quasi-rigid ring embedding: the marked
// antipodal ring vertices c, c2 must be far apart in the plane, witnessed by
// a half-plane packing count of the given independent set (disks of radius
// 1/2 that clear the ring polyline and the segment c..c2).
SeparationReport ring_separation_check(const LabeledGraph& g, const Embedding& e,
                                       VertexId c, VertexId c2, std::size_t n,
                                       const std::vector<VertexId>& independent,
                                       const std::vector<VertexId>& ring);

}  // namespace localcert
