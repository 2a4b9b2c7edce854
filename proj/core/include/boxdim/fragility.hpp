#pragma once

#include <cstdint>
#include <map>

#include "boxdim/representation.hpp"
#include "boxdim/rng.hpp"

namespace boxdim {

// Nested grid spacings per vertex position and dimension, plus the random
// offsets. ell[i][j] divides ell[i-1][j] exactly.
struct GridSchedule {
  int k = 2;
  long s = 1;
  long t = 1;
  int d = 1;
  std::vector<std::vector<Rational>> ell;  // position (0-based) x dimension
  std::vector<Rational> offsets;           // x_j in [0, ell[0][j])
  uint64_t seed = 0;
};

// The spacing recurrence alone (offset-free); shared across repetitions.
std::vector<std::vector<Rational>> grid_spacings(const EnvelopeRep& e, int k);

// Spacings plus offsets drawn uniformly from the dyadic grid
// { m * ell[0][j] / 2^32 : 0 <= m < 2^32 } with a seeded generator.
GridSchedule build_schedule(const EnvelopeRep& e, int k, uint64_t seed);

struct DeletionSample {
  std::vector<bool> deleted;  // by vertex id
  uint64_t seed = 0;
};

// Vertex at position a is deleted iff its outer box meets a hyperplane of
// its own level's grid; exact residue test.
DeletionSample sample_deletion(const EnvelopeRep& e, const GridSchedule& sched);

// Independent re-check of one vertex's membership (different formulation).
bool deletion_recheck(const EnvelopeRep& e, const GridSchedule& sched, int vertex);

// Non-empty cells of the nested grids, pruned to those with non-empty bags
// and re-linked by containment. Cell coordinates are integers in the grid of
// the cell's stage (a run of positions with equal spacings).
struct CellTree {
  struct Cell {
    int stage = 0;
    std::vector<BigInt> coords;
    int max_level = 0;     // largest 1-based position index of the stage
    std::vector<int> bag;  // surviving vertex ids
    int parent = -1;       // index into cells, -1 = virtual root
  };
  std::vector<Cell> cells;
  int survivors = 0;
};

CellTree build_cell_tree(const EnvelopeRep& e, const GridSchedule& sched,
                         const DeletionSample& sample);

// Node 0 is a virtual root with an empty bag; cell i maps to node i+1.
TreeDecomp build_decomposition(const CellTree& ct);

// f(k) = (2ksd+2)^d * s * t; bags may have up to f(k)+1 vertices.
Rational fragility_width_bound(int k, long s, long t, int d);

struct ExperimentReport {
  int k = 2;
  int samples = 0;
  uint64_t seed = 0;
  int n = 0;
  int d = 0;
  long s = 1;
  long t = 1;
  Rational bag_bound;                    // f(k) + 1
  std::vector<long> deletion_counts;     // per vertex
  std::map<int, long> width_histogram;
  int max_width = -1;
  std::vector<std::string> violations;   // must stay empty
  Rational discretization_slack;         // max over vertices, analytic
  double wall_clock_ms = 0.0;
};

// N independent repetitions with per-repetition seeds derived from the
// master seed; every decomposition is verified and checked against the bag
// bound.
ExperimentReport fragility_experiment(const EnvelopeRep& e, int k, int N, uint64_t seed);

struct SeparatorResult {
  std::vector<int> deleted;    // X
  std::vector<int> separator;  // S, a bag of the decomposition
  int draws = 0;
  bool flagged = false;        // draw cap exhausted
  int remainder_max_component = 0;
};

// Draws samples until |X| <= |V|/k (cap 64, then the best draw), then picks
// a bag whose removal splits the surviving graph into halves.
SeparatorResult balanced_separator(const EnvelopeRep& e, int k, uint64_t seed);

}  // namespace boxdim
