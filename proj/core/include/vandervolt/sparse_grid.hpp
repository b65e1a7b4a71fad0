#pragma once

#include <vector>

#include "vandervolt/basis.hpp"
#include "vandervolt/multi_index.hpp"
#include "vandervolt/vandermonde.hpp"

namespace vandervolt {

/// Nested level-to-count rule: m(0) = 0, m(1) = 1, m(k) = 2^{k-1} + 1.
int level_count(int level);

/// Clenshaw-Curtis abscissae of level k on [-1,1], ascending:
/// {0} for k = 1, otherwise -cos((j-1) pi / (m(k)-1)) for j = 1..m(k) with
/// the endpoints snapped to exactly -1/1 and the midpoint to exactly 0.
std::vector<double> cc_nodes(int k);

/// All offsets beta in N_0^d with |beta| == level, grouped by number of
/// nonzero components ascending, lexicographically descending within each
/// group. This is the block order of the sparse grid construction.
std::vector<MultiIndex> level_order(int level, int d);

/// Ordered Smolyak grid and matching Chebyshev tensor basis.
struct SparseGridSequence {
  int dimension = 0;
  int order = 0;
  NodeSet nodes;
  BasisSequence basis;
  std::vector<int> level_offsets;  // cardinality of each complete subgrid j <= k

  int size() const { return nodes.size(); }
};

/// Nodes and basis for dimension d in {2,3} and order k >= 0.
///
/// Basis blocks accumulate over levels j = 0..k: for each beta in
/// level_order(j,d) the tensor block of new Chebyshev degrees
/// m(beta_i)..m(beta_i+1)-1 per axis, row-major ascending.
///
/// Node blocks enumerate the tensor products X_{beta_1+1} x ... x
/// X_{beta_d+1} row-major with first-occurrence deduplication; levels
/// min(k,2)..k are emitted in turn, which makes grids of order >= 2 exact
/// prefixes of one another.
SparseGridSequence smolyak_sequence(int d, int k);

/// smolyak_sequence, kept as the grid-focused entry point.
SparseGridSequence smolyak_grid(int d, int k);

/// smolyak_sequence, kept as the basis-focused entry point.
SparseGridSequence smolyak_basis(int d, int k);

/// The nodes of grid order k+1 that are not in grid order k, in sequence
/// order: prefixing i of them onto the order-k grid gives the incomplete
/// grid of cardinality n_k + i.
NodeSet incomplete_sequence(int d, int k);

}  // namespace vandervolt
