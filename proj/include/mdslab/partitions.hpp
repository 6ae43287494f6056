#pragma once

#include <vector>

#include "mdslab/multiseries.hpp"
#include "mdslab/report.hpp"

namespace mdslab {

using Partition = std::vector<int>;  // weakly decreasing, no trailing zeros

/// Sequences delta_i^{(j)}, j = 1, 2, ..., one per i.
struct PartitionTuple {
  std::vector<Partition> parts;
};

/// All partitions of `total` in weakly decreasing order of parts.
std::vector<Partition> partitions_of(int total);

/// Partitions delta^{(1)} >= delta^{(2)} >= ... with sum over j = k mod n of delta^{(j)} = a_k.
long count_partition_tuples(int n, const std::vector<int>& residue_sums);
/// n-tuples delta_1..delta_n with sum over i + j = k mod n of delta_i^{(j)} = a_k.
long count_partition_ntuples(int n, const std::vector<int>& residue_sums);

/// prod_m prod_{j=1..n} (1 - (x_1...x_j)(x_1...x_n)^m)^{-1}, truncated.
MultiSeries<QLaurent> partition_product_gf(int n, int bound);
/// prod_m prod over cyclic intervals (1 - (x_i...x_j)(x_1...x_n)^m)^{-1}, truncated.
MultiSeries<QLaurent> partition_ntuple_gf(int n, int bound);

enum class ChainReading {
  Literal,  // boundary, stay-fixed, parity and inequality conditions as stated
  Strong,   // additionally a_i^{(j)} >= a_{i +- 1}^{(j+1)} for i = j mod 2
};

using ReductionChain = std::vector<std::vector<int>>;  // rows j = 0..l

std::vector<ReductionChain> enumerate_reduction_chains(int n, int a, ChainReading reading);
long count_reduction_chains(int n, int a, ChainReading reading);

/// delta_i^{(j)} = a_{i+j-1}^{(j-1)} - a_{i+j-2}^{(j)} for even i, 1 <= j <= l.
PartitionTuple chain_to_deltas(const ReductionChain& chain);
/// a_i^{(j)} = sum_{k=j+1}^{l} delta^{(k)}_{i+j+2-2k} for i = j mod 2; other entries copied
/// from the previous row, row 0 taking (a, 2a, ...).
ReductionChain deltas_to_chain(const PartitionTuple& pt, int n, int a, int length);

/// [y^a] of the diagonal of the odd-n product whose constant-in-q part gives p_a.
Integer odd_product_diagonal(int n, int a);
/// Same for the even-n product (intervals not starting at x_0 and not ending at x_n).
Integer even_product_diagonal(int n, int a);

struct GammaDecomposition {
  Partition gamma;                    // strictly decreasing
  std::vector<Partition> even_parts;  // delta_i - gamma*, all entries even
};

Partition conjugate(const Partition& p);
/// Throws std::invalid_argument if some level mixes parities.
GammaDecomposition gamma_decomposition(const PartitionTuple& pt);

CheckReport check_lemma_partitions(int max_n, int max_entry);
CheckReport check_ntuple_partitions(int n, int bound);
CheckReport check_chain_agreement(int n, int max_a);
CheckReport check_even_p_lowest_terms(int n, int max_a);
CheckReport check_gamma_roundtrip(int n, int max_entry, int max_len);
CheckReport check_chain_bijection(int n, int max_a);

}  // namespace mdslab
