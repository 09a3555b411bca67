#pragma once

#include "coxfs/rational.hpp"

#include <string>
#include <vector>

namespace coxfs {

/// Weakly decreasing positive parts.
using Partition = std::vector<int>;

struct Bipartition {
    Partition alpha;
    Partition beta;
    friend bool operator==(const Bipartition&, const Bipartition&) = default;
    friend auto operator<=>(const Bipartition&, const Bipartition&) = default;
};

/// Partitions of n in reverse lexicographic order, starting with (n).
std::vector<Partition> partitions(int n);
/// Ordered pairs (alpha, beta) with |alpha| + |beta| = n, by |alpha| descending.
std::vector<Bipartition> bipartitions(int n);

int size(const Partition& p);
/// alpha_i with 1-based i, zero past the last part.
int part(const Partition& p, int i);
Partition transpose(const Partition& p);
Partition intersect(const Partition& a, const Partition& b);
/// alpha is contained in beta as Young diagrams.
bool contained(const Partition& alpha, const Partition& beta);
/// Number of columns of odd length.
int odd_columns(const Partition& p);
std::string to_string(const Partition& p);
std::string to_string(const Bipartition& b);

/// #{(i,j) : i = alpha'_j and j = beta_i}.
int d_stat(const Partition& alpha, const Partition& beta);
/// #{i : alpha_{i+1} < beta_i <= alpha_i}.
int d_stat_rows(const Partition& alpha, const Partition& beta);
/// Connected components of the skew diagram beta \ alpha (edge adjacency); alpha inside beta.
int skew_components(const Partition& alpha, const Partition& beta);
/// #{i : alpha_i != beta_i}.
int f_stat(const Partition& alpha, const Partition& beta);
bool skew_has_2x2(const Partition& alpha, const Partition& beta);

/// Special characters of BC_n: beta_i <= alpha_i + 1 and alpha'_i <= beta'_i + 1.
bool special_bc(const Partition& alpha, const Partition& beta);
/// Same property through the interleaving of the symbol rows.
bool special_bc_symbol(const Partition& alpha, const Partition& beta);
/// Special characters chi^{alpha,beta} of D_n (alpha != beta): one strictly contains the
/// other and the skew diagram has no 2x2 square.
bool special_d(const Partition& alpha, const Partition& beta);
bool special_d_symbol(const Partition& alpha, const Partition& beta);
/// alpha_i <= beta_i and beta_{i+1} <= alpha_i + 1, or the same with the roles swapped.
bool special_d_rows(const Partition& alpha, const Partition& beta);

/// Two-row symbol; rows are increasing.
struct Symbol {
    std::vector<int> top;
    std::vector<int> bottom;
};

/// BC symbol with rows of length m + 1 and m.
Symbol symbol_bc(const Partition& alpha, const Partition& beta, int m);
/// D symbol with two rows of length m.
Symbol symbol_d(const Partition& alpha, const Partition& beta, int m);
/// Sorted multiset of all entries.
std::vector<int> symbol_entries(const Symbol& s);
/// Entries that occur exactly once.
int symbol_singles(const Symbol& s);
/// Number of bottom-row entries missing from the top row.
int symbol_bottom_only(const Symbol& s);

enum class SymbolKind { BC, D };

/// k with Gamma = (Z/2)^k for a family whose symbols have `singles` unrepeated entries.
int family_gamma_rank(SymbolKind kind, int singles);
/// Number of irreducible characters in such a family.
long family_irr_count(SymbolKind kind, int singles);

/// |M(S_n)| for n = 0..max via the Euler transform of sigma(k).
std::vector<BigInt> mgamma_sn_euler(int max);
/// |M(S_n)| by listing partitions of n whose parts of size k carry one of sigma(k) labels.
BigInt mgamma_sn_labeled(int n);

} // namespace coxfs
