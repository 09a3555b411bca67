#pragma once

#include "coxfs/chartab.hpp"
#include "coxfs/coxgroup.hpp"
#include "coxfs/fourier.hpp"
#include "coxfs/uch.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace coxfs {

/// Integer polynomial, lowest coefficient first; empty means 0.
using IntPoly = std::vector<long long>;

class KLTable {
public:
    /// Throws OrderBoundExceeded when |W| > max_order.
    static KLTable compute(const CoxeterGroup& g, std::size_t max_order = 1200);

    const CoxeterGroup& group() const { return *g_; }
    std::size_t size() const { return n_; }
    /// Bruhat order, from the subword property on the stored reduced words.
    bool bruhat_leq(ElementId y, ElementId w) const { return below_[static_cast<std::size_t>(w) * n_ + y]; }
    const IntPoly& p(ElementId y, ElementId w) const { return p_[static_cast<std::size_t>(w) * n_ + y]; }
    /// Coefficient of x^{(l(w)-l(y)-1)/2} in P_{y,w} for y < w, else 0.
    long long mu(ElementId y, ElementId w) const;
    /// mu(y,w) or mu(w,y), whichever pair is ordered.
    long long mu_sym(ElementId y, ElementId w) const { return y == w ? 0 : mu(y, w) + mu(w, y); }
    /// All y < w with mu(y,w) != 0.
    const std::vector<std::pair<ElementId, long long>>& mu_below(ElementId w) const { return mu_below_[w]; }

    /// P_{w,w} = 1, zero off the Bruhat interval, degree bound, nonnegative coefficients.
    bool sanity(std::string* witness = nullptr) const;

private:
    const CoxeterGroup* g_ = nullptr;
    std::size_t n_ = 0;
    std::vector<bool> below_;
    std::vector<IntPoly> p_;
    std::vector<std::vector<std::pair<ElementId, long long>>> mu_below_;
};

/// Equivalence classes of ~_L, each sorted, ordered by smallest element.
std::vector<std::vector<ElementId>> left_cells(const KLTable& kl);

using IntMatrix = std::vector<std::vector<long long>>;
/// rho_Gamma(s) on the basis c_w, w in `cell` order, one matrix per generator.
std::vector<IntMatrix> cell_matrices(const KLTable& kl, const std::vector<ElementId>& cell);
/// s^2 = 1 and the braid relations (st)^m = 1.
bool cell_relations_hold(const CoxeterGroup& g, const std::vector<IntMatrix>& mats);
/// Character of rho_Gamma; throws CheckFailed if the matrices fail the relations.
ClassFunction cell_character(const KLTable& kl, const std::vector<ElementId>& cell);

struct CellData {
    std::string name;
    std::vector<ElementId> elements;
    ClassFunction character;
    std::vector<long> mult;
};

/// All left cells with characters and multiplicities. I2 and H3 cells get their usual names
/// (X, X*, Y, Y* and I_i, J_i, J_i*, K_i, K_i*, L, L*); other types are numbered.
std::vector<CellData> compute_cells(const KLTable& kl, const CharacterTable& t);

/// The named subsets of H3 built from right descent sets, in the order I1..I4, J1..J5,
/// J1*..J5*, K1..K3, K1*..K3*, L, L*.
std::vector<std::pair<std::string, std::vector<ElementId>>> h3_named_sets(const CoxeterGroup& g);

/// Sum of cell characters is the regular character; w0 Gamma and Gamma w0 are cells with
/// character chi_Gamma * sgn; {1} is a cell with the trivial character.
bool cell_census_check(const CoxeterGroup& g, const std::vector<CellData>& cells, std::string* witness = nullptr);

struct KottwitzReport {
    std::vector<std::string> sigma_labels;
    /// inner[c][k] = <chi_{W,sigma_k}, chi_Gamma_c>, count[c][k] = |Sigma_k cap Gamma_c|.
    std::vector<std::vector<long>> inner, count;
    bool ok = true;
    std::string witness;
};
KottwitzReport kottwitz_check(const CoxeterGroup& g, const std::vector<CellData>& cells);

/// <chi_W, chi_Gamma> = #involutions in Gamma.
bool weak_kottwitz_check(const CoxeterGroup& g, const std::vector<CellData>& cells, std::string* witness = nullptr);
/// <chi_Gamma, chi_Gamma'> = |Gamma cap Gamma'^{-1}| for all pairs, and chi_Gamma is
/// multiplicity-free exactly when Gamma cap Gamma^{-1} consists of involutions.
bool cell_pair_check(const CoxeterGroup& g, const std::vector<CellData>& cells, std::string* witness = nullptr);

/// M v = v for the multiplicity vector of every cell, extended by zeros off Irr.
bool verify_p3(const UchSet& u, const CycloMatrix& m, const std::vector<CellData>& cells, std::string* witness = nullptr);

/// One row of the H4 left cell table.
struct H4CellRow {
    std::string name;
    int count = 0;
    int size = 0;
    std::map<std::string, long> character;
    std::map<std::string, long> involutions; ///< keyed by involution name: 1, a, ac, (abc)^5, (abcd)^15
};
std::vector<H4CellRow> load_h4_cell_table(const std::string& path);
/// Checks the table against the group: sizes are character degrees, the rows add up to |W| and
/// to the regular character, the involution counts fill every involution class, and every
/// count equals <chi_{W,sigma}, chi_Gamma>.
bool verify_h4_cell_table(const CoxeterGroup& g, const CharacterTable& t, const std::vector<H4CellRow>& rows,
                          std::string* witness = nullptr);

} // namespace coxfs
