#pragma once

#include "coxfs/chartab.hpp"
#include "coxfs/coxgroup.hpp"
#include "coxfs/poly.hpp"
#include "coxfs/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace coxfs {

/// Sparse vector on the involution basis, keyed by basis position.
using SparseVec = std::map<int, Rational>;

/// The module Invol(W) with basis a_w (w^2 = 1) and the action rho_{W,k} of the generators.
class InvolutionModule {
public:
    struct Term {
        int index;
        Rational coeff;
    };

    InvolutionModule(const CoxeterGroup& g, const Rational& k);

    const CoxeterGroup& group() const { return *g_; }
    const Rational& k() const { return k_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<ElementId>& basis() const { return basis_; }
    /// Basis position of w, or -1 if w is not an involution.
    int index_of(ElementId w) const;

    /// rho(s) a_{basis[b]} as at most two terms.
    const std::vector<Term>& action(int s, int b) const { return act_[static_cast<std::size_t>(s) * dim() + b]; }
    /// Replace one column of rho(s); used for negative controls.
    void set_action(int s, int b, std::vector<Term> terms) { act_[static_cast<std::size_t>(s) * dim() + b] = std::move(terms); }

    SparseVec apply(int s, const SparseVec& v) const;
    /// rho(w) v for the reduced word of w (rightmost letter acts first).
    SparseVec apply_word(const std::vector<int>& word, SparseVec v) const;

private:
    const CoxeterGroup* g_;
    Rational k_;
    std::vector<ElementId> basis_;
    std::vector<int> pos_;
    std::vector<std::vector<Term>> act_;
};

struct RelationReport {
    bool ok = true;
    std::string witness; ///< first violated relation, empty when ok
};

/// s^2 = 1 and (st)^{m_st} = 1 for every generator pair, checked on every basis vector.
RelationReport verify_representation(const InvolutionModule& m);

/// Character of rho_{W,k} on each conjugacy class.
ClassFunction module_character(const InvolutionModule& m);
/// chi_{W,sigma}: the character of rho_W on the span of the class of sigma.
ClassFunction class_character(const CoxeterGroup& g, ElementId sigma);

/// Named representatives of the involution classes, one per class.
std::vector<std::pair<std::string, ElementId>> named_involutions(const CoxeterGroup& g);
/// sigma_m in type A; sigma_{k,l,m} in types BC and D.
ElementId sigma_m(const CoxeterGroup& g, int m);
ElementId sigma_klm(const CoxeterGroup& g, int k, int l, int m);
/// t_n sigma_{0,0,n/2} t_n in type D_n, n even.
ElementId sigma_prime(const CoxeterGroup& g);

/// n(w) of every basis element is weakly increasing along a block order, and every rho(s)
/// is block lower triangular with k-independent diagonal blocks.
bool check_block_triangular(const InvolutionModule& m, const InvolutionModule& m0);

/// The Hecke algebra action T_s on Invol(W) tensor Q[q]; returns ok when the quadratic and
/// braid relations hold as polynomial identities.
RelationReport hecke_relations_check(const CoxeterGroup& g);
/// T_s a_w at q = 1 equals rho_{W,2}(s) a_w for every s and w.
bool hecke_specializes_to_k2(const CoxeterGroup& g);

/// Closed-form multiplicity of an irreducible in chi_{W,sigma} for classical types.
/// sigma_label is "sigma_m" (A), "sigma_{k,l,m}" (BC, D) or "sigma'" (D).
long kottwitz_multiplicity(const CoxeterType& t, const std::string& sigma_label, const CharacterTable& table, int irr);

/// Every irreducible appears in chi_W exactly once.
bool is_gelfand_model(const std::vector<long>& chi_w_multiplicities);

} // namespace coxfs
