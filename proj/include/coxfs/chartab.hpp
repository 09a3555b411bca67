#pragma once

#include "coxfs/classalg.hpp"
#include "coxfs/combinat.hpp"
#include "coxfs/coxgroup.hpp"
#include "coxfs/poly.hpp"

#include <string>
#include <vector>

namespace coxfs {

/// Irreducible characters of a Coxeter group with their labels and fake degrees.
///
/// Labels: "(2,1)" in type A; "((1),(1))" in BC; "{(2),(1)}" and "{(1)},1" / "{(1)},2" in D;
/// "phi1,0", "phi2,k", "phi'1,m/2", "phi''1,m/2" in I2; "phi4,3", "phi30,10,12" in H3/H4.
struct CharacterTable {
    CoxeterType type;
    std::vector<std::string> labels;
    std::vector<ClassFunction> chars;
    std::vector<RatPoly> fake_degrees;
    /// Classical types: the indexing (bi)partition; beta is empty in type A.
    std::vector<Partition> alpha, beta;
    /// Type D: 0 for chi^{alpha,beta}, 1 or 2 for the split characters.
    std::vector<int> split;

    std::size_t size() const { return chars.size(); }
    /// Throws InvalidInput for unknown labels.
    int index(const std::string& label) const;
    long degree(int i) const;
    /// Lowest exponent of the fake degree.
    int b_value(int i) const { return fake_degrees[i].valuation(); }
};

/// Full table. Type A by Murnaghan-Nakayama, BC by induction, D by restriction plus
/// class-algebra splitting, I2 by closed forms, H3/H4 by class-algebra splitting.
CharacterTable char_table(const CoxeterGroup& g);

/// chi^lambda(mu) for the symmetric group.
long mn_character(const Partition& lambda, const Partition& mu);
/// chi^{(alpha,beta)} on the class with positive cycle lengths `pos` and negative cycle lengths `neg`.
long bc_character(const Partition& alpha, const Partition& beta, const Partition& pos, const Partition& neg);

ClassFunction trivial_character(const CoxeterGroup& g);
ClassFunction sign_character(const CoxeterGroup& g);
ClassFunction regular_character(const CoxeterGroup& g);

/// (1/|W|) sum_w f(w) conj(h(w)).
Cyclo inner_product(const CoxeterGroup& g, const ClassFunction& f, const ClassFunction& h);
/// Multiplicities of the irreducibles in f; throws CheckFailed if f is not a character.
std::vector<long> decompose(const CoxeterGroup& g, const ClassFunction& f, const CharacterTable& t);
ClassFunction combine(const CharacterTable& t, const std::vector<long>& mult);

/// prod(1 - x^{d_i}) / det(1 - x w) for each class representative w.
std::vector<CycloPoly> fake_degree_kernels(const CoxeterGroup& g);
/// Graded multiplicity in the coinvariant algebra; throws CheckFailed unless in N[x].
RatPoly fake_degree(const CoxeterGroup& g, const ClassFunction& f, const std::vector<CycloPoly>& kernels);

/// Row and column orthogonality, sum of squared degrees.
bool check_orthogonality(const CoxeterGroup& g, const CharacterTable& t);

/// "phi<d>,<b>" plus ",<f>" for ties; f is the next exponent of the fake degree.
std::vector<std::string> phi_labels(const std::vector<long>& degrees, const std::vector<RatPoly>& fake);

} // namespace coxfs
