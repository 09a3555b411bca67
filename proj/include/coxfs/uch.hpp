#pragma once

#include "coxfs/chartab.hpp"
#include "coxfs/classalg.hpp"
#include "coxfs/coxgroup.hpp"
#include "coxfs/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace coxfs {

/// One element of Uch(W).
struct UnipotentChar {
    std::string label;
    /// Family parameter, e.g. "(0,1)", "(1,2)", "(s,1)"; empty for singletons and classical types.
    std::string param;
    /// Index into the character table, -1 for formal members.
    int irr = -1;
    RatPoly fake_degree;
    std::optional<CycloPoly> degree;
    Cyclo eig{1};
    int family = -1;
    bool special = false;
};

struct UchFamily {
    std::vector<int> members;
    int special = -1;
    /// "1", "Z2^k", "S2", "dihedral(5)", "dihedral(m)", "H4-74"
    std::string gamma;
    int gamma_rank = 0;
    bool exceptional = false;
    /// Classical types only list Irr members; the family itself has 4^k elements.
    int full_size = 0;
};

struct UchSet {
    CoxeterType type;
    std::vector<UnipotentChar> members;
    std::vector<UchFamily> families;

    std::size_t size() const { return members.size(); }
    /// Throws InvalidInput for unknown labels.
    int index(const std::string& label) const;
};

/// Full Uch(I2(m)) with fake degrees, degrees and eigenvalues; Irr members carry table labels.
UchSet build_uch_i2(int m, const CharacterTable& table);
/// The 16 members of Uch(H3).
UchSet build_uch_h3(const CharacterTable& table);
/// Irr(W) of a classical type, grouped into families by symbols. Formal members are not listed.
UchSet classical_families(const CharacterTable& table);
/// Dispatch on the table's type; H4 is not supported.
UchSet build_uch(const CharacterTable& table);

/// Formal complex conjugation. Dihedral members (i,j), i > 0, go to (i,m-j); elsewhere members
/// of a family are paired by inverse eigenvalues and equal degrees.
std::vector<int> delta_involution(const UchSet& u);
/// N_Phi = (1/Phi(1)) sum over reflections r of Phi(r); 0 for formal members.
std::vector<Rational> n_phi(const CoxeterGroup& g, const UchSet& u, const CharacterTable& t);
/// j(Phi) has fake degree x^{N - N_Phi} FakeDeg(Phi)(1/x); throws CheckFailed when no member of
/// the family matches.
std::vector<int> j_involution(const CoxeterGroup& g, const UchSet& u, const CharacterTable& t);
bool is_palindromic(const RatPoly& p);

/// A small group Gamma together with the set M(Gamma) of pairs (x, sigma), sigma an
/// irreducible character of the centralizer of x, up to simultaneous conjugation.
struct MGamma {
    struct Element {
        std::size_t x;     ///< class representative in gamma
        int centralizer;   ///< index into centralizers
        ClassFunction sigma;
        std::string label;
        Cyclo t;           ///< sigma(x) / sigma(1)
    };
    std::string name;
    PermGroup gamma;
    std::vector<PermGroup> centralizers; ///< one per class of gamma, in class order
    std::vector<Element> elems;

    /// sigma(h) for h in the centralizer of elems[e].x.
    Cyclo value(int e, std::size_t h) const;
};

/// (Z/2)^k for k <= 4.
MGamma mgamma_z2(int k);
/// S_n for n <= 5.
MGamma mgamma_sym(int n);

} // namespace coxfs
