#pragma once

#include "coxfs/cyclotomic.hpp"
#include "coxfs/matrix.hpp"
#include "coxfs/uch.hpp"

#include <optional>
#include <utility>
#include <string>
#include <vector>

namespace coxfs {

using CycloMatrix = Matrix<Cyclo>;

struct FourierMatrix {
    std::vector<std::string> index;
    CycloMatrix m;
};

/// Lusztig's pairing on M(Gamma), indexed in the order of g.elems.
FourierMatrix mgamma_matrix(const MGamma& g);
/// The dihedral matrix D_m on X' then X''; X' lists (0,j) first, then (i,j) with i > 0.
FourierMatrix dihedral_matrix(int m);

/// (X, x0, Delta, M, F).
struct FusionDatum {
    std::vector<std::string> labels;
    int x0 = 0;
    std::vector<int> delta;
    CycloMatrix m;
    std::vector<Cyclo> f;
};

struct FusionReport {
    bool commutability = false;
    bool positivity = false;
    bool modularity = false;
    bool integrality = false;
    std::string witness;
    bool ok() const { return commutability && positivity && modularity && integrality; }
};

/// Each axiom checked exactly; positivity uses the embedding E(N) = exp(2 pi i / N).
FusionReport verify_fusion_datum(const FusionDatum& fd);

FusionDatum mgamma_datum(const MGamma& g);
/// D_m with F = diag(Eig) and Delta : (i,j) -> (i,m-j).
FusionDatum dihedral_datum(int m);
/// M_{S2} with F = diag(1,1,i,-i) and Delta swapping the last two points.
FusionDatum exceptional_datum();
/// The datum of one family of Uch(W), built from the assembled matrix.
FusionDatum family_datum(const UchSet& u, const CycloMatrix& m, int family);

/// Optional data for the 74-element family of H4.
struct H4Family {
    std::vector<std::string> labels;
    CycloMatrix m;
    std::vector<Cyclo> eig;
    /// Lowest term c x^e of Deg per member, when the file carries "degree_lowest".
    std::vector<std::optional<std::pair<Rational, int>>> deg_low;
    std::string provenance;
};
/// Reads {labels, fourier_matrix, eigenvalues, provenance} plus optional degree_lowest;
/// throws InvalidInput on schema errors and CheckFailed if M is not symmetric with M^2 = 1.
H4Family load_h4_family(const std::string& path);
/// One-family UchSet for the ingested data; members whose label names an irreducible character
/// of H4 are Irr members, the one with smallest b-value is special.
UchSet h4_family_uch(const H4Family& f, const CharacterTable& table);

/// Block-diagonal matrix over Uch(W): 1x1 identities, D_m, D_5 or M_{S2}, and M_{(Z/2)^k} for
/// classical families (which then act on the 4^k-element family, see expand_classical).
CycloMatrix assemble_fourier(const UchSet& u);

/// Classical families listed only by Irr members are expanded to M((Z/2)^k), with the special
/// member at (1,1) and the rest of the family formal. Other types are returned unchanged.
UchSet expand_classical(const UchSet& u);

struct EpsilonResult {
    std::vector<std::vector<int>> solutions;  ///< every admissible epsilon
    std::vector<Cyclo> m_eps;                 ///< M * epsilon for the first solution
    /// False when some family exceeded the search cap and only the candidate was tested.
    bool exhaustive = true;
    bool unique() const { return exhaustive && solutions.size() == 1; }
};

/// All epsilon : Uch -> {-1,0,1} with epsilon = 0 exactly at non-real eigenvalues and
/// (M epsilon)(Phi) = mult(Phi) at every special Phi. `mult` is indexed like u.members.
/// Each family is searched exhaustively over signs. A family with more than `max_free`
/// real-eigenvalue members is only tested against `candidate` (indexed like u.members);
/// without a candidate that throws InvalidInput.
EpsilonResult solve_epsilon(const UchSet& u, const CycloMatrix& m, const std::vector<long>& mult, int max_free = 22,
                            const std::vector<int>* candidate = nullptr);

/// M epsilon restricted to Irr equals mult, and M epsilon is a nonnegative integer everywhere.
bool verify_all_note(const UchSet& u, const CycloMatrix& m, const std::vector<int>& eps, const std::vector<long>& mult,
                     std::string* witness = nullptr);

/// M * FakeDeg = Deg with j the identity; requires degrees on every member.
bool verify_p1(const UchSet& u, const CycloMatrix& m);

/// Multiplicity of every member of Uch(W) in chi_W (0 for formal members).
std::vector<long> uch_multiplicities(const UchSet& u, const std::vector<long>& irr_mult);

} // namespace coxfs
