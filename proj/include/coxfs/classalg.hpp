#pragma once

#include "coxfs/coxgroup.hpp"
#include "coxfs/cyclotomic.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace coxfs {

/// Values of a class function, one per conjugacy class.
using ClassFunction = std::vector<Cyclo>;

/// Class data of a finite group: sizes, element orders, power maps and the structure
/// constants a(i,j,k) = #{(x,y) in C_i x C_j : xy = g_k} for a fixed g_k in C_k.
struct ClassAlgebra {
    std::size_t order = 0;
    std::vector<std::size_t> class_size;
    std::vector<int> elem_order;
    std::vector<int> inverse;
    /// power[c][e] is the class of g_c^e for 0 <= e < elem_order[c].
    std::vector<std::vector<int>> power;
    std::vector<long> structure;

    int num_classes() const { return static_cast<int>(class_size.size()); }
    long a(int i, int j, int k) const
    {
        std::size_t r = class_size.size();
        return structure[(static_cast<std::size_t>(i) * r + j) * r + k];
    }
};

ClassAlgebra class_algebra(const CoxeterGroup& g);

/// All irreducible characters, computed by splitting the class algebra over a prime field
/// and lifting eigenvalue multiplicities. Sorted by degree, then by values.
std::vector<ClassFunction> dixon_characters(const ClassAlgebra& ca);

/// A small permutation group, enumerated in full.
class PermGroup {
public:
    static PermGroup generate(const std::vector<Perm>& gens, std::size_t degree);

    std::size_t size() const { return elems_.size(); }
    std::size_t degree() const { return degree_; }
    const Perm& element(std::size_t i) const { return elems_[i]; }
    std::size_t index(const Perm& p) const;
    /// (a*b)(x) = a(b(x)).
    std::size_t multiply(std::size_t a, std::size_t b) const;
    std::size_t inverse(std::size_t a) const { return inv_[a]; }
    int order(std::size_t a) const;
    std::size_t power(std::size_t a, long k) const;

    int num_classes() const { return static_cast<int>(reps_.size()); }
    int class_of(std::size_t a) const { return class_[a]; }
    std::size_t class_rep(int c) const { return reps_[c]; }
    std::size_t class_size(int c) const { return sizes_[c]; }

    ClassAlgebra class_algebra() const;

private:
    std::size_t degree_ = 0;
    std::vector<Perm> elems_;
    std::map<Perm, std::size_t> index_;
    std::vector<std::size_t> inv_;
    std::vector<int> class_;
    std::vector<std::size_t> reps_, sizes_;
};

} // namespace coxfs
