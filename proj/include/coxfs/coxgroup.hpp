#pragma once

#include "coxfs/cyclotomic.hpp"
#include "coxfs/golden.hpp"
#include "coxfs/matrix.hpp"
#include "coxfs/poly.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

namespace coxfs {

enum class Family { A, BC, D, I2, H3, H4 };

struct CoxeterType {
    Family family = Family::A;
    int n = 1; ///< rank for A, BC, D; the parameter m for I2; 3 or 4 for H

    /// "A4", "BC3" (also "B3", "C3"), "D4", "I2(7)", "I2_7", "H3", "H4". A bare "I2"
    /// takes its parameter from `m`.
    static CoxeterType parse(std::string_view text, std::optional<int> m = std::nullopt);
    static CoxeterType A(int n) { return {Family::A, n}; }
    static CoxeterType BC(int n) { return {Family::BC, n}; }
    static CoxeterType D(int n) { return {Family::D, n}; }
    static CoxeterType I2(int m) { return {Family::I2, m}; }
    static CoxeterType H3() { return {Family::H3, 3}; }
    static CoxeterType H4() { return {Family::H4, 4}; }

    std::string name() const;
    int rank() const;
    std::vector<int> degrees() const;
    bool classical() const { return family == Family::A || family == Family::BC || family == Family::D; }
    friend bool operator==(const CoxeterType&, const CoxeterType&) = default;
};

using ElementId = std::uint32_t;
using Perm = std::vector<std::uint16_t>;

/// Signed permutation of {1..n}: e_i maps to sign(image[i]) * e_{|image[i]|}.
struct SignedPerm {
    std::vector<int> image;
    friend bool operator==(const SignedPerm&, const SignedPerm&) = default;
};

/// (rs)^rotation, followed by r when reflection is set.
struct DihedralElem {
    long rotation = 0;
    bool reflection = false;
};

using Element = std::variant<std::vector<int>, SignedPerm, DihedralElem, Matrix<GoldenRational>>;

/// Group-order bound, COXFS_MAX_ORDER if set, else 20000.
std::size_t default_max_order();

/// A finite Coxeter group enumerated by breadth-first search. Elements are dense ids
/// ordered by length and then by lexicographically smallest reduced word; id 0 is 1.
class CoxeterGroup {
public:
    static CoxeterGroup build(const CoxeterType& type, std::size_t max_order = default_max_order());

    const CoxeterType& type() const { return type_; }
    std::size_t size() const { return length_.size(); }
    int rank() const { return rank_; }
    int coxeter_m(int s, int t) const { return cox_[s][t]; }
    std::string generator_name(int s) const;
    std::vector<int> degrees() const { return type_.degrees(); }
    int num_reflections() const;

    ElementId identity() const { return 0; }
    int length(ElementId w) const { return length_[w]; }
    const std::vector<int>& word(ElementId w) const { return word_[w]; }
    std::string word_string(ElementId w) const;
    ElementId rmul(ElementId w, int s) const { return rmul_[w * rank_ + s]; }
    ElementId lmul(int s, ElementId w) const { return lmul_[w * rank_ + s]; }
    ElementId multiply(ElementId a, ElementId b) const;
    ElementId inverse(ElementId w) const { return inv_[w]; }
    ElementId power(ElementId w, long k) const;
    int order(ElementId w) const;
    ElementId from_word(const std::vector<int>& word) const;
    /// Generator names separated by spaces or, when every name is one letter, juxtaposed.
    ElementId from_word_string(std::string_view text) const;
    std::optional<ElementId> from_points(const Perm& p) const;
    const Perm& points(ElementId w) const { return pts_[w]; }

    /// Bit s set when l(ws) < l(w).
    unsigned right_descents(ElementId w) const;
    /// Bit s set when l(sw) < l(w).
    unsigned left_descents(ElementId w) const;
    bool is_involution(ElementId w) const { return inv_[w] == w; }
    ElementId longest() const { return static_cast<ElementId>(size() - 1); }
    std::vector<ElementId> reflections() const;
    std::vector<ElementId> involutions() const;

    int num_classes() const { return static_cast<int>(class_reps_.size()); }
    int class_of(ElementId w) const { return class_[w]; }
    ElementId class_rep(int c) const { return class_reps_[c]; }
    std::size_t class_size(int c) const { return class_elems_[c].size(); }
    const std::vector<ElementId>& class_elements(int c) const { return class_elems_[c]; }
    std::size_t centralizer_order(int c) const { return size() / class_size(c); }
    int power_class(int c, long k) const { return class_[power(class_reps_[c], k)]; }
    int inverse_class(int c) const { return class_[inv_[class_reps_[c]]]; }
    int class_order(int c) const { return order(class_reps_[c]); }

    Element element(ElementId w) const;
    /// Matrix of w in a fixed basis of the reflection representation.
    Matrix<Cyclo> geometric_matrix(ElementId w) const;
    /// Dimension of the -1 eigenspace of w in the reflection representation.
    int neg_eigen_dim(ElementId w) const;
    /// det(1 - x w) in the reflection representation.
    CycloPoly det_one_minus_xw(ElementId w) const;

    /// Cycle lengths of w on the coordinates for A, BC and D, each flagged when the cycle
    /// carries an odd number of sign changes. Sorted by decreasing length, positive first.
    std::vector<std::pair<int, bool>> signed_cycle_type(ElementId w) const;

    /// Parity of the number of occurrences of s in the reduced word of w.
    int generator_parity(ElementId w, int s) const;

private:
    void enumerate(const std::vector<Perm>& gens, std::size_t max_order);
    void compute_classes();
    std::size_t find(const Perm& p) const;

    CoxeterType type_;
    int rank_ = 0;
    std::vector<std::vector<int>> cox_;
    std::vector<std::string> gen_names_;
    std::vector<Perm> pts_;
    std::unordered_map<std::string, ElementId> index_;
    std::vector<int> length_;
    std::vector<std::vector<int>> word_;
    std::vector<ElementId> rmul_, lmul_, inv_;
    std::vector<int> class_;
    std::vector<ElementId> class_reps_;
    std::vector<std::vector<ElementId>> class_elems_;
    // root data for I2 and H types: coordinates of every root in the simple-root basis
    std::vector<std::vector<Cyclo>> roots_;
    std::vector<std::vector<GoldenRational>> golden_roots_;
};

} // namespace coxfs
