#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "catmix/rational.hpp"

namespace catmix {

/**
 * Arrangement of n card labels on n positions. Positions and labels are
 * 1-based at the interface; storage is 0-based. label_at(x) is the label
 * sitting on position x, position_of(a) its inverse.
 */
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> labels);

    static Permutation identity(int n);
    /// x -> n+1-x, the minimal element of the height order.
    static Permutation reversal(int n);
    static Permutation parse(const std::string& text);

    int size() const { return static_cast<int>(lab_.size()); }
    int label_at(int pos) const { return lab_[pos - 1]; }
    int position_of(int label) const;

    Permutation inverse() const;
    /// (this o other)(x) = this(other(x))
    Permutation compose(const Permutation& other) const;

    void swap_positions(int x, int y);

    const std::vector<int>& labels() const { return lab_; }
    std::string to_string() const; // "[2,1,4,3]"

    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> lab_;
};

/**
 * Integer table C(x,y) = #{z <= x : sigma(z) <= y}, 0 <= x,y <= n.
 * The centered height of the permutation is C(x,y) - xy/n; since the
 * centering term is common, order comparisons reduce to integer
 * comparisons of C.
 */
class HeightTable {
public:
    explicit HeightTable(const Permutation& sigma);

    int n() const { return n_; }
    int count(int x, int y) const { return c_[x * (n_ + 1) + y]; }
    double centered(int x, int y) const { return count(x, y) - double(x) * y / n_; }
    Rational centered_exact(int x, int y) const {
        return Rational(count(x, y)) - Rational(std::int64_t(x) * y, n_);
    }

private:
    int n_ = 0;
    std::vector<int> c_;
};

/// Centered height sigma~(x,y) = #{z<=x : sigma(z)<=y} - xy/n. 1 <= x,y <= n.
double centered_height(const Permutation& sigma, int x, int y);
Rational centered_height_exact(const Permutation& sigma, int x, int y);

/// Height partial order: a <= b iff the centered height of a is pointwise
/// <= that of b. The identity is maximal, the reversal minimal.
bool order_leq(const Permutation& a, const Permutation& b);

/// Cutpoints x_i = floor(i*n/K), i = 0..K.
struct BlockPartition {
    int n = 0;
    int K = 0;
    std::vector<int> cut; // size K+1, cut[0]=0, cut[K]=n

    BlockPartition(int n, int K);
    int block_of_label(int label) const; // 1-based block index
    std::int64_t subgroup_size() const;  // prod of (block size)!
};

/// Column projection: rows x = 1..n, cutpoint columns j = 1..K.
std::vector<std::vector<double>> project_columns(const Permutation& sigma, const BlockPartition& part);
/// Grid projection: cutpoint rows and columns, i,j = 1..K.
std::vector<std::vector<double>> project_grid(const Permutation& sigma, const BlockPartition& part);

/// True iff sigma maps every block {x_{i-1}+1..x_i} onto itself as a set.
bool preserves_blocks(const Permutation& sigma, const BlockPartition& part);

/// All block-preserving permutations, in odometer order. Throws
/// capacity_error when the subgroup is too large to enumerate.
std::vector<Permutation> block_subgroup(const BlockPartition& part);

} // namespace catmix
