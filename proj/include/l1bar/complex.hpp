#ifndef L1BAR_COMPLEX_HPP
#define L1BAR_COMPLEX_HPP

#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <vector>

#include <Eigen/Sparse>

#include "l1bar/chain.hpp"

namespace l1bar {

class TooLargeError : public std::runtime_error
{
    public:
        explicit TooLargeError(const std::string& what) : std::runtime_error(what) {}
};

/// Default cap on basis tuples, overridable through L1BAR_SIZE_CAP.
inline constexpr std::size_t kDefaultSizeCap = 100'000;
std::size_t size_cap_from_env();

/// Matrix of the bar boundary in degree k over a finite group, with bases
/// ordered lexicographically in element indices.
struct BoundaryMatrix
{
    int degree = 0;
    std::vector<Tuple> source;   // k-tuples (columns)
    std::vector<Tuple> target;   // (k-1)-tuples (rows)
    Eigen::SparseMatrix<int> matrix;

    MatrixX<Integer> dense() const;
    /// Column l1-norms.
    std::vector<int> column_norms() const;
    /// `row col value` lines, zero-based.
    void write_triplets(std::ostream& os) const;
};

BoundaryMatrix boundary_matrix(const GroupPtr& g, int k, std::size_t cap = kDefaultSizeCap);

/// Exact rank of the degree-k boundary; 0 for k = 0.
std::size_t boundary_rank(const GroupPtr& g, int k, std::size_t cap = kDefaultSizeCap);

/// Rational Betti number dim ker d_k - rank d_{k+1}; TooLargeError when
/// |G|^(k+1) exceeds `cap`.
std::size_t betti(const GroupPtr& g, int k, std::size_t cap = kDefaultSizeCap);

/// Coordinates of `c` in a basis of tuples.
VectorXr coordinates(const Chain& c, const std::vector<Tuple>& basis);
Chain chain_from_coordinates(const GroupPtr& g, int degree, const std::vector<Tuple>& basis,
                             const VectorXr& x);

}   // namespace l1bar

#endif
