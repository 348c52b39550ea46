#include "l1bar/complex.hpp"

#include <map>

#include "l1bar/cochain.hpp"
#include "l1bar/linalg.hpp"

namespace l1bar {

std::size_t size_cap_from_env()
{
    if (const char* v = std::getenv("L1BAR_SIZE_CAP"))
    {
        char* end = nullptr;
        unsigned long long n = std::strtoull(v, &end, 10);
        if (end && *end == '\0' && n > 0)
            return static_cast<std::size_t>(n);
    }
    return kDefaultSizeCap;
}

namespace {

std::size_t checked_power(std::size_t base, int k, std::size_t cap)
{
    std::size_t out = 1;
    for (int i = 0; i < k; ++i)
    {
        if (base != 0 && out > cap / base)
            throw TooLargeError("too large: |G|^" + std::to_string(k) + " = "
                                + std::to_string(base) + "^" + std::to_string(k)
                                + " basis tuples exceed the cap of " + std::to_string(cap));
        out *= base;
    }
    if (out > cap)
        throw TooLargeError("too large: " + std::to_string(out) + " basis tuples exceed the cap of "
                            + std::to_string(cap));
    return out;
}

std::map<Tuple, int> index_map(const std::vector<Tuple>& basis)
{
    std::map<Tuple, int> out;
    for (std::size_t i = 0; i < basis.size(); ++i)
        out.emplace(basis[i], static_cast<int>(i));
    return out;
}

}   // namespace

BoundaryMatrix boundary_matrix(const GroupPtr& g, int k, std::size_t cap)
{
    if (k < 1)
        throw std::invalid_argument("boundary matrix needs degree >= 1");
    checked_power(g->order(), k, cap);
    BoundaryMatrix m;
    m.degree = k;
    m.source = all_tuples(*g, k);
    m.target = all_tuples(*g, k - 1);
    auto rows = index_map(m.target);
    std::vector<Eigen::Triplet<int>> trips;
    for (std::size_t j = 0; j < m.source.size(); ++j)
    {
        Chain d = boundary(Chain::basis(g, m.source[j]));
        for (const auto& [t, c] : d.terms())
            trips.emplace_back(rows.at(t), static_cast<int>(j), static_cast<int>(c.convert_to<long>()));
    }
    m.matrix.resize(static_cast<Eigen::Index>(m.target.size()), static_cast<Eigen::Index>(m.source.size()));
    m.matrix.setFromTriplets(trips.begin(), trips.end());
    m.matrix.makeCompressed();
    return m;
}

MatrixX<Integer> BoundaryMatrix::dense() const
{
    MatrixX<Integer> out = MatrixX<Integer>::Zero(matrix.rows(), matrix.cols());
    for (int j = 0; j < matrix.outerSize(); ++j)
        for (Eigen::SparseMatrix<int>::InnerIterator it(matrix, j); it; ++it)
            out(it.row(), it.col()) = it.value();
    return out;
}

std::vector<int> BoundaryMatrix::column_norms() const
{
    std::vector<int> out(matrix.cols(), 0);
    for (int j = 0; j < matrix.outerSize(); ++j)
        for (Eigen::SparseMatrix<int>::InnerIterator it(matrix, j); it; ++it)
            out[j] += std::abs(it.value());
    return out;
}

void BoundaryMatrix::write_triplets(std::ostream& os) const
{
    for (int j = 0; j < matrix.outerSize(); ++j)
        for (Eigen::SparseMatrix<int>::InnerIterator it(matrix, j); it; ++it)
            os << it.row() << ' ' << it.col() << ' ' << it.value() << '\n';
}

std::size_t boundary_rank(const GroupPtr& g, int k, std::size_t cap)
{
    if (k == 0)
        return 0;
    auto m = boundary_matrix(g, k, cap);
    return static_cast<std::size_t>(rank_fraction_free(m.dense()));
}

std::size_t betti(const GroupPtr& g, int k, std::size_t cap)
{
    if (!g->is_finite())
        throw std::invalid_argument("betti numbers are computed for finite groups only");
    if (k < 0)
        throw std::invalid_argument("negative degree");
    checked_power(g->order(), k + 1, cap);
    std::size_t dim = checked_power(g->order(), k, cap);
    return dim - boundary_rank(g, k, cap) - boundary_rank(g, k + 1, cap);
}

VectorXr coordinates(const Chain& c, const std::vector<Tuple>& basis)
{
    VectorXr x = VectorXr::Zero(static_cast<Eigen::Index>(basis.size()));
    auto idx = index_map(basis);
    for (const auto& [t, v] : c.terms())
    {
        auto it = idx.find(t);
        if (it == idx.end())
            throw std::invalid_argument("chain term outside the given basis");
        x(it->second) = v;
    }
    return x;
}

Chain chain_from_coordinates(const GroupPtr& g, int degree, const std::vector<Tuple>& basis,
                             const VectorXr& x)
{
    Chain c(g, degree);
    for (std::size_t i = 0; i < basis.size(); ++i)
        c.add(basis[i], x(static_cast<Eigen::Index>(i)));
    return c;
}

}   // namespace l1bar
