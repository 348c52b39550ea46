#ifndef L1BAR_RATIONAL_HPP
#define L1BAR_RATIONAL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

namespace l1bar {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

template <class Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatrixXr = MatrixX<Rational>;
using VectorXr = VectorX<Rational>;

class ParseError : public std::runtime_error
{
    public:
        explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Renders `p/q`, or `p` when the denominator is one. Never decimal.
std::string to_string(const Rational& r);

/// Accepts `p`, `-p`, `p/q`, `-p/q` with decimal integers; q must be nonzero.
Rational parse_rational(std::string_view text);

Integer binomial(int n, int k);

inline Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

}   // namespace l1bar

#endif
