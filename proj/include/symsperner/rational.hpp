#pragma once

// Exact scalar and dense types shared by every module.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace symsperner {

// Expression templates are disabled so that Eigen sees plain value types.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using RationalVector = VectorX<Rational>;
using RationalMatrix = MatrixX<Rational>;

/// "p/q", or "p" when q = 1.
std::string to_string(const Rational& value);

/// Parses "p/q" or "p" (optional leading '-'); throws ArgumentError otherwise.
Rational parse_rational(std::string_view text);

/// Sign of a rational as -1, 0 or +1.
inline int sign(const Rational& value) { return value.sign(); }

/// Hash of an exact coordinate vector, consistent with exact equality.
struct RationalVectorHash {
    std::size_t operator()(const RationalVector& v) const noexcept;
};
struct RationalVectorEqual {
    bool operator()(const RationalVector& a, const RationalVector& b) const noexcept {
        return a.size() == b.size() && a == b;
    }
};

}  // namespace symsperner
