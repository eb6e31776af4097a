#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace poslab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

class NotCoprimeError : public std::invalid_argument {
public:
    explicit NotCoprimeError(const std::string& what) : std::invalid_argument(what) {}
};

class MalformedInputError : public std::invalid_argument {
public:
    explicit MalformedInputError(const std::string& what) : std::invalid_argument(what) {}
};

class RankError : public std::invalid_argument {
public:
    explicit RankError(const std::string& what) : std::invalid_argument(what) {}
};

class MoveNotApplicableError : public std::invalid_argument {
public:
    explicit MoveNotApplicableError(const std::string& what) : std::invalid_argument(what) {}
};

class NotOrientableError : public std::runtime_error {
public:
    explicit NotOrientableError(const std::string& what) : std::runtime_error(what) {}
};

class NotRationalDyckError : public std::runtime_error {
public:
    explicit NotRationalDyckError(const std::string& what) : std::runtime_error(what) {}
};

class UnboundedError : public std::runtime_error {
public:
    explicit UnboundedError(const std::string& what) : std::runtime_error(what) {}
};

Int binomial(int n, int k);

/// All k-subsets of {1,...,n} in colexicographic order.
std::vector<std::vector<int>> subsets_colex(int n, int k);

/// Colex comparison of two strictly increasing integer tuples of equal length.
bool colex_less(const std::vector<int>& a, const std::vector<int>& b);

} // namespace poslab
