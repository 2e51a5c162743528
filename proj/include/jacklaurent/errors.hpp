#ifndef JACKLAURENT_ERRORS_HPP
#define JACKLAURENT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace jacklaurent {

/// Division by the zero rational function.
struct DivisionByZeroError : std::domain_error {
    explicit DivisionByZeroError(const std::string& what) : std::domain_error(what) {}
};

/// Denominator vanishes at an evaluation/substitution point.
struct PoleError : std::domain_error {
    explicit PoleError(const std::string& what) : std::domain_error(what) {}
};

/// Operator applied outside its domain (negative index or w fed to a non-Laurent operator).
struct DomainError : std::domain_error {
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Eigenvalue collision E_top == E_nu on a solver ladder at special parameter values.
struct ResonanceError : std::runtime_error {
    explicit ResonanceError(const std::string& what) : std::runtime_error(what) {}
};

/// Operator matrix has a nonzero entry above the dominance order; implementation-bug sentinel.
struct TriangularityError : std::logic_error {
    explicit TriangularityError(const std::string& what) : std::logic_error(what) {}
};

/// A coefficient denominator vanishes identically in p0 at k = -1.
struct PoleAtMinusOne : std::runtime_error {
    explicit PoleAtMinusOne(const std::string& what) : std::runtime_error(what) {}
};

/// The k = -1 limit still depends on p0; theorem-violation sentinel.
struct ResidualP0Dependence : std::runtime_error {
    explicit ResidualP0Dependence(const std::string& what) : std::runtime_error(what) {}
};

/// Singular m-basis transition block; the monomial functions form a basis, so this is a bug sentinel.
struct SingularTransitionError : std::logic_error {
    explicit SingularTransitionError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace jacklaurent

#endif
