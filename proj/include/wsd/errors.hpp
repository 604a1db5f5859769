#pragma once

#include <stdexcept>
#include <string>

namespace wsd {

// Base of every error the library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroDenominator : Error {
    ZeroDenominator() : Error("zero denominator") {}
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

// The two independent constructions of the same operator disagree,
// i.e. a sign convention is broken somewhere upstream.
struct ConstructionMismatch : Error {
    explicit ConstructionMismatch(const std::string& what)
        : Error("construction mismatch: " + what) {}
};

struct ClosureNotReached : Error {
    int rounds;
    explicit ClosureNotReached(int r)
        : Error("bracket closure still growing after " + std::to_string(r) + " rounds"),
          rounds(r) {}
};

struct DependentSet : Error {
    explicit DependentSet(const std::string& witness)
        : Error("expected independent set has a dependency: " + witness) {}
};

// An operator did not preserve the subspace it was restricted to.
// basis_index says which basis vector escaped, residual is the part
// of its image outside the subspace.
struct NotInvariant : Error {
    int basis_index;
    std::string residual;
    NotInvariant(int index, const std::string& res)
        : Error("subspace not preserved: image of basis vector " + std::to_string(index) +
                " has residual " + res),
          basis_index(index), residual(res) {}
};

struct NotAnEigenvector : Error {
    int torus_index;
    std::string residual;
    NotAnEigenvector(int index, const std::string& res)
        : Error("not a simultaneous eigenvector: bracket with torus element " +
                std::to_string(index) + " leaves residual " + res),
          torus_index(index), residual(res) {}
};

// An operator whose nonzero entries do not all share one multidegree shift.
struct NotHomogeneous : Error {
    std::string witness;
    explicit NotHomogeneous(const std::string& w)
        : Error("operator is not multidegree-homogeneous: " + w), witness(w) {}
};

struct UnknownOperator : Error {
    explicit UnknownOperator(const std::string& name)
        : Error("unknown operator: " + name) {}
};

struct UnknownSuite : Error {
    explicit UnknownSuite(const std::string& name)
        : Error("unknown suite: " + name) {}
};

struct UnknownTable : Error {
    explicit UnknownTable(const std::string& name)
        : Error("unknown table: " + name) {}
};

} // namespace wsd
