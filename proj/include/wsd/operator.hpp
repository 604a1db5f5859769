#pragma once

#include <array>
#include <functional>
#include <map>
#include <string>

#include "wsd/exterior.hpp"

namespace wsd {

// A linear endomorphism of the 64-dimensional exterior algebra, stored
// column-sparse: column m is the image of the basis monomial m.  Entries
// are exact Gaussian rationals, so equality is equality.
class Operator {
public:
    Operator() = default;   // zero operator

    static Operator identity();
    static Operator from_columns(const std::function<Multivector(Mask)>& image);
    // phi |-> form ^ phi
    static Operator wedge_by(const Multivector& form);
    static Operator E(int bit);   // wedge by the generator
    static Operator I(int bit);   // contraction by the generator

    const Multivector& column(Mask m) const { return col_[m]; }
    Gaussian entry(Mask row, Mask col) const { return col_[col].coeff(row); }

    Multivector apply(const Multivector& v) const;

    Operator operator+(const Operator& o) const;
    Operator operator-(const Operator& o) const;
    Operator operator-() const;
    Operator operator*(const Operator& o) const;   // composition
    Operator scaled(const Gaussian& c) const;

    // Conjugate transpose in the orthonormal monomial basis.
    Operator adjoint() const;

    Gaussian trace() const;
    bool is_zero() const;
    int nonzeros() const;

    // "(row; col)=value, ..." for the first few entries; used in witnesses.
    std::string brief(int max_entries = 6) const;

    bool operator==(const Operator& o) const { return col_ == o.col_; }
    bool operator!=(const Operator& o) const { return !(*this == o); }

    // Row-major flattening: coordinate 64*row + col.  Used to put
    // operators into echelonized spans.
    std::map<int, Gaussian> vectorize() const;
    static Operator from_vector(const std::map<int, Gaussian>& v);

private:
    std::array<Multivector, kMaskCount> col_;
};

Operator bracket(const Operator& a, const Operator& b);   // ab - ba
Operator anticommutator(const Operator& a, const Operator& b);

} // namespace wsd
