#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "wsd/gaussian.hpp"

namespace wsd {

// Six generators v_ij, i in {1,2}, j in {0,1,2}, totally ordered
//   v10 < v20 < v11 < v21 < v12 < v22.
// A monomial is the wedge of a subset of generators in increasing order,
// encoded as a 6-bit mask; bit (2j + i - 1) stands for v_ij.
using Mask = unsigned;
inline constexpr int kGenerators = 6;
inline constexpr Mask kMaskCount = 64;

constexpr int generator_bit(int i, int j) { return 2 * j + (i - 1); }
constexpr int generator_i(int bit) { return (bit & 1) + 1; }
constexpr int generator_j(int bit) { return bit >> 1; }

std::string generator_name(int bit);   // "v10" ... "v22"
int parse_generator(const std::string& name);

int mask_degree(Mask m);

// "1" for the empty monomial, otherwise "v10^v20^..." in increasing order.
std::string monomial_str(Mask m);
Mask parse_monomial(const std::string& s);

// v_a1^...^v_ak (mask a) wedge v_b1^...^v_bl (mask b): zero if the masks
// share a generator, else +-1 times the union, the sign counting the
// transpositions needed to merge the two increasing sequences.
struct SignedMask {
    int sign;   // +1, -1, or 0
    Mask mask;
};
SignedMask wedge_masks(Mask a, Mask b);

// Contraction by the generator `bit`: zero if absent, else the sign is
// (-1)^k where k is the number of earlier generators in the monomial.
SignedMask contract_mask(int bit, Mask a);

// Sparse element of the 64-dimensional exterior algebra on the v_ij.
class Multivector {
public:
    Multivector() = default;

    static Multivector scalar(const Gaussian& c);
    static Multivector monomial(Mask m, const Gaussian& c = 1);

    const std::map<Mask, Gaussian>& terms() const { return c_; }
    Gaussian coeff(Mask m) const;
    bool is_zero() const { return c_.empty(); }

    // -1 for zero, the common degree for homogeneous elements, and the
    // top degree otherwise.
    int degree() const;
    bool is_homogeneous() const;

    void add_term(Mask m, const Gaussian& c);   // accumulate, dropping zeros

    Multivector operator+(const Multivector& o) const;
    Multivector operator-(const Multivector& o) const;
    Multivector operator-() const;
    Multivector& operator+=(const Multivector& o);
    Multivector scaled(const Gaussian& c) const;

    Multivector wedge(const Multivector& o) const;

    bool operator==(const Multivector& o) const { return c_ == o.c_; }
    bool operator!=(const Multivector& o) const { return !(*this == o); }

    // Terms in increasing mask order, joined with " + " (negative real
    // coefficients fold the sign into the term).
    std::string str() const;

private:
    std::map<Mask, Gaussian> c_;
};

std::ostream& operator<<(std::ostream& os, const Multivector& v);

// v_ij as a multivector
Multivector gen(int i, int j);

// E_ij = wedge by v_ij from the left; I_ij = contraction by v_ij.
Multivector apply_E(int bit, const Multivector& v);
Multivector apply_I(int bit, const Multivector& v);

// Hermitian inner product making the 64 monomials orthonormal,
// conjugate-linear in the first slot.
Gaussian inner(const Multivector& a, const Multivector& b);

} // namespace wsd
