#pragma once

#include "wsd/canon_ops.hpp"
#include "wsd/span.hpp"

namespace wsd {

// Multiplicity table of the rotation action: degree -> (weight -> dim).
struct IsotypicalTable {
    std::map<int, std::map<int, int>> mult;
    bool operator==(const IsotypicalTable& o) const { return mult == o.mult; }
    std::string str() const;
};

// w_S ^ wbar_T over all subsets S, T of {0,1,2}: 64 eigenvectors of J
// with eigenvalue i*(|T| - |S|).
struct WMonomial {
    Mask wset, wbarset;
    int degree, weight;
    Multivector value;
    std::string name;   // "w0^w1^wbar2", "1" for the empty product
};
const std::vector<WMonomial>& w_monomials();

// Computed by classifying the 64 w-monomials, not from a closed formula.
IsotypicalTable isotypical_table();

using Matrix6 = std::array<std::array<Gaussian, 6>, 6>;

Gaussian trace6(const Matrix6& m);
bool is_zero6(const Matrix6& m);
std::string matrix6_str(const Matrix6& m);
SparseVec vectorize6(const Matrix6& m);   // 36 coordinates, row-major

// The distinguished 6-dimensional invariant subspace: the weight -2i
// part in degrees 2 and 4, spanned by
//   b1 = w0^w1,  b2 = w0^w2,  b3 = w1^w2,
//   b4 = w0^w1^w2^wbar0,  b5 = w0^w1^w2^wbar1,  b6 = w0^w1^w2^wbar2.
// Orthogonal but not orthonormal: |b1..3|^2 = 4, |b4..6|^2 = 16.
class SubrepV {
public:
    SubrepV();

    int dim() const { return span_.dim(); }
    const std::array<Multivector, 6>& basis() const { return basis_; }
    std::array<mpq_class, 6> norms_squared() const;

    struct Coords {
        bool inside;                      // residual outside the span vanishes
        std::array<Gaussian, 6> coeffs;
        Multivector residual;
    };
    Coords coordinates(const Multivector& v) const;

private:
    std::array<Multivector, 6> basis_;
    ExactSpan span_;
};

// Matrix of op acting on V in the basis above (column h = image of b_{h+1}).
// Throws NotInvariant if some basis image escapes V.
Matrix6 restrict_to_v(const Operator& op, const SubrepV& v);

// Rank of {op|_V : op in ops}; with rank-nullity this also gives the
// kernel of the restriction map on a span.
int restricted_rank(const std::vector<Operator>& ops, const SubrepV& v);

} // namespace wsd
