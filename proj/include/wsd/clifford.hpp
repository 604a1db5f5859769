#pragma once

#include <optional>

#include "wsd/canon_ops.hpp"
#include "wsd/span.hpp"

namespace wsd {

inline constexpr int kQuadraticDim = 66;

// The quadratic slice of the Clifford action: the span of the 66
// antisymmetrized products (1/2)[g_a, g_b], a < b, of the twelve
// generator operators E10..E22, I10..I22.  Keeps a bookkeeping span so
// members can be re-expressed in the product basis exactly.
class QuadraticSpace {
public:
    QuadraticSpace();   // throws DependentSet if the 66 products were dependent

    const std::vector<std::string>& generator_names() const { return gen_names_; }
    const std::vector<Operator>& generators() const { return gens_; }
    const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
    const std::vector<std::string>& basis_names() const { return basis_names_; }
    const std::vector<Operator>& basis() const { return basis_; }
    int dim() const { return span_.dim(); }

    // Exact coordinates in the 66-product basis, or nullopt for
    // operators outside the space.
    std::optional<std::vector<Gaussian>> coordinates(const Operator& op) const;
    Operator from_coordinates(const std::vector<Gaussian>& x) const;

    // [B_a, B_b] in coordinates (a != b).
    const SparseVec& structure(int a, int b) const;
    // [x, y] for coordinate vectors.
    SparseVec bracket_coords(const SparseVec& x, const SparseVec& y) const;

private:
    void ensure_structure() const;

    std::vector<std::string> gen_names_;
    std::vector<Operator> gens_;
    std::vector<std::pair<int, int>> pairs_;
    std::vector<std::string> basis_names_;
    std::vector<Operator> basis_;
    ExactSpan span_;
    mutable std::vector<std::vector<SparseVec>> sc_;
};

// Shared immutable instance (construction is not free).
const QuadraticSpace& quadratic_space();

// Dimension of each ad(J) eigenvalue k*i on the quadratic space,
// computed as exact kernel ranks; only nonzero dimensions appear.
std::map<int, int> j_weight_split(const QuadraticSpace& q, const Operator& J);

// Basis of the ad(J) = k*i eigenspace as 66-coordinate vectors.
std::vector<std::vector<Gaussian>> j_weight_eigenbasis(const QuadraticSpace& q,
                                                       const Operator& J, int k);

// The 36 bracket monomials in the complexified generators that commute
// with J, in their canonical grouped order.
std::vector<std::pair<std::string, Operator>> j_invariant_quadratics();

// Lie closure computed inside the 66-dimensional coordinate space via
// precomputed structure constants, handed back as operators.  An
// independent route to the same subalgebra as span_closure().
OperatorSpan span_closure_quadratic(const QuadraticSpace& q,
                                    const std::vector<std::pair<std::string, Operator>>& generators,
                                    int max_rounds);

} // namespace wsd
