#pragma once

#include "wsd/clifford.hpp"
#include "wsd/reptheory.hpp"

namespace wsd {

// H_j = [L_j, Lam_j]
Operator build_H(const Registry& r, int j);
// S_j = i [[[V_j, Lam_{j+1}], Lam_{j+2}], L_j]  (indices mod 3)
Operator build_S(const Registry& r, int j);

// span{H_0, H_1, H_2, S_0, S_1, S_2}; five-dimensional since the S_j sum
// to zero.
OperatorSpan cartan_span(const Registry& r);

// Simultaneous ad-eigenvalue of op w.r.t. the given torus triple; the
// canonical family has integer eigenvalues.  Throws NotAnEigenvector.
std::array<int, 3> weight_of(const Operator& op, const std::array<Operator, 3>& torus);

// Pure-weight recombinations:
//   L_1j = -2 L_j + [S_j, L_j],    L_2j = 2 L_j + [S_j, L_j],
//   Lam_1j = -2 Lam_j - [S_j, Lam_j],  Lam_2j = 2 Lam_j - [S_j, Lam_j].
Operator build_Lij(const Registry& r, int i, int j);
Operator build_Lamij(const Registry& r, int i, int j);

// Chevalley-Serre generators (registry must hold the L_ij family):
//   e_1 = 1/4 [L20, A1],  e_2 = 1/4 [L22, A0],  e_3 = V0,
//   e_4 = 1/4 [L12, A0],  e_5 = 1/4 [L10, A1],
// f_i the mirror brackets (= e_i^*), h_i = [e_i, f_i].
struct SerreSystem {
    std::array<Operator, 5> e, f, h;
};
SerreSystem build_serre(const Registry& r);

struct RelationCheck {
    std::string name;
    bool pass;
    std::string witness;
};

// The defining relations of type A5 on (e, f, h): Cartan brackets,
// [e_i, f_j] = delta_ij h_i, and both Serre relations.
std::vector<RelationCheck> verify_serre_relations(const SerreSystem& s);

// Degree in each of the three column pairs.
std::array<int, 3> mdeg_of_monomial(Mask m);
// The common multidegree shift of all nonzero entries.
// Throws NotHomogeneous if the shifts disagree.
std::array<int, 3> op_mdeg(const Operator& op);
std::string mdeg_str(const std::array<int, 3>& d);

// The five families of span identities between the canonical operators
// and bracket monomials in the complexified generators.
std::vector<RelationCheck> match_quadratic_spans(const Registry& r);

// canonical_registry() extended with H_j, S_j, the L_ij / Lam_ij family
// and the Chevalley-Serre generators.
Registry full_registry();

} // namespace wsd
