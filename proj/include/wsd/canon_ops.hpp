#pragma once

#include <array>
#include <vector>

#include "wsd/operator.hpp"

namespace wsd {

// The three symplectic-type 2-forms at the point.  In the fixed generator
// order (v10 v20 v11 v21 v12 v22):
//   omega_1 = v10^v11 + v20^v21
//   omega_2 = v10^v12 + v20^v22
//   omega_D = v11^v12 + v21^v22
Multivector omega1();
Multivector omega2();
Multivector omegaD();

// w_j = v1j + i v2j and its conjugate; the degree-(1,0)/(0,1) frames.
Multivector w_form(int j);
Multivector wbar_form(int j);

// v1j ^ v2j, the j-th volume factor.
Multivector column_volume(int j);

// Lefschetz-type wedge operators: L_0 = omega_D^, L_1 = -omega_2^, L_2 = omega_1^.
Operator build_L(int j);
// V_j = E_1j E_2j, wedge by the j-th volume factor.
Operator build_V(int j);
// Lambda_j = L_j^*, A_j = V_j^*.
Operator build_Lambda(int j);
Operator build_A(int j);

// The canonical almost-complex rotation, built two independent ways:
// as the derivation with J(v1j) = v2j, J(v2j) = -v1j, and as
// sum_j (E_2j I_1j - E_1j I_2j).  Throws ConstructionMismatch if the
// two disagree.
Operator build_J();

// Complexified generator operators
//   E_wj = E_1j + i E_2j,  E_wbarj = E_1j - i E_2j,
//   I_wj = I_1j - i I_2j,  I_wbarj = I_1j + i I_2j,
// the ad(J) eigenvectors among degree-(+-1) generators.
struct WOps {
    Operator Ew, Ewbar, Iw, Iwbar;
};
WOps build_w_ops(int j);

// Name -> operator dictionary; preserves insertion order for reporting.
class Registry {
public:
    void add(const std::string& name, Operator op);
    bool contains(const std::string& name) const;
    const Operator& at(const std::string& name) const;   // throws UnknownOperator
    const std::vector<std::string>& names() const { return order_; }

private:
    std::map<std::string, Operator> ops_;
    std::vector<std::string> order_;
};

// E10..E22, I10..I22, L0..L2, Lam0..Lam2, V0..V2, A0..A2, J,
// Ew0..Ew2, Ewbar0..Ewbar2, Iw0..Iw2, Iwbar0..Iwbar2, Id.
Registry canonical_registry();

// A permutation of the three column indices j, acting on generators by
// sigma(v_ij) = v_i,sigma(j).
struct PermS3 {
    std::array<int, 3> map;

    int apply(int j) const { return map[static_cast<std::size_t>(j)]; }
    int sign() const;
    PermS3 inverse() const;
    std::string str() const;   // cycle notation: "id", "(01)", "(012)", ...

    static const std::array<PermS3, 6>& all();
};

// The signed permutation operator sending each monomial to +- its image.
Operator permutation_operator(const PermS3& s);
// P_sigma T P_sigma^{-1}
Operator s3_conjugate(const PermS3& s, const Operator& t);

} // namespace wsd
