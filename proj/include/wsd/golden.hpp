#pragma once

#include "wsd/reptheory.hpp"

namespace wsd {

// Frozen expected values the verification suites compare against.
// Matrix indices here are zero-based.

// 6x6 matrices of the twelve canonical generators on V.
const std::vector<std::pair<std::string, Matrix6>>& golden_restricted();

// Diagonals of H_0..H_2, S_0..S_2 on V.
const std::vector<std::pair<std::string, std::array<int, 6>>>& golden_diagonals();

// Simultaneous ad-eigenvalues w.r.t. (H_0, H_1, H_2).
const std::vector<std::pair<std::string, std::array<int, 3>>>& golden_weights();

// Multidegrees of the named homogeneous operators.
const std::vector<std::pair<std::string, std::array<int, 3>>>& golden_mdeg();

// The L_ij / Lam_ij family restricts to a single matrix entry.
struct MatrixUnit {
    int row, col;   // zero-based
    Gaussian coeff;
};
const std::vector<std::pair<std::string, MatrixUnit>>& golden_matrix_units();

// Expected single-entry restrictions of the simple root vectors e_1..e_5:
// entry (t+1, t) zero-based (t, t-1).
const std::vector<Gaussian>& golden_serre_entries();

IsotypicalTable golden_isotypical();

// Cartan matrix of type A5.
const std::array<std::array<int, 5>, 5>& cartan_matrix_a5();

} // namespace wsd
