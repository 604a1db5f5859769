#include "wsd/golden.hpp"

namespace wsd {

namespace {

Matrix6 sparse6(std::initializer_list<std::tuple<int, int, const char*>> entries) {
    Matrix6 m{};
    for (auto& [r, c, s] : entries)
        m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = Gaussian::parse(s);
    return m;
}

} // namespace

const std::vector<std::pair<std::string, Matrix6>>& golden_restricted() {
    static const std::vector<std::pair<std::string, Matrix6>> data = {
        {"L0",   sparse6({{4, 0, "-1/2"}, {5, 1, "-1/2"}})},
        {"L1",   sparse6({{3, 0, "1/2"}, {5, 2, "-1/2"}})},
        {"L2",   sparse6({{3, 1, "1/2"}, {4, 2, "1/2"}})},
        {"Lam0", sparse6({{0, 4, "-2"}, {1, 5, "-2"}})},
        {"Lam1", sparse6({{0, 3, "2"}, {2, 5, "-2"}})},
        {"Lam2", sparse6({{1, 3, "2"}, {2, 4, "2"}})},
        {"V0",   sparse6({{3, 2, "1/2*i"}})},
        {"V1",   sparse6({{4, 1, "-1/2*i"}})},
        {"V2",   sparse6({{5, 0, "1/2*i"}})},
        {"A0",   sparse6({{2, 3, "-2*i"}})},
        {"A1",   sparse6({{1, 4, "2*i"}})},
        {"A2",   sparse6({{0, 5, "-2*i"}})},
    };
    return data;
}

const std::vector<std::pair<std::string, std::array<int, 6>>>& golden_diagonals() {
    static const std::vector<std::pair<std::string, std::array<int, 6>>> data = {
        {"H0", {-1, -1, 0, 0, 1, 1}},
        {"H1", {-1, 0, -1, 1, 0, 1}},
        {"H2", {0, -1, -1, 1, 1, 0}},
        {"S0", {-1, 1, 0, 0, 1, -1}},
        {"S1", {1, 0, -1, -1, 0, 1}},
        {"S2", {0, -1, 1, 1, -1, 0}},
    };
    return data;
}

const std::vector<std::pair<std::string, std::array<int, 3>>>& golden_weights() {
    static const std::vector<std::pair<std::string, std::array<int, 3>>> data = {
        {"L0", {2, 1, 1}},    {"L1", {1, 2, 1}},    {"L2", {1, 1, 2}},
        {"Lam0", {-2, -1, -1}}, {"Lam1", {-1, -2, -1}}, {"Lam2", {-1, -1, -2}},
        {"V0", {0, 2, 2}},    {"V1", {2, 0, 2}},    {"V2", {2, 2, 0}},
        {"A0", {0, -2, -2}},  {"A1", {-2, 0, -2}},  {"A2", {-2, -2, 0}},
    };
    return data;
}

const std::vector<std::pair<std::string, std::array<int, 3>>>& golden_mdeg() {
    static const std::vector<std::pair<std::string, std::array<int, 3>>> data = {
        {"L0", {0, 1, 1}},   {"L1", {1, 0, 1}},   {"L2", {1, 1, 0}},
        {"Lam0", {0, -1, -1}}, {"Lam1", {-1, 0, -1}}, {"Lam2", {-1, -1, 0}},
        {"V0", {2, 0, 0}},   {"V1", {0, 2, 0}},   {"V2", {0, 0, 2}},
        {"A0", {-2, 0, 0}},  {"A1", {0, -2, 0}},  {"A2", {0, 0, -2}},
        {"H0", {0, 0, 0}},   {"H1", {0, 0, 0}},   {"H2", {0, 0, 0}},
        {"S0", {0, 0, 0}},   {"S1", {0, 0, 0}},   {"S2", {0, 0, 0}},
        {"L10", {0, 1, 1}},  {"L20", {0, 1, 1}},
        {"L11", {1, 0, 1}},  {"L21", {1, 0, 1}},
        {"L12", {1, 1, 0}},  {"L22", {1, 1, 0}},
        {"Lam10", {0, -1, -1}}, {"Lam20", {0, -1, -1}},
        {"Lam11", {-1, 0, -1}}, {"Lam21", {-1, 0, -1}},
        {"Lam12", {-1, -1, 0}}, {"Lam22", {-1, -1, 0}},
        {"e1", {0, -1, 1}},  {"e2", {-1, 1, 0}},  {"e3", {2, 0, 0}},
        {"e4", {-1, 1, 0}},  {"e5", {0, -1, 1}},
        {"f1", {0, 1, -1}},  {"f2", {1, -1, 0}},  {"f3", {-2, 0, 0}},
        {"f4", {1, -1, 0}},  {"f5", {0, 1, -1}},
        {"h1", {0, 0, 0}},   {"h2", {0, 0, 0}},   {"h3", {0, 0, 0}},
        {"h4", {0, 0, 0}},   {"h5", {0, 0, 0}},
    };
    return data;
}

const std::vector<std::pair<std::string, MatrixUnit>>& golden_matrix_units() {
    static const std::vector<std::pair<std::string, MatrixUnit>> data = {
        {"L10", {5, 1, Gaussian(2)}},
        {"L11", {3, 0, Gaussian(-2)}},
        {"L12", {4, 2, Gaussian(-2)}},
        {"L20", {4, 0, Gaussian(-2)}},
        {"L21", {5, 2, Gaussian(-2)}},
        {"L22", {3, 1, Gaussian(2)}},
        {"Lam10", {1, 5, Gaussian(8)}},
        {"Lam11", {0, 3, Gaussian(-8)}},
        {"Lam12", {2, 4, Gaussian(-8)}},
        {"Lam20", {0, 4, Gaussian(-8)}},
        {"Lam21", {2, 5, Gaussian(-8)}},
        {"Lam22", {1, 3, Gaussian(8)}},
    };
    return data;
}

const std::vector<Gaussian>& golden_serre_entries() {
    static const std::vector<Gaussian> data = {
        Gaussian::i(), Gaussian::i(), Gaussian::i(1, 2), Gaussian::i(), Gaussian::i(),
    };
    return data;
}

IsotypicalTable golden_isotypical() {
    IsotypicalTable t;
    t.mult[0] = {{0, 1}};
    t.mult[1] = {{-1, 3}, {1, 3}};
    t.mult[2] = {{-2, 3}, {0, 9}, {2, 3}};
    t.mult[3] = {{-3, 1}, {-1, 9}, {1, 9}, {3, 1}};
    t.mult[4] = {{-2, 3}, {0, 9}, {2, 3}};
    t.mult[5] = {{-1, 3}, {1, 3}};
    t.mult[6] = {{0, 1}};
    return t;
}

const std::array<std::array<int, 5>, 5>& cartan_matrix_a5() {
    static const std::array<std::array<int, 5>, 5> a = {{
        {2, -1, 0, 0, 0},
        {-1, 2, -1, 0, 0},
        {0, -1, 2, -1, 0},
        {0, 0, -1, 2, -1},
        {0, 0, 0, -1, 2},
    }};
    return a;
}

} // namespace wsd
