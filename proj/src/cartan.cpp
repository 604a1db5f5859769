#include "wsd/cartan.hpp"

#include <bit>
#include <tuple>

#include "wsd/golden.hpp"

namespace wsd {

Operator build_H(const Registry& r, int j) {
    return bracket(r.at("L" + std::to_string(j)), r.at("Lam" + std::to_string(j)));
}

Operator build_S(const Registry& r, int j) {
    const Operator& v = r.at("V" + std::to_string(j));
    const Operator& lam1 = r.at("Lam" + std::to_string((j + 1) % 3));
    const Operator& lam2 = r.at("Lam" + std::to_string((j + 2) % 3));
    const Operator& l = r.at("L" + std::to_string(j));
    return bracket(bracket(bracket(v, lam1), lam2), l).scaled(Gaussian::i());
}

OperatorSpan cartan_span(const Registry& r) {
    OperatorSpan s;
    for (int j = 0; j < 3; ++j) s.insert(r.at("H" + std::to_string(j)), "H" + std::to_string(j));
    for (int j = 0; j < 3; ++j) s.insert(r.at("S" + std::to_string(j)), "S" + std::to_string(j));
    return s;
}

namespace {

std::optional<std::tuple<Mask, Mask, Gaussian>> first_entry(const Operator& op) {
    for (Mask c = 0; c < kMaskCount; ++c) {
        const auto& terms = op.column(c).terms();
        if (!terms.empty()) return std::tuple{terms.begin()->first, c, terms.begin()->second};
    }
    return std::nullopt;
}

} // namespace

std::array<int, 3> weight_of(const Operator& op, const std::array<Operator, 3>& torus) {
    auto lead = first_entry(op);
    if (!lead) throw Error("weight of the zero operator is undefined");
    auto [r0, c0, v0] = *lead;
    std::array<int, 3> w{};
    for (int k = 0; k < 3; ++k) {
        Operator b = bracket(torus[static_cast<std::size_t>(k)], op);
        Gaussian lam = b.entry(r0, c0) / v0;
        Operator residual = b - op.scaled(lam);
        if (!residual.is_zero()) throw NotAnEigenvector(k, residual.brief());
        if (!lam.is_real() || lam.re().get_den() != 1)
            throw NotAnEigenvector(k, "non-integer eigenvalue " + lam.str());
        w[static_cast<std::size_t>(k)] = static_cast<int>(lam.re().get_num().get_si());
    }
    return w;
}

Operator build_Lij(const Registry& r, int i, int j) {
    const Operator& l = r.at("L" + std::to_string(j));
    const Operator& s = r.at("S" + std::to_string(j));
    Operator shift = bracket(s, l);
    return (i == 1) ? l.scaled(-2) + shift : l.scaled(2) + shift;
}

Operator build_Lamij(const Registry& r, int i, int j) {
    const Operator& lam = r.at("Lam" + std::to_string(j));
    const Operator& s = r.at("S" + std::to_string(j));
    Operator shift = bracket(s, lam);
    return (i == 1) ? lam.scaled(-2) - shift : lam.scaled(2) - shift;
}

SerreSystem build_serre(const Registry& r) {
    Gaussian q = Gaussian::rational(1, 4);
    SerreSystem s;
    s.e[0] = bracket(r.at("L20"), r.at("A1")).scaled(q);
    s.e[1] = bracket(r.at("L22"), r.at("A0")).scaled(q);
    s.e[2] = r.at("V0");
    s.e[3] = bracket(r.at("L12"), r.at("A0")).scaled(q);
    s.e[4] = bracket(r.at("L10"), r.at("A1")).scaled(q);
    s.f[0] = bracket(r.at("V1"), r.at("Lam20")).scaled(q);
    s.f[1] = bracket(r.at("V0"), r.at("Lam22")).scaled(q);
    s.f[2] = r.at("A0");
    s.f[3] = bracket(r.at("V0"), r.at("Lam12")).scaled(q);
    s.f[4] = bracket(r.at("V1"), r.at("Lam10")).scaled(q);
    for (std::size_t t = 0; t < 5; ++t) s.h[t] = bracket(s.e[t], s.f[t]);
    return s;
}

std::vector<RelationCheck> verify_serre_relations(const SerreSystem& s) {
    const auto& a = cartan_matrix_a5();
    std::vector<RelationCheck> out;
    auto expect_zero = [&](const std::string& name, const Operator& op) {
        out.push_back({name, op.is_zero(), op.is_zero() ? "" : "residual " + op.brief()});
    };
    auto idx = [](std::size_t t) { return std::to_string(t + 1); };

    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = i + 1; j < 5; ++j)
            expect_zero("hh/" + idx(i) + "." + idx(j), bracket(s.h[i], s.h[j]));

    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) {
            Operator want = (i == j) ? s.h[i] : Operator();
            expect_zero("ef/" + idx(i) + "." + idx(j), bracket(s.e[i], s.f[j]) - want);
        }

    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) {
            expect_zero("he/" + idx(i) + "." + idx(j),
                        bracket(s.h[i], s.e[j]) - s.e[j].scaled(a[i][j]));
            expect_zero("hf/" + idx(i) + "." + idx(j),
                        bracket(s.h[i], s.f[j]) + s.f[j].scaled(a[i][j]));
        }

    // ad(x_i)^{1 - a_ij}(x_j) = 0 for i != j
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) {
            if (i == j) continue;
            int power = 1 - a[i][j];
            Operator re = s.e[j], rf = s.f[j];
            for (int p = 0; p < power; ++p) {
                re = bracket(s.e[i], re);
                rf = bracket(s.f[i], rf);
            }
            expect_zero("ad-e/" + idx(i) + "." + idx(j), re);
            expect_zero("ad-f/" + idx(i) + "." + idx(j), rf);
        }
    return out;
}

std::array<int, 3> mdeg_of_monomial(Mask m) {
    return {std::popcount(m & 0x03u), std::popcount(m & 0x0Cu), std::popcount(m & 0x30u)};
}

std::string mdeg_str(const std::array<int, 3>& d) {
    return "(" + std::to_string(d[0]) + "," + std::to_string(d[1]) + "," + std::to_string(d[2]) + ")";
}

std::array<int, 3> op_mdeg(const Operator& op) {
    std::optional<std::array<int, 3>> shift;
    Mask r0 = 0, c0 = 0;
    for (Mask c = 0; c < kMaskCount; ++c) {
        for (const auto& [row, val] : op.column(c).terms()) {
            auto dr = mdeg_of_monomial(row), dc = mdeg_of_monomial(c);
            std::array<int, 3> d = {dr[0] - dc[0], dr[1] - dc[1], dr[2] - dc[2]};
            if (!shift) {
                shift = d;
                r0 = row;
                c0 = c;
            } else if (d != *shift) {
                throw NotHomogeneous("entry (" + monomial_str(r0) + "; " + monomial_str(c0) +
                                     ") shifts by " + mdeg_str(*shift) + " but (" +
                                     monomial_str(row) + "; " + monomial_str(c) + ") by " +
                                     mdeg_str(d));
            }
        }
    }
    if (!shift) throw Error("multidegree of the zero operator is undefined");
    return *shift;
}

std::vector<RelationCheck> match_quadratic_spans(const Registry& r) {
    std::vector<RelationCheck> out;
    auto nm = [](const char* base, int j) { return std::string(base) + std::to_string(j); };
    auto pair_span = [&](const std::string& n1, const Operator& o1,
                         const std::string& n2, const Operator& o2) {
        OperatorSpan s;
        s.insert(o1, n1);
        s.insert(o2, n2);
        return s;
    };
    auto record = [&](const std::string& name, const OperatorSpan& lhs, const OperatorSpan& rhs,
                      int want_dim) {
        bool pass = lhs.same_span(rhs) && lhs.dim() == want_dim;
        std::string witness;
        if (!pass) {
            witness = "lhs dim " + std::to_string(lhs.dim()) + ", rhs dim " +
                      std::to_string(rhs.dim()) + (lhs.same_span(rhs) ? "" : ", spans differ");
        }
        out.push_back({name, pass, witness});
    };

    for (int j = 0; j < 3; ++j) {
        int k = (j == 0) ? 1 : 0;
        int l = (j == 2) ? 1 : 2;
        // Span(L_1j, L_2j) = Span([E_wk, E_wbarl], [E_wl, E_wbark]),  {j,k,l} = {0,1,2}
        record("L/j" + std::to_string(j),
               pair_span(nm("L1", j), r.at(nm("L1", j)), nm("L2", j), r.at(nm("L2", j))),
               pair_span("[Ew" + std::to_string(k) + ",Ewbar" + std::to_string(l) + "]",
                         bracket(r.at(nm("Ew", k)), r.at(nm("Ewbar", l))),
                         "[Ew" + std::to_string(l) + ",Ewbar" + std::to_string(k) + "]",
                         bracket(r.at(nm("Ew", l)), r.at(nm("Ewbar", k)))),
               2);
        record("Lam/j" + std::to_string(j),
               pair_span(nm("Lam1", j), r.at(nm("Lam1", j)), nm("Lam2", j), r.at(nm("Lam2", j))),
               pair_span("[Iw" + std::to_string(k) + ",Iwbar" + std::to_string(l) + "]",
                         bracket(r.at(nm("Iw", k)), r.at(nm("Iwbar", l))),
                         "[Iw" + std::to_string(l) + ",Iwbar" + std::to_string(k) + "]",
                         bracket(r.at(nm("Iw", l)), r.at(nm("Iwbar", k)))),
               2);
    }
    for (int j = 0; j < 3; ++j) {
        OperatorSpan lhs, rhs;
        lhs.insert(r.at(nm("V", j)), nm("V", j));
        rhs.insert(bracket(r.at(nm("Ew", j)), r.at(nm("Ewbar", j))), "[Ew,Ewbar]");
        record("V/j" + std::to_string(j), lhs, rhs, 1);
    }
    for (int j = 0; j < 3; ++j) {
        OperatorSpan lhs, rhs;
        lhs.insert(r.at(nm("A", j)), nm("A", j));
        rhs.insert(bracket(r.at(nm("Iw", j)), r.at(nm("Iwbar", j))), "[Iw,Iwbar]");
        record("A/j" + std::to_string(j), lhs, rhs, 1);
    }
    {
        OperatorSpan lhs = cartan_span(r);
        lhs.insert(r.at("J"), "J");
        OperatorSpan rhs;
        int inserted = 0;
        for (int m = 0; m < 3; ++m) {
            inserted += rhs.insert(bracket(r.at(nm("Ew", m)), r.at(nm("Iw", m))),
                                   "[Ew" + std::to_string(m) + ",Iw" + std::to_string(m) + "]");
            inserted += rhs.insert(bracket(r.at(nm("Ewbar", m)), r.at(nm("Iwbar", m))),
                                   "[Ewbar" + std::to_string(m) + ",Iwbar" + std::to_string(m) + "]");
        }
        bool pass = lhs.same_span(rhs) && lhs.dim() == 6 && inserted == 6;
        std::string witness;
        if (!pass)
            witness = "lhs dim " + std::to_string(lhs.dim()) + ", rhs dim " +
                      std::to_string(rhs.dim()) + ", independent inserts " +
                      std::to_string(inserted);
        out.push_back({"cartan-J", pass, witness});
    }
    return out;
}

Registry full_registry() {
    Registry r = canonical_registry();
    for (int j = 0; j < 3; ++j) r.add("H" + std::to_string(j), build_H(r, j));
    for (int j = 0; j < 3; ++j) r.add("S" + std::to_string(j), build_S(r, j));
    for (int j = 0; j < 3; ++j)
        for (int i = 1; i <= 2; ++i) {
            r.add("L" + std::to_string(i) + std::to_string(j), build_Lij(r, i, j));
            r.add("Lam" + std::to_string(i) + std::to_string(j), build_Lamij(r, i, j));
        }
    SerreSystem s = build_serre(r);
    for (std::size_t t = 0; t < 5; ++t) {
        r.add("e" + std::to_string(t + 1), s.e[t]);
        r.add("f" + std::to_string(t + 1), s.f[t]);
        r.add("h" + std::to_string(t + 1), s.h[t]);
    }
    return r;
}

} // namespace wsd
