#include "wsd/report.hpp"

#include <iomanip>
#include <random>
#include <sstream>

#include <json.hpp>

#include "wsd/golden.hpp"

namespace wsd {

namespace {

using ordered_json = nlohmann::ordered_json;

// Shared immutable context; everything here is computed once per process.
struct Ctx {
    Registry reg = full_registry();
    SubrepV V;
    std::optional<OperatorSpan> closure_;

    std::vector<std::pair<std::string, Operator>> closure_generators() const {
        std::vector<std::pair<std::string, Operator>> g;
        for (const char* base : {"L", "Lam", "V", "A"})
            for (int j = 0; j < 3; ++j) {
                std::string n = std::string(base) + std::to_string(j);
                g.emplace_back(n, reg.at(n));
            }
        return g;
    }

    const OperatorSpan& closure() {
        if (!closure_) closure_ = span_closure(closure_generators(), closure_round_cap());
        return *closure_;
    }
};

Ctx& ctx() {
    static Ctx c;
    return c;
}

void add(Report& rep, const std::string& id, bool pass, const std::string& witness = "") {
    rep.checks.push_back({id, id.substr(0, id.find('/')), pass, witness});
}

void check_zero(Report& rep, const std::string& id, const Operator& op) {
    add(rep, id, op.is_zero(), op.is_zero() ? "" : "residual " + op.brief());
}

void check_eq(Report& rep, const std::string& id, const Operator& got, const Operator& want) {
    check_zero(rep, id, got - want);
}

std::string istr(int n) { return std::to_string(n); }

// ---------------------------------------------------------------- clifford

Report clifford_suite() {
    Report rep{"clifford", {}};
    auto& reg = ctx().reg;
    // the twelve generators, wedges first: gens[x] and gens[x + 6] are the
    // dual pair whose anticommutator is the identity
    std::vector<std::string> gens;
    for (const char* f : {"E", "I"})
        for (int j = 0; j < 3; ++j)
            for (int i = 1; i <= 2; ++i)
                gens.push_back(f + istr(i) + istr(j));
    for (std::size_t x = 0; x < 12; ++x)
        for (std::size_t y = 0; y < 12; ++y) {
            bool unit = x + 6 == y || y + 6 == x;
            check_eq(rep, "prop-2.5/anti/" + gens[x] + "." + gens[y],
                     anticommutator(reg.at(gens[x]), reg.at(gens[y])),
                     unit ? reg.at("Id") : Operator());
        }
    for (std::size_t x = 0; x < 6; ++x)
        check_eq(rep, "prop-2.5/unit/" + gens[x] + "." + gens[x + 6],
                 anticommutator(reg.at(gens[x]), reg.at(gens[x + 6])), reg.at("Id"));
    for (std::size_t x = 0; x < 6; ++x) {
        check_eq(rep, "prop-2.5/adjoint/" + gens[x], reg.at(gens[x]).adjoint(),
                 reg.at(gens[x + 6]));
        check_eq(rep, "prop-2.5/adjoint/" + gens[x + 6], reg.at(gens[x + 6]).adjoint(),
                 reg.at(gens[x]));
    }
    return rep;
}

// --------------------------------------------------------------------- so2

Report so2_suite() {
    Report rep{"so2", {}};
    auto& reg = ctx().reg;
    const Operator& J = reg.at("J");

    bool built = true;
    std::string bw;
    try {
        build_J();
    } catch (const ConstructionMismatch& e) {
        built = false;
        bw = e.what();
    }
    add(rep, "prop-2.6/construction-match", built, bw);

    check_eq(rep, "prop-2.6/antiselfadjoint", J.adjoint(), -J);

    Operator J2 = J * J;
    bool sq = true;
    for (int b = 0; b < kGenerators; ++b) {
        Multivector g = Multivector::monomial(1u << b);
        if (J2.apply(g) != -g) sq = false;
    }
    add(rep, "def-2.7/complex-structure", sq);

    for (const char* base : {"L", "Lam", "V", "A"})
        for (int j = 0; j < 3; ++j) {
            std::string n = std::string(base) + istr(j);
            check_zero(rep, "thm-3.3/commutes/" + n, bracket(J, reg.at(n)));
        }

    bool eig = true;
    std::string ew;
    for (const WMonomial& wm : w_monomials()) {
        if (J.apply(wm.value) != wm.value.scaled(Gaussian::i(wm.weight))) {
            eig = false;
            ew = wm.name + " is not an eigenvector of weight " + istr(wm.weight) + "i";
            break;
        }
    }
    add(rep, "prop-3.2/w-eigenvectors", eig, ew);

    IsotypicalTable t = isotypical_table();
    add(rep, "prop-3.2/table", t == golden_isotypical(), "computed: " + t.str());

    static const int binom[7] = {1, 6, 15, 20, 15, 6, 1};
    bool sums = t.mult.size() == 7;
    for (const auto& [deg, row] : t.mult) {
        int total = 0;
        for (const auto& [w, n] : row) total += n;
        if (deg < 0 || deg > 6 || total != binom[deg]) sums = false;
    }
    add(rep, "prop-3.2/degree-sums", sums);
    return rep;
}

// --------------------------------------------------------------------- sl6

Report sl6_suite() {
    Report rep{"sl6", {}};
    Ctx& c = ctx();
    auto& reg = c.reg;
    const SubrepV& V = c.V;
    const Operator& J = reg.at("J");

    for (const auto& [name, want] : golden_restricted()) {
        Matrix6 got = restrict_to_v(reg.at(name), V);
        add(rep, "prop-4.1/M_" + name, got == want,
            got == want ? "" : "got " + matrix6_str(got));
    }

    add(rep, "thm-4.3/v-dim", V.dim() == 6, "dim " + istr(V.dim()));
    bool wok = true;
    std::string ww;
    for (std::size_t k = 0; k < 6; ++k) {
        const Multivector& b = V.basis()[k];
        if (J.apply(b) != b.scaled(Gaussian::i(-2))) {
            wok = false;
            ww = "basis vector " + istr(static_cast<int>(k) + 1);
            break;
        }
    }
    add(rep, "thm-4.3/v-weight", wok, ww);

    const OperatorSpan& L = c.closure();
    add(rep, "def-2.9/closure-dim", L.dim() == 35, "dim " + istr(L.dim()));

    std::vector<Operator> basis = L.echelon_basis();
    bool star = true, traceless = true;
    for (const Operator& b : basis) {
        if (!L.contains(b.adjoint())) star = false;
        if (!b.trace().is_zero()) traceless = false;
    }
    add(rep, "def-2.9/star-closed", star);
    add(rep, "def-2.9/traceless", traceless);
    add(rep, "thm-5.9/j-not-in-closure", !L.contains(J));

    int rank = -1;
    bool rtraceless = true;
    std::string iw;
    try {
        ExactSpan rows(36);
        for (const Operator& b : basis) {
            Matrix6 m = restrict_to_v(b, V);
            rows.insert(vectorize6(m));
            if (!trace6(m).is_zero()) rtraceless = false;
        }
        rank = rows.dim();
    } catch (const NotInvariant& e) {
        iw = e.what();
    }
    add(rep, "thm-4.3/v-invariant", rank >= 0, iw);
    add(rep, "thm-5.9/kernel-zero", rank == static_cast<int>(basis.size()),
        rank >= 0 ? "restriction kernel dim " + istr(static_cast<int>(basis.size()) - rank) : iw);
    add(rep, "cor-4.2/image-rank-35", rank == 35, "restricted rank " + istr(rank));
    add(rep, "cor-4.2/restricted-traceless", rank >= 0 && rtraceless);

    Matrix6 jv = restrict_to_v(J, V);
    add(rep, "thm-5.9/trace-j-on-v", trace6(jv) == Gaussian::i(-12),
        "trace " + trace6(jv).str());

    // independent route: the same closure computed in quadratic coordinates
    OperatorSpan via = span_closure_quadratic(quadratic_space(), c.closure_generators(),
                                              closure_round_cap());
    bool mutual = via.dim() == L.dim() && via.same_span(L);
    for (const Operator& b : via.echelon_basis())
        if (!L.contains(b)) mutual = false;
    for (const Operator& b : basis)
        if (!via.contains(b)) mutual = false;
    add(rep, "oracle/closure-paths-agree", mutual,
        "coordinate-route dim " + istr(via.dim()) + ", direct dim " + istr(L.dim()));
    return rep;
}

// --------------------------------------------------------------- quadratic

Report quadratic_suite() {
    Report rep{"quadratic", {}};
    Ctx& c = ctx();
    auto& reg = c.reg;
    const Operator& J = reg.at("J");
    const QuadraticSpace& q = quadratic_space();

    add(rep, "def-5.4/dim-66", q.dim() == 66, "dim " + istr(q.dim()));

    bool traceless = true;
    for (const Operator& b : q.basis())
        if (!b.trace().is_zero()) traceless = false;
    add(rep, "def-5.4/traceless", traceless);

    const OperatorSpan& L = c.closure();
    bool inside = true;
    for (const Operator& b : L.echelon_basis())
        if (!q.coordinates(b)) inside = false;
    add(rep, "prop-5.6/closure-inside-c2", inside);
    add(rep, "prop-5.6/j-inside-c2", q.coordinates(J).has_value());

    std::map<int, int> split = j_weight_split(q, J);
    std::map<int, int> want{{-2, 15}, {0, 36}, {2, 15}};
    std::ostringstream ss;
    for (const auto& [k, d] : split) ss << k << "i -> " << d << "  ";
    add(rep, "sec-5/j-weight-split", split == want, ss.str());

    Gaussian mi = Gaussian::i(-1), pi = Gaussian::i(1);
    for (int j = 0; j < 3; ++j) {
        check_eq(rep, "sec-5/adj-weight/Ew" + istr(j), bracket(J, reg.at("Ew" + istr(j))),
                 reg.at("Ew" + istr(j)).scaled(mi));
        check_eq(rep, "sec-5/adj-weight/Ewbar" + istr(j), bracket(J, reg.at("Ewbar" + istr(j))),
                 reg.at("Ewbar" + istr(j)).scaled(pi));
        check_eq(rep, "sec-5/adj-weight/Iw" + istr(j), bracket(J, reg.at("Iw" + istr(j))),
                 reg.at("Iw" + istr(j)).scaled(pi));
        check_eq(rep, "sec-5/adj-weight/Iwbar" + istr(j), bracket(J, reg.at("Iwbar" + istr(j))),
                 reg.at("Iwbar" + istr(j)).scaled(mi));
    }

    auto inv = j_invariant_quadratics();
    OperatorSpan ispan;
    for (const auto& [name, op] : inv) ispan.insert(op, name);
    add(rep, "prop-5.8/count-36",
        inv.size() == 36 && ispan.dim() == 36,
        istr(static_cast<int>(inv.size())) + " monomials, " + istr(ispan.dim()) + " independent");

    bool wz = true;
    std::string wzw;
    for (const auto& [name, op] : inv)
        if (!bracket(J, op).is_zero()) {
            wz = false;
            wzw = name;
            break;
        }
    add(rep, "prop-5.8/weight-zero", wz, wzw);

    OperatorSpan espan;
    auto ker = j_weight_eigenbasis(q, J, 0);
    for (std::size_t t = 0; t < ker.size(); ++t)
        espan.insert(q.from_coordinates(ker[t]), "ker:" + istr(static_cast<int>(t)));
    bool match = espan.dim() == ispan.dim() && espan.same_span(ispan);
    for (const Operator& b : espan.echelon_basis())
        if (!ispan.contains(b)) match = false;
    for (const Operator& b : ispan.echelon_basis())
        if (!espan.contains(b)) match = false;
    add(rep, "prop-5.8/matches-weight-zero-eigenspace", match,
        "eigenspace dim " + istr(espan.dim()));

    OperatorSpan cj;
    int idx = 0;
    for (const Operator& b : L.echelon_basis()) cj.insert(b, "closure:" + istr(idx++));
    cj.insert(J, "J");
    add(rep, "cor-after-thm-5.9/closure-plus-j", cj.dim() == 36 && cj.same_span(ispan),
        "dim " + istr(cj.dim()));
    return rep;
}

// ------------------------------------------------------------------ cartan

Report cartan_suite() {
    Report rep{"cartan", {}};
    Ctx& c = ctx();
    auto& reg = c.reg;
    const SubrepV& V = c.V;

    // the eight relation families of the canonical torus action
    for (int j = 0; j < 3; ++j) {
        std::string sj = istr(j);
        const Operator& H = reg.at("H" + sj);
        const Operator& Lj = reg.at("L" + sj);
        const Operator& Lamj = reg.at("Lam" + sj);
        const Operator& Vj = reg.at("V" + sj);
        const Operator& Aj = reg.at("A" + sj);
        check_eq(rep, "prop-6.2/HL-same/j" + sj, bracket(H, Lj), Lj.scaled(2));
        check_eq(rep, "prop-6.2/HLam-same/j" + sj, bracket(H, Lamj), Lamj.scaled(-2));
        check_zero(rep, "prop-6.2/HV-same/j" + sj, bracket(H, Vj));
        check_zero(rep, "prop-6.2/HA-same/j" + sj, bracket(H, Aj));
        Operator dl, dlam, dv, da;
        for (int k = 0; k < 3; ++k) {
            if (k == j) continue;
            const Operator& Hk = reg.at("H" + istr(k));
            dl = dl + (bracket(Hk, Lj) - Lj);
            dlam = dlam + (bracket(Hk, Lamj) + Lamj);
            dv = dv + (bracket(Hk, Vj) - Vj.scaled(2));
            da = da + (bracket(Hk, Aj) + Aj.scaled(2));
        }
        check_zero(rep, "prop-6.2/HL-other/j" + sj, dl);
        check_zero(rep, "prop-6.2/HLam-other/j" + sj, dlam);
        check_zero(rep, "prop-6.2/HV-other/j" + sj, dv);
        check_zero(rep, "prop-6.2/HA-other/j" + sj, da);
    }

    // measured weights of the twelve generators
    std::array<Operator, 3> torus = {reg.at("H0"), reg.at("H1"), reg.at("H2")};
    for (const auto& [name, want] : golden_weights()) {
        try {
            auto got = weight_of(reg.at(name), torus);
            add(rep, "sec-6/weight/" + name, got == want,
                "(" + istr(got[0]) + "," + istr(got[1]) + "," + istr(got[2]) + ")");
        } catch (const NotAnEigenvector& e) {
            add(rep, "sec-6/weight/" + name, false, e.what());
        }
    }

    for (int j = 0; j < 3; ++j) {
        const Operator& H = reg.at("H" + istr(j));
        check_eq(rep, "def-6.1/self-adjoint/H" + istr(j), H.adjoint(), H);
    }

    for (const auto& [name, diag] : golden_diagonals()) {
        Matrix6 want{};
        for (std::size_t k = 0; k < 6; ++k) want[k][k] = diag[k];
        Matrix6 got = restrict_to_v(reg.at(name), V);
        add(rep, "prop-6.4/diag/" + name, got == want,
            got == want ? "" : "got " + matrix6_str(got));
    }

    OperatorSpan h = cartan_span(reg);
    add(rep, "prop-6.4/dim-5", h.dim() == 5, "dim " + istr(h.dim()));

    bool abelian = true;
    std::vector<std::string> hs = {"H0", "H1", "H2", "S0", "S1", "S2"};
    for (std::size_t x = 0; x < hs.size(); ++x)
        for (std::size_t y = x + 1; y < hs.size(); ++y)
            if (!bracket(reg.at(hs[x]), reg.at(hs[y])).is_zero()) abelian = false;
    add(rep, "prop-6.4/abelian", abelian);

    bool traceless = true;
    for (const auto& n : hs)
        if (!reg.at(n).trace().is_zero()) traceless = false;
    add(rep, "prop-6.4/traceless", traceless);

    check_zero(rep, "rmk-6.4/S-sum-zero",
               reg.at("S0") + reg.at("S1") + reg.at("S2"));

    // the graded action on the pure-weight recombinations
    for (int k = 0; k < 3; ++k) {
        const Operator& Hk = reg.at("H" + istr(k));
        const Operator& Sk = reg.at("S" + istr(k));
        for (int j = 0; j < 3; ++j)
            for (int i = 1; i <= 2; ++i) {
                std::string lij = "L" + istr(i) + istr(j);
                std::string lamij = "Lam" + istr(i) + istr(j);
                int hfac = 1 + (k == j ? 1 : 0);
                check_eq(rep, "cor-6.5/H-L/k" + istr(k) + "." + lij,
                         bracket(Hk, reg.at(lij)), reg.at(lij).scaled(hfac));
                check_eq(rep, "cor-6.5/H-Lam/k" + istr(k) + "." + lamij,
                         bracket(Hk, reg.at(lamij)), reg.at(lamij).scaled(-hfac));
                int base = 1 - (k == j ? 3 : 0);
                int sl = (i == 1 ? 1 : -1) * base;     // (-1)^{i+1} (1 - 3 delta_kj)
                int slam = (i == 1 ? -1 : 1) * base;   // (-1)^i  (1 - 3 delta_kj)
                check_eq(rep, "cor-6.5/S-L/k" + istr(k) + "." + lij,
                         bracket(Sk, reg.at(lij)), reg.at(lij).scaled(sl));
                check_eq(rep, "cor-6.5/S-Lam/k" + istr(k) + "." + lamij,
                         bracket(Sk, reg.at(lamij)), reg.at(lamij).scaled(slam));
            }
        for (int j = 0; j < 3; ++j) {
            check_zero(rep, "cor-6.5/S-V/k" + istr(k) + ".V" + istr(j),
                       bracket(Sk, reg.at("V" + istr(j))));
            check_zero(rep, "cor-6.5/S-A/k" + istr(k) + ".A" + istr(j),
                       bracket(Sk, reg.at("A" + istr(j))));
        }
    }

    // single-entry restrictions of the recombinations
    for (const auto& [name, unit] : golden_matrix_units()) {
        Matrix6 want{};
        want[static_cast<std::size_t>(unit.row)][static_cast<std::size_t>(unit.col)] = unit.coeff;
        Matrix6 got = restrict_to_v(reg.at(name), V);
        add(rep, "def-6.5/unit/" + name, got == want,
            got == want ? "" : "got " + matrix6_str(got));
    }

    for (int j = 0; j < 3; ++j) {
        Operator va = bracket(reg.at("V" + istr(j)), reg.at("A" + istr(j)));
        add(rep, "sec-6/VA-in-cartan/j" + istr(j), h.contains(va),
            h.contains(va) ? "" : "residual " + h.residual(va).brief());
    }
    return rep;
}

// ------------------------------------------------------------------- serre

Report serre_suite() {
    Report rep{"serre", {}};
    Ctx& c = ctx();
    auto& reg = c.reg;
    const SubrepV& V = c.V;

    SerreSystem s;
    for (std::size_t t = 0; t < 5; ++t) {
        s.e[t] = reg.at("e" + istr(static_cast<int>(t) + 1));
        s.f[t] = reg.at("f" + istr(static_cast<int>(t) + 1));
        s.h[t] = reg.at("h" + istr(static_cast<int>(t) + 1));
    }

    for (std::size_t t = 0; t < 5; ++t)
        check_eq(rep, "def-6.6/f-equals-e-star/e" + istr(static_cast<int>(t) + 1),
                 s.e[t].adjoint(), s.f[t]);

    // coroots as explicit torus combinations
    Gaussian half = Gaussian::rational(1, 2);
    const Operator &H0 = reg.at("H0"), &H1 = reg.at("H1"), &H2 = reg.at("H2");
    const Operator &S1 = reg.at("S1"), &S2 = reg.at("S2");
    check_eq(rep, "prop-6.7/h/h1", s.h[0], (H1 - H2 - S1 - S2).scaled(half));
    check_eq(rep, "prop-6.7/h/h2", s.h[1], (H0 - H1 + S2).scaled(half));
    check_eq(rep, "prop-6.7/h/h3", s.h[2], (-H0 + H1 + H2).scaled(half));
    check_eq(rep, "prop-6.7/h/h4", s.h[3], (H0 - H1 - S2).scaled(half));
    check_eq(rep, "prop-6.7/h/h5", s.h[4], (H1 - H2 + S1 + S2).scaled(half));

    for (const RelationCheck& rc : verify_serre_relations(s))
        add(rep, "prop-6.7/rel/" + rc.name, rc.pass, rc.witness);

    // each e_t restricts to a single entry just below the diagonal; the
    // norm-corrected phase (the entry times |b_{t+1}|/|b_t|) is a unit
    auto n2 = V.norms_squared();
    const auto& expected = golden_serre_entries();
    for (int t = 1; t <= 5; ++t) {
        Matrix6 m = restrict_to_v(s.e[static_cast<std::size_t>(t - 1)], V);
        std::size_t r = static_cast<std::size_t>(t), cc = static_cast<std::size_t>(t - 1);
        Gaussian entry = m[r][cc];
        bool single = !entry.is_zero();
        for (std::size_t x = 0; x < 6; ++x)
            for (std::size_t y = 0; y < 6; ++y)
                if (!(x == r && y == cc) && !m[x][y].is_zero()) single = false;
        // ratio of consecutive norms is an exact rational square here
        mpq_class ratio = n2[r] / n2[cc];
        mpz_class rn = sqrt(ratio.get_num()), rd = sqrt(ratio.get_den());
        bool square = rn * rn == ratio.get_num() && rd * rd == ratio.get_den();
        mpq_class root(rn, rd);
        root.canonicalize();
        Gaussian u = entry * Gaussian(root);
        bool unit = square && u * u.conj() == Gaussian(1);
        bool pass = single && unit && entry == expected[static_cast<std::size_t>(t - 1)];
        add(rep, "def-6.6/matrix-unit/e" + istr(t), pass,
            "entry " + entry.str() + ", norm-corrected phase " + u.str());
    }
    return rep;
}

// -------------------------------------------------------------------- mdeg

Report mdeg_suite() {
    Report rep{"mdeg", {}};
    auto& reg = ctx().reg;

    for (const auto& [name, want] : golden_mdeg()) {
        try {
            auto got = op_mdeg(reg.at(name));
            add(rep, "prop-6.8/mdeg/" + name, got == want, mdeg_str(got));
        } catch (const NotHomogeneous& e) {
            add(rep, "prop-6.8/mdeg/" + name, false, e.what());
        }
    }

    // bracket additivity on random homogeneous pairs
    const auto& pool = golden_mdeg();
    std::mt19937_64 rng(20250819);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    int nonzero = 0, vanished = 0;
    bool ok = true;
    std::string bad;
    for (int trial = 0; trial < 50; ++trial) {
        const auto& [na, da] = pool[pick(rng)];
        const auto& [nb, db] = pool[pick(rng)];
        Operator b = bracket(reg.at(na), reg.at(nb));
        if (b.is_zero()) {
            ++vanished;
            continue;
        }
        ++nonzero;
        std::array<int, 3> want = {da[0] + db[0], da[1] + db[1], da[2] + db[2]};
        try {
            if (op_mdeg(b) != want) {
                ok = false;
                bad = "[" + na + "," + nb + "] has mdeg " + mdeg_str(op_mdeg(b)) +
                      ", expected " + mdeg_str(want);
            }
        } catch (const NotHomogeneous& e) {
            ok = false;
            bad = "[" + na + "," + nb + "]: " + e.what();
        }
        if (!ok) break;
    }
    add(rep, "prop-6.8/bracket-additivity", ok,
        ok ? istr(nonzero) + " nonzero brackets verified, " + istr(vanished) + " vanished"
           : bad);
    return rep;
}

// ------------------------------------------------------------------- spans

Report spans_suite() {
    Report rep{"spans", {}};
    for (const RelationCheck& rc : match_quadratic_spans(ctx().reg))
        add(rep, "sec-6-final/" + rc.name, rc.pass, rc.witness);
    return rep;
}

// ---------------------------------------------------------------------- s3

Report s3_suite() {
    Report rep{"s3", {}};
    auto& reg = ctx().reg;

    for (const PermS3& s : PermS3::all()) {
        Operator P = permutation_operator(s);
        Operator Pinv = permutation_operator(s.inverse());
        auto conj = [&](const Operator& t) { return P * t * Pinv; };
        Gaussian eps(s.sign());

        Operator dv, dl, dlam, da;
        for (int j = 0; j < 3; ++j) {
            std::string sj = istr(j), tj = istr(s.apply(j));
            dv = dv + (conj(reg.at("V" + sj)) - reg.at("V" + tj));
            da = da + (conj(reg.at("A" + sj)) - reg.at("A" + tj));
            dl = dl + (conj(reg.at("L" + sj)) - reg.at("L" + tj).scaled(eps));
            dlam = dlam + (conj(reg.at("Lam" + sj)) - reg.at("Lam" + tj).scaled(eps));
        }
        check_zero(rep, "sec-2/s3/V/" + s.str(), dv);
        check_zero(rep, "sec-2/s3/A/" + s.str(), da);
        check_zero(rep, "sec-2/s3/L/" + s.str(), dl);
        check_zero(rep, "sec-2/s3/Lam/" + s.str(), dlam);
        check_eq(rep, "sec-2/s3/J/" + s.str(), conj(reg.at("J")), reg.at("J"));
        check_eq(rep, "sec-2/s3/unitary/" + s.str(), P * P.adjoint(), reg.at("Id"));
    }

    bool comp = true;
    for (const PermS3& a : PermS3::all())
        for (const PermS3& b : PermS3::all()) {
            PermS3 ab{{a.apply(b.apply(0)), a.apply(b.apply(1)), a.apply(b.apply(2))}};
            if (permutation_operator(a) * permutation_operator(b) != permutation_operator(ab))
                comp = false;
        }
    add(rep, "sec-2/s3/composition", comp);
    return rep;
}

} // namespace

int Report::failures() const {
    int n = 0;
    for (const Check& c : checks)
        if (!c.pass) ++n;
    return n;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "clifford", "so2", "sl6", "quadratic", "cartan", "serre", "mdeg", "spans", "s3",
    };
    return names;
}

Report run_suite(const std::string& name) {
    if (name == "clifford") return clifford_suite();
    if (name == "so2") return so2_suite();
    if (name == "sl6") return sl6_suite();
    if (name == "quadratic") return quadratic_suite();
    if (name == "cartan") return cartan_suite();
    if (name == "serre") return serre_suite();
    if (name == "mdeg") return mdeg_suite();
    if (name == "spans") return spans_suite();
    if (name == "s3") return s3_suite();
    throw UnknownSuite(name);
}

std::vector<Report> run_all() {
    std::vector<Report> out;
    out.reserve(suite_names().size());
    for (const std::string& n : suite_names()) out.push_back(run_suite(n));
    return out;
}

Report merge_reports(const std::vector<Report>& reports) {
    Report merged{"all", {}};
    for (const Report& r : reports)
        merged.checks.insert(merged.checks.end(), r.checks.begin(), r.checks.end());
    return merged;
}

std::string report_text(const Report& r) {
    std::ostringstream os;
    os << "suite " << r.suite << "\n";
    for (const Check& c : r.checks) {
        os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.id;
        if (!c.witness.empty()) os << "  -- " << c.witness;
        os << "\n";
    }
    os << "suite " << r.suite << ": " << r.checks.size() << " checks, " << r.failures()
       << " failures\n";
    return os.str();
}

namespace {

ordered_json report_to_json(const Report& r) {
    ordered_json checks = ordered_json::array();
    for (const Check& c : r.checks) {
        ordered_json jc;
        jc["id"] = c.id;
        jc["anchor"] = c.anchor;
        jc["pass"] = c.pass;
        if (!c.witness.empty()) jc["witness"] = c.witness;
        checks.push_back(std::move(jc));
    }
    ordered_json j;
    j["suite"] = r.suite;
    j["checks"] = std::move(checks);
    j["pass"] = r.pass();
    return j;
}

} // namespace

std::string report_json(const Report& r) {
    return report_to_json(r).dump(2) + "\n";
}

std::string matrix_text(const Operator& op) {
    std::ostringstream os;
    os << "dim 64, nonzero entries " << op.nonzeros() << "\n";
    for (Mask c = 0; c < kMaskCount; ++c)
        for (const auto& [row, val] : op.column(c).terms())
            os << "(" << monomial_str(row) << "; " << monomial_str(c) << ") = " << val.str()
               << "\n";
    return os.str();
}

std::string matrix_json(const std::string& name, const Operator& op) {
    ordered_json entries = ordered_json::array();
    for (Mask r = 0; r < kMaskCount; ++r) {
        ordered_json row = ordered_json::array();
        for (Mask c = 0; c < kMaskCount; ++c) row.push_back(op.entry(r, c).str());
        entries.push_back(std::move(row));
    }
    ordered_json j;
    j["name"] = name;
    j["dim"] = 64;
    j["entries"] = std::move(entries);
    return j.dump(2) + "\n";
}

std::string matrix6_text(const Matrix6& m) {
    std::size_t width = 1;
    for (const auto& row : m)
        for (const auto& e : row) width = std::max(width, e.str().size());
    std::ostringstream os;
    for (std::size_t r = 0; r < 6; ++r) {
        for (std::size_t c = 0; c < 6; ++c)
            os << (c ? "  " : "") << std::setw(static_cast<int>(width)) << m[r][c].str();
        os << "\n";
    }
    return os.str();
}

std::string matrix6_json(const std::string& name, const Matrix6& m) {
    ordered_json entries = ordered_json::array();
    for (std::size_t r = 0; r < 6; ++r) {
        ordered_json row = ordered_json::array();
        for (std::size_t c = 0; c < 6; ++c) row.push_back(m[r][c].str());
        entries.push_back(std::move(row));
    }
    ordered_json j;
    j["name"] = name;
    j["dim"] = 6;
    j["entries"] = std::move(entries);
    return j.dump(2) + "\n";
}

namespace {

struct TableData {
    IsotypicalTable isotypical;
    std::vector<std::pair<std::string, std::array<int, 3>>> weights;
    std::vector<std::pair<std::string, std::array<int, 6>>> diagonals;
    std::vector<std::pair<std::string, std::array<int, 3>>> mdeg;
};

// Tables are computed live from the operators; the suites check them
// against the frozen expectations separately.
TableData compute_table(const std::string& kind) {
    TableData t;
    Ctx& c = ctx();
    if (kind == "isotypical") {
        t.isotypical = isotypical_table();
    } else if (kind == "weights") {
        std::array<Operator, 3> torus = {c.reg.at("H0"), c.reg.at("H1"), c.reg.at("H2")};
        for (const auto& [name, unused] : golden_weights())
            t.weights.emplace_back(name, weight_of(c.reg.at(name), torus));
    } else if (kind == "diagonals") {
        for (const auto& [name, unused] : golden_diagonals()) {
            Matrix6 m = restrict_to_v(c.reg.at(name), c.V);
            std::array<int, 6> d{};
            for (std::size_t k = 0; k < 6; ++k)
                d[k] = static_cast<int>(m[k][k].re().get_num().get_si());
            t.diagonals.emplace_back(name, d);
        }
    } else if (kind == "mdeg") {
        for (const auto& [name, unused] : golden_mdeg())
            t.mdeg.emplace_back(name, op_mdeg(c.reg.at(name)));
    } else {
        throw UnknownTable(kind);
    }
    return t;
}

} // namespace

std::string table_text(const std::string& kind) {
    TableData t = compute_table(kind);
    std::ostringstream os;
    if (kind == "isotypical") {
        for (const auto& [deg, row] : t.isotypical.mult) {
            os << "degree " << deg << ":";
            for (const auto& [w, n] : row) os << "  weight " << w << " -> " << n;
            os << "\n";
        }
    } else if (kind == "weights") {
        for (const auto& [name, w] : t.weights)
            os << name << "  (" << w[0] << "," << w[1] << "," << w[2] << ")\n";
    } else if (kind == "diagonals") {
        for (const auto& [name, d] : t.diagonals) {
            os << name << "  (";
            for (std::size_t k = 0; k < 6; ++k) os << (k ? "," : "") << d[k];
            os << ")\n";
        }
    } else {
        for (const auto& [name, d] : t.mdeg)
            os << name << "  " << mdeg_str(d) << "\n";
    }
    return os.str();
}

std::string table_json(const std::string& kind) {
    TableData t = compute_table(kind);
    ordered_json j;
    j["kind"] = kind;
    if (kind == "isotypical") {
        ordered_json degrees = ordered_json::array();
        for (const auto& [deg, row] : t.isotypical.mult) {
            ordered_json weights = ordered_json::array();
            for (const auto& [w, n] : row) {
                ordered_json e;
                e["weight"] = w;
                e["dim"] = n;
                weights.push_back(std::move(e));
            }
            ordered_json d;
            d["degree"] = deg;
            d["weights"] = std::move(weights);
            degrees.push_back(std::move(d));
        }
        j["degrees"] = std::move(degrees);
    } else {
        ordered_json rows = ordered_json::array();
        if (kind == "weights") {
            for (const auto& [name, w] : t.weights) {
                ordered_json r;
                r["name"] = name;
                r["weight"] = {w[0], w[1], w[2]};
                rows.push_back(std::move(r));
            }
        } else if (kind == "diagonals") {
            for (const auto& [name, d] : t.diagonals) {
                ordered_json r;
                r["name"] = name;
                r["diagonal"] = {d[0], d[1], d[2], d[3], d[4], d[5]};
                rows.push_back(std::move(r));
            }
        } else {
            for (const auto& [name, d] : t.mdeg) {
                ordered_json r;
                r["name"] = name;
                r["mdeg"] = {d[0], d[1], d[2]};
                rows.push_back(std::move(r));
            }
        }
        j["rows"] = std::move(rows);
    }
    return j.dump(2) + "\n";
}

std::string closure_text(const OperatorSpan& s) {
    std::ostringstream os;
    os << "dimension " << s.dim() << "\n";
    os << "pivots:";
    for (int p : s.pivots()) os << " " << p;
    os << "\nbasis (by provenance):\n";
    for (const std::string& n : s.names()) os << "  " << n << "\n";
    return os.str();
}

std::string closure_json(const OperatorSpan& s,
                         const std::vector<std::string>& generator_names) {
    ordered_json j;
    j["generators"] = generator_names;
    j["dim"] = s.dim();
    j["pivots"] = s.pivots();
    j["basis"] = s.names();
    return j.dump(2) + "\n";
}

} // namespace wsd
