#include "wsd/canon_ops.hpp"

namespace wsd {

namespace {

Multivector pair_form(int ja, int jb) {
    // v1a^v1b + v2a^v2b
    return gen(1, ja).wedge(gen(1, jb)) + gen(2, ja).wedge(gen(2, jb));
}

} // namespace

Multivector omega1() { return pair_form(0, 1); }
Multivector omega2() { return pair_form(0, 2); }
Multivector omegaD() { return pair_form(1, 2); }

Multivector w_form(int j) {
    return gen(1, j) + gen(2, j).scaled(Gaussian::i());
}

Multivector wbar_form(int j) {
    return gen(1, j) + gen(2, j).scaled(Gaussian::i(-1));
}

Multivector column_volume(int j) {
    return gen(1, j).wedge(gen(2, j));
}

Operator build_L(int j) {
    switch (j) {
        case 0: return Operator::wedge_by(omegaD());
        case 1: return Operator::wedge_by(omega2()).scaled(-1);
        case 2: return Operator::wedge_by(omega1());
    }
    throw Error("column index out of range");
}

Operator build_V(int j) {
    return Operator::E(generator_bit(1, j)) * Operator::E(generator_bit(2, j));
}

Operator build_Lambda(int j) { return build_L(j).adjoint(); }

Operator build_A(int j) { return build_V(j).adjoint(); }

Operator build_J() {
    // as a derivation: each generator in a monomial is replaced in place,
    // J(v1j) = v2j and J(v2j) = -v1j, the term dying if the partner is
    // already present
    Operator derivation = Operator::from_columns([](Mask m) {
        Multivector out;
        for (int bit = 0; bit < kGenerators; ++bit) {
            if (!(m >> bit & 1u)) continue;
            int partner = bit ^ 1;
            if (m >> partner & 1u) continue;
            auto [rs, removed] = contract_mask(bit, m);
            auto [ws, replaced] = wedge_masks(1u << partner, removed);
            int sign = rs * ws * ((bit & 1) ? -1 : 1);
            out.add_term(replaced, Gaussian(sign));
        }
        return out;
    });

    // independently, as sum_j (E_2j I_1j - E_1j I_2j)
    Operator assembled;
    for (int j = 0; j < 3; ++j) {
        Operator e1 = Operator::E(generator_bit(1, j));
        Operator e2 = Operator::E(generator_bit(2, j));
        Operator i1 = Operator::I(generator_bit(1, j));
        Operator i2 = Operator::I(generator_bit(2, j));
        assembled = assembled + (e2 * i1 - e1 * i2);
    }

    if (derivation != assembled)
        throw ConstructionMismatch("the derivation and generator-sum forms of J differ");
    return derivation;
}

WOps build_w_ops(int j) {
    Operator e1 = Operator::E(generator_bit(1, j));
    Operator e2 = Operator::E(generator_bit(2, j));
    Operator i1 = Operator::I(generator_bit(1, j));
    Operator i2 = Operator::I(generator_bit(2, j));
    Gaussian i = Gaussian::i();
    return WOps{
        e1 + e2.scaled(i),          // E_wj
        e1 - e2.scaled(i),          // E_wbarj
        i1 - i2.scaled(i),          // I_wj
        i1 + i2.scaled(i),          // I_wbarj
    };
}

void Registry::add(const std::string& name, Operator op) {
    auto it = ops_.find(name);
    if (it == ops_.end()) {
        order_.push_back(name);
        ops_.emplace(name, std::move(op));
    } else {
        it->second = std::move(op);
    }
}

bool Registry::contains(const std::string& name) const { return ops_.count(name) != 0; }

const Operator& Registry::at(const std::string& name) const {
    auto it = ops_.find(name);
    if (it == ops_.end()) throw UnknownOperator(name);
    return it->second;
}

Registry canonical_registry() {
    Registry r;
    for (int j = 0; j < 3; ++j)
        for (int i = 1; i <= 2; ++i)
            r.add("E" + std::to_string(i) + std::to_string(j), Operator::E(generator_bit(i, j)));
    for (int j = 0; j < 3; ++j)
        for (int i = 1; i <= 2; ++i)
            r.add("I" + std::to_string(i) + std::to_string(j), Operator::I(generator_bit(i, j)));
    for (int j = 0; j < 3; ++j) r.add("L" + std::to_string(j), build_L(j));
    for (int j = 0; j < 3; ++j) r.add("Lam" + std::to_string(j), build_Lambda(j));
    for (int j = 0; j < 3; ++j) r.add("V" + std::to_string(j), build_V(j));
    for (int j = 0; j < 3; ++j) r.add("A" + std::to_string(j), build_A(j));
    r.add("J", build_J());
    for (int j = 0; j < 3; ++j) {
        WOps w = build_w_ops(j);
        r.add("Ew" + std::to_string(j), w.Ew);
        r.add("Ewbar" + std::to_string(j), w.Ewbar);
        r.add("Iw" + std::to_string(j), w.Iw);
        r.add("Iwbar" + std::to_string(j), w.Iwbar);
    }
    r.add("Id", Operator::identity());
    return r;
}

int PermS3::sign() const {
    int inv = 0;
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b)
            if (map[static_cast<std::size_t>(a)] > map[static_cast<std::size_t>(b)]) ++inv;
    return (inv & 1) ? -1 : 1;
}

PermS3 PermS3::inverse() const {
    PermS3 r{};
    for (int j = 0; j < 3; ++j) r.map[static_cast<std::size_t>(map[static_cast<std::size_t>(j)])] = j;
    return r;
}

std::string PermS3::str() const {
    if (map == std::array<int, 3>{0, 1, 2}) return "id";
    if (map == std::array<int, 3>{1, 0, 2}) return "(01)";
    if (map == std::array<int, 3>{2, 1, 0}) return "(02)";
    if (map == std::array<int, 3>{0, 2, 1}) return "(12)";
    if (map == std::array<int, 3>{1, 2, 0}) return "(012)";
    return "(021)";
}

const std::array<PermS3, 6>& PermS3::all() {
    static const std::array<PermS3, 6> perms = {
        PermS3{{0, 1, 2}}, PermS3{{1, 0, 2}}, PermS3{{2, 1, 0}},
        PermS3{{0, 2, 1}}, PermS3{{1, 2, 0}}, PermS3{{2, 0, 1}},
    };
    return perms;
}

Operator permutation_operator(const PermS3& s) {
    return Operator::from_columns([&](Mask m) {
        // send each v_ij to v_i,sigma(j) and re-sort, tracking the sign
        Mask image = 0;
        std::vector<int> bits;
        for (int b = 0; b < kGenerators; ++b) {
            if (!(m >> b & 1u)) continue;
            int nb = generator_bit(generator_i(b), s.apply(generator_j(b)));
            bits.push_back(nb);
            image |= 1u << nb;
        }
        int inv = 0;
        for (std::size_t a = 0; a < bits.size(); ++a)
            for (std::size_t b = a + 1; b < bits.size(); ++b)
                if (bits[a] > bits[b]) ++inv;
        return Multivector::monomial(image, Gaussian((inv & 1) ? -1 : 1));
    });
}

Operator s3_conjugate(const PermS3& s, const Operator& t) {
    return permutation_operator(s) * t * permutation_operator(s.inverse());
}

} // namespace wsd
