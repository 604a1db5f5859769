#include "wsd/exterior.hpp"

#include <bit>
#include <ostream>
#include <sstream>

namespace wsd {

std::string generator_name(int bit) {
    return "v" + std::to_string(generator_i(bit)) + std::to_string(generator_j(bit));
}

int parse_generator(const std::string& name) {
    if (name.size() == 3 && name[0] == 'v' &&
        (name[1] == '1' || name[1] == '2') &&
        name[2] >= '0' && name[2] <= '2') {
        return generator_bit(name[1] - '0', name[2] - '0');
    }
    throw ParseError("bad generator '" + name + "'");
}

int mask_degree(Mask m) { return std::popcount(m); }

std::string monomial_str(Mask m) {
    if (m == 0) return "1";
    std::string out;
    for (int b = 0; b < kGenerators; ++b) {
        if (!(m >> b & 1u)) continue;
        if (!out.empty()) out += "^";
        out += generator_name(b);
    }
    return out;
}

Mask parse_monomial(const std::string& s) {
    if (s == "1") return 0;
    Mask m = 0;
    int prev = -1;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t next = s.find('^', pos);
        if (next == std::string::npos) next = s.size();
        int b = parse_generator(s.substr(pos, next - pos));
        if (b <= prev) throw ParseError("generators out of order in '" + s + "'");
        prev = b;
        m |= 1u << b;
        pos = next + 1;
        if (next == s.size()) break;
    }
    return m;
}

SignedMask wedge_masks(Mask a, Mask b) {
    if (a & b) return {0, 0};
    // inversions between the concatenated increasing sequences:
    // pairs (x in a, y in b) with x > y
    int inv = 0;
    for (int y = 0; y < kGenerators; ++y)
        if (b >> y & 1u) inv += std::popcount(a >> (y + 1));
    return {(inv & 1) ? -1 : 1, a | b};
}

SignedMask contract_mask(int bit, Mask a) {
    if (!(a >> bit & 1u)) return {0, 0};
    int before = std::popcount(a & ((1u << bit) - 1u));
    return {(before & 1) ? -1 : 1, a & ~(1u << bit)};
}

Multivector Multivector::scalar(const Gaussian& c) { return monomial(0, c); }

Multivector Multivector::monomial(Mask m, const Gaussian& c) {
    Multivector v;
    v.add_term(m, c);
    return v;
}

Gaussian Multivector::coeff(Mask m) const {
    auto it = c_.find(m);
    return it == c_.end() ? Gaussian(0) : it->second;
}

int Multivector::degree() const {
    int d = -1;
    for (const auto& [m, c] : c_) d = std::max(d, mask_degree(m));
    return d;
}

bool Multivector::is_homogeneous() const {
    int d = -1;
    for (const auto& [m, c] : c_) {
        if (d == -1) d = mask_degree(m);
        else if (mask_degree(m) != d) return false;
    }
    return true;
}

void Multivector::add_term(Mask m, const Gaussian& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = c_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) c_.erase(it);
    }
}

Multivector Multivector::operator+(const Multivector& o) const {
    Multivector r = *this;
    r += o;
    return r;
}

Multivector& Multivector::operator+=(const Multivector& o) {
    for (const auto& [m, c] : o.c_) add_term(m, c);
    return *this;
}

Multivector Multivector::operator-(const Multivector& o) const {
    Multivector r = *this;
    for (const auto& [m, c] : o.c_) r.add_term(m, -c);
    return r;
}

Multivector Multivector::operator-() const {
    Multivector r;
    for (const auto& [m, c] : c_) r.c_.emplace(m, -c);
    return r;
}

Multivector Multivector::scaled(const Gaussian& s) const {
    Multivector r;
    if (s.is_zero()) return r;
    for (const auto& [m, c] : c_) r.c_.emplace(m, c * s);
    return r;
}

Multivector Multivector::wedge(const Multivector& o) const {
    Multivector r;
    for (const auto& [ma, ca] : c_) {
        for (const auto& [mb, cb] : o.c_) {
            auto [sign, m] = wedge_masks(ma, mb);
            if (sign == 0) continue;
            r.add_term(m, sign < 0 ? -(ca * cb) : ca * cb);
        }
    }
    return r;
}

std::string Multivector::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : c_) {
        if (!first) os << " + ";
        first = false;
        if (m == 0) {
            os << c.str();
            continue;
        }
        if (c == Gaussian(1)) os << monomial_str(m);
        else if (c == Gaussian(-1)) os << "-" << monomial_str(m);
        else {
            std::string cs = c.str();
            bool compound = cs.find_first_of("+-", 1) != std::string::npos;
            if (compound) os << "(" << cs << ")";
            else os << cs;
            os << "*" << monomial_str(m);
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Multivector& v) {
    return os << v.str();
}

Multivector gen(int i, int j) {
    return Multivector::monomial(1u << generator_bit(i, j));
}

Multivector apply_E(int bit, const Multivector& v) {
    Multivector r;
    for (const auto& [m, c] : v.terms()) {
        auto [sign, out] = wedge_masks(1u << bit, m);
        if (sign == 0) continue;
        r.add_term(out, sign < 0 ? -c : c);
    }
    return r;
}

Multivector apply_I(int bit, const Multivector& v) {
    Multivector r;
    for (const auto& [m, c] : v.terms()) {
        auto [sign, out] = contract_mask(bit, m);
        if (sign == 0) continue;
        r.add_term(out, sign < 0 ? -c : c);
    }
    return r;
}

Gaussian inner(const Multivector& a, const Multivector& b) {
    Gaussian s = 0;
    for (const auto& [m, c] : a.terms()) {
        Gaussian cb = b.coeff(m);
        if (!cb.is_zero()) s += c.conj() * cb;
    }
    return s;
}

} // namespace wsd
