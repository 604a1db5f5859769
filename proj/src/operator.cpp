#include "wsd/operator.hpp"

#include <sstream>

namespace wsd {

Operator Operator::identity() {
    return from_columns([](Mask m) { return Multivector::monomial(m); });
}

Operator Operator::from_columns(const std::function<Multivector(Mask)>& image) {
    Operator t;
    for (Mask m = 0; m < kMaskCount; ++m) t.col_[m] = image(m);
    return t;
}

Operator Operator::wedge_by(const Multivector& form) {
    return from_columns([&](Mask m) { return form.wedge(Multivector::monomial(m)); });
}

Operator Operator::E(int bit) {
    return from_columns([bit](Mask m) { return apply_E(bit, Multivector::monomial(m)); });
}

Operator Operator::I(int bit) {
    return from_columns([bit](Mask m) { return apply_I(bit, Multivector::monomial(m)); });
}

Multivector Operator::apply(const Multivector& v) const {
    Multivector r;
    for (const auto& [m, c] : v.terms()) r += col_[m].scaled(c);
    return r;
}

Operator Operator::operator+(const Operator& o) const {
    Operator r;
    for (Mask m = 0; m < kMaskCount; ++m) r.col_[m] = col_[m] + o.col_[m];
    return r;
}

Operator Operator::operator-(const Operator& o) const {
    Operator r;
    for (Mask m = 0; m < kMaskCount; ++m) r.col_[m] = col_[m] - o.col_[m];
    return r;
}

Operator Operator::operator-() const {
    Operator r;
    for (Mask m = 0; m < kMaskCount; ++m) r.col_[m] = -col_[m];
    return r;
}

Operator Operator::operator*(const Operator& o) const {
    Operator r;
    for (Mask m = 0; m < kMaskCount; ++m) r.col_[m] = apply(o.col_[m]);
    return r;
}

Operator Operator::scaled(const Gaussian& c) const {
    Operator r;
    for (Mask m = 0; m < kMaskCount; ++m) r.col_[m] = col_[m].scaled(c);
    return r;
}

Operator Operator::adjoint() const {
    Operator r;
    for (Mask c = 0; c < kMaskCount; ++c)
        for (const auto& [row, val] : col_[c].terms())
            r.col_[row].add_term(c, val.conj());
    return r;
}

Gaussian Operator::trace() const {
    Gaussian t = 0;
    for (Mask m = 0; m < kMaskCount; ++m) t += col_[m].coeff(m);
    return t;
}

bool Operator::is_zero() const {
    for (Mask m = 0; m < kMaskCount; ++m)
        if (!col_[m].is_zero()) return false;
    return true;
}

int Operator::nonzeros() const {
    int n = 0;
    for (Mask m = 0; m < kMaskCount; ++m) n += static_cast<int>(col_[m].terms().size());
    return n;
}

std::string Operator::brief(int max_entries) const {
    std::ostringstream os;
    int n = 0;
    for (Mask c = 0; c < kMaskCount; ++c) {
        for (const auto& [row, val] : col_[c].terms()) {
            if (n == max_entries) {
                os << ", ...";
                return os.str();
            }
            if (n) os << ", ";
            os << "(" << monomial_str(row) << "; " << monomial_str(c) << ")=" << val.str();
            ++n;
        }
    }
    return n == 0 ? "0" : os.str();
}

std::map<int, Gaussian> Operator::vectorize() const {
    std::map<int, Gaussian> v;
    for (Mask c = 0; c < kMaskCount; ++c)
        for (const auto& [row, val] : col_[c].terms())
            v.emplace(static_cast<int>(kMaskCount * row + c), val);
    return v;
}

Operator Operator::from_vector(const std::map<int, Gaussian>& v) {
    Operator t;
    for (const auto& [idx, val] : v) {
        Mask row = static_cast<Mask>(idx) / kMaskCount;
        Mask col = static_cast<Mask>(idx) % kMaskCount;
        t.col_[col].add_term(row, val);
    }
    return t;
}

Operator bracket(const Operator& a, const Operator& b) {
    return a * b - b * a;
}

Operator anticommutator(const Operator& a, const Operator& b) {
    return a * b + b * a;
}

} // namespace wsd
