#include "wsd/reptheory.hpp"

#include <bit>
#include <sstream>

namespace wsd {

std::string IsotypicalTable::str() const {
    std::ostringstream os;
    bool first_deg = true;
    for (const auto& [deg, row] : mult) {
        if (!first_deg) os << "; ";
        first_deg = false;
        os << "deg " << deg << ":";
        for (const auto& [w, n] : row) os << " " << w << "->" << n;
    }
    return os.str();
}

const std::vector<WMonomial>& w_monomials() {
    static const std::vector<WMonomial> all = [] {
        std::vector<WMonomial> out;
        for (Mask S = 0; S < 8; ++S) {
            for (Mask T = 0; T < 8; ++T) {
                Multivector v = Multivector::scalar(1);
                std::string name;
                for (int j = 0; j < 3; ++j)
                    if (S >> j & 1u) {
                        v = v.wedge(w_form(j));
                        name += (name.empty() ? "" : "^") + ("w" + std::to_string(j));
                    }
                for (int j = 0; j < 3; ++j)
                    if (T >> j & 1u) {
                        v = v.wedge(wbar_form(j));
                        name += (name.empty() ? "" : "^") + ("wbar" + std::to_string(j));
                    }
                if (name.empty()) name = "1";
                int s = std::popcount(S), t = std::popcount(T);
                out.push_back(WMonomial{S, T, s + t, t - s, std::move(v), std::move(name)});
            }
        }
        return out;
    }();
    return all;
}

IsotypicalTable isotypical_table() {
    IsotypicalTable t;
    for (const WMonomial& wm : w_monomials()) ++t.mult[wm.degree][wm.weight];
    return t;
}

Gaussian trace6(const Matrix6& m) {
    Gaussian t = 0;
    for (std::size_t k = 0; k < 6; ++k) t += m[k][k];
    return t;
}

bool is_zero6(const Matrix6& m) {
    for (const auto& row : m)
        for (const auto& e : row)
            if (!e.is_zero()) return false;
    return true;
}

std::string matrix6_str(const Matrix6& m) {
    std::ostringstream os;
    os << "[";
    for (std::size_t r = 0; r < 6; ++r) {
        if (r) os << "; ";
        for (std::size_t c = 0; c < 6; ++c) {
            if (c) os << " ";
            os << m[r][c].str();
        }
    }
    os << "]";
    return os.str();
}

SparseVec vectorize6(const Matrix6& m) {
    SparseVec v;
    for (std::size_t r = 0; r < 6; ++r)
        for (std::size_t c = 0; c < 6; ++c)
            if (!m[r][c].is_zero()) v.emplace(static_cast<int>(6 * r + c), m[r][c]);
    return v;
}

namespace {

constexpr int kHead = 64;   // multivector coordinates; bookkeeping tail after

SparseVec mv_to_vec(const Multivector& v, int extra = -1) {
    SparseVec out;
    for (const auto& [m, c] : v.terms()) out.emplace(static_cast<int>(m), c);
    if (extra >= 0) out.emplace(kHead + extra, Gaussian(1));
    return out;
}

Multivector head_to_mv(const SparseVec& v) {
    Multivector out;
    for (const auto& [idx, c] : v)
        if (idx < kHead) out.add_term(static_cast<Mask>(idx), c);
    return out;
}

} // namespace

SubrepV::SubrepV() : span_(kHead) {
    Multivector w0 = w_form(0), w1 = w_form(1), w2 = w_form(2);
    Multivector top = w0.wedge(w1).wedge(w2);
    basis_[0] = w0.wedge(w1);
    basis_[1] = w0.wedge(w2);
    basis_[2] = w1.wedge(w2);
    basis_[3] = top.wedge(wbar_form(0));
    basis_[4] = top.wedge(wbar_form(1));
    basis_[5] = top.wedge(wbar_form(2));
    for (int k = 0; k < 6; ++k)
        if (!span_.insert(mv_to_vec(basis_[static_cast<std::size_t>(k)], k)))
            throw DependentSet("subrep basis vector " + std::to_string(k + 1));
}

std::array<mpq_class, 6> SubrepV::norms_squared() const {
    std::array<mpq_class, 6> out;
    for (std::size_t k = 0; k < 6; ++k) {
        Gaussian n = inner(basis_[k], basis_[k]);
        out[k] = n.re();   // hermitian norms are real
    }
    return out;
}

SubrepV::Coords SubrepV::coordinates(const Multivector& v) const {
    auto red = span_.reduce(mv_to_vec(v));
    Coords c;
    c.inside = red.member;
    c.residual = head_to_mv(red.residual);
    for (auto& g : c.coeffs) g = 0;
    for (const auto& [idx, val] : red.residual)
        if (idx >= kHead) c.coeffs[static_cast<std::size_t>(idx - kHead)] = -val;
    return c;
}

Matrix6 restrict_to_v(const Operator& op, const SubrepV& v) {
    Matrix6 m;
    for (int h = 0; h < 6; ++h) {
        auto c = v.coordinates(op.apply(v.basis()[static_cast<std::size_t>(h)]));
        if (!c.inside) throw NotInvariant(h, c.residual.str());
        for (std::size_t k = 0; k < 6; ++k) m[k][static_cast<std::size_t>(h)] = c.coeffs[k];
    }
    return m;
}

int restricted_rank(const std::vector<Operator>& ops, const SubrepV& v) {
    ExactSpan span(36);
    for (const Operator& op : ops) span.insert(vectorize6(restrict_to_v(op, v)));
    return span.dim();
}

} // namespace wsd
