#include "wsd/clifford.hpp"

namespace wsd {

namespace {

constexpr int kHead = 64 * 64;   // operator coordinates; bookkeeping tail starts here

SparseVec dense_to_sparse(const std::vector<Gaussian>& x) {
    SparseVec v;
    for (std::size_t k = 0; k < x.size(); ++k)
        if (!x[k].is_zero()) v.emplace(static_cast<int>(k), x[k]);
    return v;
}

std::vector<Gaussian> sparse_to_dense(const SparseVec& v, int n) {
    std::vector<Gaussian> x(static_cast<std::size_t>(n), Gaussian(0));
    for (const auto& [idx, val] : v) x[static_cast<std::size_t>(idx)] = val;
    return x;
}

// columns of ad(J) on the quadratic space, in coordinates
std::vector<std::vector<Gaussian>> adj_columns(const QuadraticSpace& q, const Operator& J) {
    std::vector<std::vector<Gaussian>> cols;
    cols.reserve(kQuadraticDim);
    for (int a = 0; a < kQuadraticDim; ++a) {
        auto c = q.coordinates(bracket(J, q.basis()[static_cast<std::size_t>(a)]));
        if (!c) throw Error("quadratic space is not closed under bracketing with J");
        cols.push_back(std::move(*c));
    }
    return cols;
}

// null-space basis of a dense matrix (rows x cols) by full row reduction
std::vector<std::vector<Gaussian>> dense_kernel(std::vector<std::vector<Gaussian>> m) {
    if (m.empty()) return {};
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    std::vector<int> pivot_row_of_col(static_cast<std::size_t>(cols), -1);
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i)
            if (!m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)].is_zero()) { pr = i; break; }
        if (pr < 0) continue;
        std::swap(m[static_cast<std::size_t>(r)], m[static_cast<std::size_t>(pr)]);
        Gaussian lead = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        for (int k = 0; k < cols; ++k)
            m[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] =
                m[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] / lead;
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            Gaussian f = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
            if (f.is_zero()) continue;
            for (int k = 0; k < cols; ++k)
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] -=
                    f * m[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)];
        }
        pivot_row_of_col[static_cast<std::size_t>(c)] = r;
        ++r;
    }
    std::vector<std::vector<Gaussian>> kernel;
    for (int f = 0; f < cols; ++f) {
        if (pivot_row_of_col[static_cast<std::size_t>(f)] >= 0) continue;
        std::vector<Gaussian> x(static_cast<std::size_t>(cols), Gaussian(0));
        x[static_cast<std::size_t>(f)] = 1;
        for (int c = 0; c < cols; ++c) {
            int pr = pivot_row_of_col[static_cast<std::size_t>(c)];
            if (pr >= 0) x[static_cast<std::size_t>(c)] = -m[static_cast<std::size_t>(pr)][static_cast<std::size_t>(f)];
        }
        kernel.push_back(std::move(x));
    }
    return kernel;
}

} // namespace

QuadraticSpace::QuadraticSpace() : span_(kHead) {
    for (int j = 0; j < 3; ++j)
        for (int i = 1; i <= 2; ++i) {
            gen_names_.push_back("E" + std::to_string(i) + std::to_string(j));
            gens_.push_back(Operator::E(generator_bit(i, j)));
        }
    for (int j = 0; j < 3; ++j)
        for (int i = 1; i <= 2; ++i) {
            gen_names_.push_back("I" + std::to_string(i) + std::to_string(j));
            gens_.push_back(Operator::I(generator_bit(i, j)));
        }
    const int n = static_cast<int>(gens_.size());
    Gaussian half = Gaussian::rational(1, 2);
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            pairs_.emplace_back(a, b);
            std::string name = "1/2*[" + gen_names_[static_cast<std::size_t>(a)] + "," +
                               gen_names_[static_cast<std::size_t>(b)] + "]";
            Operator op = bracket(gens_[static_cast<std::size_t>(a)],
                                  gens_[static_cast<std::size_t>(b)]).scaled(half);
            SparseVec v = op.vectorize();
            v.emplace(kHead + static_cast<int>(basis_.size()), Gaussian(1));
            if (!span_.insert(std::move(v))) throw DependentSet(name);
            basis_names_.push_back(std::move(name));
            basis_.push_back(std::move(op));
        }
    }
}

std::optional<std::vector<Gaussian>> QuadraticSpace::coordinates(const Operator& op) const {
    auto red = span_.reduce(op.vectorize());
    if (!red.member) return std::nullopt;
    std::vector<Gaussian> x(static_cast<std::size_t>(dim()), Gaussian(0));
    for (const auto& [idx, val] : red.residual)
        if (idx >= kHead) x[static_cast<std::size_t>(idx - kHead)] = -val;
    return x;
}

Operator QuadraticSpace::from_coordinates(const std::vector<Gaussian>& x) const {
    Operator out;
    for (std::size_t k = 0; k < x.size() && k < basis_.size(); ++k) {
        if (x[k].is_zero()) continue;
        out = out + basis_[k].scaled(x[k]);
    }
    return out;
}

void QuadraticSpace::ensure_structure() const {
    if (!sc_.empty()) return;
    sc_.assign(static_cast<std::size_t>(dim()),
               std::vector<SparseVec>(static_cast<std::size_t>(dim())));
    for (int a = 0; a < dim(); ++a) {
        for (int b = a + 1; b < dim(); ++b) {
            auto c = coordinates(bracket(basis_[static_cast<std::size_t>(a)],
                                         basis_[static_cast<std::size_t>(b)]));
            if (!c) throw Error("quadratic space is not closed under its own brackets");
            SparseVec v = dense_to_sparse(*c);
            SparseVec neg;
            for (const auto& [idx, val] : v) neg.emplace(idx, -val);
            sc_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = std::move(v);
            sc_[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = std::move(neg);
        }
    }
}

const SparseVec& QuadraticSpace::structure(int a, int b) const {
    ensure_structure();
    return sc_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

SparseVec QuadraticSpace::bracket_coords(const SparseVec& x, const SparseVec& y) const {
    ensure_structure();
    SparseVec r;
    for (const auto& [a, xa] : x)
        for (const auto& [b, yb] : y) {
            if (a == b) continue;
            axpy(r, xa * yb, sc_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
        }
    return r;
}

const QuadraticSpace& quadratic_space() {
    static const QuadraticSpace q;
    return q;
}

std::map<int, int> j_weight_split(const QuadraticSpace& q, const Operator& J) {
    auto cols = adj_columns(q, J);
    std::map<int, int> split;
    int total = 0;
    for (int k = -4; k <= 4; ++k) {
        ExactSpan rank_span(kQuadraticDim);
        Gaussian shift = Gaussian::i(k);
        for (int a = 0; a < kQuadraticDim; ++a) {
            SparseVec v = dense_to_sparse(cols[static_cast<std::size_t>(a)]);
            // subtract k*i on the diagonal
            auto it = v.find(a);
            if (it == v.end()) {
                if (!shift.is_zero()) v.emplace(a, -shift);
            } else {
                it->second -= shift;
                if (it->second.is_zero()) v.erase(it);
            }
            rank_span.insert(std::move(v));
        }
        int dim_k = kQuadraticDim - rank_span.dim();
        if (dim_k > 0) {
            split[k] = dim_k;
            total += dim_k;
        }
    }
    if (total != kQuadraticDim)
        throw Error("ad(J) spectrum scan (|k| <= 4) does not exhaust the quadratic space");
    return split;
}

std::vector<std::vector<Gaussian>> j_weight_eigenbasis(const QuadraticSpace& q,
                                                       const Operator& J, int k) {
    auto cols = adj_columns(q, J);
    // rows x cols dense matrix of ad(J) - k*i
    std::vector<std::vector<Gaussian>> m(kQuadraticDim,
                                         std::vector<Gaussian>(kQuadraticDim, Gaussian(0)));
    for (int a = 0; a < kQuadraticDim; ++a)
        for (int b = 0; b < kQuadraticDim; ++b)
            m[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] =
                cols[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    Gaussian shift = Gaussian::i(k);
    for (int a = 0; a < kQuadraticDim; ++a)
        m[static_cast<std::size_t>(a)][static_cast<std::size_t>(a)] -= shift;
    return dense_kernel(std::move(m));
}

std::vector<std::pair<std::string, Operator>> j_invariant_quadratics() {
    std::array<WOps, 3> w = {build_w_ops(0), build_w_ops(1), build_w_ops(2)};
    auto Ew = [&](int j) { return w[static_cast<std::size_t>(j)].Ew; };
    auto Ewbar = [&](int j) { return w[static_cast<std::size_t>(j)].Ewbar; };
    auto Iw = [&](int j) { return w[static_cast<std::size_t>(j)].Iw; };
    auto Iwbar = [&](int j) { return w[static_cast<std::size_t>(j)].Iwbar; };

    std::vector<std::pair<std::string, Operator>> out;
    auto add = [&](const std::string& na, const Operator& a,
                   const std::string& nb, const Operator& b) {
        out.emplace_back("[" + na + "," + nb + "]", bracket(a, b));
    };
    const std::array<std::pair<int, int>, 6> mixed = {{{0, 1}, {0, 2}, {1, 2}, {1, 0}, {2, 0}, {2, 1}}};

    for (auto [j, k] : mixed)
        add("Ew" + std::to_string(j), Ew(j), "Ewbar" + std::to_string(k), Ewbar(k));
    for (auto [j, k] : mixed)
        add("Iw" + std::to_string(j), Iw(j), "Iwbar" + std::to_string(k), Iwbar(k));
    for (int j = 0; j < 3; ++j)
        add("Ew" + std::to_string(j), Ew(j), "Ewbar" + std::to_string(j), Ewbar(j));
    for (int j = 0; j < 3; ++j)
        add("Iw" + std::to_string(j), Iw(j), "Iwbar" + std::to_string(j), Iwbar(j));
    for (auto [j, k] : mixed)
        add("Ew" + std::to_string(j), Ew(j), "Iw" + std::to_string(k), Iw(k));
    for (auto [j, k] : mixed)
        add("Ewbar" + std::to_string(j), Ewbar(j), "Iwbar" + std::to_string(k), Iwbar(k));
    for (int j = 0; j < 3; ++j)
        add("Ew" + std::to_string(j), Ew(j), "Iw" + std::to_string(j), Iw(j));
    for (int j = 0; j < 3; ++j)
        add("Ewbar" + std::to_string(j), Ewbar(j), "Iwbar" + std::to_string(j), Iwbar(j));
    return out;
}

OperatorSpan span_closure_quadratic(const QuadraticSpace& q,
                                    const std::vector<std::pair<std::string, Operator>>& generators,
                                    int max_rounds) {
    std::vector<std::pair<std::string, SparseVec>> gens;
    gens.reserve(generators.size());
    for (const auto& [name, op] : generators) {
        auto c = q.coordinates(op);
        if (!c) throw Error("closure generator " + name + " lies outside the quadratic space");
        gens.emplace_back(name, dense_to_sparse(*c));
    }

    ExactSpan span(kQuadraticDim);
    std::vector<SparseVec> frontier;
    for (const auto& [name, v] : gens)
        if (span.insert(v)) frontier.push_back(v);

    for (int round = 1; !frontier.empty(); ++round) {
        if (round > max_rounds) throw ClosureNotReached(max_rounds);
        std::vector<SparseVec> next;
        for (const SparseVec& f : frontier)
            for (const auto& [gname, g] : gens) {
                SparseVec b = q.bracket_coords(f, g);
                if (b.empty()) continue;
                if (span.insert(b)) next.push_back(std::move(b));
            }
        frontier = std::move(next);
    }

    OperatorSpan out;
    for (std::size_t r = 0; r < span.rows().size(); ++r) {
        Operator op = q.from_coordinates(sparse_to_dense(span.rows()[r], kQuadraticDim));
        out.insert(op, "c2:" + std::to_string(span.pivots()[r]));
    }
    return out;
}

} // namespace wsd
