#include "wsd/span.hpp"

#include <algorithm>
#include <cstdlib>

namespace wsd {

void axpy(SparseVec& v, const Gaussian& c, const SparseVec& w) {
    if (c.is_zero()) return;
    for (const auto& [idx, val] : w) {
        auto it = v.find(idx);
        if (it == v.end()) {
            v.emplace(idx, c * val);
        } else {
            it->second += c * val;
            if (it->second.is_zero()) v.erase(it);
        }
    }
}

namespace {

int head_pivot(const SparseVec& v, int limit) {
    for (const auto& [idx, val] : v)
        if (idx < limit) return idx;
    return -1;
}

Gaussian at(const SparseVec& v, int idx) {
    auto it = v.find(idx);
    return it == v.end() ? Gaussian(0) : it->second;
}

} // namespace

bool ExactSpan::insert(SparseVec v) {
    // eliminate existing pivots
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        Gaussian c = at(v, pivots_[r]);
        if (!c.is_zero()) axpy(v, -c, rows_[r]);
    }
    int p = head_pivot(v, pivot_limit_);
    if (p < 0) return false;
    // normalize the pivot to 1
    Gaussian lead = at(v, p);
    SparseVec row;
    for (const auto& [idx, val] : v) row.emplace(idx, val / lead);
    // clear the new pivot from the old rows (full reduction)
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        Gaussian c = at(rows_[r], p);
        if (!c.is_zero()) axpy(rows_[r], -c, row);
    }
    auto where = std::lower_bound(pivots_.begin(), pivots_.end(), p);
    std::size_t k = static_cast<std::size_t>(where - pivots_.begin());
    pivots_.insert(where, p);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(k), std::move(row));
    return true;
}

ExactSpan::Reduction ExactSpan::reduce(SparseVec v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        Gaussian c = at(v, pivots_[r]);
        if (!c.is_zero()) axpy(v, -c, rows_[r]);
    }
    bool member = head_pivot(v, pivot_limit_) < 0;
    return Reduction{member, std::move(v)};
}

std::vector<Operator> OperatorSpan::echelon_basis() const {
    std::vector<Operator> out;
    out.reserve(span_.rows().size());
    for (const SparseVec& row : span_.rows()) out.push_back(Operator::from_vector(row));
    return out;
}

bool OperatorSpan::insert(const Operator& op, const std::string& name) {
    if (!span_.insert(op.vectorize())) return false;
    names_.push_back(name);
    members_.push_back(op);
    return true;
}

bool OperatorSpan::contains(const Operator& op) const {
    return span_.contains(op.vectorize());
}

Operator OperatorSpan::residual(const Operator& op) const {
    return Operator::from_vector(span_.reduce(op.vectorize()).residual);
}

bool OperatorSpan::same_span(const OperatorSpan& o) const {
    return dim() == o.dim() && span_.rows() == o.span_.rows();
}

OperatorSpan span_closure(const std::vector<std::pair<std::string, Operator>>& generators,
                          int max_rounds) {
    OperatorSpan span;
    std::vector<std::pair<std::string, Operator>> frontier;
    for (const auto& [name, op] : generators)
        if (span.insert(op, name)) frontier.emplace_back(name, op);

    for (int round = 1; !frontier.empty(); ++round) {
        if (round > max_rounds) throw ClosureNotReached(max_rounds);
        std::vector<std::pair<std::string, Operator>> next;
        for (const auto& [fname, f] : frontier) {
            for (const auto& [gname, g] : generators) {
                Operator b = bracket(f, g);
                if (b.is_zero()) continue;
                std::string name = "[" + fname + "," + gname + "]";
                if (span.insert(b, name)) next.emplace_back(name, b);
            }
        }
        frontier = std::move(next);
    }
    return span;
}

int closure_round_cap() {
    const char* env = std::getenv("WSDALG_MAX_CLOSURE_ROUNDS");
    if (env == nullptr || *env == '\0') return 12;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == nullptr || *end != '\0' || v < 1) return 12;
    return static_cast<int>(v);
}

} // namespace wsd
