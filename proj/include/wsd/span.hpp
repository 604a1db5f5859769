#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wsd/operator.hpp"

namespace wsd {

using SparseVec = std::map<int, Gaussian>;

// v += c * w
void axpy(SparseVec& v, const Gaussian& c, const SparseVec& w);

// A subspace kept in reduced echelon form: rows sorted by pivot, each
// pivot entry 1 and alone in its coordinate.  The reduced echelon basis
// of a subspace is unique, so two spans are equal iff their rows are.
//
// Coordinates at or beyond `pivot_limit` never become pivots; appending
// bookkeeping coordinates there lets reduce() hand back the expression
// of a member in terms of the originally inserted vectors.
class ExactSpan {
public:
    explicit ExactSpan(int pivot_limit = 1 << 30) : pivot_limit_(pivot_limit) {}

    int dim() const { return static_cast<int>(rows_.size()); }
    const std::vector<SparseVec>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    // True if v was independent (span grew).
    bool insert(SparseVec v);

    struct Reduction {
        bool member;          // residual vanishes below pivot_limit
        SparseVec residual;   // v minus its projection
    };
    Reduction reduce(SparseVec v) const;
    bool contains(const SparseVec& v) const { return reduce(v).member; }

private:
    int pivot_limit_;
    std::vector<SparseVec> rows_;   // sorted by pivot
    std::vector<int> pivots_;
};

// A span of operators under row-major vectorization, with provenance.
class OperatorSpan {
public:
    OperatorSpan() = default;

    int dim() const { return span_.dim(); }
    const std::vector<int>& pivots() const { return span_.pivots(); }

    // Names and values of the inserts that actually grew the span,
    // in insertion order.
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<Operator>& members() const { return members_; }

    // The canonical reduced echelon basis.
    std::vector<Operator> echelon_basis() const;

    bool insert(const Operator& op, const std::string& name);
    bool contains(const Operator& op) const;
    // Residual of op against the span (zero iff member).
    Operator residual(const Operator& op) const;

    bool same_span(const OperatorSpan& o) const;

private:
    ExactSpan span_;
    std::vector<std::string> names_;
    std::vector<Operator> members_;
};

// Lie closure: repeatedly bracket the frontier (the elements that grew
// the span last round) against the original generators until nothing new
// appears.  Throws ClosureNotReached if still growing after max_rounds.
OperatorSpan span_closure(const std::vector<std::pair<std::string, Operator>>& generators,
                          int max_rounds);

// Round cap from WSDALG_MAX_CLOSURE_ROUNDS, default 12.
int closure_round_cap();

} // namespace wsd
