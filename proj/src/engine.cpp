#include "kbonacci/engine.hpp"

#include "kbonacci/errors.hpp"
#include "kbonacci/fast_eval.hpp"

namespace kbonacci {

EngineKind parse_engine_name(std::string_view name) {
    if (name == "recurrence" || name == "direct") {
        return EngineKind::recurrence;
    }
    if (name == "dunkel" || name == "dunkel-extended") {
        return EngineKind::dunkel;
    }
    if (name == "dunkel-term" || name == "corollary") {
        return EngineKind::corollary;
    }
    if (name == "matrix") {
        return EngineKind::matrix;
    }
    throw ParameterError("unknown engine '" + std::string(name) + "'");
}

std::string engine_name(EngineKind kind, Quantity quantity, bool extended) {
    switch (kind) {
    case EngineKind::recurrence:
        return quantity == Quantity::value ? "recurrence" : "direct";
    case EngineKind::dunkel:
        return extended ? "dunkel-extended" : "dunkel";
    case EngineKind::corollary:
        return "dunkel-term";
    case EngineKind::matrix:
        return "matrix";
    }
    return "unknown";
}

BigNat evaluate(const EngineChoice& engine, Quantity quantity, std::int64_t k, std::int64_t n, EvalStats* stats) {
    if (engine.limit.has_value() && (engine.kind != EngineKind::dunkel || quantity != Quantity::partial_sum)) {
        throw ParameterError("a summation limit only applies to the dunkel-extended partial sum");
    }
    if (quantity == Quantity::value) {
        switch (engine.kind) {
        case EngineKind::recurrence:
            return kbonacci_recurrence({k, n}, stats);
        case EngineKind::dunkel:
            detail::require_k(k);
            detail::require_nonnegative_n(n);
            if (n == 0) {
                return BigNat{1};
            }
            return partial_sum_dunkel(k, n, stats) - partial_sum_dunkel(k, n - 1, stats);
        case EngineKind::corollary:
            return kbonacci_closed(k, n, stats);
        case EngineKind::matrix:
            return kbonacci_matrix(k, n, stats);
        }
    } else {
        switch (engine.kind) {
        case EngineKind::recurrence:
            return partial_sum_direct(k, n, stats);
        case EngineKind::dunkel:
            if (engine.limit.has_value()) {
                return partial_sum_dunkel_extended(k, n, *engine.limit);
            }
            return partial_sum_dunkel(k, n, stats);
        case EngineKind::corollary:
            throw ParameterError("the dunkel-term engine evaluates single terms, not partial sums");
        case EngineKind::matrix:
            return partial_sum_matrix(k, n, stats);
        }
    }
    throw ConsistencyError("unhandled engine");
}

} // namespace kbonacci
