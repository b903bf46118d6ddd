#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "kbonacci/bignat.hpp"
#include "kbonacci/closed_form.hpp"
#include "kbonacci/sequence_core.hpp"

namespace kbonacci {

/// The four independent evaluation strategies.
enum class EngineKind {
    recurrence, ///< sliding-window recurrence (partial sums: direct accumulation)
    dunkel,     ///< alternating binomial partial-sum formula
    corollary,  ///< per-term binomial formula, values only
    matrix,     ///< companion-matrix powering
};

enum class Quantity { value, partial_sum };

/// A parsed engine selector. `limit` is set only for "dunkel-extended".
struct EngineChoice {
    EngineKind kind = EngineKind::recurrence;
    std::optional<SumLimit> limit;
};

/// Accepts recurrence, direct, dunkel, dunkel-extended, dunkel-term, matrix.
/// Throws ParameterError for anything else.
EngineKind parse_engine_name(std::string_view name);

/// Canonical selector name for a kind and quantity, e.g. "direct" for the
/// recurrence engine when summing.
std::string engine_name(EngineKind kind, Quantity quantity, bool extended = false);

/// Dispatches to the selected engine.
///
/// For values the Dunkel engine differences consecutive partial sums; the
/// corollary engine does not produce partial sums and is rejected.
BigNat evaluate(const EngineChoice& engine, Quantity quantity, std::int64_t k, std::int64_t n,
                EvalStats* stats = nullptr);

} // namespace kbonacci
