#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kbonacci/bignat.hpp"

namespace kbonacci {

/// Bound on n for the exhaustive operations below (|U| = 2^n).
struct EnumerationCap {
    static constexpr std::int64_t kDefault = 24;
    /// Mark masks and (tiling, end-set) pairs are packed into 64-bit words.
    static constexpr std::int64_t kHardLimit = 31;

    std::int64_t max_n = kDefault;
};

/// Left-to-right tile lengths covering a ruler from 0 to total().
/// Rulers, hash marks and right ends are derived views of the length list.
class Tiling {
public:
    Tiling() = default;
    /// Throws ParameterError if any length is < 1.
    explicit Tiling(std::vector<std::int64_t> tiles);

    /// Tiling whose hash marks are 0 and every position p with bit (p-1) set.
    static Tiling from_marks(std::uint64_t marks);

    const std::vector<std::int64_t>& tiles() const noexcept { return tiles_; }
    std::int64_t total() const noexcept { return total_; }
    bool empty() const noexcept { return tiles_.empty(); }

    /// Cumulative right end of every tile.
    std::vector<std::int64_t> right_ends() const;
    /// Inverse of from_marks. Requires total() <= 63.
    std::uint64_t mark_mask() const;

    /// Lexicographic on the tile lists.
    friend auto operator<=>(const Tiling&, const Tiling&) = default;
    friend bool operator==(const Tiling&, const Tiling&) = default;

private:
    std::vector<std::int64_t> tiles_;
    std::int64_t total_ = 0;
};

/// "[1,1,2]"; the empty tiling renders as "[]".
std::string to_string(const Tiling& tiling);

/// Dashed and normal hash marks on the reduced ruler {1, ..., n_reduced}.
/// Position 0 is always marked implicitly.
struct MarkConfig {
    std::int64_t n_reduced = 0;
    std::vector<std::int64_t> dashed; ///< strictly increasing
    std::vector<std::int64_t> normal; ///< disjoint from dashed
};

/// Right-end positions j_1 < ... < j_i of oversized tiles.
struct OversizedEndSet {
    std::vector<std::int64_t> positions;

    /// k < j_1 and j_l + k < j_{l+1}; otherwise no tiling can realise the set.
    bool non_overlapping(std::int64_t k) const;
    friend bool operator==(const OversizedEndSet&, const OversizedEndSet&) = default;
};

// -- Streaming producers ------------------------------------------------------
//
// Single-owner iterators; next() returns std::nullopt once exhausted.

/// Tilings with tiles in 1..k and total exactly n, in lexicographic order.
class TilingProducer {
public:
    TilingProducer(std::int64_t k, std::int64_t n, EnumerationCap cap = {});
    std::optional<Tiling> next();

private:
    std::int64_t k_;
    std::int64_t n_;
    std::vector<std::int64_t> tiles_;
    bool started_ = false;
    bool done_ = false;
};

/// Tilings with tiles in 1..k and total <= n, in lexicographic order
/// (every tiling precedes its extensions).
class BoundedTilingProducer {
public:
    BoundedTilingProducer(std::int64_t k, std::int64_t n, EnumerationCap cap = {});
    std::optional<Tiling> next();

private:
    std::int64_t k_;
    std::int64_t n_;
    std::vector<std::int64_t> tiles_;
    std::int64_t sum_ = 0;
    bool started_ = false;
    bool done_ = false;
};

/// The set U: one tiling per subset of hash marks on {1..n}, in mark-mask order.
class UnrestrictedTilingProducer {
public:
    explicit UnrestrictedTilingProducer(std::int64_t n, EnumerationCap cap = {});
    std::optional<Tiling> next();

private:
    std::uint64_t next_mask_ = 0;
    std::uint64_t end_mask_;
};

// -- Enumerations -------------------------------------------------------------

std::vector<Tiling> enumerate_tilings(std::int64_t k, std::int64_t n, EnumerationCap cap = {});
std::vector<Tiling> enumerate_bounded_tilings(std::int64_t k, std::int64_t n, EnumerationCap cap = {});
std::vector<Tiling> enumerate_unrestricted(std::int64_t n, EnumerationCap cap = {});

struct RightmostCount {
    std::int64_t length;
    std::uint64_t count;
    friend bool operator==(const RightmostCount&, const RightmostCount&) = default;
};

/// Tilings of length n (tiles 1..k) grouped by the length of the last tile,
/// for last-tile lengths 1..min(k, n). Requires n >= 1.
std::vector<RightmostCount> count_by_rightmost_tile(std::int64_t k, std::int64_t n, EnumerationCap cap = {});

// -- Inclusion-exclusion machinery ---------------------------------------------

/// For every member of U (indexed by mark mask) the set of positions at which
/// some tile longer than k has its right end, as a bitmask over {1..n}.
class OversizedEndIndex {
public:
    OversizedEndIndex(std::int64_t k, std::int64_t n, EnumerationCap cap = {});

    std::int64_t k() const noexcept { return k_; }
    std::int64_t n() const noexcept { return n_; }
    const std::vector<std::uint32_t>& ends_by_mask() const noexcept { return ends_; }

    /// Members of U whose oversized ends include every position in `required`.
    std::uint64_t count_containing(std::uint32_t required) const;
    /// Members of U with at least one oversized tile.
    std::uint64_t count_with_oversized() const;

private:
    std::int64_t k_;
    std::int64_t n_;
    std::vector<std::uint32_t> ends_;
};

/// #(U_{j_1} ∩ ... ∩ U_{j_i}) by brute force over U: tilings in which, for each
/// listed j, some tile of length > k ends at j. That tile need not be the
/// rightmost oversized one. Throws RangeError unless positions are strictly
/// increasing within 1..n.
BigNat intersection_count(std::int64_t k, std::int64_t n, const OversizedEndSet& ends, EnumerationCap cap = {});

struct ExpandedMarks {
    Tiling tiling;
    OversizedEndSet ends;
};

/// Tiles the reduced ruler from all marks, then lengthens by k each tile whose
/// right end is a dashed mark (shifting later tiles right). The l-th dashed
/// mark r_l becomes the oversized end j_l = r_l + l*k.
/// Throws ConsistencyError when cfg.n_reduced != n - i*k for i = |dashed|.
ExpandedMarks expand_marks(std::int64_t k, std::int64_t n, const MarkConfig& cfg);

struct IntersectionReport {
    std::int64_t k = 0;
    std::int64_t n = 0;
    std::int64_t i = 0;
    BigNat brute_force_total;   ///< sum of intersection counts over all i-subsets
    BigNat formula_total;       ///< C(n-ik, i) * 2^(n-i(k+1))
    std::uint64_t configurations = 0; ///< mark configurations fed to expand_marks
    bool injective = false;
    bool image_matches = false; ///< image == {(t, J) : t in every U_j, j in J}
    bool ends_well_formed = false;

    bool passed() const {
        return brute_force_total == formula_total && BigNat{configurations} == formula_total && injective &&
               image_matches && ends_well_formed;
    }
};

/// Checks the i-fold intersection identity for one (k, n, i) both by counting
/// and by verifying expand_marks is a bijection onto the counted pairs.
/// Throws RangeError unless 1 <= i <= floor(n/(k+1)).
IntersectionReport verify_intersection_identity(std::int64_t k, std::int64_t n, std::int64_t i,
                                                EnumerationCap cap = {});

} // namespace kbonacci
