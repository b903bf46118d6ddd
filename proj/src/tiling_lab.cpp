#include "kbonacci/tiling_lab.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "kbonacci/closed_form.hpp"
#include "kbonacci/errors.hpp"
#include "kbonacci/sequence_core.hpp"

namespace kbonacci {

namespace {

void require_within_cap(std::int64_t n, EnumerationCap cap) {
    detail::require_nonnegative_n(n);
    if (cap.max_n > EnumerationCap::kHardLimit) {
        throw ParameterError("enumeration cap " + std::to_string(cap.max_n) + " exceeds the supported maximum " +
                             std::to_string(EnumerationCap::kHardLimit));
    }
    if (n > cap.max_n) {
        throw CapError("n=" + std::to_string(n) + " exceeds the enumeration cap " + std::to_string(cap.max_n));
    }
}

std::uint32_t bit_of(std::int64_t position) { return std::uint32_t{1} << static_cast<unsigned>(position - 1); }

// Next larger integer with the same popcount (Gosper's hack).
std::uint64_t next_combination(std::uint64_t x) {
    const std::uint64_t low = x & (~x + 1);
    const std::uint64_t ripple = x + low;
    return ripple | (((x ^ ripple) >> 2U) / low);
}

template <typename Producer>
std::vector<Tiling> drain(Producer producer) {
    std::vector<Tiling> out;
    while (auto t = producer.next()) {
        out.push_back(std::move(*t));
    }
    return out;
}

} // namespace

// -- Tiling ---------------------------------------------------------------------

Tiling::Tiling(std::vector<std::int64_t> tiles) : tiles_(std::move(tiles)) {
    for (auto len : tiles_) {
        if (len < 1) {
            throw ParameterError("tile lengths must be >= 1, got " + std::to_string(len));
        }
    }
    total_ = std::accumulate(tiles_.begin(), tiles_.end(), std::int64_t{0});
}

Tiling Tiling::from_marks(std::uint64_t marks) {
    std::vector<std::int64_t> tiles;
    std::int64_t last = 0;
    while (marks != 0) {
        const std::int64_t pos = std::countr_zero(marks) + 1;
        tiles.push_back(pos - last);
        last = pos;
        marks &= marks - 1;
    }
    return Tiling(std::move(tiles));
}

std::vector<std::int64_t> Tiling::right_ends() const {
    std::vector<std::int64_t> ends(tiles_.size());
    std::partial_sum(tiles_.begin(), tiles_.end(), ends.begin());
    return ends;
}

std::uint64_t Tiling::mark_mask() const {
    if (total_ > 63) {
        throw RangeError("tiling too long for a 64-bit mark mask");
    }
    std::uint64_t mask = 0;
    for (auto end : right_ends()) {
        mask |= std::uint64_t{1} << static_cast<unsigned>(end - 1);
    }
    return mask;
}

std::string to_string(const Tiling& tiling) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < tiling.tiles().size(); ++i) {
        os << (i == 0 ? "" : ",") << tiling.tiles()[i];
    }
    os << ']';
    return os.str();
}

bool OversizedEndSet::non_overlapping(std::int64_t k) const {
    if (positions.empty()) {
        return true;
    }
    if (positions.front() <= k) {
        return false;
    }
    for (std::size_t l = 0; l + 1 < positions.size(); ++l) {
        if (positions[l] + k >= positions[l + 1]) {
            return false;
        }
    }
    return true;
}

// -- Producers ----------------------------------------------------------------

TilingProducer::TilingProducer(std::int64_t k, std::int64_t n, EnumerationCap cap) : k_(k), n_(n) {
    detail::require_k(k);
    require_within_cap(n, cap);
}

std::optional<Tiling> TilingProducer::next() {
    if (done_) {
        return std::nullopt;
    }
    if (!started_) {
        // All ones is the smallest composition.
        started_ = true;
        tiles_.assign(static_cast<std::size_t>(n_), 1);
        return Tiling(tiles_);
    }
    // The last tile cannot grow without overshooting n. Walk left releasing
    // length until some tile can grow by one, then refill with ones.
    std::int64_t released = 0;
    if (!tiles_.empty()) {
        released = tiles_.back();
        tiles_.pop_back();
    }
    while (!tiles_.empty()) {
        const std::int64_t len = tiles_.back();
        tiles_.pop_back();
        released += len;
        if (len + 1 <= k_ && len + 1 <= released) {
            tiles_.push_back(len + 1);
            tiles_.insert(tiles_.end(), static_cast<std::size_t>(released - len - 1), 1);
            return Tiling(tiles_);
        }
    }
    done_ = true;
    return std::nullopt;
}

BoundedTilingProducer::BoundedTilingProducer(std::int64_t k, std::int64_t n, EnumerationCap cap) : k_(k), n_(n) {
    detail::require_k(k);
    require_within_cap(n, cap);
}

std::optional<Tiling> BoundedTilingProducer::next() {
    if (done_) {
        return std::nullopt;
    }
    if (!started_) {
        started_ = true;
        return Tiling{};
    }
    // Preorder walk: descend with a unit tile when there is room, otherwise
    // bump the deepest tile that can still grow.
    if (sum_ + 1 <= n_) {
        tiles_.push_back(1);
        sum_ += 1;
        return Tiling(tiles_);
    }
    while (!tiles_.empty()) {
        const std::int64_t len = tiles_.back();
        tiles_.pop_back();
        sum_ -= len;
        if (len + 1 <= k_ && sum_ + len + 1 <= n_) {
            tiles_.push_back(len + 1);
            sum_ += len + 1;
            return Tiling(tiles_);
        }
    }
    done_ = true;
    return std::nullopt;
}

UnrestrictedTilingProducer::UnrestrictedTilingProducer(std::int64_t n, EnumerationCap cap) {
    require_within_cap(n, cap);
    end_mask_ = std::uint64_t{1} << static_cast<unsigned>(n);
}

std::optional<Tiling> UnrestrictedTilingProducer::next() {
    if (next_mask_ >= end_mask_) {
        return std::nullopt;
    }
    return Tiling::from_marks(next_mask_++);
}

// -- Enumerations -------------------------------------------------------------

std::vector<Tiling> enumerate_tilings(std::int64_t k, std::int64_t n, EnumerationCap cap) {
    return drain(TilingProducer(k, n, cap));
}

std::vector<Tiling> enumerate_bounded_tilings(std::int64_t k, std::int64_t n, EnumerationCap cap) {
    return drain(BoundedTilingProducer(k, n, cap));
}

std::vector<Tiling> enumerate_unrestricted(std::int64_t n, EnumerationCap cap) {
    return drain(UnrestrictedTilingProducer(n, cap));
}

std::vector<RightmostCount> count_by_rightmost_tile(std::int64_t k, std::int64_t n, EnumerationCap cap) {
    detail::require_k(k);
    if (n < 1) {
        throw ParameterError("count_by_rightmost_tile needs n >= 1, got " + std::to_string(n));
    }
    TilingProducer producer(k, n, cap);
    std::vector<RightmostCount> out;
    for (std::int64_t len = 1; len <= std::min(k, n); ++len) {
        out.push_back({len, 0});
    }
    while (auto t = producer.next()) {
        ++out[static_cast<std::size_t>(t->tiles().back() - 1)].count;
    }
    return out;
}

// -- Inclusion-exclusion ------------------------------------------------------

OversizedEndIndex::OversizedEndIndex(std::int64_t k, std::int64_t n, EnumerationCap cap) : k_(k), n_(n) {
    detail::require_k(k);
    require_within_cap(n, cap);
    const std::uint64_t count = std::uint64_t{1} << static_cast<unsigned>(n);
    ends_.resize(count);
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        std::uint32_t oversized = 0;
        std::int64_t last = 0;
        for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
            const std::int64_t pos = std::countr_zero(rest) + 1;
            if (pos - last > k) {
                oversized |= bit_of(pos);
            }
            last = pos;
        }
        ends_[mask] = oversized;
    }
}

std::uint64_t OversizedEndIndex::count_containing(std::uint32_t required) const {
    return static_cast<std::uint64_t>(
        std::count_if(ends_.begin(), ends_.end(), [required](std::uint32_t e) { return (e & required) == required; }));
}

std::uint64_t OversizedEndIndex::count_with_oversized() const {
    return static_cast<std::uint64_t>(std::count_if(ends_.begin(), ends_.end(), [](std::uint32_t e) { return e != 0; }));
}

namespace {

std::uint32_t positions_to_mask(const std::vector<std::int64_t>& positions, std::int64_t n, const char* what) {
    std::uint32_t mask = 0;
    std::int64_t prev = 0;
    for (auto p : positions) {
        if (p <= prev || p > n) {
            throw RangeError(std::string(what) + " must be strictly increasing within 1.." + std::to_string(n));
        }
        mask |= bit_of(p);
        prev = p;
    }
    return mask;
}

} // namespace

BigNat intersection_count(std::int64_t k, std::int64_t n, const OversizedEndSet& ends, EnumerationCap cap) {
    detail::require_k(k);
    require_within_cap(n, cap);
    const std::uint32_t required = positions_to_mask(ends.positions, n, "oversized end positions");
    return BigNat{OversizedEndIndex(k, n, cap).count_containing(required)};
}

ExpandedMarks expand_marks(std::int64_t k, std::int64_t n, const MarkConfig& cfg) {
    detail::require_k(k);
    detail::require_nonnegative_n(n);
    const auto i = static_cast<std::int64_t>(cfg.dashed.size());
    if (i > n / (k + 1)) {
        throw RangeError("expand_marks: i=" + std::to_string(i) + " dashed marks exceed floor(n/(k+1))");
    }
    if (cfg.n_reduced != n - i * k) {
        throw ConsistencyError("expand_marks: reduced ruler length " + std::to_string(cfg.n_reduced) +
                               " != n - i*k = " + std::to_string(n - i * k));
    }
    std::int64_t prev = 0;
    for (auto r : cfg.dashed) {
        if (r <= prev || r > cfg.n_reduced) {
            throw ParameterError("dashed marks must be strictly increasing within 1..n_reduced");
        }
        prev = r;
    }
    std::vector<std::int64_t> normal = cfg.normal;
    std::sort(normal.begin(), normal.end());
    if (std::adjacent_find(normal.begin(), normal.end()) != normal.end()) {
        throw ParameterError("normal marks must be distinct");
    }
    for (auto p : normal) {
        if (p < 1 || p > cfg.n_reduced) {
            throw ParameterError("normal marks must lie within 1..n_reduced");
        }
        if (std::binary_search(cfg.dashed.begin(), cfg.dashed.end(), p)) {
            throw ParameterError("a position cannot carry both a dashed and a normal mark");
        }
    }

    std::vector<std::int64_t> marks;
    marks.reserve(cfg.dashed.size() + normal.size());
    std::merge(cfg.dashed.begin(), cfg.dashed.end(), normal.begin(), normal.end(), std::back_inserter(marks));

    ExpandedMarks out;
    std::vector<std::int64_t> tiles;
    tiles.reserve(marks.size());
    std::int64_t last = 0;
    std::int64_t dashed_seen = 0;
    std::size_t next_dashed = 0;
    for (auto pos : marks) {
        std::int64_t len = pos - last;
        last = pos;
        if (next_dashed < cfg.dashed.size() && cfg.dashed[next_dashed] == pos) {
            ++next_dashed;
            ++dashed_seen;
            len += k;
            out.ends.positions.push_back(pos + dashed_seen * k);
        }
        tiles.push_back(len);
    }
    out.tiling = Tiling(std::move(tiles));
    return out;
}

IntersectionReport verify_intersection_identity(std::int64_t k, std::int64_t n, std::int64_t i, EnumerationCap cap) {
    detail::require_k(k);
    require_within_cap(n, cap);
    if (i < 1 || i > n / (k + 1)) {
        throw RangeError("verify_intersection_identity: i=" + std::to_string(i) + " outside 1.." +
                         std::to_string(n / (k + 1)));
    }
    IntersectionReport report;
    report.k = k;
    report.n = n;
    report.i = i;

    const auto shift = static_cast<unsigned>(n);
    const auto pack = [shift](std::uint64_t tiling_marks, std::uint64_t ends) { return tiling_marks | (ends << shift); };

    // Left side: every i-subset J of {1..n}, each tiling of U that realises J.
    const OversizedEndIndex index(k, n, cap);
    const auto& ends_by_mask = index.ends_by_mask();
    std::vector<std::uint64_t> counted;
    std::uint64_t brute_total = 0;
    const std::uint64_t limit = std::uint64_t{1} << shift;
    for (std::uint64_t subset = (std::uint64_t{1} << static_cast<unsigned>(i)) - 1; subset < limit;
         subset = next_combination(subset)) {
        const auto required = static_cast<std::uint32_t>(subset);
        for (std::uint64_t mask = 0; mask < ends_by_mask.size(); ++mask) {
            if ((ends_by_mask[mask] & required) == required) {
                ++brute_total;
                counted.push_back(pack(mask, subset));
            }
        }
    }
    report.brute_force_total = BigNat{brute_total};
    report.formula_total = binomial(n - i * k, i) * BigNat::pow2(static_cast<std::uint64_t>(n - i * (k + 1)));

    // Right side: every mark configuration on the reduced ruler.
    const std::int64_t reduced = n - i * k;
    const std::uint64_t reduced_limit = std::uint64_t{1} << static_cast<unsigned>(reduced);
    const std::uint64_t full = reduced_limit - 1;
    std::vector<std::uint64_t> image;
    bool ends_ok = true;
    for (std::uint64_t dashed = (std::uint64_t{1} << static_cast<unsigned>(i)) - 1; dashed < reduced_limit;
         dashed = next_combination(dashed)) {
        MarkConfig cfg{reduced, {}, {}};
        for (std::uint64_t rest = dashed; rest != 0; rest &= rest - 1) {
            cfg.dashed.push_back(std::countr_zero(rest) + 1);
        }
        const std::uint64_t free = full & ~dashed;
        // Every submask of the free positions, including the empty one.
        for (std::uint64_t normal = free;; normal = (normal - 1) & free) {
            cfg.normal.clear();
            for (std::uint64_t rest = normal; rest != 0; rest &= rest - 1) {
                cfg.normal.push_back(std::countr_zero(rest) + 1);
            }
            const auto expanded = expand_marks(k, n, cfg);
            ++report.configurations;

            const auto& ends = expanded.ends.positions;
            ends_ok = ends_ok && expanded.tiling.total() <= n && expanded.ends.non_overlapping(k);
            const auto right_ends = expanded.tiling.right_ends();
            std::size_t t = 0;
            for (auto j : ends) {
                while (t < right_ends.size() && right_ends[t] < j) {
                    ++t;
                }
                ends_ok = ends_ok && t < right_ends.size() && right_ends[t] == j && expanded.tiling.tiles()[t] >= k + 1;
            }
            if (ends_ok) {
                std::uint64_t ends_mask = 0;
                for (auto j : ends) {
                    ends_mask |= bit_of(j);
                }
                image.push_back(pack(expanded.tiling.mark_mask(), ends_mask));
            }
            if (normal == 0) {
                break;
            }
        }
    }
    report.ends_well_formed = ends_ok;

    std::sort(image.begin(), image.end());
    std::sort(counted.begin(), counted.end());
    report.injective = std::adjacent_find(image.begin(), image.end()) == image.end();
    report.image_matches = ends_ok && image == counted;
    return report;
}

} // namespace kbonacci
