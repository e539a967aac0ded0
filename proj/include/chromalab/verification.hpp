#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "chromalab/colorings.hpp"
#include "chromalab/hyperbolic.hpp"
#include "chromalab/metric.hpp"
#include "chromalab/rng.hpp"

// Adversarial sampling of point pairs at forbidden distances. A clean run
// only fails to falsify a coloring; reports always carry their sample counts.
namespace chromalab {

enum class SampleSpace { Plane, Hyperbolic };

/// Axis-aligned box for the first point of each pair. For the hyperbolic
/// space, y is drawn log-uniformly so every strip height is equally likely.
struct Window {
    double x_min = -50.0;
    double x_max = 50.0;
    double y_min = -50.0;
    double y_max = 50.0;
};

Window default_plane_window();      // [-50, 50]^2
Window default_hyperbolic_window(); // x in [-50, 50], y in [e^-5, e^5]

struct SampleSpec {
    SampleSpace space;
    std::optional<MetricExpr> metric; // plane only
    DistanceSet distances;
    Window window;
    std::uint64_t samples = 1;
    std::uint64_t master_seed = 0;
    std::size_t streams = 64;         // fixed split, independent of thread count
    std::size_t max_recorded = 1000;  // violations kept in the report

    static SampleSpec plane(MetricExpr metric, DistanceSet distances, std::uint64_t samples, std::uint64_t seed);
    static SampleSpec hyperbolic(DistanceSet distances, std::uint64_t samples, std::uint64_t seed);

    /// Throws std::invalid_argument on an unusable spec.
    void validate() const;
};

struct SampledPair {
    Point2 p;
    Point2 q;
    double distance = 0.0;
};

/// One pair at a distance in D (re-measured). Empty when the planar ray
/// solver finds no admissible distance in the window. Throws
/// std::logic_error if a produced pair re-measures outside D, which is a
/// sampler defect rather than a coloring violation.
std::optional<SampledPair> sample_pair(const SampleSpec& spec, RandomStream& rng);

struct Violation {
    Point2 p;
    Point2 q;
    double distance = 0.0;
    ColorLabel label;

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct VerificationReport {
    std::uint64_t samples_attempted = 0;
    std::uint64_t samples_realized = 0;
    std::uint64_t violation_count = 0;
    std::vector<Violation> violations; // first max_recorded, sorted by coordinates
    std::size_t rng_streams_used = 0;

    bool clean() const { return violation_count == 0; }
};

/// Deterministic in (spec, master_seed) regardless of `threads`.
VerificationReport verify_statistical(const Coloring& coloring, const SampleSpec& spec, unsigned threads = 0);

/// CSV: header "p_x,p_y,q_x,q_y,distance,label", one row per recorded
/// violation, then a "# summary" line.
void write_report_csv(std::ostream& out, const VerificationReport& report);

struct TileDiameterReport {
    std::uint64_t samples = 0;
    double max_distance = 0.0;
    double bound = 0.0;
    std::uint64_t violations = 0; // same-tile pairs at distance >= bound

    bool clean() const { return violations == 0; }
};

/// Samples pairs inside random tiles (biased towards corners) and checks
/// the distance stays strictly below the diameter bound.
TileDiameterReport verify_tile_diameter(const hyperbolic::Checkerboard& board, std::uint64_t samples,
                                        std::uint64_t seed);

} // namespace chromalab
