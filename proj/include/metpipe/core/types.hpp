#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace metpipe {

enum class SensorKind { Acc, Gyro, Ppg, Eda, Temp, Eeg, Vo2, HrSummary, BrSummary };

enum class Activity { Rest, Cycle, Run };

const char* to_string(SensorKind kind);
const char* to_string(Activity activity);
SensorKind sensor_kind_from_string(const std::string& name);
Activity activity_from_string(const std::string& name);

/// Canonical unit per sensor kind ("g", "deg/s", "au", "uS", "C", "uV",
/// "ml/kg/min", "bpm", "breaths/min").
const char* canonical_unit(SensorKind kind);

/// True if `unit` is registered (canonical or convertible) for the kind.
bool unit_registered(SensorKind kind, const std::string& unit);

/// Expected channel count; 0 means "set by the manifest" (EEG).
int default_channel_count(SensorKind kind);

/// One sensor channel group: shared timestamps, one value vector per channel.
/// Timestamps are seconds relative to the session start.
struct TimeSeries {
    SensorKind kind = SensorKind::Acc;
    std::string unit;
    double nominal_rate_hz = 0.0; // <= 0 means irregular
    std::vector<std::string> channels;
    std::vector<double> t;
    std::vector<std::vector<double>> values; // [channel][sample]

    size_t size() const { return t.size(); }
    std::span<const double> channel(size_t i) const { return values[i]; }

    /// Index of a channel label, or -1.
    int channel_index(const std::string& label) const;
};

struct ActivityInterval {
    Activity activity = Activity::Rest;
    int intensity = 1; // 1 or 2
    double start_s = 0.0;
    double end_s = 0.0;

    double duration() const { return end_s - start_s; }
};

struct Demographics {
    std::optional<double> age_years;
    std::optional<std::string> sex; // "m" / "f"
    std::optional<double> height_cm;
    std::optional<double> weight_kg;
};

/// One participant's aligned multi-device recording. Immutable after
/// construction; safe to share across workers.
struct Session {
    std::string participant_id;
    Demographics demographics;
    double epoch_s = 0.0; // absolute epoch of t=0, kept once
    std::map<std::string, std::vector<TimeSeries>> devices;
    std::vector<ActivityInterval> activities;
    TimeSeries met; // MET ground truth derived from VO2; unit "MET"

    const TimeSeries* find_stream(const std::string& device, SensorKind kind) const;
};

/// Feature map of one window; absent key = missing feature.
using FeatureMap = std::map<std::string, double>;

struct Window {
    std::string participant_id;
    std::string device;
    double start_s = 0.0;
    double width_s = 0.0;
    double interval_start_s = 0.0; // retained activity interval containing the window
    double interval_end_s = 0.0;
    FeatureMap features;
    double target_met = 0.0;
};

struct RowMeta {
    std::string participant_id;
    double window_start_s = 0.0;
};

/// Windows x named features, row-major, with fold metadata and MET targets.
/// No NaN/inf cells: rows with missing features are dropped during assembly.
struct FeatureMatrix {
    std::vector<std::string> feature_names;
    std::vector<double> values; // rows * feature_names.size()
    std::vector<RowMeta> rows;
    std::vector<double> targets;
    size_t dropped_rows = 0;

    size_t n_rows() const { return rows.size(); }
    size_t n_cols() const { return feature_names.size(); }
    double at(size_t r, size_t c) const { return values[r * feature_names.size() + c]; }
    std::span<const double> row(size_t r) const {
        return {values.data() + r * feature_names.size(), feature_names.size()};
    }
};

struct Metrics {
    double mae = 0.0;
    double rmse = 0.0;
    std::optional<double> r2; // missing for constant targets
};

struct FoldResult {
    std::string participant_id;
    size_t count = 0;
    double mae = 0.0;
    double rmse = 0.0;
};

/// Per-fold and pooled scores for one pipeline configuration.
struct EvalReport {
    std::string device;
    std::string sensors;
    double width_s = 0.0;
    std::string model;
    uint64_t seed = 0;
    std::vector<FoldResult> folds;
    Metrics pooled;
    size_t dropped_rows = 0;
    std::vector<std::string> skipped_participants;
};

} // namespace metpipe
