#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arraycode/code_model.hpp"
#include "arraycode/sparse_matrix.hpp"

namespace arraycode {

/// BPSK/AWGN channel at a given Eb/N0, normalized by the designed rate.
struct ChannelConfig {
    double ebno_db = 0.0;
    Rational rate{1, 2};

    double noise_variance() const;  // sigma^2 = 1 / (2 R 10^(EbN0/10))
};

struct DecoderConfig {
    int max_iterations = 30;
    bool early_stop = true;
    double llr_clip = 50.0;
};

struct FrameResult {
    std::vector<std::uint8_t> decoded;
    int bit_errors = 0;
    int iterations = 0;
    bool syndrome_clean = false;
};

/// Flooding-schedule sum-product decoder over a fixed parity-check matrix.
class BpDecoder {
public:
    explicit BpDecoder(const SparseBinaryMatrix& h);

    /// Decodes from intrinsic channel LLRs (positive favors bit 0).
    FrameResult decode(const std::vector<double>& channel_llr, const DecoderConfig& cfg) const;

    /// Posterior LLRs after a fixed number of full (variable + check) rounds.
    std::vector<double> posterior_llrs(const std::vector<double>& channel_llr, int iterations,
                                       double llr_clip = 50.0) const;

    int n() const { return n_cols_; }
    int m() const { return n_rows_; }

private:
    int n_rows_;
    int n_cols_;
    std::vector<std::vector<int>> check_vars_;           // per check, sorted variable ids
    std::vector<std::vector<std::size_t>> var_edges_;    // per variable, incident edge ids
    std::vector<int> edge_check_;                        // edge id -> check
    std::size_t n_edges_ = 0;
};

/// One all-zero-codeword frame: BPSK, seeded AWGN, BP decode.
FrameResult simulate_frame(const BpDecoder& decoder, const ChannelConfig& channel,
                           const DecoderConfig& decoder_cfg, std::uint64_t seed);

struct StopRule {
    std::uint64_t min_word_errors = 100;
    std::uint64_t max_frames = 1'000'000;
};

struct PointReport {
    double ebno_db = 0.0;
    std::uint64_t frames = 0;
    std::uint64_t bit_errors = 0;
    std::uint64_t word_errors = 0;
    std::uint64_t total_iterations = 0;
    std::uint64_t seed = 0;  // master seed, repeated per point for the CSV

    double ber(int n) const {
        return frames ? static_cast<double>(bit_errors) / (static_cast<double>(frames) * n) : 0.0;
    }
    double wer() const {
        return frames ? static_cast<double>(word_errors) / static_cast<double>(frames) : 0.0;
    }
    double mean_iterations() const {
        return frames ? static_cast<double>(total_iterations) / static_cast<double>(frames) : 0.0;
    }
};

struct SimulationReport {
    int n = 0;
    Rational designed_rate{0, 1};
    Rational actual_rate{0, 1};
    std::vector<PointReport> points;
};

/// Deterministic Monte Carlo sweep. Frame f of point p is seeded by
/// frame_seed(master_seed, p, f), so the report is bit-identical for any
/// worker count. Frames are processed in fixed-size batches; the stop rule is
/// evaluated on batch boundaries.
SimulationReport monte_carlo(const SparseBinaryMatrix& h, Rational designed_rate,
                             const std::vector<double>& ebno_db_list, const DecoderConfig& decoder,
                             const StopRule& stop, std::uint64_t master_seed, int n_workers = 0);

/// CSV rows: ebno_db,frames,bit_errors,word_errors,ber,wer,mean_iterations,seed
std::string simulation_csv(const SimulationReport& report);

}  // namespace arraycode
