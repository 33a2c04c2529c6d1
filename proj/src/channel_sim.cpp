#include "arraycode/channel_sim.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "arraycode/gf2.hpp"
#include "arraycode/rng.hpp"

namespace arraycode {

double ChannelConfig::noise_variance() const {
    if (rate.num <= 0) throw std::invalid_argument("rate must be positive");
    const double r = rate.to_double();
    return 1.0 / (2.0 * r * std::pow(10.0, ebno_db / 10.0));
}

BpDecoder::BpDecoder(const SparseBinaryMatrix& h) : n_rows_(h.n_rows), n_cols_(h.n_cols) {
    h.validate();
    check_vars_ = h.rows;
    var_edges_.resize(static_cast<std::size_t>(n_cols_));
    std::size_t edge = 0;
    for (int c = 0; c < n_rows_; ++c) {
        for (int v : check_vars_[static_cast<std::size_t>(c)]) {
            var_edges_[static_cast<std::size_t>(v)].push_back(edge);
            edge_check_.push_back(c);
            ++edge;
        }
    }
    n_edges_ = edge;
}

FrameResult BpDecoder::decode(const std::vector<double>& channel_llr,
                              const DecoderConfig& cfg) const {
    if (static_cast<int>(channel_llr.size()) != n_cols_) {
        throw std::invalid_argument("LLR length does not match code length");
    }
    const double clip = cfg.llr_clip;
    auto clamp = [clip](double x) { return std::clamp(x, -clip, clip); };

    // Messages live on edges; edge ids follow check_vars_ row-major order.
    std::vector<double> var_to_check(n_edges_);
    std::vector<double> check_to_var(n_edges_, 0.0);
    std::vector<double> posterior(static_cast<std::size_t>(n_cols_));
    std::vector<std::uint8_t> hard(static_cast<std::size_t>(n_cols_), 0);

    FrameResult res;
    for (int iter = 1; iter <= cfg.max_iterations; ++iter) {
        // Variable update: v->c message is intrinsic plus all other c->v inputs.
        for (int v = 0; v < n_cols_; ++v) {
            const auto& edges = var_edges_[static_cast<std::size_t>(v)];
            double total = channel_llr[static_cast<std::size_t>(v)];
            for (std::size_t e : edges) total += check_to_var[e];
            posterior[static_cast<std::size_t>(v)] = total;
            for (std::size_t e : edges) var_to_check[e] = clamp(total - check_to_var[e]);
        }

        if (cfg.early_stop && iter > 1) {
            for (int v = 0; v < n_cols_; ++v) {
                hard[static_cast<std::size_t>(v)] = posterior[static_cast<std::size_t>(v)] < 0.0;
            }
            bool clean = true;
            for (int c = 0; c < n_rows_ && clean; ++c) {
                int parity = 0;
                for (int v : check_vars_[static_cast<std::size_t>(c)]) {
                    parity ^= hard[static_cast<std::size_t>(v)];
                }
                clean = parity == 0;
            }
            if (clean) {
                res.iterations = iter - 1;
                res.syndrome_clean = true;
                res.decoded = hard;
                for (std::uint8_t b : hard) res.bit_errors += b;
                return res;
            }
        }

        // Check update via tanh rule, prefix/suffix products so each outgoing
        // message excludes its own input.
        std::size_t edge = 0;
        for (int c = 0; c < n_rows_; ++c) {
            const std::size_t deg = check_vars_[static_cast<std::size_t>(c)].size();
            static thread_local std::vector<double> t, prefix, suffix;
            t.resize(deg);
            prefix.resize(deg + 1);
            suffix.resize(deg + 1);
            for (std::size_t i = 0; i < deg; ++i) t[i] = std::tanh(0.5 * var_to_check[edge + i]);
            prefix[0] = 1.0;
            for (std::size_t i = 0; i < deg; ++i) prefix[i + 1] = prefix[i] * t[i];
            suffix[deg] = 1.0;
            for (std::size_t i = deg; i > 0; --i) suffix[i - 1] = suffix[i] * t[i - 1];
            for (std::size_t i = 0; i < deg; ++i) {
                double prod = prefix[i] * suffix[i + 1];
                prod = std::clamp(prod, -0.999999999999, 0.999999999999);
                check_to_var[edge + i] = clamp(2.0 * std::atanh(prod));
            }
            edge += deg;
        }
    }

    // Final posterior after the last check update.
    for (int v = 0; v < n_cols_; ++v) {
        double total = channel_llr[static_cast<std::size_t>(v)];
        for (std::size_t e : var_edges_[static_cast<std::size_t>(v)]) total += check_to_var[e];
        hard[static_cast<std::size_t>(v)] = total < 0.0;
    }
    bool clean = true;
    for (int c = 0; c < n_rows_ && clean; ++c) {
        int parity = 0;
        for (int v : check_vars_[static_cast<std::size_t>(c)]) {
            parity ^= hard[static_cast<std::size_t>(v)];
        }
        clean = parity == 0;
    }
    res.iterations = cfg.max_iterations;
    res.syndrome_clean = clean;
    res.decoded = hard;
    for (std::uint8_t b : hard) res.bit_errors += b;
    return res;
}

std::vector<double> BpDecoder::posterior_llrs(const std::vector<double>& channel_llr,
                                              int iterations, double llr_clip) const {
    if (static_cast<int>(channel_llr.size()) != n_cols_) {
        throw std::invalid_argument("LLR length does not match code length");
    }
    auto clamp = [llr_clip](double x) { return std::clamp(x, -llr_clip, llr_clip); };
    std::vector<double> var_to_check(n_edges_);
    std::vector<double> check_to_var(n_edges_, 0.0);
    for (int iter = 0; iter < iterations; ++iter) {
        for (int v = 0; v < n_cols_; ++v) {
            double total = channel_llr[static_cast<std::size_t>(v)];
            for (std::size_t e : var_edges_[static_cast<std::size_t>(v)]) total += check_to_var[e];
            for (std::size_t e : var_edges_[static_cast<std::size_t>(v)]) {
                var_to_check[e] = clamp(total - check_to_var[e]);
            }
        }
        std::size_t edge = 0;
        for (int c = 0; c < n_rows_; ++c) {
            const std::size_t deg = check_vars_[static_cast<std::size_t>(c)].size();
            std::vector<double> t(deg), prefix(deg + 1), suffix(deg + 1);
            for (std::size_t i = 0; i < deg; ++i) t[i] = std::tanh(0.5 * var_to_check[edge + i]);
            prefix[0] = 1.0;
            for (std::size_t i = 0; i < deg; ++i) prefix[i + 1] = prefix[i] * t[i];
            suffix[deg] = 1.0;
            for (std::size_t i = deg; i > 0; --i) suffix[i - 1] = suffix[i] * t[i - 1];
            for (std::size_t i = 0; i < deg; ++i) {
                double prod = std::clamp(prefix[i] * suffix[i + 1], -0.999999999999, 0.999999999999);
                check_to_var[edge + i] = clamp(2.0 * std::atanh(prod));
            }
            edge += deg;
        }
    }
    std::vector<double> posterior(static_cast<std::size_t>(n_cols_));
    for (int v = 0; v < n_cols_; ++v) {
        double total = channel_llr[static_cast<std::size_t>(v)];
        for (std::size_t e : var_edges_[static_cast<std::size_t>(v)]) total += check_to_var[e];
        posterior[static_cast<std::size_t>(v)] = total;
    }
    return posterior;
}

FrameResult simulate_frame(const BpDecoder& decoder, const ChannelConfig& channel,
                           const DecoderConfig& decoder_cfg, std::uint64_t seed) {
    const double sigma2 = channel.noise_variance();
    const double sigma = std::sqrt(sigma2);
    CounterRng rng(seed);
    std::vector<double> llr(static_cast<std::size_t>(decoder.n()));
    for (double& l : llr) {
        const double y = 1.0 + sigma * rng.next_gaussian();  // all-zero word -> +1
        l = 2.0 * y / sigma2;
    }
    return decoder.decode(llr, decoder_cfg);
}

namespace {

constexpr std::uint64_t kBatchFrames = 512;

struct BatchCounters {
    std::uint64_t bit_errors = 0;
    std::uint64_t word_errors = 0;
    std::uint64_t iterations = 0;
};

BatchCounters run_frames(const BpDecoder& decoder, const ChannelConfig& channel,
                         const DecoderConfig& cfg, std::uint64_t master_seed, std::size_t point,
                         std::uint64_t first, std::uint64_t count) {
    BatchCounters out;
    for (std::uint64_t f = first; f < first + count; ++f) {
        const FrameResult r = simulate_frame(decoder, channel, cfg, frame_seed(master_seed, point, f));
        out.bit_errors += static_cast<std::uint64_t>(r.bit_errors);
        if (r.bit_errors > 0) ++out.word_errors;
        out.iterations += static_cast<std::uint64_t>(r.iterations);
    }
    return out;
}

}  // namespace

SimulationReport monte_carlo(const SparseBinaryMatrix& h, Rational designed,
                             const std::vector<double>& ebno_db_list, const DecoderConfig& decoder_cfg,
                             const StopRule& stop, std::uint64_t master_seed, int n_workers) {
    BpDecoder decoder(h);
    if (n_workers <= 0) {
        n_workers = static_cast<int>(std::thread::hardware_concurrency());
        if (n_workers <= 0) n_workers = 1;
    }

    SimulationReport report;
    report.n = h.n_cols;
    report.designed_rate = designed;
    report.actual_rate = actual_rate(h);

    for (std::size_t p = 0; p < ebno_db_list.size(); ++p) {
        ChannelConfig channel;
        channel.ebno_db = ebno_db_list[p];
        channel.rate = designed;

        PointReport point;
        point.ebno_db = channel.ebno_db;
        point.seed = master_seed;

        std::uint64_t next_frame = 0;
        while (next_frame < stop.max_frames && point.word_errors < stop.min_word_errors) {
            // Fixed-size batches of fixed-seed frames: batch boundaries (and
            // therefore the set of frames run) never depend on worker count.
            const std::uint64_t remaining = stop.max_frames - next_frame;
            const std::uint64_t batch = std::min<std::uint64_t>(remaining, kBatchFrames);
            const std::uint64_t per_worker = (batch + n_workers - 1) / n_workers;

            std::vector<BatchCounters> partial(static_cast<std::size_t>(n_workers));
            std::vector<std::thread> threads;
            for (int w = 0; w < n_workers; ++w) {
                const std::uint64_t lo = next_frame + per_worker * static_cast<std::uint64_t>(w);
                const std::uint64_t hi = std::min(next_frame + batch, lo + per_worker);
                if (lo >= hi) break;
                threads.emplace_back([&, w, lo, hi] {
                    partial[static_cast<std::size_t>(w)] = run_frames(
                        decoder, channel, decoder_cfg, master_seed, p, lo, hi - lo);
                });
            }
            for (auto& t : threads) t.join();
            for (const auto& c : partial) {
                point.bit_errors += c.bit_errors;
                point.word_errors += c.word_errors;
                point.total_iterations += c.iterations;
            }
            next_frame += batch;
            point.frames = next_frame;
        }
        report.points.push_back(point);
    }
    return report;
}

std::string simulation_csv(const SimulationReport& report) {
    std::ostringstream out;
    out << "ebno_db,frames,bit_errors,word_errors,ber,wer,mean_iterations,seed\n";
    out.precision(10);
    for (const auto& pt : report.points) {
        out << pt.ebno_db << ',' << pt.frames << ',' << pt.bit_errors << ',' << pt.word_errors
            << ',' << pt.ber(report.n) << ',' << pt.wer() << ',' << pt.mean_iterations() << ','
            << pt.seed << '\n';
    }
    return out.str();
}

}  // namespace arraycode
