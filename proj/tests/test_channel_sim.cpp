#include <doctest.h>

#include <algorithm>
#include <cmath>

#include <arraycode/channel_sim.hpp>
#include <arraycode/code_model.hpp>
#include <arraycode/gf2.hpp>
#include <arraycode/rng.hpp>

using namespace arraycode;

TEST_CASE("noise variance follows Eb/N0 and rate") {
    ChannelConfig ch;
    ch.ebno_db = 0.0;
    ch.rate = Rational(1, 2);
    CHECK(ch.noise_variance() == doctest::Approx(1.0));
    ch.ebno_db = 10.0;
    CHECK(ch.noise_variance() == doctest::Approx(0.1));
    ch.rate = Rational(0, 1);
    CHECK_THROWS_AS(ch.noise_variance(), std::invalid_argument);
}

TEST_CASE("noiseless frames decode in one iteration with zero errors") {
    ArrayCodeSpec spec(Modulus(7), {0, 1, 2}, {0, 1, 2, 3, 4, 5});
    BpDecoder decoder(build_parity_check(spec));
    std::vector<double> llr(static_cast<std::size_t>(decoder.n()), 20.0);
    const auto res = decoder.decode(llr, DecoderConfig{});
    CHECK(res.iterations == 1);
    CHECK(res.bit_errors == 0);
    CHECK(res.syndrome_clean);
}

TEST_CASE("single-check posterior matches the exact a-posteriori formula") {
    SparseBinaryMatrix h;
    h.n_rows = 1;
    h.n_cols = 3;
    h.rows = {{0, 1, 2}};
    BpDecoder decoder(h);
    const std::vector<double> llr{0.8, -1.3, 2.1};
    const auto post = decoder.posterior_llrs(llr, 1);
    for (int v = 0; v < 3; ++v) {
        double prod = 1.0;
        for (int u = 0; u < 3; ++u) {
            if (u != v) prod *= std::tanh(0.5 * llr[static_cast<std::size_t>(u)]);
        }
        const double expected = llr[static_cast<std::size_t>(v)] + 2.0 * std::atanh(prod);
        CHECK(post[static_cast<std::size_t>(v)] == doctest::Approx(expected).epsilon(1e-10));
    }
}

TEST_CASE("syndrome flag agrees with an independent GF(2) product") {
    ArrayCodeSpec spec(Modulus(5), {0, 1, 2}, {0, 1, 2, 3, 4});
    const auto h = build_parity_check(spec);
    BpDecoder decoder(h);
    ChannelConfig ch;
    ch.ebno_db = 1.0;
    ch.rate = designed_rate(spec);
    for (std::uint64_t f = 0; f < 50; ++f) {
        const auto res = simulate_frame(decoder, ch, DecoderConfig{}, frame_seed(99, 0, f));
        const auto syndrome = gf2_matvec(h, res.decoded);
        const bool zero = std::all_of(syndrome.begin(), syndrome.end(),
                                      [](std::uint8_t b) { return b == 0; });
        CHECK(res.syndrome_clean == zero);
    }
}

TEST_CASE("frame simulation is a pure function of its seed") {
    ArrayCodeSpec spec(Modulus(5), {0, 1, 2}, {0, 1, 2, 3, 4});
    BpDecoder decoder(build_parity_check(spec));
    ChannelConfig ch;
    ch.ebno_db = 2.0;
    ch.rate = designed_rate(spec);
    const auto a = simulate_frame(decoder, ch, DecoderConfig{}, 1234);
    const auto b = simulate_frame(decoder, ch, DecoderConfig{}, 1234);
    CHECK(a.decoded == b.decoded);
    CHECK(a.iterations == b.iterations);
    const auto c = simulate_frame(decoder, ch, DecoderConfig{}, 1235);
    CHECK(a.decoded != c.decoded);  // overwhelmingly likely at this noise level
}

TEST_CASE("monte carlo results are identical for any worker count") {
    ArrayCodeSpec spec(Modulus(5), {0, 1, 2}, {0, 1, 2, 3, 4});
    const auto h = build_parity_check(spec);
    StopRule stop;
    stop.min_word_errors = 20;
    stop.max_frames = 4096;
    const std::vector<double> pts{0.5, 2.0};
    const auto one = monte_carlo(h, designed_rate(spec), pts, DecoderConfig{}, stop, 777, 1);
    const auto three = monte_carlo(h, designed_rate(spec), pts, DecoderConfig{}, stop, 777, 3);
    REQUIRE(one.points.size() == three.points.size());
    for (std::size_t i = 0; i < one.points.size(); ++i) {
        CHECK(one.points[i].frames == three.points[i].frames);
        CHECK(one.points[i].bit_errors == three.points[i].bit_errors);
        CHECK(one.points[i].word_errors == three.points[i].word_errors);
        CHECK(one.points[i].total_iterations == three.points[i].total_iterations);
    }
}

TEST_CASE("csv schema") {
    SimulationReport rep;
    rep.n = 10;
    PointReport pt;
    pt.ebno_db = 1.5;
    pt.frames = 100;
    pt.bit_errors = 5;
    pt.word_errors = 2;
    pt.total_iterations = 300;
    pt.seed = 42;
    rep.points.push_back(pt);
    const auto csv = simulation_csv(rep);
    CHECK(csv.rfind("ebno_db,frames,bit_errors,word_errors,ber,wer,mean_iterations,seed\n", 0) == 0);
    CHECK(csv.find("1.5,100,5,2,0.005,0.02,3,42\n") != std::string::npos);
}

TEST_CASE("counter rng basics") {
    CounterRng a(5);
    CounterRng b(5);
    CHECK(a.next() == b.next());
    double mean = 0.0;
    CounterRng g(17);
    const int trials = 20000;
    for (int i = 0; i < trials; ++i) mean += g.next_gaussian();
    mean /= trials;
    CHECK(std::abs(mean) < 0.05);
    CHECK(frame_seed(1, 0, 0) != frame_seed(1, 0, 1));
    CHECK(frame_seed(1, 0, 0) != frame_seed(1, 1, 0));
    CHECK(frame_seed(1, 2, 3) == frame_seed(1, 2, 3));
}
