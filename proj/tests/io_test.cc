// Copyright 2026 The shadowkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "shadowkit/io.h"

#include <filesystem>

#include "gtest/gtest.h"
#include "shadowkit/acquisition.h"

using namespace shadowkit;

namespace {

template <typename F>
size_t parse_error_line(F &&f) {
    try {
        f();
    } catch (const ParseError &e) {
        return e.line();
    }
    ADD_FAILURE() << "expected a ParseError";
    return 0;
}

std::filesystem::path temp_path(const std::string &name) {
    return std::filesystem::temp_directory_path() / ("shadowkit_io_test_" + name);
}

}  // namespace

TEST(format_double, round_trips) {
    for (double x : {0.0, 1.0, -0.5, 0.1, 1.0 / 3.0, 6.02e23, -1e-300}) {
        std::string s = format_double(x);
        EXPECT_EQ(std::stod(s), x) << s;
    }
    EXPECT_EQ(format_double(1.0), "1");
    EXPECT_EQ(format_double(0.25), "0.25");
}

TEST(shadow_format, pauli_line_example) {
    auto ds = parse_shadow("# shadow v1 kind=pauli n=3 seed=5 state=ghz:3\nX0 Z1 Y1\n");
    ASSERT_EQ(ds.pauli.size(), 1u);
    EXPECT_EQ(ds.pauli[0].bases, (std::vector<Pauli>{Pauli::X, Pauli::Z, Pauli::Y}));
    EXPECT_EQ(ds.pauli[0].bits, (std::vector<uint8_t>{0, 1, 1}));
    EXPECT_EQ(ds.header.seed, 5u);
    EXPECT_EQ(ds.header.state, "ghz:3");
    EXPECT_EQ(ds.pauli[0].group, -1);
}

TEST(shadow_format, round_trips_byte_exact) {
    auto state = parse_state_descriptor("ghz:4");
    AcquireOptions opts;
    opts.state_descriptor = "ghz:4";
    for (auto ds : {acquire_pauli(state, 50, 3, opts), acquire_clifford(state, 20, 3, opts),
                    acquire_scheme(state, random_scheme(4, 5, 3, 9), 3, opts)}) {
        ds.header.config = "shadowkit simulate --seed 3";
        std::string text = serialize_shadow(ds);
        ShadowDataset back = parse_shadow(text);
        EXPECT_EQ(back, ds);
        EXPECT_EQ(serialize_shadow(back), text);
    }
}

TEST(shadow_format, errors_carry_line_numbers) {
    const std::string head = "# shadow v1 kind=pauli n=2 seed=1 state=zero:2\n";
    EXPECT_EQ(parse_error_line([&] { parse_shadow("# shadow v2 kind=pauli n=2 seed=1 state=zero:2\nX0 Z0\n"); }), 1u);
    EXPECT_EQ(parse_error_line([&] { parse_shadow(head + "X0 Z0\nX0\n"); }), 3u);
    EXPECT_EQ(parse_error_line([&] { parse_shadow(head + "X0 Z0\nX0 Q1\n"); }), 3u);
    EXPECT_EQ(parse_error_line([&] { parse_shadow(head + "X0 Z0 junk\n"); }), 2u);
    EXPECT_EQ(parse_error_line([&] { parse_shadow(head + "X0 Z2\n"); }), 2u);
    EXPECT_EQ(parse_error_line([&] { parse_shadow(head + "X0 Z0\n\nX0 Z0\n"); }), 3u);
    EXPECT_EQ(parse_error_line([&] { parse_shadow("# shadow v1 kind=pauli n=2 seed=x state=zero:2\n"); }), 1u);
    EXPECT_EQ(parse_error_line([&] { parse_shadow("# shadow v1 kind=bogus n=2 seed=1 state=zero:2\n"); }), 1u);
    EXPECT_EQ(
        parse_error_line([&] { parse_shadow("# shadow v1 kind=clifford n=1 seed=1 state=zero:1\nb 0\n1 0 0\n"); }), 2u);
    EXPECT_EQ(
        parse_error_line([&] { parse_shadow("# shadow v1 kind=clifford n=1 seed=1 state=zero:1\nb 01\n1 0 0\n0 1 0\n"); }),
        2u);
}

TEST(observables_format, line_example) {
    auto obs = parse_observables("# observables v1 n=4\n1.0 2 Z 0 Z 1\n");
    ASSERT_EQ(obs.terms.size(), 1u);
    EXPECT_EQ(obs.terms[0].weight, 1.0);
    EXPECT_EQ(obs.terms[0].string.str(), "ZZII");
}

TEST(observables_format, identity_and_round_trip) {
    const std::string text = "# observables v1 n=3\n0.5 0\n-2 3 X 0 Y 1 Z 2\n1 1 Z 2\n1 1 Z 2\n";
    auto obs = parse_observables(text);
    ASSERT_EQ(obs.terms.size(), 4u);
    EXPECT_EQ(obs.terms[0].string.str(), "III");
    EXPECT_EQ(obs.terms[1].string.str(), "XYZ");
    EXPECT_EQ(serialize_observables(obs), text);
    EXPECT_EQ(parse_observables(with_config_line(text, "shadowkit schwinger-obs")), obs);
}

TEST(observables_format, errors) {
    EXPECT_EQ(parse_error_line([] { parse_observables("# observables v1 n=2\n1 2 Z 0\n"); }), 2u);
    EXPECT_EQ(parse_error_line([] { parse_observables("# observables v1 n=2\n1 1 Z 2\n"); }), 2u);
    EXPECT_EQ(parse_error_line([] { parse_observables("# observables v1 n=2\n1 2 Z 0 X 0\n"); }), 2u);
    EXPECT_EQ(parse_error_line([] { parse_observables("# observables v1 n=2\n1 1 I 0\n"); }), 2u);
    EXPECT_EQ(parse_error_line([] { parse_observables("# observables v1 n=2\n1 1 Z 0\nabc 0\n"); }), 3u);
    EXPECT_EQ(parse_error_line([] { parse_observables("# observables v1 n=2 m=3\n"); }), 1u);
    EXPECT_EQ(parse_error_line([] { parse_observables("# scheme v1 n=2\n"); }), 1u);
}

TEST(scheme_format, round_trip_and_errors) {
    MeasurementScheme s{3, {{Pauli::X, Pauli::Y, Pauli::Z}, {Pauli::Z, Pauli::Z, Pauli::Z}}, 1};
    std::string text = serialize_scheme(s);
    EXPECT_EQ(text, "# scheme v1 n=3\nX Y Z\nZ Z Z\n");
    EXPECT_EQ(parse_scheme(text), s);
    s.repetitions = 4;
    EXPECT_EQ(parse_scheme(serialize_scheme(s)), s);
    EXPECT_EQ(parse_error_line([] { parse_scheme("# scheme v1 n=2\nX Y\nX\n"); }), 3u);
    EXPECT_EQ(parse_error_line([] { parse_scheme("# scheme v1 n=2\nX I\n"); }), 2u);
    EXPECT_THROW(parse_scheme("# scheme v1 n=2\n"), ParseError);
}

TEST(subsystems_format, round_trip_and_errors) {
    SubsystemList l{6, {{0}, {0, 1}, {2, 3, 4}}};
    EXPECT_EQ(parse_subsystems(serialize_subsystems(l)), l);
    EXPECT_EQ(parse_error_line([] { parse_subsystems("# subsystems v1 n=2\n0 2\n"); }), 2u);
    EXPECT_EQ(parse_error_line([] { parse_subsystems("# subsystems v1 n=2\n0\n1 1\n"); }), 3u);
}

TEST(dense_state_format, round_trip_and_count_mismatch) {
    CVector v(4);
    v << std::complex<double>(0.5, 0), std::complex<double>(0, 0.5), std::complex<double>(-0.5, 0),
        std::complex<double>(0.1, 0.4898979485566356);
    EXPECT_EQ(parse_dense_state(serialize_dense_state(v)), v);
    EXPECT_THROW(parse_dense_state("# state v1 n=2\n1 0\n0 0\n0 0\n"), ParseError);
    EXPECT_EQ(parse_error_line([] { parse_dense_state("# state v1 n=1\n1 0\n0 0 0\n"); }), 3u);
}

TEST(state_descriptor, kinds_and_errors) {
    EXPECT_EQ(parse_state_descriptor("ghz:5").num_qubits(), 5u);
    EXPECT_EQ(parse_state_descriptor("ghz-noisy:4:0.3").kind(), OracleKind::mixture);
    EXPECT_EQ(parse_state_descriptor("toric:2x3").num_qubits(), 12u);
    EXPECT_EQ(parse_state_descriptor("singlets:6").kind(), OracleKind::singlet_chain);
    EXPECT_EQ(parse_state_descriptor("zero:3").num_qubits(), 3u);
    for (const char *bad : {"ghz", "ghz:", "ghz:-1", "toric:2", "foo:3", "ghz-noisy:4", "zero:0", "singlets:3"}) {
        EXPECT_THROW(parse_state_descriptor(bad), std::invalid_argument) << bad;
    }

    auto path = temp_path("state.txt");
    CVector v = CVector::Zero(2);
    v(1) = 1;
    write_file_atomic(path, serialize_dense_state(v));
    auto s = parse_state_descriptor("dense:" + path.string());
    EXPECT_EQ(s.kind(), OracleKind::dense);
    EXPECT_EQ(s.amplitudes(), v);
    auto t = target_from_descriptor("dense:" + path.string());
    ASSERT_EQ(t.index(), 2u);
    EXPECT_NEAR(std::abs(std::get<DenseObservable>(t).matrix(1, 1) - 1.0), 0, 1e-15);
    std::filesystem::remove(path);
    EXPECT_THROW(parse_state_descriptor("dense:/nonexistent/x"), IoError);
}

TEST(state_descriptor, targets) {
    EXPECT_EQ(target_from_descriptor("ghz:3").index(), 1u);
    EXPECT_EQ(target_from_descriptor("singlets:4").index(), 1u);
    EXPECT_EQ(target_from_descriptor("ghz-noisy:3:0").index(), 1u);
    EXPECT_THROW(target_from_descriptor("ghz-noisy:3:0.5"), std::invalid_argument);
}

TEST(reports, text_and_csv) {
    EstimationReport r;
    r.header = {Primitive::pauli, 4, 9, "ghz:4", "shadowkit predict"};
    r.rows.push_back({"obs0", "pauli-sum", 0.5, 10, 100, 1000});
    EXPECT_EQ(
        linear_report_text(r),
        "# report v1 kind=linear dataset=pauli n=4 seed=9 state=ghz:4\n# config shadowkit predict\n"
        "target=obs0 kind=pauli-sum estimate=0.5 K=10 N=100 shots_used=1000\n");
    EXPECT_EQ(linear_report_csv(r), "target_id,kind,estimate,K,N,shots_used\nobs0,pauli-sum,0.5,10,100,1000\n");
    std::vector<EntropyRow> rows{{{0, 1}, 0.5, 1.0, 10, 1000}};
    EXPECT_EQ(entropy_report_csv(rows), "subsystem,purity,entropy_bits,K,N\n0 1,0.5,1,10,1000\n");
    EXPECT_NE(entropy_report_text(r.header, rows).find("subsystem=0,1 purity=0.5 entropy_bits=1 K=10 N=1000"),
              std::string::npos);
}

TEST(files, atomic_write_and_read) {
    auto path = temp_path("atomic.txt");
    write_file_atomic(path, "one\n");
    write_file_atomic(path, "two\n");
    EXPECT_EQ(read_file(path), "two\n");
    std::filesystem::remove(path);
    EXPECT_THROW(read_file(path), IoError);
    EXPECT_THROW(write_file_atomic("/nonexistent-dir/x.txt", "a"), IoError);
}
