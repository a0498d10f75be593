// Copyright 2026 The belldisc Authors
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

#include "belldisc/circuit.h"

#include <cmath>

#include "belldisc/circuit_io.h"
#include "belldisc/error.h"
#include "gtest/gtest.h"
#include "oracle.h"

using namespace belldisc;

TEST(circuit, builders_produce_expected_gates) {
    Circuit prep = bell_prep(BellKind::PHI_MINUS, {0, 1});
    EXPECT_EQ(prep.n_qubits(), 2);
    EXPECT_EQ(format_circuit(prep), "QUBITS 2\nX 0\nX 1\nH 0\nCNOT 0 1\n");
    EXPECT_EQ(format_circuit(reverse_epr({0, 1})), "QUBITS 2\nCNOT 0 1\nH 0\n");
    EXPECT_EQ(format_circuit(parity_check_circuit({0, 1}, 2)), "QUBITS 3\nCNOT 0 2\nCNOT 1 2\n");
    EXPECT_EQ(format_circuit(phase_check_circuit({0, 1}, 2)), "QUBITS 3\nH 2\nCNOT 2 0\nCNOT 2 1\nH 2\n");
    EXPECT_EQ(combined_discriminator({2, 0}, 1, 3).n_qubits(), 4);
    EXPECT_THROW(parity_check_circuit({0, 0}, 2), Error);
    EXPECT_THROW(parity_check_circuit({0, 1}, 2, 2), Error);
}

TEST(circuit, gates_after_measurement_rejected) {
    Circuit c(2);
    c.h(0).measure(0);
    try {
        c.cnot(0, 1);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::HasMeasurementsBeforeEnd);
    }
    EXPECT_NO_THROW(c.x(1));
    EXPECT_THROW(c.h(5), Error);
    EXPECT_THROW(unitary_of(c), Error);
}

TEST(circuit, simulate_matches_matrix_oracle) {
    Circuit c(3);
    c.h(0).s(1).cnot(0, 2).x(1).sdg(2).cnot(2, 1).h(1);
    ComplexMatrix u = oracle::unitary(c);
    EXPECT_LT((unitary_of(c) - u).cwiseAbs().maxCoeff(), 1e-12);
    StateVector out = simulate(c);
    EXPECT_LT((out.amplitudes() - u.col(0)).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_TRUE(is_unitary(unitary_of(c)));
}

TEST(circuit, bell_prep_reaches_bell_states) {
    const double r = 1.0 / std::sqrt(2.0);
    struct Case {
        BellKind kind;
        int index_a, index_b;
        double sign;
    };
    // psi: |00>, |11>; phi: |01>, |10>.
    for (Case k : {Case{BellKind::PSI_PLUS, 0, 3, 1.0}, Case{BellKind::PSI_MINUS, 0, 3, -1.0},
                   Case{BellKind::PHI_PLUS, 1, 2, 1.0}, Case{BellKind::PHI_MINUS, 1, 2, -1.0}}) {
        ComplexVector expected = ComplexVector::Zero(4);
        expected(k.index_a) = r;
        expected(k.index_b) = k.sign * r;
        StateVector s = oracle::run(bell_prep(k.kind, {0, 1}));
        EXPECT_LT((s.amplitudes() - expected).cwiseAbs().maxCoeff(), 1e-12) << bell_name(k.kind);
        EXPECT_NEAR(bell_state(k.kind).overlap_probability(s), 1.0, 1e-12);
    }
}

TEST(circuit, check_experiments_reproduce_outcome_table) {
    struct Row {
        BellKind kind;
        const char *parity;
        const char *phase;
    };
    for (Row row : {Row{BellKind::PSI_PLUS, "000", "000"}, Row{BellKind::PSI_MINUS, "100", "101"},
                    Row{BellKind::PHI_PLUS, "011", "010"}, Row{BellKind::PHI_MINUS, "111", "111"}}) {
        for (auto [check, bits] : {std::pair{CheckKind::Parity, row.parity}, std::pair{CheckKind::Phase, row.phase}}) {
            StateVector out = oracle::run(check_experiment(row.kind, check, true, false));
            EXPECT_NEAR(out.overlap_probability(StateVector::from_ket(bits)), 1.0, 1e-12)
                << bell_name(row.kind) << " " << bits;
        }
    }
}

TEST(circuit, checks_are_nondestructive) {
    for (BellKind kind : kAllBellKinds) {
        StateVector input = bell_state(kind).tensor(StateVector::from_ket("0"));
        StateVector after_parity = simulate(parity_check_circuit({0, 1}, 2), input);
        StateVector after_phase = simulate(phase_check_circuit({0, 1}, 2), input);
        EXPECT_NEAR(after_parity.overlap_probability(bell_ancilla_state(kind, parity_bit(kind))), 1.0, 1e-12);
        EXPECT_NEAR(after_phase.overlap_probability(bell_ancilla_state(kind, phase_bit(kind))), 1.0, 1e-12);
    }
}

TEST(circuit, ancilla_target_phase_check_equals_phase_check) {
    ComplexMatrix a = oracle::unitary(phase_check_circuit({0, 1}, 2));
    ComplexMatrix b = oracle::unitary(ancilla_target_phase_check({0, 1}, 2));
    EXPECT_LT((a - b).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(circuit, combined_experiment_identifies_all_four_states) {
    // Layout: system (2, 0), phase ancilla 1, parity ancilla 3.
    for (BellKind kind : kAllBellKinds) {
        StateVector out = oracle::run(combined_experiment(kind, false));
        std::string bits(4, '0');
        bits[2] = char('0' + phase_bit(kind));
        bits[0] = char('0' + parity_bit(kind));
        bits[1] = char('0' + phase_bit(kind));
        bits[3] = char('0' + parity_bit(kind));
        EXPECT_NEAR(out.overlap_probability(StateVector::from_ket(bits)), 1.0, 1e-12) << bell_name(kind);
    }
}

TEST(circuit_io, round_trip_and_errors) {
    Circuit c(3);
    c.h(0).cnot(0, 2).sdg(1).measure(2);
    EXPECT_EQ(parse_circuit(format_circuit(c)), c);
    EXPECT_EQ(parse_circuit("# comment\nH 0 # trailing\nCNOT 0 1\n").n_qubits(), 2);
    auto kind_of = [](const char *text) {
        try {
            parse_circuit(text);
        } catch (const Error &e) {
            return e.kind();
        }
        return ErrorKind::InvalidArgument;
    };
    EXPECT_EQ(kind_of("FOO 1\n"), ErrorKind::ParseError);
    EXPECT_EQ(kind_of("CNOT 1\n"), ErrorKind::ParseError);
    EXPECT_EQ(kind_of("QUBITS 2\nH 4\n"), ErrorKind::BadQubitIndex);
    EXPECT_EQ(kind_of("MEAS 0\nH 0\n"), ErrorKind::HasMeasurementsBeforeEnd);
}

TEST(circuit_io, coupling_map_json) {
    CouplingMap star = CouplingMap::default_star();
    CouplingMap back = parse_coupling_map(format_coupling_map(star));
    EXPECT_EQ(back.allowed(), star.allowed());
    EXPECT_EQ(back.n_physical(), 5);
    EXPECT_TRUE(star.allows(0, 2));
    EXPECT_FALSE(star.allows(2, 0));
    EXPECT_THROW(parse_coupling_map("{\"n_physical\": 2, \"edges\": [[0, 4]]}"), Error);
    EXPECT_THROW(parse_coupling_map("not json"), Error);
}
