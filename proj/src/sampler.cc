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

#include "belldisc/sampler.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "belldisc/error.h"

namespace belldisc {

namespace {

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// SplitMix64 stream.
class ShotRng {
   public:
    explicit ShotRng(std::uint64_t seed) : state_(seed) {
    }
    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix64(state_);
    }
    /// Uniform in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

   private:
    std::uint64_t state_;
};

std::string bits_of(std::size_t value, int width) {
    std::string s(static_cast<std::size_t>(width), '0');
    for (int b = 0; b < width; ++b) {
        if (value & (std::size_t{1} << (width - 1 - b))) {
            s[static_cast<std::size_t>(b)] = '1';
        }
    }
    return s;
}

void require_measurements(const Circuit &circuit) {
    if (!circuit.has_measurements()) {
        throw Error(ErrorKind::NoMeasurements, "circuit has no measured qubits");
    }
}

/// Probabilities over the measured qubits, before readout error, indexed by
/// the integer value of the outcome string.
std::vector<double> measured_marginal(const Circuit &circuit, const NoiseModel &noise) {
    const DensityMatrix rho = evolve_density(circuit, noise);
    const std::vector<int> measured(circuit.measured().begin(), circuit.measured().end());
    const int k = static_cast<int>(measured.size());
    const int n = circuit.n_qubits();
    std::vector<double> probs(std::size_t{1} << k, 0.0);
    for (std::size_t basis = 0; basis < rho.dim(); ++basis) {
        std::size_t outcome = 0;
        for (int b = 0; b < k; ++b) {
            const bool bit = basis & (std::size_t{1} << (n - 1 - measured[static_cast<std::size_t>(b)]));
            outcome = (outcome << 1) | (bit ? 1U : 0U);
        }
        probs[outcome] += std::max(0.0, rho(basis, basis).real());
    }
    return probs;
}

}  // namespace

void NoiseModel::validate() const {
    for (double p : {single_qubit_depolarizing, cnot_depolarizing, readout_flip}) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw Error(ErrorKind::InvalidArgument, "noise probabilities must lie in [0, 1]");
        }
    }
}

// ---------------------------------------------------------------------------
// CountsHistogram

CountsHistogram::CountsHistogram(int n_bits, std::map<std::string, std::uint64_t> counts)
    : CountsHistogram(n_bits, counts,
                      std::accumulate(counts.begin(), counts.end(), std::uint64_t{0},
                                      [](std::uint64_t acc, const auto &kv) { return acc + kv.second; })) {
}

CountsHistogram::CountsHistogram(int n_bits, std::map<std::string, std::uint64_t> counts, std::uint64_t shots)
    : n_bits_(n_bits), counts_(std::move(counts)), shots_(shots) {
    if (n_bits < 1) {
        throw Error(ErrorKind::InvalidArgument, "histogram needs at least one bit");
    }
    std::uint64_t total = 0;
    for (const auto &[bits, count] : counts_) {
        if (bits.size() != static_cast<std::size_t>(n_bits) ||
            bits.find_first_not_of("01") != std::string::npos) {
            throw Error(ErrorKind::InvalidArgument, "bad outcome key '" + bits + "'");
        }
        total += count;
    }
    if (total != shots_) {
        throw Error(ErrorKind::InconsistentShotTotals, "counts sum to " + std::to_string(total) + ", shots is " +
                                                           std::to_string(shots_));
    }
}

std::uint64_t CountsHistogram::count(const std::string &bits) const {
    auto it = counts_.find(bits);
    return it == counts_.end() ? 0 : it->second;
}

double CountsHistogram::frequency(const std::string &bits) const {
    return shots_ == 0 ? 0.0 : static_cast<double>(count(bits)) / static_cast<double>(shots_);
}

ProbabilityMap CountsHistogram::frequencies() const {
    ProbabilityMap out;
    for (const auto &[bits, count] : counts_) {
        out[bits] = static_cast<double>(count) / static_cast<double>(shots_);
    }
    return out;
}

nlohmann::json counts_to_json(const CountsHistogram &histogram) {
    nlohmann::json doc;
    doc["n_bits"] = histogram.n_bits();
    doc["shots"] = histogram.shots();
    doc["counts"] = nlohmann::json::object();
    for (const auto &[bits, count] : histogram.counts()) {
        doc["counts"][bits] = count;
    }
    return doc;
}

CountsHistogram counts_from_json(const nlohmann::json &doc) {
    try {
        std::map<std::string, std::uint64_t> counts;
        for (const auto &[bits, count] : doc.at("counts").items()) {
            counts[bits] = count.get<std::uint64_t>();
        }
        return CountsHistogram(doc.at("n_bits").get<int>(), std::move(counts), doc.at("shots").get<std::uint64_t>());
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorKind::ParseError, std::string("counts file: ") + e.what());
    }
}

// ---------------------------------------------------------------------------
// Evolution

std::uint64_t derive_seed(std::uint64_t root, std::uint64_t stream) {
    return mix64(root ^ mix64(stream + 0x632be59bd9b4e019ULL));
}

void depolarize(ComplexMatrix &rho, std::span<const int> qubits, double p, int n_qubits) {
    if (p == 0.0) {
        return;
    }
    // Twirling qubit q over {I, X, Y, Z} keeps only blocks diagonal in q and
    // averages them: T(rho) = I/2 (x) Tr_q rho. Twirls on distinct qubits
    // compose into the joint twirl.
    ComplexMatrix twirled = rho;
    const Eigen::Index dim = rho.rows();
    for (int q : qubits) {
        const Eigen::Index m = Eigen::Index{1} << (n_qubits - 1 - q);
        for (Eigen::Index j = 0; j < dim; ++j) {
            for (Eigen::Index i = 0; i < dim; ++i) {
                if ((i & m) != (j & m)) {
                    twirled(i, j) = 0.0;
                } else if (!(i & m)) {
                    const Complex avg = 0.5 * (twirled(i, j) + twirled(i | m, j | m));
                    twirled(i, j) = avg;
                    twirled(i | m, j | m) = avg;
                }
            }
        }
    }
    rho = (1.0 - p) * rho + p * twirled;
}

DensityMatrix evolve_density(const Circuit &circuit, const NoiseModel &noise) {
    noise.validate();
    const int n = circuit.n_qubits();
    const Eigen::Index dim = Eigen::Index{1} << n;
    ComplexMatrix rho = ComplexMatrix::Zero(dim, dim);
    rho(0, 0) = 1.0;

    auto apply_columns = [&](const Gate &g, ComplexMatrix &m) {
        for (Eigen::Index col = 0; col < dim; ++col) {
            apply_gate(g, std::span<Complex>(m.col(col).data(), static_cast<std::size_t>(dim)), n);
        }
    };

    for (const Gate &g : circuit.gates()) {
        // U rho, then U (U rho)^dagger = U rho U^dagger.
        apply_columns(g, rho);
        rho.adjointInPlace();
        apply_columns(g, rho);
        if (g.kind == GateKind::CNOT) {
            const int pair[] = {*g.control, g.target};
            depolarize(rho, pair, noise.cnot_depolarizing, n);
        } else {
            const int one[] = {g.target};
            depolarize(rho, one, noise.single_qubit_depolarizing, n);
        }
    }
    return DensityMatrix(std::move(rho));
}

ProbabilityMap exact_distribution(const Circuit &circuit, const NoiseModel &noise) {
    require_measurements(circuit);
    std::vector<double> probs = measured_marginal(circuit, noise);
    const int k = static_cast<int>(circuit.measured().size());
    if (noise.readout_flip > 0.0) {
        const double r = noise.readout_flip;
        for (int b = 0; b < k; ++b) {
            const std::size_t flip = std::size_t{1} << b;
            std::vector<double> next(probs.size());
            for (std::size_t s = 0; s < probs.size(); ++s) {
                next[s] = (1.0 - r) * probs[s] + r * probs[s ^ flip];
            }
            probs = std::move(next);
        }
    }
    ProbabilityMap out;
    for (std::size_t s = 0; s < probs.size(); ++s) {
        out[bits_of(s, k)] = probs[s];
    }
    return out;
}

CountsHistogram sample(const Circuit &circuit, std::uint64_t shots, const NoiseModel &noise, std::uint64_t seed) {
    require_measurements(circuit);
    if (shots == 0) {
        throw Error(ErrorKind::ZeroShots, "shots must be at least 1");
    }
    const std::vector<double> probs = measured_marginal(circuit, noise);
    const int k = static_cast<int>(circuit.measured().size());

    std::vector<double> cdf(probs.size());
    std::partial_sum(probs.begin(), probs.end(), cdf.begin());
    const double total = cdf.back();

    std::vector<std::uint64_t> tally(probs.size(), 0);
    for (std::uint64_t shot = 0; shot < shots; ++shot) {
        ShotRng rng(derive_seed(seed, shot));
        const double u = rng.uniform() * total;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        std::size_t outcome = static_cast<std::size_t>(std::min<std::ptrdiff_t>(
            it - cdf.begin(), static_cast<std::ptrdiff_t>(cdf.size()) - 1));
        // Zero-probability outcomes share a cdf value with their predecessor;
        // upper_bound already skips them.
        if (noise.readout_flip > 0.0) {
            for (int b = 0; b < k; ++b) {
                if (rng.uniform() < noise.readout_flip) {
                    outcome ^= std::size_t{1} << b;
                }
            }
        }
        ++tally[outcome];
    }

    std::map<std::string, std::uint64_t> counts;
    for (std::size_t s = 0; s < tally.size(); ++s) {
        if (tally[s] != 0) {
            counts[bits_of(s, k)] = tally[s];
        }
    }
    return CountsHistogram(k, std::move(counts), shots);
}

Circuit with_basis_change(const Circuit &circuit, const PauliLabel &setting) {
    if (setting.n_qubits() != static_cast<std::size_t>(circuit.n_qubits())) {
        throw Error(ErrorKind::DimensionMismatch, "setting length differs from circuit width");
    }
    if (setting.has_identity()) {
        throw Error(ErrorKind::IdentityInSetting, "measurement settings use only X, Y, Z");
    }
    Circuit out = circuit;
    for (int q = 0; q < circuit.n_qubits(); ++q) {
        switch (setting[static_cast<std::size_t>(q)]) {
            case 'X':
                out.h(q);
                break;
            case 'Y':
                out.sdg(q).h(q);
                break;
            default:
                break;
        }
    }
    return out.measure_all();
}

}  // namespace belldisc
