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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "belldisc/sampler.h"

namespace belldisc::cli {

/// Defaults shared by every subcommand.
inline constexpr std::uint64_t kDefaultShots = 8192;
inline constexpr std::uint64_t kDefaultSeed = 1;
inline constexpr const char *kSeedEnvVar = "BELLDISC_SEED";

enum class OutputFormat { Text, Json, Csv };

struct RunConfig {
    std::string subcommand;
    std::string bell_kind;
    std::string stage = "prep";
    std::uint64_t shots = kDefaultShots;
    std::uint64_t seed = kDefaultSeed;
    NoiseModel noise;
    std::string coupling_map_file;
    std::string input_file;
    std::string output_dir;
    std::string data_dir;
    OutputFormat format = OutputFormat::Text;
};

/**
 * Noise flag grammar: "none", "depol:p1,p2", "readout:r", or depol and
 * readout terms chained with commas ("depol:0.01,0.05,readout:0.02").
 * Throws InvalidArgument on anything else.
 */
NoiseModel parse_noise_spec(std::string_view spec);

/// Runs the command line; returns 0 on success, 1 on failure inside a
/// command, 2 on bad usage.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace belldisc::cli
