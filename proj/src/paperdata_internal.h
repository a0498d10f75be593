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

#include <array>
#include <vector>

namespace belldisc::internal {

struct PrintedMatrix {
    const char *label;
    const char *ideal;
    const char *source;
    std::array<std::array<double, 8>, 8> re;
    std::array<std::array<double, 8>, 8> im;
};

const std::vector<PrintedMatrix> &printed_matrices();

}  // namespace belldisc::internal
