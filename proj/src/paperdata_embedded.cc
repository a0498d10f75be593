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

// Density matrices reconstructed by three-qubit state tomography on a
// five-qubit superconducting device, copied entry by entry as printed,
// including printed rounding asymmetries and the one stray 2.16e-19.

#include "paperdata_internal.h"

namespace belldisc::internal {

const std::vector<PrintedMatrix> &printed_matrices() {
    static const std::vector<PrintedMatrix> kMatrices = {
    {"psi_plus_0.prep",
     "psi+0",
     "tomography after Bell-state preparation",
     {{
        {0.4411, 0.003, 0.011, -0.0102, 0.006, -0.005, 0.3657, 0.0065},
        {0.003, 0.0021, 0.0137, -0.0005, 0.0045, 0.0005, 0.011, 0.0015},
        {0.011, 0.0137, 0.0741, 0.003, 0.0047, -0.004, 0.006, 0.0017},
        {-0.0102, -0.0005, 0.003, 0.0001, -0.0015, -0.0005, -0.0012, 0.0},
        {0.006, 0.0045, 0.0047, -0.0015, 0.0731, 0.001, 0.0035, -0.0037},
        {-0.005, 0.0005, -0.004, -0.0005, 0.001, 0.0001, 0.0112, -0.0005},
        {0.3657, 0.011, 0.006, -0.0012, 0.0035, 0.0112, 0.4081, 0.01},
        {0.0065, 0.0015, 0.0017, 0.0, -0.0037, -0.0005, 0.01, 0.0011},
     }},
     {{
        {0.0, -0.018, -0.0235, -0.0267, -0.0335, -0.003, -0.0302, -0.0176},
        {0.018, 0.0, -0.0027, 0.0, -0.0015, 0.0, 0.0213, 0.0},
        {0.0235, 0.0027, 0.0, 0.0175, 0.0302, -0.0023, -0.01, 0.006},
        {0.0267, 0.0, -0.0175, 0.0, 0.0036, -0.0005, 0.0032, 0.0},
        {0.0335, 0.0015, -0.0302, -0.0036, 0.0, -0.0045, -0.0025, -0.0227},
        {0.003, 0.0, 0.0023, 0.0005, 0.0045, 0.0, -0.0007, 0.0},
        {0.0302, -0.0213, 0.01, -0.0032, 0.0025, 0.0007, 0.0, -0.0025},
        {0.0176, 0.0, -0.0062, 0.0, 0.0227, 0.0, 0.0025, 0.0},
     }}},
    {"psi_minus_0.prep",
     "psi-0",
     "tomography after Bell-state preparation",
     {{
        {0.476, 0.029, 0.029, -0.0007, -0.0065, -0.0045, -0.3745, -0.0236},
        {0.029, 0.003, 0.0222, 0.0005, 0.002, 0.0, -0.0208, -0.0025},
        {0.029, 0.0222, 0.066, -0.02, -0.015, -0.0013, -0.0115, 0.0022},
        {-0.0007, 0.0005, -0.02, 0.001, 0.0033, -0.0005, -0.0007, 0.0},
        {-0.0065, 0.002, -0.015, 0.0033, 0.058, 0.0045, 0.0175, 0.0022},
        {-0.0045, 0.0, -0.0013, -0.0005, 0.0045, 0.0, 0.0202, 0.0},
        {-0.3745, -0.0208, -0.0115, -0.0007, 0.0175, 0.0202, 0.393, 0.0055},
        {-0.0236, -0.0025, 0.0022, 0.0, 0.0022, 0.0, 0.0055, 0.003},
     }},
     {{
        {0.0, -0.0215, -0.01, -0.019, -0.009, 0.0, -0.0067, 0.0185},
        {0.0215, 0.0, 0.0015, -2.16e-19, -0.0005, -0.0005, -0.0182, 0.001},
        {0.01, -0.0015, 0.0, 0.0225, -0.0127, -0.0027, -0.012, -0.0005},
        {0.019, 0.0, -0.0225, 0.0, 0.0035, 0.0, -0.0005, 0.0},
        {0.009, 0.0005, 0.0127, -0.0035, 0.0, -0.0025, -0.012, -0.0147},
        {0.0, 0.0005, 0.0027, 0.0, 0.0025, 0.0, -0.0042, -0.0005},
        {0.0067, 0.0182, 0.012, 0.0005, 0.012, 0.0042, 0.0, 0.001},
        {-0.0185, -0.001, 0.0005, 0.0, 0.0147, 0.0005, -0.001, 0.0},
     }}},
    {"phi_plus_0.prep",
     "phi+0",
     "tomography after Bell-state preparation",
     {{
        {0.089, 0.0065, -0.0205, 0.0035, -0.0055, -0.0037, 0.008, -0.0017},
        {0.0065, 0.0, 0.0155, 0.0, -0.0017, 0.0, -0.0005, 0.0},
        {-0.0205, 0.0155, 0.429, -0.001, 0.3825, 0.0242, 0.0035, 0.0015},
        {0.0035, 0.0, -0.001, 0.001, 0.02, 0.0025, 0.002, 0.0},
        {-0.0055, -0.0017, 0.3825, 0.02, 0.459, 0.024, -0.011, 0.0075},
        {-0.0037, 0.0, 0.0242, 0.0025, 0.024, 0.002, 0.0145, -0.0005},
        {0.008, -0.0005, 0.0035, 0.002, -0.011, 0.0145, 0.02, -0.0165},
        {-0.0017, 0.0, 0.0015, 0.0, 0.0075, -0.0005, -0.0165, 0.0},
     }},
     {{
        {0.0, -0.007, -0.0165, -0.0162, -0.03, 0.0002, 0.0002, 0.0025},
        {0.007, 0.0, 0.0012, 0.0, 0.0002, -0.0005, -0.0027, -0.0002},
        {0.0165, -0.0012, 0.0, -0.0095, -0.0222, -0.0245, -0.017, 0.0005},
        {0.0162, 0.0, 0.0095, 0.0, 0.0192, 0.0002, 0.0045, 0.0005},
        {0.03, -0.0002, 0.0222, -0.0192, 0.0, -0.0235, -0.011, -0.011},
        {-0.0002, 0.0005, 0.0245, -0.0002, 0.0235, 0.0, 0.0025, -0.0005},
        {-0.0002, 0.0027, 0.017, -0.0045, 0.011, -0.0025, 0.0, 0.0125},
        {-0.0025, 0.0002, -0.0005, -0.0005, 0.011, 0.0005, -0.0125, 0.0},
     }}},
    {"phi_minus_0.prep",
     "phi-0",
     "tomography after Bell-state preparation",
     {{
        {0.092, 0.009, -0.023, -0.0072, 0.063, 0.002, 0.0, -0.0011},
        {0.009, 0.001, 0.0177, 0.0, 0.0035, 0.0, 0.0046, -0.00175},
        {-0.023, 0.0177, 0.454, 0.0045, -0.384, -0.0176, 0.047, -0.0005},
        {-0.0072, 0.0, 0.0045, 0.005, -0.0173, -0.0027, 0.001, 0.001},
        {0.063, 0.0035, -0.384, -0.0173, 0.42, 0.0255, -0.009, -0.0052},
        {0.002, 0.0, -0.0176, -0.0027, 0.0255, 0.003, 0.0252, 0.0},
        {0.0, 0.0046, 0.047, 0.001, -0.009, 0.02525, 0.025, -0.013},
        {-0.0011, -0.0017, -0.0005, 0.001, -0.0052, 0.0, -0.013, 0.0},
     }},
     {{
        {0.0, -0.006, -0.017, -0.0275, -0.0225, -0.0065, -0.0122, -0.0071},
        {0.006, 0.0, -0.0055, 0.0, 0.0075, -0.0005, -0.0008, -0.0002},
        {0.017, 0.0055, 0.0, 0.001, 0.0262, 0.0156, -0.0245, 0.0},
        {0.0275, 0.0, -0.001, 0.0, -0.0126, 0.0002, -0.004, 0.0},
        {0.0225, -0.0075, -0.0262, 0.0126, 0.0, -0.018, -0.0095, -0.029},
        {0.0065, 0.0005, -0.0156, -0.0002, 0.018, 0.0, -0.0035, 0.0005},
        {0.0122, 0.0008, 0.0245, 0.004, 0.0095, 0.0035, 0.0, 0.0135},
        {0.0071, 0.0002, 0.0, 0.0, 0.029, -0.0005, -0.0135, 0.0},
     }}},
    {"psi_plus_0.phase",
     "psi+0",
     "tomography after the phase check",
     {{
        {0.4098, 0.058, 0.038, 0.0437, 0.0385, 0.028, 0.36625, 0.0353},
        {0.058, 0.0148, 0.0522, -0.007, 0.0055, 0.0, 0.0523, 0.001},
        {0.038, 0.0522, 0.0648, -0.034, 0.0247, 0.0188, 0.03, -0.0062},
        {0.0437, -0.007, -0.034, 0.0258, 0.0108, -0.0035, 0.0382, -0.004},
        {0.0385, 0.0055, 0.0247, 0.0108, 0.0728, 0.0145, 0.037, -0.0042},
        {0.028, 0.0, 0.0188, -0.0035, 0.0145, 0.0098, 0.0677, -0.005},
        {0.3662, 0.0523, 0.03, 0.0382, 0.037, 0.0677, 0.3738, 0.012},
        {0.0353, 0.001, -0.0062, -0.004, -0.0042, -0.005, 0.012, 0.0278},
     }},
     {{
        {0.0, -0.0405, 0.0395, -0.0342, 0.019, 0.0055, -0.021, -0.0805},
        {0.0405, 0.0, 0.0157, 0.0055, 0.0085, 0.0, 0.0222, 0.0012},
        {-0.0395, -0.0157, 0.0, 0.043, -0.0015, -0.0142, -0.0545, 0.0005},
        {0.0342, -0.0055, -0.043, 0.0, 0.0135, 0.0027, -0.02, -0.01},
        {-0.019, -0.0085, 0.0015, -0.0135, 0.0, -0.0085, -0.0585, -0.0545},
        {-0.0055, 0.0, 0.0142, -0.0027, 0.0085, 0.0, -0.0165, 0.0065},
        {0.021, -0.0222, 0.0545, 0.02, 0.0585, 0.0165, 0.0, -0.0435},
        {0.0805, -0.0012, -0.0005, 0.01, 0.0545, -0.0065, 0.0435, 0.0},
     }}},
    {"psi_minus_1.phase",
     "psi-1",
     "tomography after the phase check",
     {{
        {0.0371, 0.0815, -0.0035, -0.0152, -0.0015, 0.0087, -0.011, -0.0627},
        {0.0815, 0.2321, 0.0492, -0.0775, 0.0067, -0.0095, -0.0542, -0.1925},
        {-0.0035, 0.0492, 0.0201, -0.0435, -0.0125, -0.0012, 0.001, 0.0097},
        {-0.0152, -0.0775, -0.0435, 0.2331, 0.0002, -0.016, 0.0067, -0.015},
        {-0.0015, 0.0067, -0.0125, 0.00025, 0.0131, 0.008, 0.001, 0.0015},
        {0.0087, -0.0095, -0.0012, -0.016, 0.008, 0.0391, 0.048, -0.07},
        {-0.011, -0.0542, 0.001, 0.0067, 0.001, 0.048, 0.0301, 0.0175},
        {-0.0627, -0.1925, 0.0097, -0.015, 0.0015, -0.07, 0.0175, 0.3951},
     }},
     {{
        {0.0, -0.0855, 0.0025, -0.0622, -0.0005, 0.0092, 0.0072, 0.0755},
        {0.0855, 0.0, -0.0122, 0.052, -0.0012, 0.023, -0.0217, 0.03},
        {-0.0025, 0.0122, 0.0, 0.0405, -0.0022, -0.0062, -0.0025, 0.0042},
        {0.0622, -0.052, -0.0405, 0.0, 0.002, 0.0055, -0.0147, -0.051},
        {0.0005, 0.0012, 0.0022, -0.002, 0.0, -0.0105, 0.0, -0.0482},
        {-0.0092, -0.023, 0.0062, -0.0055, 0.0105, 0.0, 0.0162, 0.1185},
        {-0.0072, 0.0217, 0.0025, 0.0147, 0.0, -0.0162, 0.0, 0.0155},
        {-0.0755, -0.03, -0.0042, 0.051, 0.0482, -0.1185, -0.0155, 0.0},
     }}},
    {"phi_plus_0.phase",
     "phi+0",
     "tomography after the phase check",
     {{
        {0.0798, 0.0135, 0.007, -0.0082, 0.0045, -0.0022, 0.0265, -0.002},
        {0.0135, 0.0108, 0.0782, -0.007, 0.0362, 0.002, -0.001, 0.0},
        {0.007, 0.0782, 0.4188, 0.001, 0.37, 0.0427, -0.016, 0.0422},
        {-0.0082, -0.007, 0.001, 0.0248, 0.0397, -0.0025, -0.0072, 0.001},
        {0.0045, 0.0362, 0.37, 0.0397, 0.3878, 0.0535, 0.0, 0.0345},
        {-0.0022, 0.002, 0.0427, -0.0025, 0.0535, 0.0098, 0.0415, -0.0055},
        {0.0265, -0.001, -0.016, -0.0072, 0.0, 0.0415, 0.0468, -0.0375},
        {-0.002, 0.0, 0.0422, 0.001, 0.0345, -0.0055, -0.0375, 0.0208},
     }},
     {{
        {0.0, -0.015, -0.0655, -0.0565, -0.0555, -0.01, 0.002, 0.0015},
        {0.015, 0.0, -0.023, 0.0055, -0.0215, 0.0005, 0.0072, 0.0005},
        {0.0655, 0.023, 0.0, -0.024, 0.0015, -0.0455, 0.045, 0.0222},
        {0.0565, -0.0055, 0.024, 0.0, 0.0642, 0.0005, 0.0002, 0.0045},
        {0.0555, 0.0215, -0.0015, -0.0642, 0.0, -0.043, 0.0565, -0.0242},
        {0.01, -0.0005, 0.0455, -0.0005, 0.043, 0.0, 0.0062, 0.0045},
        {-0.002, -0.0072, -0.045, -0.0002, -0.0565, -0.0062, 0.0, 0.0355},
        {-0.0015, -0.0005, -0.0222, -0.0045, 0.0242, -0.0045, -0.0355, 0.0},
     }}},
    {"phi_minus_1.phase",
     "phi-1",
     "tomography after the phase check",
     {{
        {0.015, 0.0145, -0.0015, -0.0107, 0.0, 0.0055, 0.0032, -0.013},
        {0.0145, 0.05, 0.0487, -0.1075, 0.0205, 0.0285, 0.011, -0.027},
        {-0.0015, 0.0487, 0.029, 0.0225, -0.0017, -0.0452, -0.0005, 0.0077},
        {-0.0107, -0.1075, 0.0225, 0.431, -0.0587, -0.231, 0.0007, 0.0695},
        {0.0, 0.0205, -0.0017, -0.0587, 0.032, 0.064, -0.002, -0.0137},
        {0.0055, 0.0285, -0.0452, -0.231, 0.064, 0.23, 0.0422, -0.091},
        {0.0032, 0.011, -0.0005, 0.0007, -0.002, 0.0422, 0.01, -0.037},
        {-0.013, -0.027, 0.0077, 0.0695, -0.0137, -0.091, -0.037, 0.203},
     }},
     {{
        {0.0, -0.0085, 0.0015, -0.0367, -0.0527, -0.0165, 0.0007, -0.0106},
        {0.0085, 0.0, 0.0157, 0.14, -0.004, -0.0942, 0.0026, 0.0335},
        {-0.0015, -0.0157, 0.0, 0.006, -0.0007, 0.0351, -0.0517, 0.0215},
        {0.0367, -0.14, -0.006, 0.0, -0.0566, -0.003, -0.0025, -0.0312},
        {0.0527, 0.004, 0.0007, 0.0566, 0.0, -0.08, 0.001, -0.048},
        {0.0165, 0.0942, -0.0351, 0.003, 0.08, 0.0, -0.004, 0.026},
        {-0.0007, -0.0026, 0.0517, 0.0025, -0.001, 0.004, 0.0, 0.0355},
        {0.0106, -0.0335, -0.0215, 0.0312, 0.048, -0.026, -0.0355, 0.0},
     }}},
    {"psi_plus_0.parity",
     "psi+0",
     "tomography after the parity check",
     {{
        {0.4621, 0.0845, 0.0105, 0.0187, 0.0155, 0.0167, 0.3352, 0.0148},
        {0.0845, 0.0051, 0.0537, -0.005, 0.0077, 0.001, 0.0793, -0.0017},
        {0.0105, 0.0537, 0.0361, -0.0315, -0.0047, 0.0011, 0.009, 0.009},
        {0.0187, -0.005, -0.0315, 0.0291, -0.0018, 0.0022, 0.024, 0.002},
        {0.0155, 0.0077, -0.0047, -0.0018, 0.0461, 0.012, 0.0085, 0.006},
        {0.0167, 0.001, 0.0011, 0.0022, 0.012, 0.0101, 0.0565, -0.003},
        {0.3352, 0.0793, 0.009, 0.024, 0.0085, 0.0565, 0.3991, 0.0115},
        {0.0148, -0.0017, 0.009, 0.002, 0.006, -0.003, 0.0115, 0.0121},
     }},
     {{
        {0.0, -0.0545, -0.0065, -0.0575, -0.0105, -0.0107, -0.148, -0.0837},
        {0.0545, 0.0, 0.007, 0.006, -0.0047, -0.001, 0.0055, -0.0002},
        {0.0065, -0.007, 0.0, 0.0465, -0.0105, -0.0057, -0.0085, 0.0005},
        {0.0575, -0.006, -0.0465, 0.0, 0.0, 0.001, -0.0085, -0.004},
        {0.0105, 0.0047, 0.0105, 0.0, 0.0, -0.011, -0.0115, -0.0387},
        {0.0107, 0.001, 0.0057, -0.0017, 0.011, 0.0, -0.0027, 0.0045},
        {0.148, -0.0055, 0.0085, 0.0085, 0.0115, 0.0027, 0.0, -0.031},
        {0.0837, 0.0002, -0.0005, 0.004, 0.0387, -0.0045, 0.031, 0.0},
     }}},
    {"psi_minus_0.parity",
     "psi-0",
     "tomography after the parity check",
     {{
        {0.4628, 0.0855, 0.0165, 0.0132, 0.0105, -0.0127, -0.334, -0.0178},
        {0.0855, 0.0038, 0.0527, -0.0045, 0.0007, 0.0, -0.0776, -0.0032},
        {0.0165, 0.0527, 0.0308, -0.0315, 0.0075, 0.0018, 0.01, 0.0005},
        {0.0132, -0.0045, -0.0315, 0.0298, 0.0106, -0.0007, -0.0295, 0.0025},
        {0.0105, 0.0007, 0.0075, 0.0106, 0.0488, 0.011, 0.0105, 0.0037},
        {-0.0127, 0.0, 0.0018, -0.0007, 0.011, 0.0098, 0.0522, -0.0055},
        {-0.334, -0.0776, 0.01, -0.0295, 0.0105, 0.0522, 0.4008, 0.0165},
        {-0.0178, -0.0032, 0.0005, 0.0025, 0.0037, -0.0055, 0.0165, 0.0128},
     }},
     {{
        {0.0, -0.0515, -0.0205, -0.0662, -0.011, 0.0, 0.158, 0.0707},
        {0.0515, 0.0, 0.0032, 0.01, 0.001, 0.0, -0.0105, 0.0},
        {0.0205, -0.0032, 0.0, 0.0485, -0.01, -0.0062, -0.009, -0.0017},
        {0.0662, -0.01, -0.0485, 0.0, 0.006, -0.001, 0.0057, -0.0005},
        {0.011, -0.001, 0.01, -0.006, 0.0, -0.011, -0.0175, -0.041},
        {0.0, 0.0, 0.0062, 0.001, 0.011, 0.0, -0.004, 0.003},
        {-0.158, 0.0105, 0.009, -0.0057, 0.0175, 0.004, 0.0, -0.027},
        {-0.0707, 0.0, 0.0017, 0.0005, 0.041, -0.003, 0.027, 0.0},
     }}},
    {"phi_plus_1.parity",
     "phi+1",
     "tomography after the parity check",
     {{
        {0.05, 0.0205, -0.002, -0.01725, -0.002, -0.0207, 0.0072, -0.0052},
        {0.0205, 0.046, 0.0542, -0.0935, 0.0002, 0.0035, 0.005, -0.005},
        {-0.002, 0.0542, 0.021, -0.021, 0.0057, 0.0267, 0.003, -0.014},
        {-0.0172, -0.0935, -0.021, 0.427, 0.092, 0.189, -0.018, 0.0195},
        {-0.002, 0.0002, 0.0057, 0.092, 0.03, 0.102, -0.003, -0.0037},
        {-0.0207, 0.0035, 0.0267, 0.189, 0.102, 0.239, 0.0282, -0.0675},
        {0.0072, 0.005, 0.003, -0.018, -0.003, 0.0282, 0.029, -0.0265},
        {-0.0052, -0.005, -0.014, 0.0195, -0.0037, -0.0675, -0.0265, 0.158},
     }},
     {{
        {0.0, -0.0115, 0.0045, -0.054, -0.0015, -0.0027, -0.0027, -0.0135},
        {0.0115, 0.0, 0.004, 0.0915, 0.0062, -0.0085, -0.0055, 0.038},
        {-0.0045, -0.004, 0.0, 0.0, -0.0037, -0.044, -0.002, 0.0072},
        {0.054, -0.0915, 0.0, 0.0, 0.0555, -0.032, 0.0132, -0.0195},
        {0.0015, -0.0062, 0.0037, -0.0555, 0.0, -0.0665, 0.0045, -0.04},
        {0.0027, 0.0085, 0.044, 0.032, 0.0665, 0.0, 0.007, 0.0765},
        {0.0027, 0.0055, 0.002, -0.0132, -0.0045, -0.007, 0.0, 0.0345},
        {0.0135, -0.038, -0.0072, 0.0195, 0.04, -0.0765, -0.0345, 0.0},
     }}},
    {"phi_minus_1.parity",
     "phi-1",
     "tomography after the parity check",
     {{
        {0.028, 0.0155, 0.002, -0.032, 0.0065, 0.024, -0.0045, -0.0041},
        {0.0155, 0.049, 0.058, -0.094, 0.01, 0.0055, 0.0073, 0.006},
        {0.002, 0.058, 0.015, -0.022, -0.0055, -0.0198, -0.0005, 0.0017},
        {-0.032, -0.094, -0.022, 0.439, -0.0838, -0.2265, 0.0227, 0.0195},
        {0.0065, 0.01, -0.0055, -0.0838, 0.026, 0.1075, -0.002, -0.0037},
        {0.024, 0.0055, -0.0198, -0.2265, 0.1075, 0.256, 0.0217, -0.072},
        {-0.0045, 0.0073, -0.0005, 0.0227, -0.002, 0.0217, 0.022, -0.0295},
        {-0.0041, 0.006, 0.0017, 0.0195, -0.0037, -0.072, -0.0295, 0.165},
     }},
     {{
        {0.0, -0.007, 0.001, -0.0522, 0.0025, 0.002, 0.0017, 0.0},
        {0.007, 0.0, 0.0057, 0.0965, 0.002, -0.0025, 0.0065, 0.0157},
        {-0.001, -0.0057, 0.0, 0.0035, 0.0007, 0.0372, -0.0005, 0.0007},
        {0.0522, -0.096, -0.0035, 0.0, -0.0447, -0.0072, -0.0032, -0.01},
        {-0.0025, -0.002, -0.0007, 0.0447, 0.0, -0.0555, -0.0015, -0.0282},
        {-0.002, 0.0025, -0.0372, 0.0072, 0.0555, 0.0, 0.0177, 0.0705},
        {-0.0017, -0.0065, 0.0005, 0.0032, 0.0015, -0.0177, 0.0, 0.032},
        {0.0, -0.0157, -0.0007, 0.01, 0.0282, -0.0705, -0.032, 0.0},
     }}},
    };
    return kMatrices;
}

}  // namespace belldisc::internal
