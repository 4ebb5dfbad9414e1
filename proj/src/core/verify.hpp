// Copyright 2026 The ptheta authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PTHETA_CORE_VERIFY_HPP
#define PTHETA_CORE_VERIFY_HPP

#include <string>
#include <string_view>
#include <vector>

#include "core/context.hpp"

namespace ptheta::verify {

/// One verified inequality family: its grid size, the worst margin seen
/// (positive means the strict form held everywhere, in the units noted in
/// the check's name/docs) and the verdict.
struct CheckRow {
  std::string name;
  long grid_size = 0;
  double worst_margin = 0;
  bool pass = false;
};

std::vector<CheckRow> theta_suite(const PrecisionContext& ctx);
std::vector<CheckRow> psi_suite(const PrecisionContext& ctx);
std::vector<CheckRow> spectral_suite(int j_max, int parallelism,
                                     const PrecisionContext& ctx);
std::vector<CheckRow> asymptotics_suite(int j_max, int parallelism,
                                        const PrecisionContext& ctx);

/// Dispatch by name: theta | psi | spectral | asymptotics | all.
std::vector<CheckRow> run_suite(std::string_view suite, int j_max,
                                int parallelism, const PrecisionContext& ctx);

}  // namespace ptheta::verify

#endif  // PTHETA_CORE_VERIFY_HPP
