// Copyright 2026 The irj Authors
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

#ifndef IRJ_EXECUTION_HPP_
#define IRJ_EXECUTION_HPP_

namespace irj {

// Selects between the OpenMP kernel and its serial reference. Both produce
// bit-identical results in identical order.
enum class Execution { kSerial, kParallel };

}  // namespace irj

#endif  // IRJ_EXECUTION_HPP_
