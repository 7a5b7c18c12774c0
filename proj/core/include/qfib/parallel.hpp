// Copyright 2026 The qfibounds Authors
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

#pragma once

#include <functional>

namespace qfib {

/// Worker cap from the QFIBOUNDS_THREADS environment variable;
/// hardware concurrency when unset or 0.
int thread_cap();

/// Runs fn(i) for i in [0, n) on a small worker pool. Results must be
/// written to slots indexed by i so the outcome is independent of
/// scheduling. The first exception thrown by any worker is rethrown on
/// the calling thread after all workers join.
void parallel_for(long n, const std::function<void(long)>& fn, int threads = 0);

}  // namespace qfib
