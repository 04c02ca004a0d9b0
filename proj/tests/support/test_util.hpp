// Copyright 2026 The CIC Broker Authors
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

#ifndef CIC_TESTS_TEST_UTIL_HPP_
#define CIC_TESTS_TEST_UTIL_HPP_

#include <gtest/gtest.h>

#include "cic/error.hpp"

namespace testutil {

// Error code raised by f; records a failure when nothing is thrown.
template <class F>
cic::ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const cic::Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no cic::Error thrown";
  return cic::ErrorCode::InvalidParameters;
}

}  // namespace testutil

#endif  // CIC_TESTS_TEST_UTIL_HPP_
