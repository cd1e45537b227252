// Copyright 2026 The dvm Authors.
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

#include <gtest/gtest.h>

#include "dvm/error.hpp"

#define EXPECT_DVM_ERROR(stmt, expected_kind)                                                  \
  do {                                                                                         \
    try {                                                                                      \
      stmt;                                                                                    \
      ADD_FAILURE() << #stmt " did not throw";                                                 \
    } catch (const ::dvm::Error& e) {                                                          \
      EXPECT_EQ(e.kind(), expected_kind) << #stmt ": " << e.what();                            \
    }                                                                                          \
  } while (0)
