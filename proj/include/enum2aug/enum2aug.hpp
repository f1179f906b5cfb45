// Copyright 2026 The enum2aug Authors
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

// Umbrella header.

#ifndef ENUM2AUG_ENUM2AUG_HPP_
#define ENUM2AUG_ENUM2AUG_HPP_

#include "enum2aug/canonical.hpp"
#include "enum2aug/codes.hpp"
#include "enum2aug/enumerator.hpp"
#include "enum2aug/feature.hpp"
#include "enum2aug/graph.hpp"
#include "enum2aug/io.hpp"
#include "enum2aug/oracle.hpp"
#include "enum2aug/parent_child.hpp"
#include "enum2aug/symmetry.hpp"

#endif  // ENUM2AUG_ENUM2AUG_HPP_
