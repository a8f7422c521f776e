// Copyright 2026 The neps-pst Authors
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

#ifndef NEPS_PST_NEPS_PST_HPP
#define NEPS_PST_NEPS_PST_HPP

#include "neps_pst/commands.hpp"
#include "neps_pst/gf2.hpp"
#include "neps_pst/graphs.hpp"
#include "neps_pst/io.hpp"
#include "neps_pst/pst.hpp"
#include "neps_pst/spectral.hpp"

#endif  // NEPS_PST_NEPS_PST_HPP
