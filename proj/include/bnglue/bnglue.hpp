// Copyright 2026 The bnglue Authors
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

// Convenience header pulling in the whole library.

#ifndef BNGLUE_BNGLUE_HPP_
#define BNGLUE_BNGLUE_HPP_

#include "bnglue/audit.hpp"
#include "bnglue/certificate.hpp"
#include "bnglue/certifier.hpp"
#include "bnglue/hypotheses.hpp"
#include "bnglue/instances.hpp"
#include "bnglue/numerics.hpp"
#include "bnglue/planner.hpp"
#include "bnglue/serialize.hpp"
#include "bnglue/verifier.hpp"

#endif  // BNGLUE_BNGLUE_HPP_
