// Copyright 2026 The Zorro Authors
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

#ifndef ZORRO_ZORRO_HPP_
#define ZORRO_ZORRO_HPP_

#include "zorro/bytes.hpp"
#include "zorro/dlog.hpp"
#include "zorro/elgamal.hpp"
#include "zorro/error.hpp"
#include "zorro/group.hpp"
#include "zorro/hash.hpp"
#include "zorro/ledger.hpp"
#include "zorro/modp_group.hpp"
#include "zorro/policy.hpp"
#include "zorro/protocol.hpp"
#include "zorro/range_proof.hpp"
#include "zorro/reductions/cf.hpp"
#include "zorro/reductions/counts.hpp"
#include "zorro/reductions/id3.hpp"
#include "zorro/reductions/naive_bayes.hpp"
#include "zorro/reductions/regression.hpp"
#include "zorro/reductions/voting.hpp"
#include "zorro/ristretto_group.hpp"
#include "zorro/rng.hpp"
#include "zorro/session.hpp"
#include "zorro/sigma.hpp"
#include "zorro/transcript.hpp"
#include "zorro/verify_result.hpp"

#endif  // ZORRO_ZORRO_HPP_
