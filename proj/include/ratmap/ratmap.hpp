/*
   Copyright 2026 The ratmap Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/// Umbrella header: the whole library except the command-line front end.

#ifndef RATMAP_RATMAP_HPP
#define RATMAP_RATMAP_HPP

#include "error.hpp"
#include "scalar.hpp"
#include "poly.hpp"
#include "mpoly.hpp"
#include "expr.hpp"
#include "matrix.hpp"
#include "resultant.hpp"
#include "pointed_map.hpp"
#include "chain_common.hpp"
#include "homotopy.hpp"
#include "proj_linear.hpp"
#include "int_linear.hpp"
#include "punctured_plane.hpp"
#include "serialize.hpp"
#include "oracle.hpp"
#include "acceptance.hpp"

#endif
