//  Copyright 2026 The hn-games Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#pragma once

#include "hn/dot.hpp"
#include "hn/engine.hpp"
#include "hn/errors.hpp"
#include "hn/game.hpp"
#include "hn/gamefile.hpp"
#include "hn/instances.hpp"
#include "hn/lattice.hpp"
#include "hn/oracle.hpp"
#include "hn/rational.hpp"
#include "hn/render.hpp"
#include "hn/value.hpp"
