// Copyright 2026 The scitm Authors
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

#include <string>

#include "scitm/dfd/model.hpp"

namespace scitm::dfd {

/// Graphviz rendering of every model on `layer`.
///
/// Processes are ellipses, external entities boxes, data stores open-ended
/// rectangles (HTML label with top/bottom rules only). Each trust boundary
/// becomes a dashed cluster; an element in several boundaries is drawn in
/// the lexicographically first one. On layers above 0 each child model gets
/// its own cluster named after the expanded process. Nodes and edges are
/// emitted sorted by id, so output is byte-stable.
///
/// Throws UnknownLayer if the layer holds no model.
std::string render_dot(const LayeredModel& model, int layer);

}  // namespace scitm::dfd
