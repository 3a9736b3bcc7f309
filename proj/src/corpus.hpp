/*
 * Copyright 2025-2026 the cheatbot authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <vector>

#include "graph.hpp"

namespace cheatbot::corpus {

using graphcore::Graph;

/**
 * Every connected graph on exactly n vertices, one representative per
 * isomorphism class (n <= 7; the classes are found by extending the
 * (n-1)-vertex classes and minimizing the adjacency bitmask over all vertex
 * permutations). Results are cached per n.
 */
const std::vector<Graph>& connected_graphs(int n);

/** Every unlabelled tree on exactly n vertices (n <= 9), via Pruefer
 *  enumeration deduplicated by the centre-rooted canonical code. */
const std::vector<Graph>& trees(int n);

}  // namespace cheatbot::corpus
