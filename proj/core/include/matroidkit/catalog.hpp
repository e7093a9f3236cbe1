// Copyright 2026 The matroidkit Authors.
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

#ifndef MATROIDKIT_CATALOG_HPP_
#define MATROIDKIT_CATALOG_HPP_

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "matroidkit/matroid.hpp"

namespace matroidkit {

/// U_{r,n} on {1..n}.
Matroid uniform(int r, int n);
/// M(K4): 1=12, 2=13, 3=23, 4=14, 5=24, 6=34 on vertices 1..4.
Matroid mk4();
/// The Fano plane: element i is the nonzero vector of GF(2)^3 with binary digits of i.
Matroid fano();
/// F7 with the line {3,5,6} relaxed.
Matroid nonfano();
/// Spokes are 2i-1 and rim edges 2i; triangles {2i-1,2i,2i+1}, triads {2i,2i+1,2i+2} (cyclically).
Matroid wheel(int r);
/// wheel(r) with the rim relaxed.
Matroid whirl(int r);
/// The rank-4 ternary matroid P8: [I | A] over GF(3) with rows of A
/// (0,1,1,-1), (1,0,1,1), (1,1,0,1), (-1,1,1,0), labels 1..8.
Matroid p8();

struct Edge {
  int label;
  int u;
  int v;
};
/// Cycle matroid of a multigraph. Loops are allowed.
Matroid graphic(const std::vector<Edge>& edges);

/// Column matroid over GF(q) of vectors given as field codes (0..q-1).
Matroid gf_vector_matroid(int q, const std::map<int, std::vector<int>>& columns);

/// Declares the circuit-hyperplane h a basis.
Matroid relax(const Matroid& m, ElementSet h);
/// Adds f parallel to e; f is a loop when e is.
Matroid parallel_extension(const Matroid& m, int e, int f);
/// Adds f in series with e.
Matroid series_extension(const Matroid& m, int e, int f);
/// Ground sets must be disjoint.
Matroid direct_sum(const Matroid& a, const Matroid& b);

/// Sparse paving matroid of rank r on {1..n}: a random family of r-sets
/// pairwise meeting in at most r-2 elements is declared non-bases.
Matroid random_sparse_paving(std::mt19937_64& rng, int r, int n, int attempts);
/// Column matroid of a uniformly random r×n matrix over GF(q), labels 1..n.
Matroid random_gf_matroid(std::mt19937_64& rng, int q, int r, int n);

struct CatalogEntry {
  std::string name;
  Matroid matroid;
};
/// The named built-in instances used by suites and tests, in a fixed order.
std::vector<CatalogEntry> builtin_catalog();
/// Looks up a constructor by name with integer arguments; throws
/// std::invalid_argument on an unknown name or bad arity.
Matroid construct(const std::string& name, const std::vector<int>& args);

}  // namespace matroidkit

#endif  // MATROIDKIT_CATALOG_HPP_
