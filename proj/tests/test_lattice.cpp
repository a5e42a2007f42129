// Copyright 2026 The fflow Authors
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

#include <catch_amalgamated.hpp>

#include "fflow/lattice.hpp"

using namespace fflow;

TEST_CASE("open square lattice bond counts", "[lattice]") {
  // W x H open: H(W-1) horizontal + W(H-1) vertical bonds, each in two directions.
  for (auto [w, h] : {std::pair{4, 4}, {6, 6}, {3, 2}, {5, 1}}) {
    Lattice lat(w, h, Boundary::Open);
    int bonds = h * (w - 1) + w * (h - 1);
    CHECK(static_cast<int>(lat.bonds().size()) == bonds);
    CHECK(static_cast<int>(directed_edges(lat).size()) == 2 * bonds);
  }
}

TEST_CASE("periodic lattice wraps and counts 2N bonds", "[lattice]") {
  Lattice lat(4, 4, Boundary::Periodic);
  CHECK(lat.bonds().size() == 32);
  CHECK(lat.neighbor(lat.site(3, 0), Orientation::East) == lat.site(0, 0));
  CHECK(lat.neighbor(lat.site(0, 0), Orientation::South) == lat.site(0, 3));
  Lattice ring(4, 1, Boundary::Periodic);
  CHECK(ring.bonds().size() == 4);
  CHECK(ring.neighbor(0, Orientation::North) == -1);
}

TEST_CASE("invalid lattices are rejected", "[lattice]") {
  CHECK_THROWS(Lattice(0, 3, Boundary::Open));
  CHECK_THROWS(Lattice(2, 2, Boundary::Periodic));
  CHECK_THROWS(Lattice(4, 2, Boundary::Periodic));
  CHECK_NOTHROW(Lattice(3, 3, Boundary::Periodic));
}

TEST_CASE("row-major indexing with y growing north", "[lattice]") {
  Lattice lat(3, 2, Boundary::Open);
  CHECK(lat.site(2, 1) == 5);
  CHECK(lat.x_of(5) == 2);
  CHECK(lat.y_of(5) == 1);
  CHECK(lat.neighbor(1, Orientation::North) == 4);
  CHECK(lat.neighbor(4, Orientation::South) == 1);
  CHECK(lat.neighbor(2, Orientation::East) == -1);
  CHECK(edge_orientation(lat, 4, 3) == Orientation::West);
  CHECK_THROWS(edge_orientation(lat, 0, 5));
}

TEST_CASE("directed edges are sorted, reversible and unique", "[lattice]") {
  Lattice lat(3, 3, Boundary::Open);
  auto es = directed_edges(lat);
  CHECK(std::is_sorted(es.begin(), es.end()));
  for (const auto& e : es) {
    auto r = e.reversed();
    CHECK(std::find(es.begin(), es.end(), r) != es.end());
    CHECK(r.reversed().orientation == e.orientation);
    CHECK(lat.neighbor(e.source, e.orientation) == e.target);
  }
}
