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

#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fflow {

enum class Boundary { Open, Periodic };
enum class Orientation { East, West, North, South };

inline const char* to_string(Orientation o) {
  switch (o) {
    case Orientation::East: return "East";
    case Orientation::West: return "West";
    case Orientation::North: return "North";
    case Orientation::South: return "South";
  }
  return "?";
}

inline const char* to_string(Boundary b) { return b == Boundary::Open ? "open" : "periodic"; }

struct DirectedEdge {
  int source = 0;
  int target = 0;
  Orientation orientation = Orientation::East;

  bool horizontal() const { return orientation == Orientation::East || orientation == Orientation::West; }
  DirectedEdge reversed() const {
    static const Orientation rev[4] = {Orientation::West, Orientation::East, Orientation::South,
                                       Orientation::North};
    return {target, source, rev[static_cast<int>(orientation)]};
  }
  bool operator==(const DirectedEdge& o) const { return source == o.source && target == o.target; }
  bool operator<(const DirectedEdge& o) const {
    return source != o.source ? source < o.source : target < o.target;
  }
};

// Square lattice, row-major: site (x, y) has index y * width + x; y grows to the north.
class Lattice {
 public:
  Lattice() = default;
  Lattice(int width, int height, Boundary bc) : w_(width), h_(height), bc_(bc) {
    if (width < 1 || height < 1) throw std::invalid_argument("lattice dimensions must be positive");
    if (bc == Boundary::Periodic) {
      // A dimension of length 1 is simply not wrapped (rings are 1 x L or L x 1).
      bool ok = (width == 1 || width >= 3) && (height == 1 || height >= 3) && width * height >= 3;
      if (!ok) throw std::invalid_argument("periodic lattice needs every wrapped dimension >= 3");
    }
  }

  int width() const { return w_; }
  int height() const { return h_; }
  Boundary boundary() const { return bc_; }
  bool periodic() const { return bc_ == Boundary::Periodic; }
  int n_sites() const { return w_ * h_; }
  int site(int x, int y) const { return y * w_ + x; }
  int x_of(int j) const { return j % w_; }
  int y_of(int j) const { return j / w_; }

  bool wraps_x() const { return periodic() && w_ > 1; }
  bool wraps_y() const { return periodic() && h_ > 1; }

  // Neighbor of site j one step in direction o, or -1.
  int neighbor(int j, Orientation o) const {
    int x = x_of(j), y = y_of(j);
    switch (o) {
      case Orientation::East:
        if (x + 1 < w_) return site(x + 1, y);
        return wraps_x() ? site(0, y) : -1;
      case Orientation::West:
        if (x > 0) return site(x - 1, y);
        return wraps_x() ? site(w_ - 1, y) : -1;
      case Orientation::North:
        if (y + 1 < h_) return site(x, y + 1);
        return wraps_y() ? site(x, 0) : -1;
      case Orientation::South:
        if (y > 0) return site(x, y - 1);
        return wraps_y() ? site(x, h_ - 1) : -1;
    }
    return -1;
  }

  // Undirected bonds as (j, k) with k the east or north neighbor of j.
  std::vector<std::pair<int, int>> bonds() const {
    std::vector<std::pair<int, int>> b;
    for (int j = 0; j < n_sites(); ++j) {
      int e = neighbor(j, Orientation::East), n = neighbor(j, Orientation::North);
      if (e >= 0) b.emplace_back(j, e);
      if (n >= 0) b.emplace_back(j, n);
    }
    return b;
  }

  std::string describe() const {
    return std::to_string(w_) + "x" + std::to_string(h_) + " " + to_string(bc_);
  }

 private:
  int w_ = 1, h_ = 1;
  Boundary bc_ = Boundary::Open;
};

inline Lattice build_square_lattice(int width, int height, Boundary bc) { return Lattice(width, height, bc); }

inline std::vector<DirectedEdge> directed_edges(const Lattice& lat) {
  std::vector<DirectedEdge> out;
  for (int j = 0; j < lat.n_sites(); ++j)
    for (Orientation o : {Orientation::East, Orientation::West, Orientation::North, Orientation::South}) {
      int k = lat.neighbor(j, o);
      if (k >= 0) out.push_back({j, k, o});
    }
  std::sort(out.begin(), out.end());
  return out;
}

inline Orientation edge_orientation(const Lattice& lat, int j, int k) {
  for (Orientation o : {Orientation::East, Orientation::West, Orientation::North, Orientation::South})
    if (lat.neighbor(j, o) == k) return o;
  throw std::invalid_argument("sites " + std::to_string(j) + "," + std::to_string(k) + " are not adjacent");
}

}  // namespace fflow
