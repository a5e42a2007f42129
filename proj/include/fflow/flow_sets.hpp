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
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "fflow/encodings.hpp"
#include "fflow/lattice.hpp"
#include "fflow/majorana.hpp"

namespace fflow {

enum class ComponentShape { Petal2Loop, Plaquette4Loop, LineChain, LineLoop };

inline const char* to_string(ComponentShape s) {
  switch (s) {
    case ComponentShape::Petal2Loop: return "Petal2Loop";
    case ComponentShape::Plaquette4Loop: return "Plaquette4Loop";
    case ComponentShape::LineChain: return "LineChain";
    case ComponentShape::LineLoop: return "LineLoop";
  }
  return "?";
}

struct ConnectedComponent {
  std::vector<DirectedEdge> edges;  // head-to-tail order
  ComponentShape shape = ComponentShape::LineChain;

  std::vector<int> sites() const {
    std::set<int> s;
    for (const auto& e : edges) {
      s.insert(e.source);
      s.insert(e.target);
    }
    return {s.begin(), s.end()};
  }
};

struct FlowSet {
  std::string label;
  std::vector<ConnectedComponent> components;

  std::size_t edge_count() const {
    std::size_t c = 0;
    for (const auto& cc : components) c += cc.edges.size();
    return c;
  }
  std::vector<DirectedEdge> edges() const {
    std::vector<DirectedEdge> out;
    for (const auto& cc : components) out.insert(out.end(), cc.edges.begin(), cc.edges.end());
    return out;
  }
};

enum class Strategy { Petal, Plaquette, Line };

inline const char* to_string(Strategy s) {
  switch (s) {
    case Strategy::Petal: return "petal";
    case Strategy::Plaquette: return "plaquette";
    case Strategy::Line: return "line";
  }
  return "?";
}

// Size-2 loops {(jk), (kj)}: horizontal bonds split by the parity of the western x, vertical
// bonds by the parity of the southern y.
inline std::vector<FlowSet> petal_flow_sets(const Lattice& lat) {
  std::vector<FlowSet> sets = {{"H-even", {}}, {"H-odd", {}}, {"V-even", {}}, {"V-odd", {}}};
  for (auto [j, k] : lat.bonds()) {
    Orientation o = edge_orientation(lat, j, k);
    DirectedEdge e{j, k, o};
    ConnectedComponent cc{{e, e.reversed()}, ComponentShape::Petal2Loop};
    bool horizontal = o == Orientation::East;
    int coord = horizontal ? lat.x_of(j) : lat.y_of(j);
    sets[(horizontal ? 0 : 2) + (coord % 2)].components.push_back(cc);
  }
  std::erase_if(sets, [](const FlowSet& f) { return f.components.empty(); });
  return sets;
}

// Rows (EA/WE) and columns (NO/SO); chains run from boundary to boundary, loops when periodic.
inline std::vector<FlowSet> line_flow_sets(const Lattice& lat) {
  int W = lat.width(), H = lat.height();
  FlowSet no{"NO", {}}, so{"SO", {}}, ea{"EA", {}}, we{"WE", {}};
  auto chain = [&](int start, Orientation o, int steps, bool loop) {
    ConnectedComponent cc;
    cc.shape = loop ? ComponentShape::LineLoop : ComponentShape::LineChain;
    int j = start;
    for (int s = 0; s < steps; ++s) {
      int k = lat.neighbor(j, o);
      cc.edges.push_back({j, k, o});
      j = k;
    }
    return cc;
  };
  if (W > 1)
    for (int y = 0; y < H; ++y) {
      bool loop = lat.wraps_x();
      int steps = loop ? W : W - 1;
      ea.components.push_back(chain(lat.site(0, y), Orientation::East, steps, loop));
      we.components.push_back(chain(lat.site(loop ? 0 : W - 1, y), Orientation::West, steps, loop));
    }
  if (H > 1)
    for (int x = 0; x < W; ++x) {
      bool loop = lat.wraps_y();
      int steps = loop ? H : H - 1;
      no.components.push_back(chain(lat.site(x, 0), Orientation::North, steps, loop));
      so.components.push_back(chain(lat.site(x, loop ? 0 : H - 1), Orientation::South, steps, loop));
    }
  return {no, so, ea, we};
}

// Loops around the faces (x, y) with x + y odd (the DK ancilla faces), including virtual faces just outside an open
// boundary (their in-lattice edges form short chains). Sets: (x mod 2) x {ccw, cw}.
inline std::vector<FlowSet> plaquette_flow_sets(const Lattice& lat) {
  int W = lat.width(), H = lat.height();
  if (W % 2 || H % 2) throw std::invalid_argument("plaquette_flow_sets: even dimensions required");
  std::vector<FlowSet> sets = {{"P-even-ccw", {}}, {"P-even-cw", {}}, {"P-odd-ccw", {}}, {"P-odd-cw", {}}};
  int x0 = lat.periodic() ? 0 : -1, y0 = lat.periodic() ? 0 : -1;
  auto in = [&](int x, int y) { return x >= 0 && y >= 0 && x < W && y < H; };
  for (int y = y0; y < H; ++y)
    for (int x = x0; x < W; ++x) {
      if (((x + y) % 2 + 2) % 2 == 0) continue;
      // Corners counterclockwise: (x,y) -> (x+1,y) -> (x+1,y+1) -> (x,y+1).
      int cx[4] = {x, x + 1, x + 1, x}, cy[4] = {y, y, y + 1, y + 1};
      std::vector<int> ids(4, -1);
      for (int c = 0; c < 4; ++c) {
        int xx = cx[c], yy = cy[c];
        if (lat.periodic()) {
          xx %= W;
          yy %= H;
        }
        if (in(xx, yy)) ids[c] = lat.site(xx, yy);
      }
      for (int cw = 0; cw < 2; ++cw) {
        std::vector<int> order = cw ? std::vector<int>{0, 3, 2, 1} : std::vector<int>{0, 1, 2, 3};
        std::vector<DirectedEdge> loop_edges;
        for (int c = 0; c < 4; ++c) {
          int a = ids[order[c]], b = ids[order[(c + 1) % 4]];
          if (a >= 0 && b >= 0) loop_edges.push_back({a, b, edge_orientation(lat, a, b)});
          else loop_edges.push_back({-1, -1, Orientation::East});
        }
        ConnectedComponent cc;
        bool full = std::all_of(loop_edges.begin(), loop_edges.end(), [](auto& e) { return e.source >= 0; });
        if (full) {
          // Start the loop at its minimal site.
          int best = 0;
          for (int c = 1; c < 4; ++c)
            if (loop_edges[c].source < loop_edges[best].source) best = c;
          std::rotate(loop_edges.begin(), loop_edges.begin() + best, loop_edges.end());
          cc.edges = loop_edges;
          cc.shape = ComponentShape::Plaquette4Loop;
        } else {
          // Keep maximal head-to-tail runs of existing edges; rotate so a run is not split.
          int start = 0;
          while (start < 4 && loop_edges[start].source >= 0) ++start;
          for (int c = 1; c <= 4; ++c) {
            const auto& e = loop_edges[(start + c) % 4];
            if (e.source >= 0) cc.edges.push_back(e);
          }
          cc.shape = ComponentShape::LineChain;
        }
        if (cc.edges.empty()) continue;
        int cls = ((x % 2) + 2) % 2;
        sets[2 * cls + cw].components.push_back(cc);
      }
    }
  return sets;
}

inline std::vector<FlowSet> flow_sets_for(Strategy s, const Lattice& lat) {
  switch (s) {
    case Strategy::Petal: return petal_flow_sets(lat);
    case Strategy::Plaquette: return plaquette_flow_sets(lat);
    case Strategy::Line: return line_flow_sets(lat);
  }
  return {};
}

struct FlowReport {
  std::size_t pairs_checked = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

inline std::string edge_name(const DirectedEdge& e) {
  return "(" + std::to_string(e.source) + "," + std::to_string(e.target) + ")";
}

inline FlowReport verify_flow_property(const FlowSet& fs, int n_modes) {
  FlowReport r;
  auto edges = fs.edges();
  for (std::size_t a = 0; a < edges.size(); ++a)
    for (std::size_t b = a + 1; b < edges.size(); ++b) {
      ++r.pairs_checked;
      auto ta = transfer_op(n_modes, edges[a].source, edges[a].target);
      auto tb = transfer_op(n_modes, edges[b].source, edges[b].target);
      if (!majorana_commutes(ta.monomial, tb.monomial))
        r.violations.push_back(edge_name(edges[a]) + " and " + edge_name(edges[b]) + " clash");
    }
  // Components must not share fermionic sites either.
  std::map<int, std::size_t> owner;
  for (std::size_t c = 0; c < fs.components.size(); ++c)
    for (int s : fs.components[c].sites()) {
      auto [it, fresh] = owner.emplace(s, c);
      if (!fresh) r.violations.push_back("site " + std::to_string(s) + " shared by components " +
                                         std::to_string(it->second) + " and " + std::to_string(c));
    }
  return r;
}

inline std::vector<int> component_qubits(const ConnectedComponent& cc, const Encoding& enc) {
  std::set<int> q;
  for (const auto& e : cc.edges)
    for (int s : enc.transfer(e.source, e.target).support()) q.insert(s);
  return {q.begin(), q.end()};
}

struct OverlapReport {
  std::vector<std::string> overlaps;
  bool ok() const { return overlaps.empty(); }
};

inline OverlapReport verify_nonoverlap_after_encoding(const FlowSet& fs, const Encoding& enc) {
  OverlapReport r;
  std::map<int, std::size_t> owner;
  for (std::size_t c = 0; c < fs.components.size(); ++c)
    for (int q : component_qubits(fs.components[c], enc)) {
      auto [it, fresh] = owner.emplace(q, c);
      if (!fresh) {
        std::string role = q < static_cast<int>(enc.layout.qubit_role.size()) ? enc.layout.qubit_role[q] : "";
        r.overlaps.push_back(fs.label + ": qubit " + std::to_string(q) + " (" + role +
                             ") shared by components " + std::to_string(it->second) + " and " +
                             std::to_string(c) + " (overlapping ancilla supports)");
      }
    }
  return r;
}

}  // namespace fflow
