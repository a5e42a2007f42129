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

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fflow {

// Dense GF(2) vector, used for symplectic Pauli parts and Majorana supports.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }
  bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool v = true) {
    std::uint64_t m = std::uint64_t{1} << (i & 63);
    if (v)
      w_[i >> 6] |= m;
    else
      w_[i >> 6] &= ~m;
  }
  void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t{1} << (i & 63); }
  bool any() const {
    for (auto x : w_)
      if (x) return true;
    return false;
  }
  int count() const {
    int c = 0;
    for (auto x : w_) c += std::popcount(x);
    return c;
  }
  BitVec& operator^=(const BitVec& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
  }
  bool operator==(const BitVec& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator<(const BitVec& o) const { return w_ < o.w_; }
  const std::vector<std::uint64_t>& words() const { return w_; }
  std::vector<std::uint64_t>& words() { return w_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

// Signed Pauli string i^phase * (tensor of I/X/Y/Z), with Y = iXZ.
// Letters are stored symplectically: X=(1,0), Z=(0,1), Y=(1,1).
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(int n) : n_(n), x_(n), z_(n) {}

  // "+XIZY", "-iZZ", "XX" (sign optional). Qubit 0 is the leftmost letter.
  static PauliString parse(const std::string& s) {
    std::size_t pos = 0;
    int ph = 0;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      if (s[pos] == '-') ph = 2;
      ++pos;
    }
    if (pos < s.size() && s[pos] == 'i') {
      ph += 1;
      ++pos;
    }
    PauliString p(static_cast<int>(s.size() - pos));
    for (std::size_t q = pos; q < s.size(); ++q) p.set(static_cast<int>(q - pos), s[q]);
    p.phase_ = ph % 4;
    return p;
  }

  static PauliString single(int n, int q, char letter, int phase = 0) {
    PauliString p(n);
    p.set(q, letter);
    p.phase_ = phase & 3;
    return p;
  }

  int n_qubits() const { return n_; }
  int phase() const { return phase_; }
  void set_phase(int ph) { phase_ = ph & 3; }

  bool x(int q) const { return x_.get(q); }
  bool z(int q) const { return z_.get(q); }

  char letter(int q) const {
    bool a = x_.get(q), b = z_.get(q);
    if (a && b) return 'Y';
    if (a) return 'X';
    if (b) return 'Z';
    return 'I';
  }

  void set(int q, char l) {
    if (q < 0 || q >= n_) throw std::out_of_range("PauliString: qubit index out of range");
    switch (l) {
      case 'I': x_.set(q, false); z_.set(q, false); break;
      case 'X': x_.set(q, true); z_.set(q, false); break;
      case 'Y': x_.set(q, true); z_.set(q, true); break;
      case 'Z': x_.set(q, false); z_.set(q, true); break;
      default: throw std::invalid_argument(std::string("PauliString: bad letter ") + l);
    }
  }

  int weight() const {
    int w = 0;
    const auto& a = x_.words();
    const auto& b = z_.words();
    for (std::size_t i = 0; i < a.size(); ++i) w += std::popcount(a[i] | b[i]);
    return w;
  }

  std::vector<int> support() const {
    std::vector<int> s;
    for (int q = 0; q < n_; ++q)
      if (x_.get(q) || z_.get(q)) s.push_back(q);
    return s;
  }

  bool is_identity() const { return !x_.any() && !z_.any(); }
  bool hermitian() const { return (phase_ & 1) == 0; }
  bool same_letters(const PauliString& o) const { return x_ == o.x_ && z_ == o.z_; }

  PauliString operator*(const PauliString& b) const {
    if (n_ != b.n_) throw std::invalid_argument("pauli_mul: size mismatch");
    PauliString r(n_);
    int plus = 0, minus = 0;
    const auto &ax = x_.words(), &az = z_.words(), &bx = b.x_.words(), &bz = b.z_.words();
    auto& rx = r.x_.words();
    auto& rz = r.z_.words();
    for (std::size_t i = 0; i < ax.size(); ++i) {
      std::uint64_t aX = ax[i] & ~az[i], aY = ax[i] & az[i], aZ = ~ax[i] & az[i];
      std::uint64_t bX = bx[i] & ~bz[i], bY = bx[i] & bz[i], bZ = ~bx[i] & bz[i];
      // XY = iZ, YZ = iX, ZX = iY and the reversed orders give -i.
      plus += std::popcount((aX & bY) | (aY & bZ) | (aZ & bX));
      minus += std::popcount((aY & bX) | (aZ & bY) | (aX & bZ));
      rx[i] = ax[i] ^ bx[i];
      rz[i] = az[i] ^ bz[i];
    }
    r.phase_ = ((phase_ + b.phase_ + plus - minus) % 4 + 4) % 4;
    return r;
  }

  PauliString operator-() const {
    PauliString r = *this;
    r.phase_ = (phase_ + 2) & 3;
    return r;
  }

  PauliString times_i(int k = 1) const {
    PauliString r = *this;
    r.phase_ = (phase_ + k) & 3;
    return r;
  }

  bool commutes(const PauliString& b) const {
    if (n_ != b.n_) throw std::invalid_argument("pauli_commutes: size mismatch");
    int c = 0;
    const auto &ax = x_.words(), &az = z_.words(), &bx = b.x_.words(), &bz = b.z_.words();
    for (std::size_t i = 0; i < ax.size(); ++i) c += std::popcount((ax[i] & bz[i]) ^ (az[i] & bx[i]));
    return (c & 1) == 0;
  }

  std::string str() const {
    static const char* pre[4] = {"+", "+i", "-", "-i"};
    std::string s = pre[phase_];
    for (int q = 0; q < n_; ++q) s.push_back(letter(q));
    return s;
  }

  // Sparse text, e.g. "-X0 Y3 Z7"; handy in diagnostics for wide strings.
  std::string sparse_str() const {
    static const char* pre[4] = {"+", "+i", "-", "-i"};
    std::string s = pre[phase_];
    bool first = true;
    for (int q = 0; q < n_; ++q) {
      char l = letter(q);
      if (l == 'I') continue;
      if (!first) s += ' ';
      s += l;
      s += std::to_string(q);
      first = false;
    }
    if (first) s += "I";
    return s;
  }

  const BitVec& xbits() const { return x_; }
  const BitVec& zbits() const { return z_; }

  bool operator==(const PauliString& o) const {
    return n_ == o.n_ && phase_ == o.phase_ && x_ == o.x_ && z_ == o.z_;
  }
  bool operator!=(const PauliString& o) const { return !(*this == o); }
  bool operator<(const PauliString& o) const {
    if (x_ == o.x_) {
      if (z_ == o.z_) return phase_ < o.phase_;
      return z_ < o.z_;
    }
    return x_ < o.x_;
  }

 private:
  int n_ = 0;
  BitVec x_, z_;
  int phase_ = 0;
};

inline PauliString pauli_mul(const PauliString& a, const PauliString& b) { return a * b; }
inline bool pauli_commutes(const PauliString& a, const PauliString& b) { return a.commutes(b); }
inline int pauli_weight(const PauliString& a) { return a.weight(); }

// Build a string from (qubit, letter) pairs.
inline PauliString make_pauli(int n, std::initializer_list<std::pair<int, char>> items, int phase = 0) {
  PauliString p(n);
  for (auto [q, l] : items) p.set(q, l);
  p.set_phase(phase);
  return p;
}

}  // namespace fflow
