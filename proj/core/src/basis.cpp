// Copyright 2026 The qpsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qpsim/basis.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>

namespace qpsim {

PauliVector StabilizerBasis::column_vector(int idx) const {
  PauliVector out(n);
  for (const auto& [label, sign] : columns[idx].entries) out[label] = sign;
  return out;
}

StabilizerTableau StabilizerBasis::column_tableau(int idx) const {
  return StabilizerTableau::from_generators(columns[idx].generators);
}

uint64_t full_basis_count(int n) {
  uint64_t count = uint64_t{1} << n;
  for (int k = 1; k <= n; ++k) count *= (uint64_t{1} << k) + 1;
  return count;
}

namespace {

// x/z masks of a base-4 label, for fast commutation checks.
struct LabelMasks {
  std::vector<uint16_t> x, z;
  explicit LabelMasks(int n) {
    size_t total = size_t{1} << (2 * n);
    x.resize(total);
    z.resize(total);
    for (size_t l = 0; l < total; ++l) {
      uint16_t xm = 0, zm = 0;
      for (int q = 0; q < n; ++q) {
        int d = (l >> (2 * q)) & 3;
        if (d == 1 || d == 2) xm |= uint16_t(1) << q;
        if (d == 2 || d == 3) zm |= uint16_t(1) << q;
      }
      x[l] = xm;
      z[l] = zm;
    }
  }
  bool commute(uint32_t a, uint32_t b) const {
    return (std::popcount(uint32_t((x[a] & z[b]) ^ (z[a] & x[b]))) & 1) == 0;
  }
};

// Enumerates every rank-n commuting subgroup exactly once by requiring each
// new generator to be the smallest element it introduces into the closure.
void enumerate_groups(int n, const LabelMasks& masks,
                      std::vector<uint32_t>& gens,
                      std::vector<uint32_t>& closure,
                      std::vector<std::vector<uint32_t>>& out) {
  if (static_cast<int>(gens.size()) == n) {
    out.push_back(gens);
    return;
  }
  uint32_t total = uint32_t{1} << (2 * n);
  uint32_t start = gens.empty() ? 1 : gens.back() + 1;
  for (uint32_t g = start; g < total; ++g) {
    bool ok = true;
    for (uint32_t h : gens) {
      if (!masks.commute(g, h)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    // Products with the current closure must all be new and larger than g,
    // otherwise this generator tuple is not the canonical one for its group.
    for (uint32_t h : closure) {
      uint32_t e = g ^ h;  // label XOR is the unsigned Pauli product
      if (e <= g && h != 0) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    size_t old_size = closure.size();
    for (size_t k = 0; k < old_size; ++k) closure.push_back(g ^ closure[k]);
    gens.push_back(g);
    enumerate_groups(n, masks, gens, closure, out);
    gens.pop_back();
    closure.resize(old_size);
  }
}

}  // namespace

StabilizerBasis full_stabilizer_basis(int n) {
  if (n < 1 || n > 4) {
    throw std::invalid_argument("full stabilizer basis supports 1 <= n <= 4");
  }
  LabelMasks masks(n);
  std::vector<std::vector<uint32_t>> groups;
  std::vector<uint32_t> gens, closure{0};
  enumerate_groups(n, masks, gens, closure, groups);

  StabilizerBasis basis;
  basis.n = n;
  basis.tag = "full-n" + std::to_string(n);
  basis.columns.reserve(groups.size() << n);

  uint32_t subsets = uint32_t{1} << n;
  std::vector<PauliString> elem(subsets, PauliString::identity(n));
  std::vector<PauliLabel> labels(subsets);
  std::vector<uint8_t> base_neg(subsets);
  for (const auto& group : groups) {
    std::vector<PauliString> generators;
    generators.reserve(n);
    for (uint32_t g : group) generators.push_back(PauliString::from_label(n, g));
    // Phase of each subset product with all-positive generators; per-state
    // signs then follow from the sign pattern alone.
    labels[0] = 0;
    base_neg[0] = 0;
    for (uint32_t s = 1; s < subsets; ++s) {
      int low = std::countr_zero(s);
      elem[s] = elem[s & (s - 1)] * generators[low];
      labels[s] = elem[s].label();
      base_neg[s] = elem[s].sign() < 0;
    }
    for (uint32_t sign_bits = 0; sign_bits < subsets; ++sign_bits) {
      BasisColumn col;
      col.entries.reserve(subsets);
      for (uint32_t s = 0; s < subsets; ++s) {
        bool neg = base_neg[s] ^ (std::popcount(s & sign_bits) & 1);
        col.entries.emplace_back(labels[s], neg ? -1 : 1);
      }
      std::sort(col.entries.begin(), col.entries.end());
      col.generators.reserve(n);
      for (int k = 0; k < n; ++k) {
        bool neg = (sign_bits >> k) & 1;
        col.generators.push_back(neg ? generators[k].negated() : generators[k]);
      }
      basis.columns.push_back(std::move(col));
    }
  }
  if (basis.columns.size() != full_basis_count(n)) {
    throw std::logic_error("stabilizer enumeration produced a wrong count");
  }
  return basis;
}

namespace {

// Sparse one-site factors: (digit pattern on the site's qubits, sign).
struct SiteChoice {
  std::vector<std::pair<PauliLabel, int8_t>> entries;  // labels already shifted
  std::vector<PauliString> generators;                 // width-n generators
};

SiteChoice single_site(int n, int qubit, int which) {
  // which: 0..3 = |+>, |->, |+i>, |-i>; non-t qubits use only 0..1.
  static constexpr char kLetter[4] = {'X', 'X', 'Y', 'Y'};
  int8_t sign = (which & 1) ? -1 : 1;
  SiteChoice site;
  site.entries.emplace_back(0, 1);
  PauliString gen = PauliString::single(n, qubit, kLetter[which]);
  site.entries.emplace_back(gen.label(), sign);
  site.generators.push_back(sign < 0 ? gen.negated() : gen);
  return site;
}

SiteChoice pair_site(int n, int i, int j, int which) {
  // The four X/Y pair groups; each entry list is {II, AB, BA', ZZ} with the
  // ZZ sign fixed by the group product.
  struct PairSpec {
    char a1, a2, b1, b2;
    int8_t gen_sign, zz_sign;
  };
  static constexpr PairSpec kSpecs[4] = {
      {'X', 'X', 'Y', 'Y', 1, -1},   // <XX, YY>
      {'X', 'X', 'Y', 'Y', -1, -1},  // <-XX, -YY>
      {'X', 'Y', 'Y', 'X', 1, 1},    // <XY, YX>
      {'X', 'Y', 'Y', 'X', -1, 1},   // <-XY, -YX>
  };
  const PairSpec& spec = kSpecs[which];
  auto two = [&](char li, char lj) {
    return PauliString::single(n, i, li) * PauliString::single(n, j, lj);
  };
  PauliString g1 = two(spec.a1, spec.a2);
  PauliString g2 = two(spec.b1, spec.b2);
  SiteChoice site;
  site.entries.emplace_back(0, 1);
  site.entries.emplace_back(g1.label(), spec.gen_sign);
  site.entries.emplace_back(g2.label(), spec.gen_sign);
  site.entries.emplace_back(two('Z', 'Z').label(), spec.zz_sign);
  site.generators.push_back(spec.gen_sign < 0 ? g1.negated() : g1);
  site.generators.push_back(spec.gen_sign < 0 ? g2.negated() : g2);
  return site;
}

// Sets of disjoint pairs over `ts`, lexicographic: the smallest unprocessed
// qubit is either left single or paired with each larger one in turn.
void enumerate_pairings(const std::vector<int>& ts, size_t start, int pairs_left,
                        std::vector<std::pair<int, int>>& current,
                        std::vector<uint8_t>& used,
                        std::vector<std::vector<std::pair<int, int>>>& out) {
  if (pairs_left == 0) {
    out.push_back(current);
    return;
  }
  size_t i = start;
  while (i < ts.size() && used[i]) ++i;
  if (i == ts.size()) return;
  // Pair ts[i] with a later qubit.
  for (size_t j = i + 1; j < ts.size(); ++j) {
    if (used[j]) continue;
    used[i] = used[j] = 1;
    current.emplace_back(ts[i], ts[j]);
    enumerate_pairings(ts, i + 1, pairs_left - 1, current, used, out);
    current.pop_back();
    used[i] = used[j] = 0;
  }
  // Or leave ts[i] single.
  used[i] = 1;
  enumerate_pairings(ts, i + 1, pairs_left, current, used, out);
  used[i] = 0;
}

}  // namespace

uint64_t reduced_basis_count(int n, int n_t) {
  if (n_t > n || n_t < 0) throw std::invalid_argument("bad t-qubit count");
  auto factorial = [](int k) {
    uint64_t f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
  };
  uint64_t total = 0;
  for (int k = 0; 2 * k <= n_t; ++k) {
    // n_t! / (2^k k! (n_t-2k)!) disjoint pair sets, 4 states per pair,
    // 4 per unpaired t-qubit.
    uint64_t pairings = factorial(n_t) / ((uint64_t{1} << k) * factorial(k) * factorial(n_t - 2 * k));
    uint64_t states = 1;
    for (int p = 0; p < k; ++p) states *= 4;
    for (int s = 0; s < n_t - 2 * k; ++s) states *= 4;
    total += pairings * states;
  }
  for (int q = 0; q < n - n_t; ++q) total *= 2;
  return total;
}

StabilizerBasis reduced_pair_basis(int n, const std::vector<int>& t_qubits) {
  if (n < 1 || n > 8) throw std::invalid_argument("reduced basis supports 1 <= n <= 8");
  std::vector<uint8_t> is_t(n, 0);
  for (int q : t_qubits) {
    if (q < 0 || q >= n) throw std::invalid_argument("t-qubit index out of range");
    if (is_t[q]) throw std::invalid_argument("repeated t-qubit index");
    is_t[q] = 1;
  }
  std::vector<int> ts(t_qubits);
  std::sort(ts.begin(), ts.end());

  StabilizerBasis basis;
  basis.n = n;
  basis.tag = "reduced-n" + std::to_string(n) + "-t";
  for (size_t i = 0; i < ts.size(); ++i) {
    if (i) basis.tag += ',';
    basis.tag += std::to_string(ts[i]);
  }

  int max_pairs = static_cast<int>(ts.size()) / 2;
  for (int k = 0; k <= max_pairs; ++k) {
    std::vector<std::vector<std::pair<int, int>>> pairings;
    std::vector<std::pair<int, int>> current;
    std::vector<uint8_t> used(ts.size(), 0);
    enumerate_pairings(ts, 0, k, current, used, pairings);
    for (const auto& pairing : pairings) {
      // Sites in ascending qubit order; a pair sits at its smaller qubit.
      std::vector<int> paired_with(n, -1);
      for (auto [i, j] : pairing) {
        paired_with[i] = j;
        paired_with[j] = i;
      }
      struct Site {
        int qubit, partner, radix;
      };
      std::vector<Site> sites;
      for (int q = 0; q < n; ++q) {
        if (paired_with[q] > q) {
          sites.push_back({q, paired_with[q], 4});
        } else if (paired_with[q] == -1) {
          sites.push_back({q, -1, is_t[q] ? 4 : 2});
        }
      }
      std::vector<int> choice(sites.size(), 0);
      while (true) {
        BasisColumn col;
        col.entries.emplace_back(0, 1);
        for (size_t s = 0; s < sites.size(); ++s) {
          SiteChoice site = sites[s].partner >= 0
                                ? pair_site(n, sites[s].qubit, sites[s].partner, choice[s])
                                : single_site(n, sites[s].qubit, choice[s]);
          size_t prev = col.entries.size();
          for (size_t e = 0; e < prev; ++e) {
            for (size_t f = 1; f < site.entries.size(); ++f) {
              col.entries.emplace_back(col.entries[e].first | site.entries[f].first,
                                       col.entries[e].second * site.entries[f].second);
            }
          }
          for (auto& g : site.generators) col.generators.push_back(std::move(g));
        }
        std::sort(col.entries.begin(), col.entries.end());
        basis.columns.push_back(std::move(col));
        // Mixed-radix increment.
        size_t s = 0;
        while (s < sites.size()) {
          if (++choice[s] < sites[s].radix) break;
          choice[s] = 0;
          ++s;
        }
        if (s == sites.size()) break;
      }
    }
  }
  if (basis.columns.size() != reduced_basis_count(n, static_cast<int>(ts.size()))) {
    throw std::logic_error("reduced basis construction produced a wrong count");
  }
  return basis;
}

StabilizerBasis basis_from_tag(const std::string& tag) {
  if (tag.rfind("full-n", 0) == 0) {
    return full_stabilizer_basis(std::stoi(tag.substr(6)));
  }
  if (tag.rfind("reduced-n", 0) == 0) {
    size_t tpos = tag.find("-t", 9);
    if (tpos != std::string::npos) {
      int n = std::stoi(tag.substr(9, tpos - 9));
      std::vector<int> ts;
      size_t pos = tpos + 2;
      while (pos < tag.size()) {
        size_t comma = tag.find(',', pos);
        if (comma == std::string::npos) comma = tag.size();
        ts.push_back(std::stoi(tag.substr(pos, comma - pos)));
        pos = comma + 1;
      }
      return reduced_pair_basis(n, ts);
    }
  }
  throw std::invalid_argument("unknown basis tag: " + tag);
}

}  // namespace qpsim
