#pragma once

#include <random>

#include "openkh/openbook.hpp"

namespace openkh::testing {

inline Surface pick_surface(std::mt19937& rng) {
  static const Surface all[] = {{1, 1}, {1, 2}, {2, 1}, {2, 2}};
  return all[rng() % 4];
}

// random word in the chain curves, 1..max_len letters
inline TwistWord chain_word(std::mt19937& rng, Surface s, int max_len) {
  TwistWord w{s, {}};
  int len = 1 + static_cast<int>(rng() % max_len);
  for (int i = 0; i < len; ++i)
    w.letters.push_back({1 + static_cast<int>(rng() % s.chain_length()), rng() % 2 ? 1 : -1});
  return w;
}

// random word on S_{2,1} with at least one alpha_0 letter
inline TwistWord alpha0_word(std::mt19937& rng, int max_len) {
  Surface s{2, 1};
  auto w = chain_word(rng, s, max_len);
  for (auto& l : w.letters)
    if (rng() % 3 == 0) l.curve = 0;
  w.letters[rng() % w.letters.size()].curve = 0;
  return w;
}

}  // namespace openkh::testing
