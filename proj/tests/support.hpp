#pragma once

#include <random>
#include <vector>

#include "jcalc/words.hpp"

namespace support {

using jcalc::Endomorphism;
using jcalc::Letter;
using jcalc::Word;

inline std::vector<Letter> random_letters(std::mt19937_64& rng, int rank, int length) {
  std::uniform_int_distribution<int> gen(1, rank);
  std::bernoulli_distribution positive(0.5);
  std::vector<Letter> out;
  for (int i = 0; i < length; ++i) out.emplace_back(gen(rng), positive(rng) ? 1 : -1);
  return out;
}

inline Word random_word(std::mt19937_64& rng, int rank, int max_length) {
  std::uniform_int_distribution<int> len(0, max_length);
  return Word(rank, random_letters(rng, rank, len(rng)));
}

// Left-normed [..[w1, w2], ..., wk] with random short entries; lies in Gamma^k.
inline Word random_commutator(std::mt19937_64& rng, int rank, int k, int entry_length = 3) {
  std::uniform_int_distribution<int> len(1, entry_length);
  Word c(rank, random_letters(rng, rank, len(rng)));
  for (int j = 2; j <= k; ++j) c = jcalc::commutator(c, Word(rank, random_letters(rng, rank, len(rng))));
  return c;
}

// Random element of Gamma^k: a product of one to three weight-k commutators.
inline Word random_gamma_word(std::mt19937_64& rng, int rank, int k, int entry_length = 3) {
  std::uniform_int_distribution<int> count(1, 3);
  Word w(rank);
  for (int i = count(rng); i > 0; --i) w *= random_commutator(rng, rank, k, entry_length);
  return w;
}

// x_i -> x_i c_i with c_i in Gamma^k, so the map lies in filtration level k.
inline Endomorphism commutator_insertion(std::mt19937_64& rng, int rank, int k, int entry_length = 2) {
  std::vector<Word> images;
  std::bernoulli_distribution skip(0.25);
  for (int i = 1; i <= rank; ++i) {
    Word image = Word::generator(rank, i);
    if (!skip(rng)) image *= random_commutator(rng, rank, k, entry_length);
    images.push_back(image);
  }
  return Endomorphism(images);
}

// One elementary Nielsen move: swap, invert a generator, or x_i -> x_i x_j^{+-1}.
inline Endomorphism nielsen(std::mt19937_64& rng, int rank) {
  std::vector<Word> images;
  for (int i = 1; i <= rank; ++i) images.push_back(Word::generator(rank, i));
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<int> gen(1, rank);
  const int i = gen(rng);
  int j = gen(rng);
  if (rank > 1)
    while (j == i) j = gen(rng);
  switch (rank > 1 ? kind(rng) : 1) {
    case 0:
      std::swap(images[static_cast<std::size_t>(i - 1)], images[static_cast<std::size_t>(j - 1)]);
      break;
    case 1:
      images[static_cast<std::size_t>(i - 1)] = Word::generator(rank, i, -1);
      break;
    default:
      images[static_cast<std::size_t>(i - 1)] *= Word::generator(rank, j, std::bernoulli_distribution(0.5)(rng) ? 1 : -1);
  }
  return Endomorphism(images);
}

// A random product of a few Nielsen moves and a commutator insertion.
inline Endomorphism random_endo(std::mt19937_64& rng, int rank) {
  Endomorphism phi = Endomorphism::identity(rank);
  std::uniform_int_distribution<int> steps(1, 3);
  for (int s = steps(rng); s > 0; --s) phi = jcalc::compose(phi, nielsen(rng, rank));
  if (std::bernoulli_distribution(0.5)(rng)) phi = jcalc::compose(phi, commutator_insertion(rng, rank, 2));
  return phi;
}

// Genus-one surface maps: Dehn twists x1 -> x1 x2^{+-1}, x2 -> x2 x1^{+-1}
// fix the boundary word exactly; an insertion from Gamma^k then keeps it
// fixed modulo Gamma^{k+1}.
inline Endomorphism surface_endo(std::mt19937_64& rng, int k) {
  Endomorphism phi = Endomorphism::identity(2);
  std::bernoulli_distribution coin(0.5);
  for (int m = std::uniform_int_distribution<int>(1, 4)(rng); m > 0; --m) {
    const int s = coin(rng) ? 1 : -1;
    const Endomorphism twist =
        coin(rng) ? Endomorphism({Word(2, {1, 2 * s}), Word::generator(2, 2)})
                  : Endomorphism({Word::generator(2, 1), Word(2, {2, 1 * s})});
    phi = jcalc::compose(phi, twist);
  }
  return jcalc::compose(phi, commutator_insertion(rng, 2, k, 1));
}

}  // namespace support
