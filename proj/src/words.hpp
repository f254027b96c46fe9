// word-core: freely reduced words in F_2g, endomorphisms, automorphisms.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace mcg {

// A word is a freely reduced sequence of nonzero letters; +i is the
// generator s_i, -i its inverse.  Rank bounds |letter|.
using Word = std::vector<int>;

// Reduce a raw letter sequence (free reduction); letters must satisfy
// 0 < |letter| <= rank.
Word reduce(const std::vector<int>& raw, int rank);

Word multiply(const Word& u, const Word& v);
Word invert(const Word& w);

// Cyclically reduced representative (first/last letters do not cancel).
Word cyclic_reduce(const Word& w);

struct Endomorphism {
  int rank = 0;
  std::vector<Word> images;  // images[i-1] = image of s_i

  static Endomorphism identity(int rank);
  const Word& image(int i) const { return images.at(i - 1); }
};

Word apply(const Endomorphism& e, const Word& w);
// f after g (right-to-left, mapping-class convention).
Endomorphism compose_endo(const Endomorphism& f, const Endomorphism& g);
bool endo_equal(const Endomorphism& a, const Endomorphism& b);

struct Automorphism {
  Endomorphism forward;
  Endomorphism backward;

  static Automorphism identity(int rank);
  int rank() const { return forward.rank; }
  Automorphism inverse() const { return Automorphism{backward, forward}; }
};

// f after g.  forward = f.forward∘g.forward, backward = g.backward∘f.backward.
Automorphism compose(const Automorphism& f, const Automorphism& g);
bool auto_equal(const Automorphism& a, const Automorphism& b);

// Throws unless backward∘forward and forward∘backward fix every generator.
void check_automorphism(const Automorphism& a);

std::string word_to_string(const Word& w);

}  // namespace mcg
