#include "words.hpp"

#include <cstdlib>

namespace mcg {

Word reduce(const std::vector<int>& raw, int rank) {
  Word out;
  out.reserve(raw.size());
  for (int letter : raw) {
    if (letter == 0 || std::abs(letter) > rank) {
      throw std::invalid_argument("reduce: letter " + std::to_string(letter) +
                                  " out of range for rank " + std::to_string(rank));
    }
    if (!out.empty() && out.back() == -letter) {
      out.pop_back();
    } else {
      out.push_back(letter);
    }
  }
  return out;
}

Word multiply(const Word& u, const Word& v) {
  Word out = u;
  for (int letter : v) {
    if (!out.empty() && out.back() == -letter) {
      out.pop_back();
    } else {
      out.push_back(letter);
    }
  }
  return out;
}

Word invert(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

Word cyclic_reduce(const Word& w) {
  Word out = w;
  while (out.size() >= 2 && out.front() == -out.back()) {
    out.erase(out.begin());
    out.pop_back();
  }
  return out;
}

Endomorphism Endomorphism::identity(int rank) {
  Endomorphism e;
  e.rank = rank;
  e.images.reserve(rank);
  for (int i = 1; i <= rank; ++i) e.images.push_back(Word{i});
  return e;
}

Word apply(const Endomorphism& e, const Word& w) {
  Word out;
  for (int letter : w) {
    int i = std::abs(letter);
    if (i > e.rank) throw std::invalid_argument("apply: rank mismatch");
    const Word& img = e.images[i - 1];
    if (letter > 0) {
      for (int x : img) {
        if (!out.empty() && out.back() == -x) out.pop_back();
        else out.push_back(x);
      }
    } else {
      for (auto it = img.rbegin(); it != img.rend(); ++it) {
        int x = -*it;
        if (!out.empty() && out.back() == -x) out.pop_back();
        else out.push_back(x);
      }
    }
  }
  return out;
}

Endomorphism compose_endo(const Endomorphism& f, const Endomorphism& g) {
  if (f.rank != g.rank) throw std::invalid_argument("compose_endo: rank mismatch");
  Endomorphism out;
  out.rank = f.rank;
  out.images.reserve(f.rank);
  for (int i = 1; i <= f.rank; ++i) out.images.push_back(apply(f, g.image(i)));
  return out;
}

bool endo_equal(const Endomorphism& a, const Endomorphism& b) {
  return a.rank == b.rank && a.images == b.images;
}

Automorphism Automorphism::identity(int rank) {
  return Automorphism{Endomorphism::identity(rank), Endomorphism::identity(rank)};
}

Automorphism compose(const Automorphism& f, const Automorphism& g) {
  return Automorphism{compose_endo(f.forward, g.forward),
                      compose_endo(g.backward, f.backward)};
}

bool auto_equal(const Automorphism& a, const Automorphism& b) {
  return endo_equal(a.forward, b.forward);
}

void check_automorphism(const Automorphism& a) {
  for (int i = 1; i <= a.rank(); ++i) {
    Word si{i};
    if (apply(a.backward, apply(a.forward, si)) != si ||
        apply(a.forward, apply(a.backward, si)) != si) {
      throw std::invalid_argument("check_automorphism: backward is not inverse at s_" +
                             std::to_string(i));
    }
  }
}

std::string word_to_string(const Word& w) {
  std::string s = "[";
  for (size_t k = 0; k < w.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(w[k]);
  }
  s += "]";
  return s;
}

}  // namespace mcg
