#include "strandalg/symgrp.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace strandalg {

Permutation::Permutation(std::vector<int> one_line) : one_line_(std::move(one_line)) {
  std::vector<bool> seen(one_line_.size() + 1, false);
  for (int v : one_line_) {
    if (v < 1 || v > size() || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("Permutation: not a bijection of 1..d");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int d) {
  std::vector<int> v(static_cast<std::size_t>(d));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::longest(int d) {
  std::vector<int> v(static_cast<std::size_t>(d));
  for (int a = 0; a < d; ++a) v[static_cast<std::size_t>(a)] = d - a;
  return Permutation(std::move(v));
}

Permutation Permutation::simple(int d, int a) {
  if (a < 1 || a >= d) throw std::invalid_argument("simple transposition index out of range");
  auto v = identity(d).one_line_;
  std::swap(v[static_cast<std::size_t>(a - 1)], v[static_cast<std::size_t>(a)]);
  return Permutation(std::move(v));
}

Permutation Permutation::parse(const std::string& text) {
  std::vector<int> v;
  if (text.find(',') != std::string::npos) {
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (!tok.empty()) v.push_back(std::stoi(tok));
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') throw std::invalid_argument("Permutation: cannot parse '" + text + "'");
      v.push_back(c - '0');
    }
  }
  return Permutation(std::move(v));
}

bool Permutation::is_identity() const {
  for (int a = 1; a <= size(); ++a) {
    if ((*this)(a) != a) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> v(one_line_.size());
  for (int a = 1; a <= size(); ++a) v[static_cast<std::size_t>((*this)(a) - 1)] = a;
  return Permutation(std::move(v));
}

std::string Permutation::str() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < one_line_.size(); ++k) {
    if (k && size() > 9) os << ',';
    os << one_line_[k];
  }
  return os.str();
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw std::invalid_argument("composing permutations of different sizes");
  std::vector<int> v(static_cast<std::size_t>(p.size()));
  for (int a = 1; a <= p.size(); ++a) v[static_cast<std::size_t>(a - 1)] = p(q(a));
  return Permutation(std::move(v));
}

namespace {

void check_letters(const Word& w, int d) {
  for (int a : w) {
    if (a < 1 || a >= d) {
      throw std::invalid_argument("word letter " + std::to_string(a) + " out of range for d=" +
                                  std::to_string(d));
    }
  }
}

}  // namespace

Permutation word_to_perm(const Word& w, int d) {
  check_letters(w, d);
  // strand_at[level], level_of[strand], both 1-based
  std::vector<int> strand_at(static_cast<std::size_t>(d + 1)), level_of(static_cast<std::size_t>(d + 1));
  std::iota(strand_at.begin(), strand_at.end(), 0);
  std::iota(level_of.begin(), level_of.end(), 0);
  for (int a : w) {
    int x = strand_at[static_cast<std::size_t>(a)];
    int y = strand_at[static_cast<std::size_t>(a + 1)];
    strand_at[static_cast<std::size_t>(a)] = y;
    strand_at[static_cast<std::size_t>(a + 1)] = x;
    level_of[static_cast<std::size_t>(x)] = a + 1;
    level_of[static_cast<std::size_t>(y)] = a;
  }
  return Permutation(std::vector<int>(level_of.begin() + 1, level_of.end()));
}

int inv_count(const Permutation& p) {
  int c = 0;
  for (int a = 1; a <= p.size(); ++a) {
    for (int b = a + 1; b <= p.size(); ++b) {
      if (p(b) < p(a)) ++c;
    }
  }
  return c;
}

bool is_reduced(const Word& w, int d) {
  return inv_count(word_to_perm(w, d)) == static_cast<int>(w.size());
}

std::vector<StrandPair> inversion_set(const Permutation& p) {
  std::vector<StrandPair> out;
  for (int a = 1; a <= p.size(); ++a) {
    for (int b = a + 1; b <= p.size(); ++b) {
      if (p(b) < p(a)) out.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<StrandPair> crossing_sequence(const Word& w, int d) {
  check_letters(w, d);
  std::vector<int> strand_at(static_cast<std::size_t>(d + 1));
  std::iota(strand_at.begin(), strand_at.end(), 0);
  std::vector<StrandPair> out;
  std::set<StrandPair> seen;
  for (int a : w) {
    int x = strand_at[static_cast<std::size_t>(a)];
    int y = strand_at[static_cast<std::size_t>(a + 1)];
    StrandPair c{std::min(x, y), std::max(x, y)};
    if (!seen.insert(c).second) {
      throw std::invalid_argument("crossing_sequence: word is not reduced (strands " +
                                  std::to_string(c.first) + "," + std::to_string(c.second) +
                                  " cross twice)");
    }
    out.push_back(c);
    std::swap(strand_at[static_cast<std::size_t>(a)], strand_at[static_cast<std::size_t>(a + 1)]);
  }
  return out;
}

Word canonical_word(const Permutation& p) {
  // The first crossing a of a reduced word of p must satisfy p(a) > p(a+1);
  // every such choice extends to a reduced word of p * s_a, so greedy
  // smallest-first gives the lex-min word.
  Word w;
  Permutation cur = p;
  const int d = p.size();
  while (!cur.is_identity()) {
    for (int a = 1; a < d; ++a) {
      if (cur(a) > cur(a + 1)) {
        w.push_back(a);
        cur = cur * Permutation::simple(d, a);
        break;
      }
    }
  }
  return w;
}

std::vector<Word> all_reduced_words(const Permutation& p) {
  std::vector<Word> out;
  Word cur;
  const int d = p.size();
  std::function<void(const Permutation&)> rec = [&](const Permutation& q) {
    if (q.is_identity()) {
      out.push_back(cur);
      return;
    }
    for (int a = 1; a < d; ++a) {
      if (q(a) > q(a + 1)) {
        cur.push_back(a);
        rec(q * Permutation::simple(d, a));
        cur.pop_back();
      }
    }
  };
  rec(p);
  return out;
}

namespace {

// Products of the reduced subwords of w, i.e. the lower Bruhat interval of
// the permutation w represents.
std::set<Permutation> reduced_subword_products(const Word& w, int d) {
  std::set<Permutation> acc{Permutation::identity(d)};
  for (int a : w) {
    const Permutation s = Permutation::simple(d, a);
    std::vector<Permutation> fresh;
    for (const auto& x : acc) {
      Permutation y = s * x;
      if (inv_count(y) == inv_count(x) + 1) fresh.push_back(std::move(y));
    }
    acc.insert(fresh.begin(), fresh.end());
  }
  return acc;
}

}  // namespace

bool bruhat_leq(const Permutation& sigma, const Permutation& tau) {
  if (sigma.size() != tau.size()) throw std::invalid_argument("bruhat_leq: size mismatch");
  if (inv_count(sigma) > inv_count(tau)) return false;
  return reduced_subword_products(canonical_word(tau), tau.size()).count(sigma) > 0;
}

int BruhatInterval::index_of(const Permutation& p) const {
  auto it = index_.find(p.one_line());
  return it == index_.end() ? -1 : it->second;
}

BruhatInterval interval(const Permutation& top) {
  const int d = top.size();
  BruhatInterval out;
  out.top = top;
  auto members = reduced_subword_products(canonical_word(top), d);
  out.elems.assign(members.begin(), members.end());
  std::stable_sort(out.elems.begin(), out.elems.end(), [](const auto& a, const auto& b) {
    int ia = inv_count(a), ib = inv_count(b);
    return ia != ib ? ia < ib : a < b;
  });
  for (std::size_t k = 0; k < out.elems.size(); ++k) {
    out.inv.push_back(inv_count(out.elems[k]));
    out.index_[out.elems[k].one_line()] = static_cast<int>(k);
  }
  // sigma <| tau iff sigma = tau * (a b) with one fewer inversion.
  for (std::size_t k = 0; k < out.elems.size(); ++k) {
    const auto& tau = out.elems[k];
    for (int a = 1; a <= d; ++a) {
      for (int b = a + 1; b <= d; ++b) {
        if (tau(a) < tau(b)) continue;
        auto v = tau.one_line();
        std::swap(v[static_cast<std::size_t>(a - 1)], v[static_cast<std::size_t>(b - 1)]);
        Permutation sigma(std::move(v));
        if (inv_count(sigma) + 1 != out.inv[k]) continue;
        int j = out.index_of(sigma);
        if (j < 0) throw std::logic_error("interval: lower cover missing from interval");
        out.covers.emplace_back(j, static_cast<int>(k));
      }
    }
  }
  std::sort(out.covers.begin(), out.covers.end());
  return out;
}

std::vector<Permutation> all_permutations(int d) {
  std::vector<int> v(static_cast<std::size_t>(d));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::optional<Permutation> pi0(const IndexSet& I, const IndexSet& J) {
  if (!poset_leq(I, J)) return std::nullopt;
  const int d = I.size();
  std::vector<int> image(static_cast<std::size_t>(d));
  std::vector<bool> used(static_cast<std::size_t>(d), false);
  // Downward recursion: the top strand goes to the lowest admissible target.
  for (int t = d; t >= 1; --t) {
    int chosen = -1;
    for (int a = 1; a <= d; ++a) {
      if (!used[static_cast<std::size_t>(a - 1)] && I[t - 1] <= J[a - 1]) {
        chosen = a;
        break;
      }
    }
    if (chosen < 0) throw std::logic_error("pi0: greedy construction failed although I <= J");
    used[static_cast<std::size_t>(chosen - 1)] = true;
    image[static_cast<std::size_t>(t - 1)] = chosen;
  }
  return Permutation(std::move(image));
}

}  // namespace strandalg
