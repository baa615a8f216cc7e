#ifndef TWL_WORDS_HPP
#define TWL_WORDS_HPP

#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace twl {

// a, b are the meridian generators; capital = inverse.
enum class Letter { a, A, b, B };

inline Letter inverse(Letter l) {
  switch (l) {
    case Letter::a: return Letter::A;
    case Letter::A: return Letter::a;
    case Letter::b: return Letter::B;
    case Letter::B: return Letter::b;
  }
  throw std::logic_error("inverse: bad letter");
}

struct GroupWord {
  std::vector<Letter> letters;

  GroupWord& append(Letter l) {
    letters.push_back(l);
    return *this;
  }

  GroupWord& append(const GroupWord& w) {
    letters.insert(letters.end(), w.letters.begin(), w.letters.end());
    return *this;
  }

  // Free reduction: drop adjacent inverse pairs until none remain.
  GroupWord reduced() const {
    std::vector<Letter> out;
    for (Letter l : letters) {
      if (!out.empty() && out.back() == inverse(l))
        out.pop_back();
      else
        out.push_back(l);
    }
    return GroupWord{std::move(out)};
  }

  std::string to_string() const {
    static const char* names[] = {"a", "a^-1", "b", "b^-1"};
    std::string s;
    for (Letter l : letters) {
      if (!s.empty()) s += " ";
      s += names[static_cast<int>(l)];
    }
    return s.empty() ? "1" : s;
  }

  friend bool operator==(const GroupWord& x, const GroupWord& y) {
    return x.letters == y.letters;
  }
};

inline GroupWord parse_word(const std::string& s) {
  GroupWord w;
  for (char c : s) {
    switch (c) {
      case 'a': w.append(Letter::a); break;
      case 'A': w.append(Letter::A); break;
      case 'b': w.append(Letter::b); break;
      case 'B': w.append(Letter::B); break;
      case ' ': break;
      default: throw std::invalid_argument("parse_word: bad letter");
    }
  }
  return w;
}

// k-twisted Whitehead link W_k, k >= 0. W_0 is the torus link T(2,4), W_1
// the Whitehead link; W_k is b(4k+4, 2k+1) in Schubert's notation.
struct TwistedWhitehead {
  int k = 0;
};

// General two-bridge link b(2p, q): gcd(2p, q) = 1 and 2p > |q| >= 1, q odd.
struct TwoBridge {
  long two_p = 0;
  long q = 0;
};

using LinkSpec = std::variant<TwistedWhitehead, TwoBridge>;

inline void validate(const TwistedWhitehead& s) {
  if (s.k < 0) throw std::invalid_argument("TwistedWhitehead: k must be >= 0");
}

inline void validate(const TwoBridge& s) {
  if (s.two_p <= 0 || s.two_p % 2 != 0)
    throw std::invalid_argument("TwoBridge: 2p must be even and positive");
  if (s.q % 2 == 0) throw std::invalid_argument("TwoBridge: q must be odd");
  if (!(s.two_p > std::labs(s.q) && std::labs(s.q) >= 1))
    throw std::invalid_argument("TwoBridge: need 2p > |q| >= 1");
  if (std::gcd(s.two_p, std::labs(s.q)) != 1)
    throw std::invalid_argument("TwoBridge: gcd(2p, q) must be 1");
}

inline TwoBridge to_two_bridge(const TwistedWhitehead& s) {
  validate(s);
  return TwoBridge{4L * s.k + 4, 2L * s.k + 1};
}

namespace detail {

inline long floor_div(long a, long b) {
  long d = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? d - 1 : d;
}

}  // namespace detail

// Relator word w with <a, b | aw = wa>.
// W_{2n-1}: (b a b^-1 a^-1)^n a (a^-1 b^-1 a b)^n
// W_{2n}:   (b a b^-1 a^-1)^n b a b (a^-1 b^-1 a b)^n
// b(2p,q):  b^e1 a^e2 ... b^e_{2p-1} with e_i = (-1)^floor(i q / 2p).
inline GroupWord build_word(const LinkSpec& spec) {
  if (const auto* tw = std::get_if<TwistedWhitehead>(&spec)) {
    validate(*tw);
    GroupWord c = parse_word("baBA");
    GroupWord d = parse_word("ABab");
    GroupWord w;
    int n = (tw->k + 1) / 2;
    for (int i = 0; i < n; ++i) w.append(c);
    if (tw->k % 2 == 1)
      w.append(Letter::a);
    else
      w.append(parse_word("bab"));
    for (int i = 0; i < n; ++i) w.append(d);
    return w;
  }
  const auto& tb = std::get<TwoBridge>(spec);
  validate(tb);
  GroupWord w;
  for (long i = 1; i <= tb.two_p - 1; ++i) {
    long eps = detail::floor_div(i * tb.q, tb.two_p) % 2 == 0 ? 1 : -1;
    bool is_b = (i % 2 == 1);
    if (eps > 0)
      w.append(is_b ? Letter::b : Letter::a);
    else
      w.append(is_b ? Letter::B : Letter::A);
  }
  return w;
}

}  // namespace twl

#endif  // TWL_WORDS_HPP
