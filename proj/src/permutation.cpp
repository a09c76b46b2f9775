#include "tcd/permutation.hpp"

#include <cctype>

#include "tcd/errors.hpp"

namespace tcd {

Permutation identity_permutation(int degree) {
  Permutation p(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) p[i] = static_cast<std::uint8_t>(i);
  return p;
}

Permutation multiply(const Permutation& p, const Permutation& q) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

Permutation inverse(const Permutation& p) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<std::uint8_t>(i);
  return r;
}

std::string cycle_string(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (seen[start] || p[start] == start) continue;
    out += "(";
    std::size_t i = start;
    bool first = true;
    while (!seen[i]) {
      seen[i] = true;
      if (!first) out += " ";
      out += std::to_string(i + 1);
      first = false;
      i = p[i];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

[[noreturn]] void bad(const std::string& text, const std::string& why) {
  throw BadPermutation("bad permutation '" + text + "': " + why);
}

}  // namespace

Permutation parse_permutation(const std::string& raw, int degree, PermutationSyntax syntax) {
  const std::string text = trim(raw);
  Permutation p = identity_permutation(degree);
  if (text == "e" || text == "()") return p;

  if (syntax.compact_transpositions) {
    std::string body = text;
    if (body.size() == 4 && body.front() == '(' && body.back() == ')') body = body.substr(1, 2);
    if (body.size() == 2 && std::isdigit(static_cast<unsigned char>(body[0])) &&
        std::isdigit(static_cast<unsigned char>(body[1]))) {
      int a = body[0] - '0', b = body[1] - '0';
      if (a < 1 || b < 1 || a > degree || b > degree) bad(text, "point out of range");
      if (a == b) bad(text, "repeated point");
      std::swap(p[a - 1], p[b - 1]);
      return p;
    }
  }

  std::vector<bool> used(static_cast<std::size_t>(degree), false);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) bad(text, "empty");
  while (i < text.size()) {
    if (text[i] != '(') bad(text, "expected '('");
    ++i;
    std::vector<int> cycle;
    for (;;) {
      skip_ws();
      if (i >= text.size()) bad(text, "unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) bad(text, "expected a point");
      long v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        if (v > 1000) bad(text, "point out of range");
        ++i;
      }
      if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != ')')
        bad(text, "expected space between points");
      if (v < 1 || v > degree) bad(text, "point " + std::to_string(v) + " out of range 1.." +
                                             std::to_string(degree));
      if (used[v - 1]) bad(text, "repeated point " + std::to_string(v));
      used[v - 1] = true;
      cycle.push_back(static_cast<int>(v - 1));
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      p[cycle[k]] = static_cast<std::uint8_t>(cycle[(k + 1) % cycle.size()]);
    skip_ws();
  }
  return p;
}

}  // namespace tcd
