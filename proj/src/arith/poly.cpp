#include "ikeda/arith/poly.hpp"

#include <cctype>
#include <map>

namespace ikeda {

Poly<Rat> parse_rational_poly(const std::string& text, const std::string& var) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw InvalidInput("empty polynomial");
  std::vector<std::string> terms;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= s.size(); ++i) {
    if (i == s.size() || ((s[i] == '+' || s[i] == '-') && s[i - 1] != '^' && s[i - 1] != '*' && s[i - 1] != '/')) {
      terms.push_back(s.substr(start, i - start));
      start = i;
    }
  }
  std::map<std::size_t, Rat> acc;
  for (std::string t : terms) {
    bool neg = false;
    if (t[0] == '+' || t[0] == '-') {
      neg = t[0] == '-';
      t = t.substr(1);
    }
    if (t.empty()) throw InvalidInput("malformed polynomial: " + text);
    Rat coeff(1);
    std::size_t deg = 0;
    auto vpos = t.find(var);
    if (vpos == std::string::npos) {
      coeff = parse_rational(t);
    } else {
      std::string head = t.substr(0, vpos), tail = t.substr(vpos + var.size());
      if (!head.empty()) {
        if (head.back() != '*') throw InvalidInput("malformed polynomial term: " + t);
        head.pop_back();
        if (!head.empty() && head.front() == '(' && head.back() == ')') head = head.substr(1, head.size() - 2);
        coeff = parse_rational(head);
      }
      if (tail.empty()) {
        deg = 1;
      } else {
        if (tail[0] != '^' || tail.size() < 2) throw InvalidInput("malformed polynomial term: " + t);
        for (std::size_t i = 1; i < tail.size(); ++i)
          if (!std::isdigit(static_cast<unsigned char>(tail[i]))) throw InvalidInput("malformed exponent: " + t);
        deg = std::stoul(tail.substr(1));
      }
    }
    acc[deg] += neg ? Rat(-coeff) : coeff;
  }
  std::vector<Rat> c(acc.empty() ? 0 : acc.rbegin()->first + 1, Rat(0));
  for (auto& [d, v] : acc) c[d] = v;
  return Poly<Rat>(std::move(c));
}

}  // namespace ikeda
