#pragma once
// Laurent polynomials in q and in (q,t), sparse over int64 coefficients.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace oddkh {

using Laurent1 = std::map<int, long long>;                  // q-exponent -> coeff
using Laurent2 = std::map<std::pair<int, int>, long long>;  // (q-exp, t-exp) -> coeff

inline void add_term(Laurent1& p, int e, long long c) {
  if (c == 0) return;
  auto it = p.find(e);
  if (it == p.end()) p.emplace(e, c);
  else if ((it->second += c) == 0) p.erase(it);
}

inline void add_term(Laurent2& p, int qe, int te, long long c) {
  if (c == 0) return;
  auto key = std::make_pair(qe, te);
  auto it = p.find(key);
  if (it == p.end()) p.emplace(key, c);
  else if ((it->second += c) == 0) p.erase(it);
}

inline Laurent1 mul(const Laurent1& a, const Laurent1& b) {
  Laurent1 r;
  for (auto& [ea, ca] : a)
    for (auto& [eb, cb] : b) add_term(r, ea + eb, ca * cb);
  return r;
}

inline Laurent1 mirror_q(const Laurent1& a) {
  Laurent1 r;
  for (auto& [e, c] : a) r.emplace(-e, c);
  return r;
}

namespace detail {
inline void append_monomial(std::string& out, const char* var, int e) {
  out += var;
  if (e != 1) {
    out += '^';
    out += std::to_string(e);
  }
}
}  // namespace detail

// "q^6 + q^10 t^2 + 3 q^-20 t^-7" style; "1" for a bare constant, "0" if empty.
inline std::string to_string(const Laurent2& p) {
  if (p.empty()) return "0";
  std::string out;
  for (auto& [key, c] : p) {
    auto [qe, te] = key;
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    long long a = c < 0 ? -c : c;
    bool has_var = qe != 0 || te != 0;
    if (a != 1 || !has_var) out += std::to_string(a);
    if (qe != 0) {
      if (out.back() != '-' && out.back() != ' ' && a != 1) out += ' ';
      detail::append_monomial(out, "q", qe);
    }
    if (te != 0) {
      if (qe != 0 || a != 1) out += ' ';
      detail::append_monomial(out, "t", te);
    }
  }
  return out;
}

inline std::string to_string(const Laurent1& p) {
  Laurent2 q;
  for (auto& [e, c] : p) q.emplace(std::make_pair(e, 0), c);
  return to_string(q);
}

// Parses the format emitted by to_string (plus forgiving whitespace and "qt" order).
inline Laurent2 parse_laurent2(const std::string& s) {
  Laurent2 p;
  size_t i = 0, n = s.size();
  auto skip_ws = [&] { while (i < n && s[i] == ' ') ++i; };
  skip_ws();
  if (i < n && s.compare(i, 1, "0") == 0 && i + 1 == n) return p;
  int sign = 1;
  while (i < n) {
    skip_ws();
    if (s[i] == '+') { sign = 1; ++i; skip_ws(); }
    else if (s[i] == '-') { sign = -1; ++i; skip_ws(); }
    long long coeff = 1;
    bool saw_digit = false;
    if (i < n && isdigit((unsigned char)s[i])) {
      coeff = 0;
      while (i < n && isdigit((unsigned char)s[i])) coeff = coeff * 10 + (s[i++] - '0');
      saw_digit = true;
    }
    skip_ws();
    int qe = 0, te = 0;
    bool saw_var = false;
    while (i < n && (s[i] == 'q' || s[i] == 't')) {
      char v = s[i++];
      int e = 1;
      if (i < n && s[i] == '^') {
        ++i;
        int es = 1;
        if (i < n && s[i] == '-') { es = -1; ++i; }
        e = 0;
        while (i < n && isdigit((unsigned char)s[i])) e = e * 10 + (s[i++] - '0');
        e *= es;
      }
      (v == 'q' ? qe : te) += e;
      saw_var = true;
      skip_ws();
    }
    if (!saw_digit && !saw_var) throw std::runtime_error("bad polynomial: " + s);
    add_term(p, qe, te, sign * coeff);
    sign = 1;
    skip_ws();
    if (i < n && s[i] != '+' && s[i] != '-') throw std::runtime_error("bad polynomial: " + s);
  }
  return p;
}

inline Laurent1 parse_laurent1(const std::string& s) {
  Laurent1 p;
  for (auto& [key, c] : parse_laurent2(s)) {
    if (key.second != 0) throw std::runtime_error("unexpected t in: " + s);
    add_term(p, key.first, c);
  }
  return p;
}

}  // namespace oddkh
