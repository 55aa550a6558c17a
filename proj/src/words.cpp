#include "words.hpp"

#include <stdexcept>

namespace fibspec {

std::int64_t fibonacci(int k) {
  if (k < 0) throw std::invalid_argument("fibonacci: k must be >= 0");
  std::int64_t a = 1, b = 1;  // F_0, F_1
  for (int i = 1; i < k; ++i) {
    std::int64_t c = a + b;
    a = b;
    b = c;
  }
  return k == 0 ? a : b;
}

std::string substitute(const std::string& w) {
  if (w.empty()) throw std::invalid_argument("substitute: empty input");
  std::string out;
  out.reserve(2 * w.size());
  for (char ch : w) {
    if (ch == 'a') {
      out += "ab";
    } else if (ch == 'b') {
      out += 'a';
    } else {
      throw std::invalid_argument("substitute: letters must be 'a' or 'b'");
    }
  }
  return out;
}

std::string fib_word(int k) {
  if (k < 2) throw std::invalid_argument("fib_word: k must be >= 2");
  std::string w = "a";
  for (int i = 0; i < k - 1; ++i) w = substitute(w);
  return w;
}

TwoSidedWindow omega_s_window(int m) {
  if (m < 1) throw std::invalid_argument("omega_s_window: m must be >= 1");
  // Right side: S^{2j}(a) read forward from position 1.
  std::string right = "a";
  while (static_cast<int>(right.size()) < m) right = substitute(substitute(right));
  // Left side: S^{2j}(b) ends at position 0.
  std::string left = "b";
  while (static_cast<int>(left.size()) < m + 1) left = substitute(substitute(left));

  TwoSidedWindow win;
  win.m = m;
  win.letters.resize(static_cast<std::size_t>(2 * m + 1));
  for (int pos = -m; pos <= 0; ++pos) {
    win.letters[static_cast<std::size_t>(pos + m)] =
        left[left.size() - 1 + static_cast<std::size_t>(pos)];
  }
  for (int pos = 1; pos <= m; ++pos) {
    win.letters[static_cast<std::size_t>(pos + m)] = right[static_cast<std::size_t>(pos - 1)];
  }
  return win;
}

Cell original_cell(int k) {
  std::string w = fib_word(k);
  Cell cell(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) cell[i] = CellSite{w[i], w[i]};
  return cell;
}

Cell trace_cell(int k) {
  if (k < 1) throw std::invalid_argument("trace_cell: k must be >= 1");
  const CellSite at{'a', 'b'};  // unit hop, potential q
  const CellSite bt{'b', 'a'};  // hop p, zero potential
  Cell prev = {at};             // v_1
  if (k == 1) return prev;
  Cell cur = {bt, at};  // v_2
  for (int i = 2; i < k; ++i) {
    Cell next = prev;
    next.insert(next.end(), cur.begin(), cur.end());
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace fibspec
