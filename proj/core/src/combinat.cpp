#include "rees/combinat.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "rees/errors.hpp"

namespace rees {

bool GradedLexLess::operator()(const ExpVec& a, const ExpVec& b) const {
  int wa = sigma->weight(a), wb = sigma->weight(b);
  if (wa != wb) return wa < wb;
  return a > b;
}

namespace {

// alpha over the first `len` coordinates (rest zero) with weight in [lo, hi]
void enumerate_box(const SigmaInvariants& sg, std::size_t len, int lo, int hi, ExpVec& cur,
                   std::size_t pos, int w, std::vector<ExpVec>& out) {
  if (pos == len) {
    if (w >= lo) out.push_back(cur);
    return;
  }
  int step = sg.sigma[pos];
  for (int a = 0; w + a * step <= hi; ++a) {
    cur[pos] = a;
    enumerate_box(sg, len, lo, hi, cur, pos + 1, w + a * step, out);
    if (step == 0) break;
  }
  cur[pos] = 0;
}

void sort_graded(std::vector<ExpVec>& v, const SigmaInvariants& sg) {
  std::sort(v.begin(), v.end(), GradedLexLess{&sg});
}

}  // namespace

std::vector<ExpVec> enumerate_weight_at_most(int bound, const SigmaInvariants& sigma) {
  std::vector<ExpVec> out;
  if (bound < 0) return out;
  ExpVec cur(sigma.sigma.size(), 0);
  enumerate_box(sigma, static_cast<std::size_t>(sigma.r), 0, bound, cur, 0, 0, out);
  sort_graded(out, sigma);
  return out;
}

std::vector<ExpVec> enumerate_A(int c, const SigmaInvariants& sigma) {
  if (c < 0) throw PreconditionError("enumerate_A requires c >= 0");
  return enumerate_weight_at_most(c - 1, sigma);
}

std::vector<ExpVec> enumerate_Omega(int c, const SigmaInvariants& sigma) {
  if (c <= 0) throw PreconditionError("Omega_c requires c > 0, got " + std::to_string(c));
  std::vector<ExpVec> out;
  const std::size_t s = sigma.sigma.size();
  for (std::size_t i = 0; i < static_cast<std::size_t>(sigma.r); ++i) {
    const int si = sigma.sigma[i];
    // alpha_i >= 1, alpha_j = 0 for j > i, c <= weight < c + sigma_i
    std::vector<ExpVec> head;
    ExpVec cur(s, 0);
    enumerate_box(sigma, i, 0, c + si - 1 - si, cur, 0, 0, head);
    for (auto& h : head) {
      int w = sigma.weight(h);
      for (int a = 1; w + a * si < c + si; ++a) {
        if (w + a * si < c) continue;
        ExpVec v = h;
        v[i] = a;
        out.push_back(v);
      }
    }
  }
  sort_graded(out, sigma);
  return out;
}

std::vector<BElement> enumerate_B(int c, const SigmaInvariants& sigma) {
  std::vector<BElement> out;
  for (const auto& a : enumerate_Omega(c, sigma)) {
    int w = sigma.weight(a) - c;
    for (int j = w; j >= 0; --j) out.push_back({j, w - j, a});
  }
  return out;
}

int BidegreeTable::total() const {
  int t = 0;
  for (const auto& [b, c] : counts) t += c;
  return t;
}

int BidegreeTable::at(int x, int t) const {
  auto it = counts.find({x, t});
  return it == counts.end() ? 0 : it->second;
}

std::string BidegreeTable::render(int t_rows, int x_cols) const {
  int tmax = t_rows, xmax = x_cols;
  for (const auto& [b, c] : counts) {
    tmax = std::max(tmax, b.second);
    xmax = std::max(xmax, b.first);
  }
  int width = 1;
  for (const auto& [b, c] : counts) width = std::max<int>(width, std::to_string(c).size());
  width = std::max<int>(width, std::to_string(xmax).size());
  const int label = std::max<int>(1, std::to_string(tmax).size());
  auto cell = [&](const std::string& s) { return std::string(width + 1 - s.size(), ' ') + s; };
  auto bar = [&](int x) { return separator > 0 && x == separator ? std::string(" |") : ""; };

  std::ostringstream out;
  for (int t = tmax; t >= 1; --t) {
    std::string line = std::string(label - std::to_string(t).size(), ' ') + std::to_string(t) + " |";
    for (int x = 0; x <= xmax; ++x) {
      int c = at(x, t);
      line += bar(x) + cell(c ? std::to_string(c) : "");
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  std::string rule = std::string(label, '-') + "-+";
  for (int x = 0; x <= xmax; ++x) rule += (bar(x).empty() ? "" : "-+") + std::string(width + 1, '-');
  out << rule << '\n';
  std::string foot = std::string(label, ' ') + " |";
  for (int x = 0; x <= xmax; ++x) foot += bar(x) + cell(std::to_string(x));
  out << foot << '\n';
  return out.str();
}

BidegreeTable bidegree_table(const std::vector<int>& d, const SigmaInvariants& sigma) {
  if (sigma.s != 2) throw PreconditionError("kregencor requires m=n-2");
  if (d.size() < 2) throw PreconditionError("need at least two column degrees");
  const std::size_t n = d.size() + 1;
  if (std::accumulate(sigma.sigma.begin(), sigma.sigma.end(), 0) !=
      std::accumulate(d.begin(), d.end() - 1, 0))
    throw PreconditionError("sigma does not belong to level m = n - 2");
  const int dlow = d[n - 3], dtop = d[n - 2];
  const int delta = dtop - dlow;
  const int s1 = sigma.sigma[0], s2 = sigma.sigma[1];

  BidegreeTable t;
  t.separator = dlow;
  for (std::size_t k = 0; k + 2 < n; ++k)
    if (d[k] == dlow) t.add({dlow, 1});
  if (s2 == 0) {
    for (int j = 0; j * s1 <= delta; ++j) t.add({dtop - j * s1, j + 1});
  } else if (s1 > s2) {
    for (int j = 0; j * s2 <= delta; ++j)
      for (int i = 0; i <= j && i * (s1 - s2) <= delta - j * s2; ++i)
        t.add({dtop - i * s1 - (j - i) * s2, j + 1});
  } else {
    for (int j = 0; j * s1 <= delta; ++j) t.add({dtop - j * s1, j + 1}, j + 1);
  }
  return t;
}

}  // namespace rees
