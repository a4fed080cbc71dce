#include "nilhecke/weyl_group.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "nilhecke/errors.hpp"

namespace nilhecke {

IntMat mat_mul(const IntMat& a, const IntMat& b) {
  const std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), k = b.size();
  IntMat c(n, IntVec(m, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][t] * b[t][j];
    }
  }
  return c;
}

IntMat identity_matrix(std::size_t n) {
  IntMat m(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

WeylGroup::WeylGroup(RootDatum datum) : datum_(std::move(datum)) {
  datum_.validate();
  for (std::size_t i = 0; i < num_simple(); ++i) simple_mats_.push_back(simple_matrix(static_cast<int>(i)));
  enumerate_roots();
  enumerate_elements();
}

// s_i(lambda) = lambda - <lambda, alpha_i^vee> alpha_i
IntMat WeylGroup::simple_matrix(int i) const {
  const std::size_t r = rank();
  IntMat m = identity_matrix(r);
  for (std::size_t l = 0; l < r; ++l) {
    for (std::size_t k = 0; k < r; ++k) m[l][k] -= datum_.simple_roots[i][l] * datum_.simple_coroots[i][k];
  }
  return m;
}

void WeylGroup::enumerate_roots() {
  const std::size_t n = num_simple(), r = rank();
  const IntMat cartan = datum_.cartan_matrix();
  std::map<IntVec, IntVec> coroot_of;  // simple coordinates -> coroot
  std::deque<IntVec> queue;
  for (std::size_t i = 0; i < n; ++i) {
    IntVec c(n, 0);
    c[i] = 1;
    coroot_of[c] = datum_.simple_coroots[i];
    queue.push_back(c);
  }
  while (!queue.empty()) {
    IntVec c = queue.front();
    queue.pop_front();
    const IntVec cv = coroot_of[c];
    for (std::size_t i = 0; i < n; ++i) {
      long p = 0;
      for (std::size_t j = 0; j < n; ++j) p += c[j] * cartan[j][i];
      IntVec c2 = c;
      c2[i] -= p;
      if (coroot_of.count(c2)) continue;
      long q = 0;  // <alpha_i, beta^vee>
      for (std::size_t k = 0; k < r; ++k) q += datum_.simple_roots[i][k] * cv[k];
      IntVec cv2 = cv;
      for (std::size_t k = 0; k < r; ++k) cv2[k] -= q * datum_.simple_coroots[i][k];
      coroot_of[c2] = cv2;
      if (coroot_of.size() > kMaxRoots) throw GroupNotFinite("root orbit exceeds " + std::to_string(kMaxRoots));
      queue.push_back(c2);
    }
  }
  std::vector<Root> pos, neg;
  for (const auto& [c, cv] : coroot_of) {
    Root root;
    root.simple = c;
    root.coroot = cv;
    root.vec.assign(r, 0);
    bool nonneg = true, nonpos = true;
    for (std::size_t j = 0; j < n; ++j) {
      root.height += static_cast<int>(c[j]);
      if (c[j] < 0) nonneg = false;
      if (c[j] > 0) nonpos = false;
      for (std::size_t k = 0; k < r; ++k) root.vec[k] += c[j] * datum_.simple_roots[j][k];
    }
    if (!nonneg && !nonpos) throw InvalidCartanData("root with mixed-sign simple coordinates");
    root.positive = nonneg;
    (nonneg ? pos : neg).push_back(std::move(root));
  }
  auto order = [](const Root& a, const Root& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.simple > b.simple;
  };
  std::sort(pos.begin(), pos.end(), order);
  npos_ = pos.size();
  roots_ = pos;
  for (const auto& p : pos) {
    Root m = p;
    for (auto& x : m.vec) x = -x;
    for (auto& x : m.coroot) x = -x;
    for (auto& x : m.simple) x = -x;
    m.height = -m.height;
    m.positive = false;
    roots_.push_back(std::move(m));
  }
  if (neg.size() != npos_) throw InternalError("root system is not symmetric");
  for (std::size_t i = 0; i < roots_.size(); ++i) root_index_[roots_[i].vec] = i;
}

void WeylGroup::enumerate_elements() {
  const std::size_t n = num_simple();
  WeylElement e;
  e.action = identity_matrix(rank());
  elements_.push_back(e);
  index_[e.action] = 0;
  std::vector<std::size_t> level{0};
  int len = 0;
  while (!level.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t v : level) {
      for (std::size_t i = 0; i < n; ++i) {
        IntMat m = mat_mul(elements_[v].action, simple_mats_[i]);
        if (index_.count(m)) continue;
        WeylElement u;
        u.index = elements_.size();
        u.action = m;
        u.word = elements_[v].word;
        u.word.push_back(static_cast<int>(i));
        u.length = len + 1;
        u.det = (u.length % 2 == 0) ? 1 : -1;
        index_[m] = u.index;
        next.push_back(u.index);
        elements_.push_back(std::move(u));
        if (elements_.size() > kMaxOrder) throw GroupNotFinite("more than " + std::to_string(kMaxOrder) + " elements");
      }
    }
    level = std::move(next);
    ++len;
  }
  right_simple_.assign(order(), std::vector<std::size_t>(n));
  left_simple_.assign(order(), std::vector<std::size_t>(n));
  for (std::size_t w = 0; w < order(); ++w) {
    for (std::size_t i = 0; i < n; ++i) {
      right_simple_[w][i] = index_.at(mat_mul(elements_[w].action, simple_mats_[i]));
      left_simple_[w][i] = index_.at(mat_mul(simple_mats_[i], elements_[w].action));
    }
  }
  inverse_.resize(order());
  for (std::size_t w = 0; w < order(); ++w) {
    Word rev(elements_[w].word.rbegin(), elements_[w].word.rend());
    inverse_[w] = from_word(rev);
  }
}

std::size_t WeylGroup::find(const IntMat& action) const {
  auto it = index_.find(action);
  if (it == index_.end()) throw InternalError("matrix is not a Weyl group element");
  return it->second;
}

std::size_t WeylGroup::from_word(const Word& word) const {
  std::size_t w = 0;
  for (int i : word) {
    if (i < 0 || static_cast<std::size_t>(i) >= num_simple()) {
      throw ParseError("simple reflection index " + std::to_string(i + 1) + " out of range");
    }
    w = right_simple_[w][i];
  }
  return w;
}

std::size_t WeylGroup::multiply(std::size_t a, std::size_t b) const {
  for (int i : elements_[b].word) a = right_simple_[a][i];
  return a;
}

bool WeylGroup::is_right_descent(std::size_t w, int i) const {
  return elements_[right_simple_[w][i]].length < elements_[w].length;
}

bool WeylGroup::is_left_descent(std::size_t w, int i) const {
  return elements_[left_simple_[w][i]].length < elements_[w].length;
}

std::size_t WeylGroup::find_root(const IntVec& vec) const {
  auto it = root_index_.find(vec);
  if (it == root_index_.end()) {
    std::string s;
    for (long x : vec) s += (s.empty() ? "" : ",") + std::to_string(x);
    throw NotARoot("(" + s + ") is not a root");
  }
  return it->second;
}

IntVec WeylGroup::apply(std::size_t w, const IntVec& lambda) const {
  const IntMat& m = elements_[w].action;
  IntVec out(rank(), 0);
  for (std::size_t l = 0; l < rank(); ++l) {
    for (std::size_t k = 0; k < rank(); ++k) out[l] += m[l][k] * lambda[k];
  }
  return out;
}

std::size_t WeylGroup::reflection_of_root(std::size_t root) const {
  const Root& b = roots_.at(root);
  IntMat m = identity_matrix(rank());
  for (std::size_t l = 0; l < rank(); ++l) {
    for (std::size_t k = 0; k < rank(); ++k) m[l][k] -= b.vec[l] * b.coroot[k];
  }
  return find(m);
}

int WeylGroup::inversion_count(std::size_t w) const {
  int count = 0;
  for (std::size_t b = 0; b < npos_; ++b) {
    if (!roots_[find_root(apply(w, roots_[b].vec))].positive) ++count;
  }
  return count;
}

std::vector<Word> WeylGroup::all_reduced_words(std::size_t w) const {
  if (w == 0) return {Word{}};
  std::vector<Word> out;
  for (std::size_t i = 0; i < num_simple(); ++i) {
    if (!is_right_descent(w, static_cast<int>(i))) continue;
    for (Word prefix : all_reduced_words(right_simple_[w][i])) {
      prefix.push_back(static_cast<int>(i));
      out.push_back(std::move(prefix));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool WeylGroup::bruhat_leq(std::size_t a, std::size_t b) const {
  std::shared_ptr<const std::vector<bool>> below;
  {
    std::lock_guard<std::mutex> lock(bruhat_mutex_);
    auto it = bruhat_cache_.find(b);
    if (it != bruhat_cache_.end()) below = it->second;
  }
  if (!below) {
    // Products of all subwords of one reduced word of b form the interval [1, b].
    auto set = std::make_shared<std::vector<bool>>(order(), false);
    std::vector<std::size_t> members{0};
    (*set)[0] = true;
    for (int i : elements_[b].word) {
      const std::size_t count = members.size();
      for (std::size_t k = 0; k < count; ++k) {
        std::size_t x = right_simple_[members[k]][i];
        if (!(*set)[x]) {
          (*set)[x] = true;
          members.push_back(x);
        }
      }
    }
    std::lock_guard<std::mutex> lock(bruhat_mutex_);
    below = bruhat_cache_.emplace(b, set).first->second;
  }
  return (*below)[a];
}

Polynomial WeylGroup::discriminant(const Ring& ring) const {
  Polynomial d = Polynomial::constant(ring, rank(), 1);
  for (std::size_t b = 0; b < npos_; ++b) d *= datum_.character(roots_[b].vec, ring);
  return d;
}

ReflectionSubgroup WeylGroup::reflection_subgroup(const std::vector<std::size_t>& root_indices) const {
  std::vector<std::size_t> gens;
  for (std::size_t r : root_indices) gens.push_back(reflection_of_root(r));
  std::vector<bool> in(order(), false);
  std::vector<std::size_t> members{0};
  in[0] = true;
  for (std::size_t k = 0; k < members.size(); ++k) {
    for (std::size_t g : gens) {
      std::size_t x = multiply(members[k], g);
      if (!in[x]) {
        in[x] = true;
        members.push_back(x);
      }
    }
  }
  ReflectionSubgroup sub;
  for (std::size_t w = 0; w < order(); ++w) {
    if (in[w]) sub.elements.push_back(w);
  }
  for (std::size_t b = 0; b < npos_; ++b) {
    if (in[reflection_of_root(b)]) sub.positive_roots.push_back(b);
  }
  std::set<std::size_t> pos(sub.positive_roots.begin(), sub.positive_roots.end());
  for (std::size_t b : sub.positive_roots) {
    const std::size_t sb = reflection_of_root(b);
    bool simple = true;
    for (std::size_t g : sub.positive_roots) {
      if (g == b) continue;
      if (!pos.count(find_root(apply(sb, roots_[g].vec)))) {
        simple = false;
        break;
      }
    }
    if (simple) sub.simple_roots.push_back(b);
  }
  // Parabolic: generated by the simple reflections it contains.
  std::vector<std::size_t> js;
  for (std::size_t i = 0; i < num_simple(); ++i) {
    if (in[simple_reflection(static_cast<int>(i))]) js.push_back(simple_reflection(static_cast<int>(i)));
  }
  std::vector<bool> para(order(), false);
  std::vector<std::size_t> pm{0};
  para[0] = true;
  for (std::size_t k = 0; k < pm.size(); ++k) {
    for (std::size_t g : js) {
      std::size_t x = multiply(pm[k], g);
      if (!para[x]) {
        para[x] = true;
        pm.push_back(x);
      }
    }
  }
  sub.is_parabolic = pm.size() == sub.elements.size();
  // Closedness of the subsystem under root addition.
  std::set<IntVec> sys;
  for (std::size_t b : sub.positive_roots) {
    sys.insert(roots_[b].vec);
    IntVec m = roots_[b].vec;
    for (auto& x : m) x = -x;
    sys.insert(m);
  }
  for (const auto& a : sys) {
    for (const auto& b : sys) {
      IntVec s(rank());
      for (std::size_t k = 0; k < rank(); ++k) s[k] = a[k] + b[k];
      if (root_index_.count(s) && !sys.count(s)) sub.is_closed = false;
    }
  }
  return sub;
}

ReflectionSubgroup WeylGroup::trivial_subgroup() const { return reflection_subgroup({}); }

ReflectionSubgroup WeylGroup::full_subgroup() const {
  std::vector<std::size_t> simple;
  for (std::size_t i = 0; i < num_simple(); ++i) {
    IntVec c(num_simple(), 0);
    c[i] = 1;
    for (std::size_t b = 0; b < npos_; ++b) {
      if (roots_[b].simple == c) simple.push_back(b);
    }
  }
  return reflection_subgroup(simple);
}

std::string WeylGroup::word_string(std::size_t w) const {
  const Word& word = elements_.at(w).word;
  if (word.empty()) return "1";
  std::string s;
  for (int i : word) s += "s" + std::to_string(i + 1);
  return s;
}

}  // namespace nilhecke
