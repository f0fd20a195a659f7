#include "cyqw/normalform.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace cyqw {

void WordTrie::insert(const std::vector<int>& word, int id) {
  int node = 0;
  for (int a : word) {
    int nxt = nodes_[node].next[a];
    if (nxt < 0) {
      nxt = static_cast<int>(nodes_.size());
      nodes_[node].next[a] = nxt;
      nodes_.emplace_back(alphabet_);
    }
    node = nxt;
  }
  nodes_[node].id = id;
}

void WordTrie::erase(const std::vector<int>& word) {
  int node = 0;
  for (int a : word) {
    node = nodes_[node].next[a];
    if (node < 0) return;
  }
  nodes_[node].id = -1;
}

std::optional<std::pair<std::size_t, int>> WordTrie::find_factor(const std::vector<int>& w) const {
  for (std::size_t k = 0; k < w.size(); ++k) {
    int node = 0;
    for (std::size_t m = k; m < w.size(); ++m) {
      node = nodes_[node].next[w[m]];
      if (node < 0) break;
      if (nodes_[node].id >= 0) return std::make_pair(k, nodes_[node].id);
    }
  }
  return std::nullopt;
}

bool WordTrie::matches_at(const std::vector<int>& w, std::size_t from) const {
  int node = 0;
  for (std::size_t m = from; m < w.size(); ++m) {
    node = nodes_[node].next[w[m]];
    if (node < 0) return false;
    if (nodes_[node].id >= 0) return true;
  }
  return false;
}

namespace {

PathElement reduce_against(const PathElement& x, const std::vector<PathElement>& elems, const WordTrie& trie) {
  std::map<Path, Rational> work(x.terms().begin(), x.terms().end());
  PathElement out;
  while (!work.empty()) {
    auto it = std::prev(work.end());
    Path w = it->first;
    Rational c = it->second;
    work.erase(it);
    auto m = trie.find_factor(w.arrows);
    if (!m) {
      out.add(w, c);
      continue;
    }
    auto [pos, id] = *m;
    const PathElement& g = elems[id];
    std::size_t len = g.leading().length();
    for (const auto& [u, cu] : g.terms()) {
      if (u == g.leading()) continue;
      Path np{w.source, w.target, {}};
      np.arrows.reserve(w.arrows.size() - len + u.arrows.size());
      np.arrows.insert(np.arrows.end(), w.arrows.begin(), w.arrows.begin() + pos);
      np.arrows.insert(np.arrows.end(), u.arrows.begin(), u.arrows.end());
      np.arrows.insert(np.arrows.end(), w.arrows.begin() + pos + len, w.arrows.end());
      Rational delta = -c * cu;
      auto [jt, inserted] = work.emplace(std::move(np), delta);
      if (!inserted) {
        jt->second += delta;
        if (sgn(jt->second) == 0) work.erase(jt);
      }
    }
  }
  return out;
}

PathElement make_monic(const PathElement& x) { return x * (1 / x.leading_coef()); }

bool contains_factor(const std::vector<int>& big, const std::vector<int>& small) {
  if (small.size() > big.size()) return false;
  return std::search(big.begin(), big.end(), small.begin(), small.end()) != big.end();
}

Path subpath(const Quiver& q, const Path& p, std::size_t from, std::size_t to) {
  if (from == to) {
    int v = from == 0 ? p.source : q.arrow(p.arrows[from - 1]).target;
    return Path::trivial(v);
  }
  Path r{q.arrow(p.arrows[from]).source, q.arrow(p.arrows[to - 1]).target, {}};
  r.arrows.assign(p.arrows.begin() + from, p.arrows.begin() + to);
  return r;
}

struct Obstruction {
  std::size_t length;
  std::vector<int> word;
  int left;
  int right;
  std::size_t overlap;
  auto operator<=>(const Obstruction&) const = default;
};

class Completion {
 public:
  Completion(const PresentedGradedAlgebra& alg, int cap) : q_(alg.quiver()), cap_(cap), trie_(q_.num_arrows()) {}

  void insert(const PathElement& f) {
    std::deque<PathElement> pending{f};
    while (!pending.empty()) {
      PathElement h = reduce_against(pending.front(), elems_, trie_);
      pending.pop_front();
      if (h.is_zero()) continue;
      h = make_monic(h);
      int idx = static_cast<int>(elems_.size());
      const std::vector<int> lw = h.leading().arrows;
      for (int g = 0; g < idx; ++g) {
        if (!alive_[g]) continue;
        if (contains_factor(elems_[g].leading().arrows, lw)) {
          alive_[g] = false;
          trie_.erase(elems_[g].leading().arrows);
          pending.push_back(elems_[g]);
        }
      }
      elems_.push_back(std::move(h));
      alive_.push_back(true);
      trie_.insert(lw, idx);
      for (int g = 0; g <= idx; ++g) {
        if (!alive_[g]) continue;
        enqueue(idx, g);
        if (g != idx) enqueue(g, idx);
      }
    }
  }

  void run(const std::vector<PathElement>& relations) {
    for (const auto& r : relations) insert(r);
    while (!queue_.empty()) {
      Obstruction ob = *queue_.begin();
      queue_.erase(queue_.begin());
      if (!alive_[ob.left] || !alive_[ob.right]) continue;
      if (static_cast<int>(ob.length) > cap_) {
        truncated_ = true;
        int best = degree_of(ob.word);
        for (const auto& o : queue_)
          if (alive_[o.left] && alive_[o.right]) best = std::min(best, degree_of(o.word));
        unresolved_degree_ = best;
        break;
      }
      const PathElement& f = elems_[ob.left];
      const PathElement& g = elems_[ob.right];
      const Path& F = f.leading();
      const Path& G = g.leading();
      Path tail = subpath(q_, G, ob.overlap, G.length());
      Path head = subpath(q_, F, 0, F.length() - ob.overlap);
      PathElement s = sandwich(Path::trivial(F.source), f, tail) - sandwich(head, g, Path::trivial(G.target));
      insert(s);
    }
  }

  std::vector<PathElement> result() const {
    std::vector<PathElement> alive;
    for (std::size_t i = 0; i < elems_.size(); ++i)
      if (alive_[i]) alive.push_back(elems_[i]);
    std::sort(alive.begin(), alive.end(),
              [](const PathElement& a, const PathElement& b) { return a.leading() < b.leading(); });
    WordTrie trie(q_.num_arrows());
    for (std::size_t i = 0; i < alive.size(); ++i) trie.insert(alive[i].leading().arrows, static_cast<int>(i));
    std::vector<PathElement> out;
    for (const auto& e : alive) {
      PathElement tail = e;
      tail.add(e.leading(), -e.leading_coef());
      PathElement r = reduce_against(tail, alive, trie);
      r.add(e.leading(), 1);
      out.push_back(std::move(r));
    }
    return out;
  }

  bool truncated() const { return truncated_; }
  std::optional<int> unresolved_degree() const { return unresolved_degree_; }

 private:
  int degree_of(const std::vector<int>& w) const {
    int d = 0;
    for (int a : w) d += q_.arrow(a).degree;
    return d;
  }

  void enqueue(int i, int j) {
    const auto& F = elems_[i].leading().arrows;
    const auto& G = elems_[j].leading().arrows;
    std::size_t lim = std::min(F.size(), G.size());
    for (std::size_t k = 1; k < lim; ++k) {
      if (!std::equal(F.end() - k, F.end(), G.begin())) continue;
      Obstruction ob;
      ob.word = F;
      ob.word.insert(ob.word.end(), G.begin() + k, G.end());
      ob.length = ob.word.size();
      ob.left = i;
      ob.right = j;
      ob.overlap = k;
      queue_.insert(std::move(ob));
    }
  }

  const Quiver& q_;
  int cap_;
  WordTrie trie_;
  std::vector<PathElement> elems_;
  std::vector<bool> alive_;
  std::set<Obstruction> queue_;
  bool truncated_ = false;
  std::optional<int> unresolved_degree_;
};

}  // namespace

GroebnerBasis::GroebnerBasis(PresentedGradedAlgebra alg, std::vector<PathElement> elements, Status status, int cap,
                             std::optional<int> unresolved_degree)
    : alg_(std::move(alg)),
      elements_(std::move(elements)),
      status_(status),
      cap_(cap),
      unresolved_degree_(unresolved_degree),
      trie_(alg_.quiver().num_arrows()),
      reversed_(alg_.quiver().num_arrows()) {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const auto& w = elements_[i].leading().arrows;
    trie_.insert(w, static_cast<int>(i));
    reversed_.insert(std::vector<int>(w.rbegin(), w.rend()), static_cast<int>(i));
  }
}

bool GroebnerBasis::certifies_grade(int grade) const {
  if (complete()) return true;
  return unresolved_degree_ && *unresolved_degree_ > grade;
}

std::size_t GroebnerBasis::max_leading_length() const {
  std::size_t m = 0;
  for (const auto& e : elements_) m = std::max(m, e.leading().length());
  return m;
}

PathElement GroebnerBasis::reduce(const PathElement& x) const { return reduce_against(x, elements_, trie_); }

bool GroebnerBasis::is_normal(const Path& p) const { return !trie_.find_factor(p.arrows); }

bool GroebnerBasis::extends_normally(const std::vector<int>& w) const {
  std::vector<int> r(w.rbegin(), w.rend());
  return !reversed_.matches_at(r, 0);
}

GroebnerBasis complete_groebner(const PresentedGradedAlgebra& alg, int cap) {
  std::size_t longest = 0;
  for (const auto& r : alg.relations())
    for (const auto& [p, c] : r.terms()) longest = std::max(longest, p.length());
  if (cap < static_cast<int>(longest))
    throw InputError("cap " + std::to_string(cap) + " is below the longest relation path (" +
                     std::to_string(longest) + ")");
  Completion c(alg, cap);
  c.run(alg.relations());
  return GroebnerBasis(alg, c.result(),
                       c.truncated() ? GroebnerBasis::Status::truncated : GroebnerBasis::Status::complete, cap,
                       c.unresolved_degree());
}

PathElement normal_form(const PathElement& x, const GroebnerBasis& gb) { return gb.reduce(x); }

NormalWordAutomaton::NormalWordAutomaton(const GroebnerBasis& gb, std::size_t state_limit) : quiver_(&gb.quiver()) {
  const Quiver& q = gb.quiver();
  std::size_t L = gb.max_leading_length();
  k_ = L > 0 ? L - 1 : 0;
  std::vector<Path> layer;
  for (int v = 0; v < q.num_vertices(); ++v) layer.push_back(Path::trivial(v));
  std::vector<std::vector<int>> out(q.num_vertices());
  for (int a = 0; a < q.num_arrows(); ++a) out[q.arrow(a).source].push_back(a);
  for (std::size_t len = 0; len < k_; ++len) {
    std::vector<Path> next;
    for (const Path& w : layer) {
      short_.push_back(w);
      for (int a : out[w.target]) {
        Path x = w;
        x.arrows.push_back(a);
        x.target = q.arrow(a).target;
        if (gb.extends_normally(x.arrows)) next.push_back(std::move(x));
      }
    }
    if (next.size() > state_limit) throw Refusal("normal-word automaton exceeds the state limit");
    layer = std::move(next);
  }
  states_ = std::move(layer);
  std::sort(states_.begin(), states_.end());
  std::map<std::vector<int>, int> index;
  std::vector<int> trivial_index(q.num_vertices(), -1);
  for (std::size_t s = 0; s < states_.size(); ++s) {
    if (k_ == 0)
      trivial_index[states_[s].source] = static_cast<int>(s);
    else
      index.emplace(states_[s].arrows, static_cast<int>(s));
  }
  edges_.resize(states_.size());
  for (std::size_t s = 0; s < states_.size(); ++s) {
    const Path& w = states_[s];
    for (int a : out[w.target]) {
      std::vector<int> x = w.arrows;
      x.push_back(a);
      if (!gb.extends_normally(x)) continue;
      int to;
      if (k_ == 0) {
        to = trivial_index[q.arrow(a).target];
      } else {
        auto it = index.find(std::vector<int>(x.begin() + 1, x.end()));
        if (it == index.end()) continue;
        to = it->second;
      }
      edges_[s].push_back(Edge{to, a});
    }
  }
}

namespace {

bool cyclic(const std::vector<std::vector<NormalWordAutomaton::Edge>>& edges, const Quiver& q, bool zero_only) {
  std::size_t n = edges.size();
  std::vector<int> indeg(n, 0);
  for (const auto& es : edges)
    for (const auto& e : es)
      if (!zero_only || q.arrow(e.arrow).degree == 0) ++indeg[e.to];
  std::vector<int> stack;
  for (std::size_t s = 0; s < n; ++s)
    if (indeg[s] == 0) stack.push_back(static_cast<int>(s));
  std::size_t seen = 0;
  while (!stack.empty()) {
    int s = stack.back();
    stack.pop_back();
    ++seen;
    for (const auto& e : edges[s])
      if (!zero_only || q.arrow(e.arrow).degree == 0)
        if (--indeg[e.to] == 0) stack.push_back(e.to);
  }
  return seen != n;
}

}  // namespace

bool NormalWordAutomaton::has_cycle() const { return cyclic(edges_, *quiver_, false); }
bool NormalWordAutomaton::has_zero_degree_cycle() const { return cyclic(edges_, *quiver_, true); }

std::vector<int> NormalWordAutomaton::zero_degree_order() const {
  std::size_t n = edges_.size();
  std::vector<int> indeg(n, 0);
  for (const auto& es : edges_)
    for (const auto& e : es)
      if (quiver_->arrow(e.arrow).degree == 0) ++indeg[e.to];
  std::deque<int> ready;
  for (std::size_t s = 0; s < n; ++s)
    if (indeg[s] == 0) ready.push_back(static_cast<int>(s));
  std::vector<int> order;
  while (!ready.empty()) {
    int s = ready.front();
    ready.pop_front();
    order.push_back(s);
    for (const auto& e : edges_[s])
      if (quiver_->arrow(e.arrow).degree == 0)
        if (--indeg[e.to] == 0) ready.push_back(e.to);
  }
  if (order.size() != n) throw Refusal("degree-zero cycle among normal words");
  return order;
}

std::optional<std::vector<std::vector<std::vector<Integer>>>> graded_counts(const GroebnerBasis& gb, int max_grade) {
  if (max_grade < 0) return std::vector<std::vector<std::vector<Integer>>>{};
  if (!gb.certifies_grade(max_grade)) return std::nullopt;
  const Quiver& q = gb.quiver();
  int nv = q.num_vertices();
  NormalWordAutomaton aut(gb);
  if (aut.has_zero_degree_cycle()) return std::nullopt;
  std::vector<int> order = aut.zero_degree_order();
  std::size_t G = static_cast<std::size_t>(max_grade);
  std::vector<std::vector<std::vector<Integer>>> counts(
      G + 1, std::vector<std::vector<Integer>>(nv, std::vector<Integer>(nv, 0)));
  for (const Path& w : aut.short_words()) {
    int d = degree(q, w);
    if (d <= max_grade) counts[d][w.target][w.source] += 1;
  }
  const auto& states = aut.states();
  const auto& edges = aut.edges();
  for (int j = 0; j < nv; ++j) {
    std::vector<std::vector<Integer>> cnt(G + 1, std::vector<Integer>(states.size(), 0));
    bool any = false;
    for (std::size_t s = 0; s < states.size(); ++s) {
      if (states[s].source != j) continue;
      int d = degree(q, states[s]);
      if (d <= max_grade) {
        cnt[d][s] += 1;
        any = true;
      }
    }
    if (!any) continue;
    for (std::size_t g = 0; g <= G; ++g) {
      for (int s : order) {
        if (cnt[g][s] == 0) continue;
        counts[g][states[s].target][j] += cnt[g][s];
        for (const auto& e : edges[s]) {
          std::size_t g2 = g + q.arrow(e.arrow).degree;
          if (g2 <= G) cnt[g2][e.to] += cnt[g][s];
        }
      }
    }
  }
  return counts;
}

std::optional<Integer> graded_dimension(const GroebnerBasis& gb, std::optional<Corner> corner, int grade) {
  if (grade < 0) throw InputError("negative grade");
  auto counts = graded_counts(gb, grade);
  if (!counts) return std::nullopt;
  const auto& c = (*counts)[grade];
  if (corner) return c.at(corner->end).at(corner->start);
  Integer total = 0;
  for (const auto& row : c)
    for (const auto& x : row) total += x;
  return total;
}

std::optional<Integer> graded_dimension(const PresentedGradedAlgebra& alg, std::optional<Corner> corner, int grade,
                                        int cap) {
  return graded_dimension(complete_groebner(alg, cap), corner, grade);
}

Finiteness is_finite_dimensional(const GroebnerBasis& gb) {
  Finiteness f;
  f.cap = gb.cap();
  if (!gb.complete()) return f;
  NormalWordAutomaton aut(gb);
  if (aut.has_cycle()) {
    f.answer = Finiteness::Answer::no;
    return f;
  }
  // Walks from each state in reverse topological order.
  const auto& edges = aut.edges();
  std::size_t n = edges.size();
  std::vector<int> indeg(n, 0);
  for (const auto& es : edges)
    for (const auto& e : es) ++indeg[e.to];
  std::vector<int> order, stack;
  for (std::size_t s = 0; s < n; ++s)
    if (indeg[s] == 0) stack.push_back(static_cast<int>(s));
  while (!stack.empty()) {
    int s = stack.back();
    stack.pop_back();
    order.push_back(s);
    for (const auto& e : edges[s])
      if (--indeg[e.to] == 0) stack.push_back(e.to);
  }
  std::vector<Integer> walks(n, 1);
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    for (const auto& e : edges[*it]) walks[*it] += walks[e.to];
  Integer total = static_cast<unsigned long>(aut.short_words().size());
  for (const auto& w : walks) total += w;
  f.answer = Finiteness::Answer::yes;
  f.dimension = total;
  return f;
}

Finiteness is_finite_dimensional(const PresentedGradedAlgebra& alg, int cap) {
  return is_finite_dimensional(complete_groebner(alg, cap));
}

namespace {

std::optional<std::pair<Polynomial, Polynomial>> rational_form(const GroebnerBasis& gb, const NormalWordAutomaton& aut,
                                                               std::size_t limit) {
  const Quiver& q = gb.quiver();
  const auto& states = aut.states();
  const auto& edges = aut.edges();
  std::size_t n = states.size();
  if (n > limit) return std::nullopt;
  std::size_t D = 0;
  for (std::size_t s = 0; s < n; ++s) {
    int m = 0;
    for (const auto& e : edges[s]) m = std::max(m, q.arrow(e.arrow).degree);
    D += m;
  }
  std::vector<Rational> xs, ys;
  for (std::size_t t = 0; t <= D; ++t) {
    Matrix m = Matrix::identity(n);
    Rational tt(static_cast<long>(t));
    for (std::size_t s = 0; s < n; ++s)
      for (const auto& e : edges[s]) {
        Rational w = 1;
        for (int k = 0; k < q.arrow(e.arrow).degree; ++k) w *= tt;
        m(s, e.to) -= w;
      }
    xs.push_back(tt);
    ys.push_back(determinant(std::move(m)));
  }
  Polynomial den = interpolate(xs, ys);
  int extra = 0;
  for (const auto& w : aut.short_words()) extra = std::max(extra, degree(q, w));
  for (const auto& w : states) extra = std::max(extra, degree(q, w));
  int K = static_cast<int>(D) + extra;
  auto counts = graded_counts(gb, K);
  if (!counts) return std::nullopt;
  std::vector<Rational> h;
  for (const auto& grade : *counts) {
    Integer t = 0;
    for (const auto& row : grade)
      for (const auto& x : row) t += x;
    h.push_back(Rational(t));
  }
  Polynomial prod = Polynomial(h) * den;
  std::vector<Rational> num(prod.coeffs().begin(),
                            prod.coeffs().begin() + std::min<std::size_t>(prod.coeffs().size(), K + 1));
  Polynomial numer(num);
  Polynomial g = gcd(numer, den);
  if (g.degree() > 0) {
    numer = numer.divmod(g).first;
    den = den.divmod(g).first;
  }
  Rational c0 = den.coeff(0);
  if (sgn(c0) != 0) {
    numer = numer * (1 / c0);
    den = den * (1 / c0);
  }
  return std::make_pair(numer, den);
}

}  // namespace

HilbertSeries hilbert_series(const GroebnerBasis& gb, int max_grade, std::size_t rational_state_limit) {
  HilbertSeries hs;
  int certified = max_grade;
  if (!gb.complete()) certified = gb.unresolved_degree() ? std::min(max_grade, *gb.unresolved_degree() - 1) : -1;
  auto counts = certified >= 0 ? graded_counts(gb, certified) : std::nullopt;
  for (int g = 0; g <= max_grade; ++g) {
    if (counts && g <= certified) {
      Integer t = 0;
      for (const auto& row : (*counts)[g])
        for (const auto& x : row) t += x;
      hs.dims.push_back(t);
    } else {
      hs.dims.push_back(std::nullopt);
    }
  }
  if (gb.complete()) {
    NormalWordAutomaton aut(gb);
    if (!aut.has_zero_degree_cycle()) hs.rational = rational_form(gb, aut, rational_state_limit);
  }
  return hs;
}

HilbertSeries hilbert_series(const PresentedGradedAlgebra& alg, int max_grade, int cap) {
  return hilbert_series(complete_groebner(alg, cap), max_grade);
}

std::vector<std::vector<Path>> normal_words_by_grade(const GroebnerBasis& gb, int max_grade) {
  if (!gb.certifies_grade(max_grade)) throw Refusal("basis does not certify grade " + std::to_string(max_grade));
  NormalWordAutomaton aut(gb);
  if (aut.has_zero_degree_cycle()) throw Refusal("infinitely many normal words in some grade");
  const Quiver& q = gb.quiver();
  std::vector<std::vector<int>> out(q.num_vertices());
  for (int a = 0; a < q.num_arrows(); ++a) out[q.arrow(a).source].push_back(a);
  std::vector<std::vector<Path>> result(max_grade + 1);
  std::vector<std::pair<Path, int>> stack;
  for (int v = 0; v < q.num_vertices(); ++v) stack.emplace_back(Path::trivial(v), 0);
  while (!stack.empty()) {
    auto [w, d] = std::move(stack.back());
    stack.pop_back();
    for (int a : out[w.target]) {
      int d2 = d + q.arrow(a).degree;
      if (d2 > max_grade) continue;
      Path x = w;
      x.arrows.push_back(a);
      x.target = q.arrow(a).target;
      if (gb.extends_normally(x.arrows)) stack.emplace_back(std::move(x), d2);
    }
    result[d].push_back(std::move(w));
  }
  for (auto& g : result) std::sort(g.begin(), g.end());
  return result;
}

std::vector<Path> all_normal_words(const GroebnerBasis& gb) {
  auto f = is_finite_dimensional(gb);
  if (f.answer != Finiteness::Answer::yes) throw Refusal("algebra is not certified finite-dimensional");
  const Quiver& q = gb.quiver();
  std::vector<std::vector<int>> out(q.num_vertices());
  for (int a = 0; a < q.num_arrows(); ++a) out[q.arrow(a).source].push_back(a);
  std::vector<Path> result;
  std::vector<Path> stack;
  for (int v = 0; v < q.num_vertices(); ++v) stack.push_back(Path::trivial(v));
  while (!stack.empty()) {
    Path w = std::move(stack.back());
    stack.pop_back();
    for (int a : out[w.target]) {
      Path x = w;
      x.arrows.push_back(a);
      x.target = q.arrow(a).target;
      if (gb.extends_normally(x.arrows)) stack.push_back(std::move(x));
    }
    result.push_back(std::move(w));
  }
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace cyqw
