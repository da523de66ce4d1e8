#include "braq/brauer.hpp"

#include <algorithm>
#include <stdexcept>

namespace braq {

namespace {

std::vector<std::uint32_t> no_points() { return {}; }

}  // namespace

BrauerMorphism BrauerMorphism::identity(std::size_t n) {
  std::vector<std::uint32_t> partner(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    partner[i] = static_cast<std::uint32_t>(n + i);
    partner[n + i] = static_cast<std::uint32_t>(i);
  }
  return BrauerMorphism(n, n, 0, std::move(partner));
}

BrauerMorphism BrauerMorphism::braiding(std::size_t m, std::size_t n) {
  // In(i) <-> Out(n+i) for i <= m, In(m+i) <-> Out(i) for i <= n.
  const std::size_t total = m + n;
  std::vector<std::uint32_t> partner(2 * total);
  for (std::size_t i = 0; i < m; ++i) {
    partner[i] = static_cast<std::uint32_t>(total + n + i);
    partner[total + n + i] = static_cast<std::uint32_t>(i);
  }
  for (std::size_t i = 0; i < n; ++i) {
    partner[m + i] = static_cast<std::uint32_t>(total + i);
    partner[total + i] = static_cast<std::uint32_t>(m + i);
  }
  return BrauerMorphism(total, total, 0, std::move(partner));
}

BrauerMorphism BrauerMorphism::unit(std::size_t n) {
  if (n == 0) throw std::invalid_argument("unit: n must be >= 1");
  // [0] -> [2n] with Out(k) <-> Out(2n+1-k).
  std::vector<std::uint32_t> partner(2 * n);
  for (std::size_t k = 0; k < 2 * n; ++k)
    partner[k] = static_cast<std::uint32_t>(2 * n - 1 - k);
  return BrauerMorphism(0, 2 * n, 0, std::move(partner));
}

BrauerMorphism BrauerMorphism::counit(std::size_t n) {
  if (n == 0) throw std::invalid_argument("counit: n must be >= 1");
  std::vector<std::uint32_t> partner(2 * n);
  for (std::size_t k = 0; k < 2 * n; ++k)
    partner[k] = static_cast<std::uint32_t>(2 * n - 1 - k);
  return BrauerMorphism(2 * n, 0, 0, std::move(partner));
}

BrauerMorphism BrauerMorphism::loop() {
  return BrauerMorphism(0, 0, 1, no_points());
}

BrauerMorphism BrauerMorphism::from_pairing(
    std::size_t m, std::size_t n,
    const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
    std::size_t loops) {
  if ((m + n) % 2 != 0)
    throw std::invalid_argument("from_pairing: m+n must be even");
  const std::size_t total = m + n;
  const std::uint32_t unset = 0xffffffffu;
  std::vector<std::uint32_t> partner(total, unset);
  if (pairs.size() * 2 != total)
    throw std::invalid_argument("from_pairing: wrong number of pairs");
  for (const auto& [a, b] : pairs) {
    if (a >= total || b >= total || a == b)
      throw std::invalid_argument("from_pairing: bad pair");
    if (partner[a] != unset || partner[b] != unset)
      throw std::invalid_argument("from_pairing: point matched twice");
    partner[a] = static_cast<std::uint32_t>(b);
    partner[b] = static_cast<std::uint32_t>(a);
  }
  return BrauerMorphism(m, n, loops, std::move(partner));
}

std::vector<std::pair<std::size_t, std::size_t>> BrauerMorphism::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(points() / 2);
  for (std::size_t p = 0; p < points(); ++p)
    if (p < partner_[p]) out.emplace_back(p, partner_[p]);
  return out;  // already sorted by lower point
}

BrauerMorphism BrauerMorphism::with_loops(std::size_t k) const {
  BrauerMorphism out = *this;
  out.loops_ = k;
  return out;
}

bool BrauerMorphism::is_isomorphism() const {
  if (loops_ != 0 || m_ != n_) return false;
  for (std::size_t i = 0; i < m_; ++i)
    if (partner_[i] < m_) return false;  // an In<->In pair
  return true;
}

std::vector<std::size_t> BrauerMorphism::as_permutation() const {
  if (!is_isomorphism())
    throw std::invalid_argument("as_permutation: morphism is not an isomorphism");
  std::vector<std::size_t> perm(m_);
  for (std::size_t i = 0; i < m_; ++i) perm[i] = partner_[i] - m_;
  return perm;
}

int BrauerMorphism::compare(const BrauerMorphism& rhs) const {
  if (m_ != rhs.m_) return m_ < rhs.m_ ? -1 : 1;
  if (n_ != rhs.n_) return n_ < rhs.n_ ? -1 : 1;
  if (partner_ != rhs.partner_) return partner_ < rhs.partner_ ? -1 : 1;
  if (loops_ != rhs.loops_) return loops_ < rhs.loops_ ? -1 : 1;
  return 0;
}

BrauerMorphism compose(const BrauerMorphism& g, const BrauerMorphism& f) {
  if (f.cod() != g.dom())
    throw std::invalid_argument("compose: cod(f) != dom(g)");
  const std::size_t m = f.dom(), n = f.cod(), p = g.cod();

  // Overlay of f and g along the middle object [n]: f-out j is glued to
  // g-in j. Every point has degree <= 2 (one pairing edge, middle points
  // one gluing edge), so maximal paths and cycles are traced directly.
  std::vector<char> vis_f(f.points(), 0), vis_g(g.points(), 0);

  enum Side { F, G };
  struct Pt {
    Side side;
    std::size_t idx;
  };
  auto visited = [&](Pt x) -> char& {
    return x.side == F ? vis_f[x.idx] : vis_g[x.idx];
  };
  auto is_boundary = [&](Pt x) {
    return x.side == F ? x.idx < m : x.idx >= n;
  };
  // Walk pairing then gluing until a boundary point is reached; returns it.
  auto trace = [&](Pt start) {
    Pt cur = start;
    visited(cur) = 1;
    for (;;) {
      Pt t{cur.side, cur.side == F ? f.partner(cur.idx) : g.partner(cur.idx)};
      visited(t) = 1;
      if (is_boundary(t)) return t;
      Pt u = t.side == F ? Pt{G, t.idx - m} : Pt{F, m + t.idx};
      visited(u) = 1;
      cur = u;
    }
  };

  // Composite index space: in points 0..m-1 (f-in), out points m..m+p-1
  // (g-out j at m+j).
  auto to_composite = [&](Pt x) {
    return x.side == F ? x.idx : m + (x.idx - n);
  };

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < m; ++i) {
    if (vis_f[i]) continue;
    Pt end = trace({F, i});
    pairs.emplace_back(i, to_composite(end));
  }
  for (std::size_t j = 0; j < p; ++j) {
    if (vis_g[n + j]) continue;
    Pt end = trace({G, n + j});
    pairs.emplace_back(m + j, to_composite(end));
  }

  // Unvisited middle points lie on closed cycles.
  std::size_t cycles = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (vis_f[m + j]) continue;
    ++cycles;
    Pt cur{F, m + j};
    while (!visited(cur)) {
      visited(cur) = 1;
      Pt t{cur.side, cur.side == F ? f.partner(cur.idx) : g.partner(cur.idx)};
      visited(t) = 1;
      cur = t.side == F ? Pt{G, t.idx - m} : Pt{F, m + t.idx};
    }
  }

  return BrauerMorphism::from_pairing(m, p, pairs,
                                      f.loops() + g.loops() + cycles);
}

BrauerMorphism tensor(const BrauerMorphism& f, const BrauerMorphism& g) {
  const std::size_t m = f.dom() + g.dom(), n = f.cod() + g.cod();
  auto shift_f = [&](std::size_t x) {
    return x < f.dom() ? x : m + (x - f.dom());
  };
  auto shift_g = [&](std::size_t x) {
    return x < g.dom() ? f.dom() + x : m + f.cod() + (x - g.dom());
  };
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& [a, b] : f.pairs()) pairs.emplace_back(shift_f(a), shift_f(b));
  for (const auto& [a, b] : g.pairs()) pairs.emplace_back(shift_g(a), shift_g(b));
  return BrauerMorphism::from_pairing(m, n, pairs, f.loops() + g.loops());
}

std::pair<BrauerMorphism, std::size_t> strip_loops(const BrauerMorphism& f) {
  return {f.with_loops(0), f.loops()};
}

namespace {

void enumerate_rec(std::size_t total, std::vector<std::uint32_t>& partner,
                   std::size_t matched, std::size_t m,
                   std::vector<BrauerMorphism>& out) {
  const std::uint32_t unset = 0xffffffffu;
  if (matched == total) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t p = 0; p < total; ++p)
      if (p < partner[p]) pairs.emplace_back(p, partner[p]);
    out.push_back(BrauerMorphism::from_pairing(m, total - m, pairs, 0));
    return;
  }
  std::size_t a = 0;
  while (partner[a] != unset) ++a;
  for (std::size_t b = a + 1; b < total; ++b) {
    if (partner[b] != unset) continue;
    partner[a] = static_cast<std::uint32_t>(b);
    partner[b] = static_cast<std::uint32_t>(a);
    enumerate_rec(total, partner, matched + 2, m, out);
    partner[a] = unset;
    partner[b] = unset;
  }
}

}  // namespace

std::vector<BrauerMorphism> enumerate_loop_free(std::size_t m, std::size_t n) {
  if ((m + n) % 2 != 0) return {};
  std::vector<BrauerMorphism> out;
  std::vector<std::uint32_t> partner(m + n, 0xffffffffu);
  enumerate_rec(m + n, partner, 0, m, out);
  return out;
}

namespace {

std::string point_label(const BrauerMorphism& f, std::size_t p) {
  return f.is_in(p) ? "I" + std::to_string(p + 1)
                    : "O" + std::to_string(p - f.dom() + 1);
}

}  // namespace

std::string encode_morphism(const BrauerMorphism& f) {
  std::string out = std::to_string(f.dom()) + ";" + std::to_string(f.cod()) +
                    ";" + std::to_string(f.loops()) + ";";
  for (const auto& [a, b] : f.pairs())
    out += "(" + point_label(f, a) + "-" + point_label(f, b) + ")";
  return out;
}

BrauerMorphism parse_morphism(const std::string& text) {
  auto fail = [&](const std::string& why) -> std::size_t {
    throw std::invalid_argument("parse_morphism: " + why + " in '" + text + "'");
  };
  std::size_t pos = 0;
  auto read_nat = [&](char stop) {
    std::size_t start = pos;
    while (pos < text.size() && text[pos] != stop) ++pos;
    if (pos == text.size()) fail("missing separator");
    std::size_t value = 0;
    if (pos == start) fail("empty number");
    for (std::size_t i = start; i < pos; ++i) {
      if (text[i] < '0' || text[i] > '9') fail("bad number");
      value = value * 10 + static_cast<std::size_t>(text[i] - '0');
    }
    ++pos;  // skip separator
    return value;
  };
  const std::size_t m = read_nat(';');
  const std::size_t n = read_nat(';');
  const std::size_t loops = read_nat(';');

  auto read_point = [&]() {
    if (pos >= text.size()) fail("truncated pair");
    char side = text[pos++];
    if (side != 'I' && side != 'O') fail("expected I or O");
    std::size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == start) fail("missing point index");
    std::size_t idx = 0;
    for (std::size_t i = start; i < pos; ++i)
      idx = idx * 10 + static_cast<std::size_t>(text[i] - '0');
    if (idx == 0) fail("point indices are 1-based");
    if (side == 'I') {
      if (idx > m) fail("input index out of range");
      return idx - 1;
    }
    if (idx > n) fail("output index out of range");
    return m + idx - 1;
  };

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  while (pos < text.size()) {
    if (text[pos] != '(') fail("expected '('");
    ++pos;
    std::size_t a = read_point();
    if (pos >= text.size() || text[pos] != '-') fail("expected '-'");
    ++pos;
    std::size_t b = read_point();
    if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
    ++pos;
    pairs.emplace_back(a, b);
  }
  return BrauerMorphism::from_pairing(m, n, pairs, loops);
}

// ---------------------------------------------------------------------------
// Words.

struct Word::Node {
  Kind kind;
  std::size_t k = 0;  // Id size
  std::shared_ptr<const Node> a, b;
  std::size_t dom = 0, cod = 0;
};

Word Word::gen_i() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::GenI;
  n->dom = 0;
  n->cod = 2;
  return Word(std::move(n));
}

Word Word::gen_e() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::GenE;
  n->dom = 2;
  n->cod = 0;
  return Word(std::move(n));
}

Word Word::gen_b() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::GenB;
  n->dom = 2;
  n->cod = 2;
  return Word(std::move(n));
}

Word Word::id(std::size_t k) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Id;
  n->k = k;
  n->dom = k;
  n->cod = k;
  return Word(std::move(n));
}

Word Word::compose(const Word& after, const Word& before) {
  if (before.cod() != after.dom())
    throw std::invalid_argument("Word::compose: cod/dom mismatch");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Compose;
  n->a = before.node_;
  n->b = after.node_;
  n->dom = before.dom();
  n->cod = after.cod();
  return Word(std::move(n));
}

Word Word::tensor(const Word& left, const Word& right) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Tensor;
  n->a = left.node_;
  n->b = right.node_;
  n->dom = left.dom() + right.dom();
  n->cod = left.cod() + right.cod();
  return Word(std::move(n));
}

Word::Kind Word::kind() const { return node_->kind; }
std::size_t Word::id_size() const { return node_->k; }
Word Word::first() const { return Word(node_->a); }
Word Word::second() const { return Word(node_->b); }
std::size_t Word::dom() const { return node_->dom; }
std::size_t Word::cod() const { return node_->cod; }

BrauerMorphism evaluate_word(const Word& w) {
  switch (w.kind()) {
    case Word::Kind::GenI:
      return BrauerMorphism::unit(1);
    case Word::Kind::GenE:
      return BrauerMorphism::counit(1);
    case Word::Kind::GenB:
      return BrauerMorphism::braiding(1, 1);
    case Word::Kind::Id:
      return BrauerMorphism::identity(w.id_size());
    case Word::Kind::Compose: {
      BrauerMorphism before = evaluate_word(w.first());
      BrauerMorphism after = evaluate_word(w.second());
      return compose(after, before);
    }
    case Word::Kind::Tensor: {
      BrauerMorphism left = evaluate_word(w.first());
      BrauerMorphism right = evaluate_word(w.second());
      return tensor(left, right);
    }
  }
  throw std::logic_error("evaluate_word: unreachable");
}

namespace {

// Id(i) (x) b (x) Id(k-i-2), the adjacent transposition of strands
// i+1, i+2 on the object [k] (i is 0-based).
Word adjacent_swap_word(std::size_t k, std::size_t i) {
  Word w = Word::gen_b();
  if (i > 0) w = Word::tensor(Word::id(i), w);
  if (i + 2 < k) w = Word::tensor(w, Word::id(k - i - 2));
  return w;
}

// A word for the permutation diagram In(j+1) <-> Out(perm[j]+1),
// as a composite of adjacent transpositions (bubble sort). Returns Id(k)
// for the identity permutation.
Word permutation_word(const std::vector<std::size_t>& perm) {
  const std::size_t k = perm.size();
  std::vector<std::size_t> arr = perm;
  std::vector<std::size_t> swaps;
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t i = 0; i + 1 < k; ++i) {
      if (arr[i] > arr[i + 1]) {
        std::swap(arr[i], arr[i + 1]);
        swaps.push_back(i);
        moved = true;
      }
    }
  }
  // arr reached the identity via perm o s_{j1} o ... o s_{jL}, hence
  // perm = s_{jL} o ... o s_{j1}.
  Word w = Word::id(k);
  bool have = false;
  for (auto it = swaps.rbegin(); it != swaps.rend(); ++it) {
    Word s = adjacent_swap_word(k, *it);
    w = have ? Word::compose(w, s) : s;
    have = true;
  }
  return w;
}

bool is_identity_perm(const std::vector<std::size_t>& perm) {
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (perm[i] != i) return false;
  return true;
}

}  // namespace

Word decompose_to_word(const BrauerMorphism& f) {
  const std::size_t m = f.dom(), n = f.cod();

  // Classify the pairs of the loop-free part.
  std::vector<std::pair<std::size_t, std::size_t>> in_in, out_out;
  std::vector<std::pair<std::size_t, std::size_t>> through;  // (in, out idx)
  for (const auto& [a, b] : f.pairs()) {
    if (b < m)
      in_in.emplace_back(a, b);
    else if (a >= m)
      out_out.emplace_back(a - m, b - m);
    else
      through.emplace_back(a, b - m);
  }
  const std::size_t p = in_in.size(), q = out_out.size(), r = through.size();

  // f = beta o (1_[r] (x) e1^p (x) i1^q) o alpha with alpha routing the
  // through-strand sources to positions 1..r and the cup legs to adjacent
  // slots, beta doing the same for targets and cap legs.
  std::vector<std::size_t> alpha(m), beta(n);
  for (std::size_t k = 0; k < r; ++k) {
    alpha[through[k].first] = k;
    beta[k] = through[k].second;
  }
  for (std::size_t k = 0; k < p; ++k) {
    alpha[in_in[k].first] = r + 2 * k;
    alpha[in_in[k].second] = r + 2 * k + 1;
  }
  for (std::size_t k = 0; k < q; ++k) {
    beta[r + 2 * k] = out_out[k].first;
    beta[r + 2 * k + 1] = out_out[k].second;
  }

  Word middle = Word::id(0);
  bool have_middle = false;
  if (r > 0) {
    middle = Word::id(r);
    have_middle = true;
  }
  for (std::size_t k = 0; k < p; ++k) {
    middle = have_middle ? Word::tensor(middle, Word::gen_e()) : Word::gen_e();
    have_middle = true;
  }
  for (std::size_t k = 0; k < q; ++k) {
    middle = have_middle ? Word::tensor(middle, Word::gen_i()) : Word::gen_i();
    have_middle = true;
  }

  Word main = middle;
  if (!is_identity_perm(alpha)) main = Word::compose(main, permutation_word(alpha));
  if (!is_identity_perm(beta)) main = Word::compose(permutation_word(beta), main);

  if (f.loops() == 0) return main;

  Word lam = Word::compose(Word::gen_e(), Word::gen_i());
  Word loops_part = lam;
  for (std::size_t k = 1; k < f.loops(); ++k)
    loops_part = Word::tensor(loops_part, lam);
  if (m == 0 && n == 0 && r + p + q == 0) return loops_part;
  return Word::tensor(loops_part, main);
}

// ---------------------------------------------------------------------------
// Relations.

std::vector<RelationCase> relation_cases() {
  const Word i = Word::gen_i(), e = Word::gen_e(), b = Word::gen_b();
  const Word one = Word::id(1);
  auto c = [](const Word& after, const Word& before) {
    return Word::compose(after, before);
  };
  auto t = [](const Word& l, const Word& r) { return Word::tensor(l, r); };

  std::vector<RelationCase> cases;
  cases.push_back({"B1 zig-zag left", c(t(one, e), t(i, one)), one});
  cases.push_back({"B1 zig-zag right", c(t(e, one), t(one, i)), one});
  cases.push_back({"B2 twisted zig-zag left",
                   c(t(t(e, one), one), c(t(t(one, b), one), t(t(one, one), i))),
                   b});
  cases.push_back({"B2 twisted zig-zag right",
                   c(t(t(one, one), e), c(t(t(one, b), one), t(t(i, one), one))),
                   b});
  cases.push_back({"B3 Reidemeister I left",
                   c(t(one, e), c(t(b, one), t(one, i))), one});
  cases.push_back({"B3 Reidemeister I right",
                   c(t(e, one), c(t(one, b), t(i, one))), one});
  cases.push_back({"B4 Reidemeister II", c(b, b), t(one, one)});
  cases.push_back({"B5 Yang-Baxter",
                   c(t(b, one), c(t(one, b), t(b, one))),
                   c(t(one, b), c(t(b, one), t(one, b)))});
  cases.push_back({"symmetry e1 o b = e1", c(e, b), e});
  cases.push_back({"symmetry b o i1 = i1", c(b, i), i});
  return cases;
}

bool RelationReport::all_pass() const {
  for (const auto& entry : entries)
    if (!entry.pass) return false;
  return true;
}

RelationReport verify_relations() {
  RelationReport report;
  for (const auto& rc : relation_cases()) {
    BrauerMorphism l = evaluate_word(rc.lhs);
    BrauerMorphism r = evaluate_word(rc.rhs);
    RelationReport::Entry entry;
    entry.name = rc.name;
    entry.pass = (l == r);
    entry.lhs = encode_morphism(l);
    entry.rhs = encode_morphism(r);
    report.entries.push_back(std::move(entry));
  }
  return report;
}

}  // namespace braq
