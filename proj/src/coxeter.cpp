#include "rencox/coxeter.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <istream>
#include <set>
#include <sstream>

namespace rencox {

// ---------------------------------------------------------------- GenSet

std::string GenSet::to_string() const {
  if (empty()) return "-";
  std::string out;
  for (int s : *this) {
    if (!out.empty()) out += ',';
    out += std::to_string(s + 1);
  }
  return out;
}

GenSet GenSet::parse(const std::string& text) {
  GenSet g;
  if (text.empty() || text == "-") return g;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    int v = std::stoi(item, &pos);
    if (pos != item.size() || v < 1 || v > 32)
      throw std::invalid_argument("bad generator index '" + item + "'");
    g = g.with(v - 1);
  }
  return g;
}

// --------------------------------------------------------- CoxeterMatrix

CoxeterMatrix::CoxeterMatrix(int rank) : rank_(rank) {
  if (rank < 0 || rank > 30)
    throw std::invalid_argument("Coxeter matrix rank out of range");
  entries_.assign(static_cast<std::size_t>(rank) * rank, 2);
  for (int i = 0; i < rank; ++i) entries_[i * rank + i] = 1;
}

void CoxeterMatrix::set_entry(int i, int j, int m) {
  if (i < 0 || j < 0 || i >= rank_ || j >= rank_)
    throw std::invalid_argument("generator index out of range");
  entries_[i * rank_ + j] = m;
  entries_[j * rank_ + i] = m;
}

void CoxeterMatrix::validate() const {
  for (int i = 0; i < rank_; ++i) {
    if (entry(i, i) != 1)
      throw std::invalid_argument("diagonal entry m(s,s) must be 1");
    for (int j = 0; j < rank_; ++j) {
      if (entry(i, j) != entry(j, i))
        throw std::invalid_argument("Coxeter matrix must be symmetric");
      if (i != j && entry(i, j) < 2)
        throw std::invalid_argument("off-diagonal entries must be >= 2");
    }
  }
}

CoxeterMatrix CoxeterMatrix::type_a(int n_gens) {
  CoxeterMatrix m(n_gens);
  for (int i = 0; i + 1 < n_gens; ++i) m.set_entry(i, i + 1, 3);
  return m;
}

CoxeterMatrix CoxeterMatrix::type_b(int n_gens) {
  if (n_gens < 2) throw std::invalid_argument("type B needs rank >= 2");
  CoxeterMatrix m(n_gens);
  m.set_entry(0, 1, 4);
  for (int i = 1; i + 1 < n_gens; ++i) m.set_entry(i, i + 1, 3);
  return m;
}

CoxeterMatrix CoxeterMatrix::dihedral(int m) {
  if (m < 3) throw std::invalid_argument("dihedral order must be >= 3");
  CoxeterMatrix mat(2);
  mat.set_entry(0, 1, m);
  return mat;
}

// ------------------------------------------------------- block recognition

namespace {

using detail::Block;

int block_width(Block::Kind kind, int npoints) {
  return kind == Block::Kind::Dihedral ? 2 : npoints;
}

}  // namespace

void CoxeterGroup::recognize_blocks() {
  const int n = matrix_.rank();
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (int i = 0; i < n; ++i) {
    if (comp[i] >= 0) continue;
    std::deque<int> queue{i};
    comp[i] = ncomp;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int u = 0; u < n; ++u)
        if (comp[u] < 0 && matrix_.entry(v, u) >= 3) {
          comp[u] = ncomp;
          queue.push_back(u);
        }
    }
    ++ncomp;
  }

  gen_site_.assign(n, {-1, -1});
  for (int c = 0; c < ncomp; ++c) {
    std::vector<int> verts;
    for (int i = 0; i < n; ++i)
      if (comp[i] == c) verts.push_back(i);

    Block block;
    if (verts.size() == 1) {
      block.kind = Block::Kind::TypeA;
      block.npoints = 2;
      block.gens = verts;
    } else {
      // The component must be a path; walk it from a degree-1 endpoint.
      auto degree = [&](int v) {
        int d = 0;
        for (int u : verts)
          if (u != v && matrix_.entry(v, u) >= 3) ++d;
        return d;
      };
      std::vector<int> ends;
      for (int v : verts) {
        int d = degree(v);
        if (d > 2) throw std::invalid_argument("unsupported Coxeter matrix: branch node");
        if (d == 1) ends.push_back(v);
      }
      if (ends.size() != 2)
        throw std::invalid_argument("unsupported Coxeter matrix: component is not a path");
      auto walk = [&](int start) {
        std::vector<int> path{start};
        int prev = -1, cur = start;
        while (path.size() < verts.size()) {
          int next = -1;
          for (int u : verts)
            if (u != prev && u != cur && matrix_.entry(cur, u) >= 3) next = u;
          if (next < 0)
            throw std::invalid_argument("unsupported Coxeter matrix: disconnected path");
          path.push_back(next);
          prev = cur;
          cur = next;
        }
        return path;
      };
      std::vector<int> path = walk(std::min(ends[0], ends[1]));
      std::vector<int> labels;
      for (std::size_t k = 0; k + 1 < path.size(); ++k)
        labels.push_back(matrix_.entry(path[k], path[k + 1]));

      int fours = static_cast<int>(std::count(labels.begin(), labels.end(), 4));
      bool all_three = std::all_of(labels.begin(), labels.end(),
                                   [](int m) { return m == 3; });
      if (all_three) {
        block.kind = Block::Kind::TypeA;
        block.npoints = static_cast<int>(verts.size()) + 1;
        block.gens = path;
      } else if (verts.size() == 2 && labels[0] >= 5) {
        block.kind = Block::Kind::Dihedral;
        block.npoints = labels[0];
        block.gens = path;
      } else if (fours == 1 && (labels.front() == 4 || labels.back() == 4) &&
                 std::count(labels.begin(), labels.end(), 3) ==
                     static_cast<int>(labels.size()) - 1) {
        block.kind = Block::Kind::TypeB;
        block.npoints = static_cast<int>(verts.size());
        if (labels.back() == 4) std::reverse(path.begin(), path.end());
        block.gens = path;
      } else {
        throw std::invalid_argument(
            "unsupported Coxeter matrix: only type A, type B, dihedral and "
            "their direct products are modelled");
      }
    }

    block.offset = value_width_;
    block.width = block_width(block.kind, block.npoints);
    value_width_ += block.width;
    for (std::size_t k = 0; k < block.gens.size(); ++k)
      gen_site_[block.gens[k]] = {static_cast<int>(blocks_.size()),
                                  static_cast<int>(k)};
    blocks_.push_back(std::move(block));
  }
}

// ------------------------------------------------------ per-block element ops

namespace {

using Seg = std::int16_t;

// type A: one-line permutation of 1..n
void a_identity(Seg* v, int n) {
  for (int i = 0; i < n; ++i) v[i] = static_cast<Seg>(i + 1);
}
void a_compose(const Seg* a, const Seg* b, Seg* out, int n) {
  for (int i = 0; i < n; ++i) out[i] = a[b[i] - 1];
}
void a_inverse(const Seg* a, Seg* out, int n) {
  for (int i = 0; i < n; ++i) out[a[i] - 1] = static_cast<Seg>(i + 1);
}
int a_length(const Seg* a, int n) {
  int inv = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (a[i] > a[j]) ++inv;
  return inv;
}

// type B: signed one-line, entries in {±1..±n}
void b_identity(Seg* v, int n) { a_identity(v, n); }
void b_compose(const Seg* a, const Seg* b, Seg* out, int n) {
  for (int i = 0; i < n; ++i) {
    Seg y = b[i];
    out[i] = y > 0 ? a[y - 1] : static_cast<Seg>(-a[-y - 1]);
  }
}
void b_inverse(const Seg* a, Seg* out, int n) {
  for (int i = 0; i < n; ++i) {
    if (a[i] > 0)
      out[a[i] - 1] = static_cast<Seg>(i + 1);
    else
      out[-a[i] - 1] = static_cast<Seg>(-(i + 1));
  }
}
int b_length(const Seg* a, int n) {
  // inv(w) + neg(w) + nsp(w), the word length in the signed-permutation model
  int inv = 0, neg = 0, nsp = 0;
  for (int i = 0; i < n; ++i) {
    if (a[i] < 0) ++neg;
    for (int j = i + 1; j < n; ++j) {
      if (a[i] > a[j]) ++inv;
      if (a[i] + a[j] < 0) ++nsp;
    }
  }
  return inv + neg + nsp;
}

// dihedral I2(m): value (rotation, flip), element = rho^k * s1^flip
void d_identity(Seg* v) { v[0] = v[1] = 0; }
void d_compose(const Seg* a, const Seg* b, Seg* out, int m) {
  if (a[1] == 0) {
    out[0] = static_cast<Seg>((a[0] + b[0]) % m);
    out[1] = b[1];
  } else {
    out[0] = static_cast<Seg>(((a[0] - b[0]) % m + m) % m);
    out[1] = static_cast<Seg>(1 - b[1]);
  }
}
void d_inverse(const Seg* a, Seg* out, int m) {
  if (a[1] == 0) {
    out[0] = static_cast<Seg>((m - a[0]) % m);
    out[1] = 0;
  } else {
    out[0] = a[0];
    out[1] = 1;
  }
}
int d_length(const Seg* a, int m) {
  int k = a[0];
  return a[1] == 0 ? std::min(2 * k, 2 * (m - k))
                   : std::min(2 * k + 1, 2 * (m - k) - 1);
}

}  // namespace

// ----------------------------------------------------------- CoxeterGroup

CoxeterGroup::CoxeterGroup(CoxeterMatrix matrix, std::size_t element_budget)
    : matrix_(std::move(matrix)), budget_(element_budget) {
  matrix_.validate();
  recognize_blocks();
  verify_relations();
}

void CoxeterGroup::verify_relations() const {
  const int n = rank();
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      CoxeterElement p = generator(i) * generator(j);
      CoxeterElement pow = identity();
      for (int k = 0; k < matrix_.entry(i, j); ++k) pow = pow * p;
      if (!pow.is_identity())
        throw std::logic_error("model violates (st)^m = 1");
    }
}

std::vector<std::int16_t> CoxeterGroup::identity_value() const {
  std::vector<Seg> v(value_width_);
  for (const auto& b : blocks_) {
    switch (b.kind) {
      case Block::Kind::TypeA:
        a_identity(v.data() + b.offset, b.npoints);
        break;
      case Block::Kind::TypeB:
        b_identity(v.data() + b.offset, b.npoints);
        break;
      case Block::Kind::Dihedral:
        d_identity(v.data() + b.offset);
        break;
    }
  }
  return v;
}

std::vector<std::int16_t> CoxeterGroup::generator_value(int s) const {
  std::vector<Seg> v = identity_value();
  auto [bi, local] = gen_site_[s];
  const Block& b = blocks_[bi];
  Seg* seg = v.data() + b.offset;
  switch (b.kind) {
    case Block::Kind::TypeA:
      std::swap(seg[local], seg[local + 1]);
      break;
    case Block::Kind::TypeB:
      if (local == 0)
        seg[0] = static_cast<Seg>(-seg[0]);
      else
        std::swap(seg[local - 1], seg[local]);
      break;
    case Block::Kind::Dihedral:
      if (local == 0) {
        seg[0] = 0;
        seg[1] = 1;
      } else {
        seg[0] = static_cast<Seg>(b.npoints - 1);
        seg[1] = 1;
      }
      break;
  }
  return v;
}

CoxeterElement CoxeterGroup::identity() const {
  return CoxeterElement(this, identity_value());
}

CoxeterElement CoxeterGroup::generator(int s) const {
  if (s < 0 || s >= rank()) throw std::invalid_argument("generator index out of range");
  return CoxeterElement(this, generator_value(s));
}

CoxeterElement CoxeterGroup::from_word(const std::vector<int>& word) const {
  CoxeterElement w = identity();
  for (int s : word) w = w * generator(s);
  return w;
}

int CoxeterGroup::model_length(const std::vector<Seg>& v) const {
  int len = 0;
  for (const auto& b : blocks_) {
    const Seg* seg = v.data() + b.offset;
    switch (b.kind) {
      case Block::Kind::TypeA:
        len += a_length(seg, b.npoints);
        break;
      case Block::Kind::TypeB:
        len += b_length(seg, b.npoints);
        break;
      case Block::Kind::Dihedral:
        len += d_length(seg, b.npoints);
        break;
    }
  }
  return len;
}

void CoxeterGroup::model_multiply(const std::vector<Seg>& a,
                                  const std::vector<Seg>& b,
                                  std::vector<Seg>& out) const {
  out.resize(value_width_);
  for (const auto& blk : blocks_) {
    const Seg* pa = a.data() + blk.offset;
    const Seg* pb = b.data() + blk.offset;
    Seg* po = out.data() + blk.offset;
    switch (blk.kind) {
      case Block::Kind::TypeA:
        a_compose(pa, pb, po, blk.npoints);
        break;
      case Block::Kind::TypeB:
        b_compose(pa, pb, po, blk.npoints);
        break;
      case Block::Kind::Dihedral:
        d_compose(pa, pb, po, blk.npoints);
        break;
    }
  }
}

std::vector<Seg> CoxeterGroup::model_inverse(const std::vector<Seg>& v) const {
  std::vector<Seg> out(value_width_);
  for (const auto& b : blocks_) {
    const Seg* pv = v.data() + b.offset;
    Seg* po = out.data() + b.offset;
    switch (b.kind) {
      case Block::Kind::TypeA:
        a_inverse(pv, po, b.npoints);
        break;
      case Block::Kind::TypeB:
        b_inverse(pv, po, b.npoints);
        break;
      case Block::Kind::Dihedral:
        d_inverse(pv, po, b.npoints);
        break;
    }
  }
  return out;
}

bool CoxeterGroup::model_right_descent(const std::vector<Seg>& v, int s) const {
  auto [bi, local] = gen_site_[s];
  const Block& b = blocks_[bi];
  const Seg* seg = v.data() + b.offset;
  switch (b.kind) {
    case Block::Kind::TypeA:
      return seg[local] > seg[local + 1];
    case Block::Kind::TypeB:
      if (local == 0) return seg[0] < 0;
      return seg[local - 1] > seg[local];
    case Block::Kind::Dihedral: {
      Seg prod[2];
      std::vector<Seg> gen = generator_value(s);
      d_compose(seg, gen.data() + b.offset, prod, b.npoints);
      return d_length(prod, b.npoints) < d_length(seg, b.npoints);
    }
  }
  return false;
}

const std::vector<CoxeterElement>& CoxeterGroup::elements() const {
  if (elements_) return *elements_;
  std::set<std::vector<Seg>> seen;
  std::deque<std::vector<Seg>> queue;
  queue.push_back(identity_value());
  seen.insert(queue.front());
  std::vector<Seg> prod;
  while (!queue.empty()) {
    std::vector<Seg> v = std::move(queue.front());
    queue.pop_front();
    for (int s = 0; s < rank(); ++s) {
      model_multiply(v, generator_value(s), prod);
      if (seen.insert(prod).second) {
        if (seen.size() > budget_)
          throw BudgetExceeded("group enumeration exceeds element budget");
        queue.push_back(prod);
      }
    }
  }
  std::vector<CoxeterElement> out;
  out.reserve(seen.size());
  for (const auto& v : seen) out.push_back(CoxeterElement(this, v));
  std::sort(out.begin(), out.end(),
            [](const CoxeterElement& a, const CoxeterElement& b) {
              int la = a.length(), lb = b.length();
              if (la != lb) return la < lb;
              return a.word() < b.word();
            });
  elements_ = std::move(out);
  return *elements_;
}

CoxeterElement CoxeterGroup::longest_element() const {
  if (!longest_) longest_ = longest_in_parabolic(GenSet::all(rank()));
  return *longest_;
}

CoxeterElement CoxeterGroup::longest_in_parabolic(GenSet I) const {
  // Greedy ascent: keep multiplying by a non-descent from I.
  CoxeterElement w = identity();
  bool moved = true;
  std::size_t steps = 0;
  while (moved) {
    moved = false;
    for (int s : I)
      if (!w.has_right_descent(s)) {
        w = w * generator(s);
        moved = true;
        break;
      }
    if (++steps > budget_)
      throw BudgetExceeded("longest element search exceeds element budget");
  }
  return w;
}

const std::vector<CoxeterElement>& CoxeterGroup::parabolic_elements(
    GenSet I) const {
  auto it = parabolic_.find(I.bits());
  if (it != parabolic_.end()) return it->second;
  std::set<std::vector<Seg>> seen;
  std::deque<std::vector<Seg>> queue;
  queue.push_back(identity_value());
  seen.insert(queue.front());
  std::vector<Seg> prod;
  while (!queue.empty()) {
    std::vector<Seg> v = std::move(queue.front());
    queue.pop_front();
    for (int s : I) {
      model_multiply(v, generator_value(s), prod);
      if (seen.insert(prod).second) {
        if (seen.size() > budget_)
          throw BudgetExceeded("parabolic enumeration exceeds element budget");
        queue.push_back(prod);
      }
    }
  }
  std::vector<CoxeterElement> out;
  out.reserve(seen.size());
  for (const auto& v : seen) out.push_back(CoxeterElement(this, v));
  std::sort(out.begin(), out.end(),
            [](const CoxeterElement& a, const CoxeterElement& b) {
              int la = a.length(), lb = b.length();
              if (la != lb) return la < lb;
              return a.word() < b.word();
            });
  return parabolic_.emplace(I.bits(), std::move(out)).first->second;
}

int CoxeterGroup::conjugate_generator_by_longest(int s) const {
  if (!w0_conj_) {
    CoxeterElement w0 = longest_element();
    std::vector<int> conj(rank(), -1);
    for (int i = 0; i < rank(); ++i) {
      CoxeterElement c = w0 * generator(i) * w0;
      for (int j = 0; j < rank(); ++j)
        if (c == generator(j)) conj[i] = j;
      if (conj[i] < 0) throw std::logic_error("w0 s w0 is not a generator");
    }
    w0_conj_ = std::move(conj);
  }
  return (*w0_conj_)[s];
}

GenSet CoxeterGroup::conjugate_genset_by_longest(GenSet I) const {
  GenSet out;
  for (int s : I) out = out.with(conjugate_generator_by_longest(s));
  return out;
}

bool CoxeterGroup::is_one_line_model(int n) const {
  if (n == 1) return blocks_.empty() || (blocks_.size() == 1 && value_width_ == 1);
  return blocks_.size() == 1 && blocks_[0].kind == Block::Kind::TypeA &&
         blocks_[0].npoints == n &&
         std::is_sorted(blocks_[0].gens.begin(), blocks_[0].gens.end()) &&
         blocks_[0].gens.front() == 0;
}

std::vector<int> CoxeterGroup::one_line(const CoxeterElement& w) const {
  std::vector<int> out(w.value().begin(), w.value().end());
  if (out.empty()) out.push_back(1);
  return out;
}

CoxeterElement CoxeterGroup::from_one_line(const std::vector<int>& v) const {
  std::vector<Seg> val(v.begin(), v.end());
  if (value_width_ == 0) val.clear();
  if (static_cast<int>(val.size()) != value_width_)
    throw std::invalid_argument("one-line length does not match the group");
  CoxeterElement w(this, std::move(val));
  // Validate: must be a permutation of 1..n.
  std::vector<bool> hit(v.size(), false);
  for (int x : v) {
    if (x < 1 || x > static_cast<int>(v.size()) || hit[x - 1])
      throw std::invalid_argument("not a permutation in one-line form");
    hit[x - 1] = true;
  }
  return w;
}

// --------------------------------------------------------- CoxeterElement

bool CoxeterElement::is_identity() const { return length() == 0; }

int CoxeterElement::length() const { return group_->model_length(value_); }

CoxeterElement CoxeterElement::operator*(const CoxeterElement& o) const {
  if (group_ != o.group_)
    throw std::invalid_argument("elements belong to different groups");
  CoxeterElement out(group_, {});
  group_->model_multiply(value_, o.value_, out.value_);
  return out;
}

CoxeterElement CoxeterElement::inverse() const {
  return CoxeterElement(group_, group_->model_inverse(value_));
}

bool CoxeterElement::has_right_descent(int s) const {
  return group_->model_right_descent(value_, s);
}

bool CoxeterElement::has_left_descent(int s) const {
  return group_->model_right_descent(group_->model_inverse(value_), s);
}

GenSet CoxeterElement::left_descents() const {
  GenSet out;
  std::vector<std::int16_t> inv = group_->model_inverse(value_);
  for (int s = 0; s < group_->rank(); ++s)
    if (group_->model_right_descent(inv, s)) out = out.with(s);
  return out;
}

GenSet CoxeterElement::right_descents() const {
  GenSet out;
  for (int s = 0; s < group_->rank(); ++s)
    if (group_->model_right_descent(value_, s)) out = out.with(s);
  return out;
}

std::vector<int> CoxeterElement::word() const {
  std::vector<int> out;
  CoxeterElement w = *this;
  while (!w.is_identity()) {
    GenSet d = w.left_descents();
    int s = *d.begin();
    out.push_back(s);
    w = group_->generator(s) * w;
  }
  return out;
}

std::size_t CoxeterElement::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (std::int16_t x : value_) {
    h ^= static_cast<std::size_t>(static_cast<std::uint16_t>(x));
    h *= 1099511628211ull;
  }
  return h;
}

// ------------------------------------------------------------ free queries

CoxeterElement multiply(const CoxeterElement& u, const CoxeterElement& v) {
  return u * v;
}

int length(const CoxeterElement& w) { return w.length(); }

std::vector<int> reduced_word(const CoxeterElement& w) { return w.word(); }

GenSet left_descents(const CoxeterElement& w) { return w.left_descents(); }

GenSet right_descents(const CoxeterElement& w) { return w.right_descents(); }

bool bruhat_leq(const CoxeterElement& u, const CoxeterElement& v) {
  if (&u.group() != &v.group())
    throw std::invalid_argument("elements belong to different groups");
  CoxeterElement a = u, b = v;
  while (true) {
    if (a == b) return true;
    int la = a.length(), lb = b.length();
    if (la >= lb) return false;
    if (la == 0) return true;
    int s = *b.left_descents().begin();
    CoxeterElement g = a.group().generator(s);
    if (a.has_left_descent(s)) a = g * a;
    b = g * b;
  }
}

bool weak_leq_right(const CoxeterElement& u, const CoxeterElement& v) {
  if (&u.group() != &v.group())
    throw std::invalid_argument("elements belong to different groups");
  return v.length() == u.length() + (u.inverse() * v).length();
}

bool weak_leq_left(const CoxeterElement& u, const CoxeterElement& v) {
  if (&u.group() != &v.group())
    throw std::invalid_argument("elements belong to different groups");
  return v.length() == u.length() + (v * u.inverse()).length();
}

std::string word_to_string(const std::vector<int>& word) {
  std::string out;
  for (int s : word) {
    if (!out.empty()) out += ' ';
    out += std::to_string(s + 1);
  }
  return out;
}

std::vector<int> parse_word(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (ss >> tok) {
    std::size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size() || v < 1)
      throw std::invalid_argument("bad word token '" + tok + "'");
    out.push_back(v - 1);
  }
  return out;
}

CoxeterMatrix parse_coxeter_matrix(std::istream& in) {
  std::optional<CoxeterMatrix> matrix;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::stringstream ss(line);
    std::string head;
    if (!(ss >> head) || head[0] == '#') continue;
    auto fail = [&](const std::string& why) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": " + why);
    };
    if (head == "rank") {
      if (matrix) fail("duplicate rank line");
      int r;
      if (!(ss >> r) || r < 1) fail("bad rank");
      matrix.emplace(r);
    } else {
      if (!matrix) fail("entry before the rank line");
      int i = 0, j, m;
      try {
        std::size_t pos = 0;
        i = std::stoi(head, &pos);
        if (pos != head.size()) fail("bad generator index '" + head + "'");
      } catch (const std::exception&) {
        fail("bad generator index '" + head + "'");
      }
      if (!(ss >> j >> m)) fail("matrix line needs 'i j m'");
      if (i < 1 || j < 1 || i > matrix->rank() || j > matrix->rank())
        fail("generator index out of range");
      if (i == j || m < 3) fail("bond orders must be >= 3 between distinct generators");
      matrix->set_entry(i - 1, j - 1, m);
    }
  }
  if (!matrix) throw std::invalid_argument("matrix file lacks a 'rank' line");
  return *matrix;
}

}  // namespace rencox
