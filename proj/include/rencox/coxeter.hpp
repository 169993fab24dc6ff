#ifndef RENCOX_COXETER_HPP_
#define RENCOX_COXETER_HPP_

#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rencox {

inline constexpr std::size_t kDefaultElementBudget = 1'000'000;

// Thrown when an enumeration would exceed the configured element budget.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A set of generator indices (0-based internally, 1-based in all I/O).
class GenSet {
 public:
  GenSet() = default;

  static GenSet all(int rank) {
    GenSet g;
    g.bits_ = rank == 0 ? 0u : (rank >= 32 ? ~0u : (1u << rank) - 1u);
    return g;
  }
  static GenSet single(int s) { return GenSet{}.with(s); }
  static GenSet of(std::initializer_list<int> gens) {
    GenSet g;
    for (int s : gens) g = g.with(s);
    return g;
  }

  bool contains(int s) const { return (bits_ >> s) & 1u; }
  GenSet with(int s) const {
    GenSet g = *this;
    g.bits_ |= 1u << s;
    return g;
  }
  GenSet without(int s) const {
    GenSet g = *this;
    g.bits_ &= ~(1u << s);
    return g;
  }

  GenSet operator|(GenSet o) const { return raw(bits_ | o.bits_); }
  GenSet operator&(GenSet o) const { return raw(bits_ & o.bits_); }
  GenSet operator-(GenSet o) const { return raw(bits_ & ~o.bits_); }

  bool empty() const { return bits_ == 0; }
  int count() const { return __builtin_popcount(bits_); }
  bool subset_of(GenSet o) const { return (bits_ & ~o.bits_) == 0; }
  bool disjoint(GenSet o) const { return (bits_ & o.bits_) == 0; }
  bool operator==(const GenSet&) const = default;

  std::uint32_t bits() const { return bits_; }
  static GenSet raw(std::uint32_t b) {
    GenSet g;
    g.bits_ = b;
    return g;
  }

  // Iterates the indices of set bits in increasing order.
  class iterator {
   public:
    explicit iterator(std::uint32_t b) : bits_(b) {}
    int operator*() const { return __builtin_ctz(bits_); }
    iterator& operator++() {
      bits_ &= bits_ - 1;
      return *this;
    }
    bool operator!=(const iterator& o) const { return bits_ != o.bits_; }

   private:
    std::uint32_t bits_;
  };
  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  // Comma-separated 1-based indices, e.g. "1,3"; "-" for the empty set.
  std::string to_string() const;
  static GenSet parse(const std::string& text);

 private:
  std::uint32_t bits_ = 0;
};

// Symmetric matrix of orders m(s,t) with m(s,s) = 1. Only finite entries are
// representable; infinite bonds are rejected at parse time.
class CoxeterMatrix {
 public:
  explicit CoxeterMatrix(int rank);

  int rank() const { return rank_; }
  int entry(int i, int j) const { return entries_[i * rank_ + j]; }
  void set_entry(int i, int j, int m);

  // Throws std::invalid_argument on a malformed matrix.
  void validate() const;

  static CoxeterMatrix type_a(int n_gens);   // symmetric group S_{n_gens+1}
  static CoxeterMatrix type_b(int n_gens);   // hyperoctahedral group B_n
  static CoxeterMatrix dihedral(int m);      // I2(m)

 private:
  int rank_;
  std::vector<int> entries_;
};

class CoxeterGroup;

// A group element held as its canonical value in the group's concrete model
// (one-line permutation per type-A block, signed one-line per type-B block,
// (rotation, flip) per dihedral block). Equal values mean equal elements.
class CoxeterElement {
 public:
  CoxeterElement() : group_(nullptr) {}

  const CoxeterGroup& group() const { return *group_; }
  bool is_identity() const;
  int length() const;

  CoxeterElement operator*(const CoxeterElement& o) const;
  CoxeterElement inverse() const;

  bool operator==(const CoxeterElement& o) const {
    return group_ == o.group_ && value_ == o.value_;
  }
  bool operator!=(const CoxeterElement& o) const { return !(*this == o); }
  bool operator<(const CoxeterElement& o) const { return value_ < o.value_; }

  // Deterministic reduced word (lowest-index left descent stripped first),
  // 0-based generator indices.
  std::vector<int> word() const;

  bool has_left_descent(int s) const;
  bool has_right_descent(int s) const;
  GenSet left_descents() const;
  GenSet right_descents() const;

  const std::vector<std::int16_t>& value() const { return value_; }
  std::size_t hash() const;

 private:
  friend class CoxeterGroup;
  CoxeterElement(const CoxeterGroup* g, std::vector<std::int16_t> v)
      : group_(g), value_(std::move(v)) {}

  const CoxeterGroup* group_;
  std::vector<std::int16_t> value_;
};

struct CoxeterElementHash {
  std::size_t operator()(const CoxeterElement& w) const { return w.hash(); }
};

namespace detail {

struct Block {
  enum class Kind { TypeA, TypeB, Dihedral };
  Kind kind;
  int npoints;            // A: points permuted; B: signed points; I2: m
  int offset;             // first value slot
  int width;              // value slots used
  std::vector<int> gens;  // global generator indices in diagram order
};

}  // namespace detail

// A finite Coxeter group over a recognized matrix: direct products of type A
// chains, type B chains and dihedral components. Construction verifies the
// defining relations (st)^{m(s,t)} = 1 in the model. Immutable once built;
// the lazily built caches (enumeration, parabolic tables) are not guarded,
// so populate them before sharing a group across threads.
class CoxeterGroup {
 public:
  explicit CoxeterGroup(CoxeterMatrix matrix,
                        std::size_t element_budget = kDefaultElementBudget);

  int rank() const { return matrix_.rank(); }
  const CoxeterMatrix& matrix() const { return matrix_; }
  std::size_t element_budget() const { return budget_; }

  CoxeterElement identity() const;
  CoxeterElement generator(int s) const;
  CoxeterElement from_word(const std::vector<int>& word) const;

  // All elements, sorted by (length, reduced word lex). Built on first use.
  const std::vector<CoxeterElement>& elements() const;
  std::size_t order() const { return elements().size(); }

  CoxeterElement longest_element() const;
  CoxeterElement longest_in_parabolic(GenSet I) const;
  const std::vector<CoxeterElement>& parabolic_elements(GenSet I) const;

  // w0 * s * w0 is again a generator; returns its index.
  int conjugate_generator_by_longest(int s) const;
  GenSet conjugate_genset_by_longest(GenSet I) const;

  // True when the whole group is a single type-A block on n points
  // (the model used by the rook monoid).
  bool is_one_line_model(int n) const;
  std::vector<int> one_line(const CoxeterElement& w) const;
  CoxeterElement from_one_line(const std::vector<int>& v) const;

  // Internal model hooks, used by CoxeterElement.
  int model_length(const std::vector<std::int16_t>& v) const;
  void model_multiply(const std::vector<std::int16_t>& a,
                      const std::vector<std::int16_t>& b,
                      std::vector<std::int16_t>& out) const;
  std::vector<std::int16_t> model_inverse(
      const std::vector<std::int16_t>& v) const;
  bool model_right_descent(const std::vector<std::int16_t>& v, int s) const;

 private:
  void recognize_blocks();
  void verify_relations() const;
  std::vector<std::int16_t> identity_value() const;
  std::vector<std::int16_t> generator_value(int s) const;

  CoxeterMatrix matrix_;
  std::size_t budget_;
  std::vector<detail::Block> blocks_;
  std::vector<std::pair<int, int>> gen_site_;  // generator -> (block, local)
  int value_width_ = 0;

  mutable std::optional<std::vector<CoxeterElement>> elements_;
  mutable std::optional<CoxeterElement> longest_;
  mutable std::optional<std::vector<int>> w0_conj_;
  mutable std::map<std::uint32_t, std::vector<CoxeterElement>> parabolic_;
};

CoxeterElement multiply(const CoxeterElement& u, const CoxeterElement& v);
int length(const CoxeterElement& w);
std::vector<int> reduced_word(const CoxeterElement& w);
GenSet left_descents(const CoxeterElement& w);
GenSet right_descents(const CoxeterElement& w);

// Bruhat order, by the left-descent recursion from the lifting property.
bool bruhat_leq(const CoxeterElement& u, const CoxeterElement& v);

// Weak orders, by the length-additivity criterion.
bool weak_leq_left(const CoxeterElement& u, const CoxeterElement& v);
bool weak_leq_right(const CoxeterElement& u, const CoxeterElement& v);

// Space-separated 1-based generator indices; "" for the identity.
std::string word_to_string(const std::vector<int>& word);
std::vector<int> parse_word(const std::string& text);

// Text format: a "rank n" line, then "i j m" lines (1-based) for each bond
// with m != 2; omitted pairs default to 2. '#' starts a comment.
CoxeterMatrix parse_coxeter_matrix(std::istream& in);

}  // namespace rencox

#endif  // RENCOX_COXETER_HPP_
