#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "chev/bigint.hpp"
#include "chev/classcount.hpp"
#include "chev/field.hpp"

namespace chev {

inline constexpr int kMaxDim = 6;

/// Square matrix of dimension <= kMaxDim, row-major field-element indices.
/// Entries outside the active dimension stay zero, so equality and hashing
/// work on the whole array.
struct Mat {
  std::array<std::uint8_t, kMaxDim * kMaxDim> a{};

  std::uint8_t& at(int i, int j) { return a[i * kMaxDim + j]; }
  std::uint8_t at(int i, int j) const { return a[i * kMaxDim + j]; }
  friend bool operator==(const Mat&, const Mat&) = default;
};

struct MatHash {
  std::size_t operator()(const Mat& m) const noexcept;
};

/// Matrix arithmetic over one field in one dimension.
class MatrixSpace {
 public:
  using Elem = FqField::Elem;

  MatrixSpace(const FqField& field, int dim);

  const FqField& field() const { return *f_; }
  int dim() const { return n_; }

  Mat identity() const;
  Mat scalar(Elem c) const;
  Mat from_rows(const std::vector<std::vector<int>>& rows) const;
  Mat mul(const Mat& x, const Mat& y) const;
  Mat add(const Mat& x, const Mat& y) const;
  Mat sub(const Mat& x, const Mat& y) const;
  Mat transpose(const Mat& x) const;
  /// Entrywise x -> x^(p^e).
  Mat frobenius(const Mat& x, unsigned e) const;
  Mat pow(const Mat& x, unsigned long e) const;
  Elem det(const Mat& x) const;
  int rank(const Mat& x) const;
  /// Throws ArithmeticError when singular.
  Mat inv(const Mat& x) const;
  bool is_identity(const Mat& x) const { return x == identity(); }
  /// Multiplicative order; throws for singular input.
  unsigned long order(const Mat& x) const;
  std::string to_string(const Mat& x) const;

 private:
  const FqField* f_;
  int n_;
};

/// An explicit finite matrix group.
class OracleGroup {
 public:
  OracleGroup(MatrixSpace space, std::vector<Mat> elements, std::vector<Mat> generators,
              std::string tag);

  const MatrixSpace& space() const { return space_; }
  const FqField& field() const { return space_.field(); }
  int dim() const { return space_.dim(); }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Mat>& elements() const { return elements_; }
  const std::vector<Mat>& generators() const { return generators_; }
  const std::string& tag() const { return tag_; }

  std::optional<std::uint32_t> index_of(const Mat& m) const;
  bool contains(const Mat& m) const { return index_.count(m) > 0; }

 private:
  MatrixSpace space_;
  std::vector<Mat> elements_;
  std::vector<Mat> generators_;
  std::unordered_map<Mat, std::uint32_t, MatHash> index_;
  std::string tag_;
};

/// Incremental breadth-first closure: adding a generator multiplies every
/// known element by it and continues the search.
class GroupBuilder {
 public:
  GroupBuilder(MatrixSpace space, std::size_t cap);

  /// Adds g as a generator. Returns false (and changes nothing) if g is
  /// already in the group. Throws CapExceeded past the element cap.
  bool add_generator(const Mat& g);
  bool contains(const Mat& m) const { return index_.count(m) > 0; }
  std::size_t size() const { return elements_.size(); }

  OracleGroup build(std::string tag) &&;

 private:
  void insert(const Mat& m);
  void drain();

  MatrixSpace space_;
  std::size_t cap_;
  std::vector<Mat> elements_;
  std::vector<Mat> gens_;
  std::unordered_map<Mat, std::uint32_t, MatHash> index_;
  std::size_t frontier_ = 0;
};

/// The group generated by gens (all invertible, same dimension).
OracleGroup close_group(const MatrixSpace& space, const std::vector<Mat>& gens,
                        std::string tag = "generated", std::size_t cap = 0);

enum class FormKind { SymmetricBilinear, Alternating, Quadratic, Hermitian };
enum class FormType { None, Plus, Minus, Odd };

/// A nondegenerate form. For bilinear and hermitian kinds `gram` is the Gram
/// matrix; for quadratic forms `gram` holds the upper-triangular coefficient
/// matrix (Q(v) = sum_{i<=j} gram[i][j] v_i v_j). Hermitian forms live over
/// F_{q^2} with conjugation x -> x^q.
struct FormSpec {
  FormKind kind = FormKind::Alternating;
  FormType type = FormType::None;
  int dim = 0;
  unsigned q = 0;  // order of the field the matrices live over
  Mat gram;
};

/// The standard forms: alternating = hyperbolic pairs; odd-char symmetric
/// plus = hyperbolic sum, minus = hyperbolic + diag(1, -nu) with nu the least
/// non-square, odd = hyperbolic + (1); even-char quadratic plus = sum of
/// x_{2i-1} x_{2i}, minus = last pair replaced by x^2 + xy + delta y^2 with
/// delta of absolute trace 1; hermitian = identity Gram matrix over F_{q^2}
/// (q is the base field order here).
FormSpec standard_form(FormKind kind, FormType type, int dim, unsigned q);

/// Whether the form is nondegenerate (polar radical zero; for odd-dimensional
/// quadratic forms in characteristic 2 the polar radical is 1-dimensional
/// and Q is nonzero on it).
bool form_nondegenerate(const FormSpec& form);

/// All matrices preserving the form, by backtracking over images of the
/// basis vectors.
OracleGroup isometry_group(const FormSpec& form, std::size_t cap = 0);

/// The isometry group as the closure of symplectic transvections
/// (alternating) or reflections (symmetric bilinear, quadratic). Not
/// available for hermitian forms. For the quadratic O+(4,2) the reflections
/// generate only a subgroup of index 2.
OracleGroup isometry_group_generated(const FormSpec& form, std::size_t cap = 0);

/// Subgroup of elements satisfying pred, with a greedy generating set.
OracleGroup subgroup_where(const OracleGroup& g, const std::function<bool(const Mat&)>& pred,
                           std::string tag);
OracleGroup determinant_kernel(const OracleGroup& g);
/// Elements with rank(g - 1) even.
OracleGroup dickson_kernel(const OracleGroup& g);
/// Normal closure of the commutators of generators.
OracleGroup derived_subgroup(const OracleGroup& g);

/// Permutation matrices of Sym(m) (or Alt(m)) over F_3, m <= kMaxDim.
OracleGroup permutation_group(int m, bool alternating);

/// The groups the oracle knows how to realize, by family: GL, SL, GU, SU, Sp,
/// O+/O-, SO+/SO-, O/SO/Omega in odd dimension, Omega+/-, Sym, Alt.
OracleGroup realize_group(Family f, int dim, unsigned q);

struct ClassInfo {
  std::uint32_t rep = 0;
  std::uint64_t size = 0;
  std::uint64_t centralizer = 0;
  unsigned long element_order = 0;
  /// Order prime to the characteristic.
  bool semisimple = false;
  /// Order a power of the characteristic (the identity included).
  bool unipotent = false;
};

struct ConjugacyData {
  std::vector<ClassInfo> classes;
  std::vector<std::uint32_t> class_of;  // element index -> class index
};

ConjugacyData conjugacy_data(const OracleGroup& g);

/// (1/|G|) #{(x,y) : xy = yx}, counted directly. Throws CapExceeded above
/// caps().burnside_order.
std::uint64_t burnside_class_count(const OracleGroup& g);

/// k(G/Z) for a central subgroup Z given by its elements.
std::size_t central_quotient_class_count(const OracleGroup& g, const ConjugacyData& data,
                                         const std::vector<Mat>& central);

/// Scalar matrices of g.
std::vector<Mat> scalar_elements(const OracleGroup& g);

/// Class number of a family member computed by enumeration; projective
/// families go through the central quotient.
std::size_t oracle_class_count(Family f, int dim, unsigned q);

/// Sizes of the Jordan blocks of x for eigenvalue lambda (in F_q),
/// decreasing.
std::vector<int> jordan_blocks(const MatrixSpace& s, const Mat& x, FqField::Elem lambda);

struct CosetDistribution {
  std::size_t index = 0;
  bool cyclic = false;
  /// G-invariant N-classes of pi-elements.
  std::size_t alpha = 0;
  /// Per coset (in order of first appearance): G-classes of pi-elements in
  /// the coset that are a single N-orbit.
  std::vector<std::size_t> single_orbit_classes;
  /// Per coset: all G-classes of pi-elements in the coset.
  std::vector<std::size_t> classes_in_coset;
  /// Per coset: whether it generates G/N.
  std::vector<bool> generating;
};

/// Throws InvalidArgument when N is not a normal subgroup of G.
CosetDistribution coset_class_distribution(const OracleGroup& g, const OracleGroup& n,
                                           const std::vector<std::uint64_t>& primes);

/// Proportion of elements of G fixing no coset of H.
Rational derangement_proportion(const OracleGroup& g, const OracleGroup& h);

}  // namespace chev
