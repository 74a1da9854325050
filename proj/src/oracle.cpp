#include "chev/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <string_view>

#include "chev/config.hpp"
#include "chev/error.hpp"
#include "chev/numth.hpp"

namespace chev {
namespace {

using Elem = FqField::Elem;
using Vec = std::array<Elem, kMaxDim>;

std::size_t resolve_cap(std::size_t cap) { return cap ? cap : caps().group_elements; }

std::string group_tag(std::string_view name, int dim, unsigned q) {
  return std::string(name) + "(" + std::to_string(dim) + "," + std::to_string(q) + ")";
}

// All vectors of F^n in index order (coordinate 0 least significant).
std::vector<Vec> all_vectors(const FqField& f, int n) {
  std::size_t count = 1;
  for (int i = 0; i < n; ++i) {
    count *= f.q();
    if (count > (1u << 20)) throw CapExceeded("vector space too large to enumerate");
  }
  std::vector<Vec> out(count);
  for (std::size_t idx = 0; idx < count; ++idx) {
    std::size_t r = idx;
    for (int i = 0; i < n; ++i) {
      out[idx][i] = static_cast<Elem>(r % f.q());
      r /= f.q();
    }
  }
  return out;
}

bool is_zero(const Vec& v, int n) {
  for (int i = 0; i < n; ++i) {
    if (v[i]) return false;
  }
  return true;
}

// u^T M v
Elem bilinear(const FqField& f, int n, const Mat& m, const Vec& u, const Vec& v) {
  Elem s = 0;
  for (int i = 0; i < n; ++i) {
    if (!u[i]) continue;
    Elem row = 0;
    for (int j = 0; j < n; ++j) row = f.add(row, f.mul(m.at(i, j), v[j]));
    s = f.add(s, f.mul(u[i], row));
  }
  return s;
}

Vec conj(const FqField& f, int n, const Vec& v, unsigned e) {
  Vec out{};
  for (int i = 0; i < n; ++i) out[i] = f.frobenius(v[i], e);
  return out;
}

// Q(v) = sum_{i<=j} g_ij v_i v_j
Elem quadratic_value(const FqField& f, int n, const Mat& g, const Vec& v) {
  Elem s = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) s = f.add(s, f.mul(g.at(i, j), f.mul(v[i], v[j])));
  }
  return s;
}

// Gram matrix of the polar form of a quadratic form.
Mat polar_gram(const FqField& f, int n, const Mat& g) {
  Mat p;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      p.at(i, j) = i == j ? f.add(g.at(i, i), g.at(i, i)) : (i < j ? g.at(i, j) : g.at(j, i));
    }
  }
  return p;
}

// The Gram matrix every column pair must reproduce, and the form used to
// evaluate it (u, v) -> u^T G v, possibly with u conjugated.
struct FormEval {
  const FqField* f;
  int n;
  Mat pair_gram;        // target values for pairs of columns
  unsigned conj_e = 0;  // Frobenius exponent applied to the left vector
  FormKind kind;
  Mat gram;

  Elem pair(const Vec& u, const Vec& v) const {
    return bilinear(*f, n, pair_gram, conj_e ? conj(*f, n, u, conj_e) : u, v);
  }
  Elem self(const Vec& v) const {
    return kind == FormKind::Quadratic ? quadratic_value(*f, n, gram, v) : pair(v, v);
  }
  Elem self_target(int j) const {
    return kind == FormKind::Quadratic ? gram.at(j, j) : pair_gram.at(j, j);
  }
};

FormEval form_eval(const FormSpec& form) {
  const FqField& f = FqField::get(form.q);
  FormEval e{&f, form.dim, form.gram, 0, form.kind, form.gram};
  if (form.kind == FormKind::Quadratic) e.pair_gram = polar_gram(f, form.dim, form.gram);
  if (form.kind == FormKind::Hermitian) e.conj_e = f.k() / 2;
  return e;
}

// I + c * u w^T
Mat rank_one_update(const MatrixSpace& s, const Vec& u, const Vec& w, Elem c) {
  const FqField& f = s.field();
  Mat m = s.identity();
  for (int i = 0; i < s.dim(); ++i) {
    for (int j = 0; j < s.dim(); ++j) {
      m.at(i, j) = f.add(m.at(i, j), f.mul(c, f.mul(u[i], w[j])));
    }
  }
  return m;
}

// G v
Vec apply(const FqField& f, int n, const Mat& g, const Vec& v) {
  Vec out{};
  for (int i = 0; i < n; ++i) {
    Elem s = 0;
    for (int j = 0; j < n; ++j) s = f.add(s, f.mul(g.at(i, j), v[j]));
    out[i] = s;
  }
  return out;
}

// Greedy generating set for a known finite set of group elements.
std::vector<Mat> greedy_generators(const MatrixSpace& space, const std::vector<Mat>& elements) {
  std::vector<std::size_t> order(elements.size());
  std::iota(order.begin(), order.end(), 0);
  std::mt19937 rng(20240611u);
  std::shuffle(order.begin(), order.end(), rng);
  GroupBuilder b(space, elements.size());
  std::vector<Mat> gens;
  for (auto i : order) {
    if (b.size() == elements.size()) break;
    if (b.add_generator(elements[i])) gens.push_back(elements[i]);
  }
  if (b.size() != elements.size()) throw InvalidArgument("element set is not a group");
  return gens;
}

bool is_pi_number(unsigned long n, const std::vector<std::uint64_t>& primes) {
  for (auto p : prime_factors(n)) {
    if (std::find(primes.begin(), primes.end(), p) == primes.end()) return false;
  }
  return true;
}

}  // namespace

std::size_t MatHash::operator()(const Mat& m) const noexcept {
  return std::hash<std::string_view>{}(
      std::string_view(reinterpret_cast<const char*>(m.a.data()), m.a.size()));
}

// ---------------------------------------------------------------------------

MatrixSpace::MatrixSpace(const FqField& field, int dim) : f_(&field), n_(dim) {
  if (dim < 1 || dim > kMaxDim) {
    throw InvalidArgument("matrix dimension must be in 1.." + std::to_string(kMaxDim));
  }
}

Mat MatrixSpace::identity() const { return scalar(1); }

Mat MatrixSpace::scalar(Elem c) const {
  Mat m;
  for (int i = 0; i < n_; ++i) m.at(i, i) = c;
  return m;
}

Mat MatrixSpace::from_rows(const std::vector<std::vector<int>>& rows) const {
  if (static_cast<int>(rows.size()) != n_) throw InvalidArgument("wrong number of rows");
  Mat m;
  for (int i = 0; i < n_; ++i) {
    if (static_cast<int>(rows[i].size()) != n_) throw InvalidArgument("wrong row length");
    for (int j = 0; j < n_; ++j) {
      if (rows[i][j] < 0 || rows[i][j] >= static_cast<int>(f_->q())) {
        throw InvalidArgument("matrix entry is not a field element index");
      }
      m.at(i, j) = static_cast<Elem>(rows[i][j]);
    }
  }
  return m;
}

Mat MatrixSpace::mul(const Mat& x, const Mat& y) const {
  Mat r;
  for (int i = 0; i < n_; ++i) {
    for (int k = 0; k < n_; ++k) {
      const Elem a = x.at(i, k);
      if (!a) continue;
      for (int j = 0; j < n_; ++j) r.at(i, j) = f_->add(r.at(i, j), f_->mul(a, y.at(k, j)));
    }
  }
  return r;
}

Mat MatrixSpace::add(const Mat& x, const Mat& y) const {
  Mat r;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) r.at(i, j) = f_->add(x.at(i, j), y.at(i, j));
  }
  return r;
}

Mat MatrixSpace::sub(const Mat& x, const Mat& y) const {
  Mat r;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) r.at(i, j) = f_->sub(x.at(i, j), y.at(i, j));
  }
  return r;
}

Mat MatrixSpace::transpose(const Mat& x) const {
  Mat r;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) r.at(i, j) = x.at(j, i);
  }
  return r;
}

Mat MatrixSpace::frobenius(const Mat& x, unsigned e) const {
  Mat r;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) r.at(i, j) = f_->frobenius(x.at(i, j), e);
  }
  return r;
}

Mat MatrixSpace::pow(const Mat& x, unsigned long e) const {
  Mat r = identity(), b = x;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

namespace {
// Row reduction in place; returns rank and the determinant of the leading
// square part (zero when rank < n).
std::pair<int, Elem> eliminate(const FqField& f, int n, Mat m, Mat* inverse) {
  Mat inv;
  for (int i = 0; i < n; ++i) inv.at(i, i) = 1;
  Elem det = 1;
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int piv = -1;
    for (int r = rank; r < n; ++r) {
      if (m.at(r, col)) {
        piv = r;
        break;
      }
    }
    if (piv < 0) {
      det = 0;
      continue;
    }
    if (piv != rank) {
      for (int j = 0; j < n; ++j) {
        std::swap(m.at(piv, j), m.at(rank, j));
        std::swap(inv.at(piv, j), inv.at(rank, j));
      }
      det = f.neg(det);
    }
    const Elem p = m.at(rank, col);
    det = f.mul(det, p);
    const Elem pinv = f.inv(p);
    for (int j = 0; j < n; ++j) {
      m.at(rank, j) = f.mul(m.at(rank, j), pinv);
      inv.at(rank, j) = f.mul(inv.at(rank, j), pinv);
    }
    for (int r = 0; r < n; ++r) {
      if (r == rank || !m.at(r, col)) continue;
      const Elem c = m.at(r, col);
      for (int j = 0; j < n; ++j) {
        m.at(r, j) = f.sub(m.at(r, j), f.mul(c, m.at(rank, j)));
        inv.at(r, j) = f.sub(inv.at(r, j), f.mul(c, inv.at(rank, j)));
      }
    }
    ++rank;
  }
  if (rank < n) det = 0;
  if (inverse) *inverse = inv;
  return {rank, det};
}
}  // namespace

FqField::Elem MatrixSpace::det(const Mat& x) const { return eliminate(*f_, n_, x, nullptr).second; }

int MatrixSpace::rank(const Mat& x) const { return eliminate(*f_, n_, x, nullptr).first; }

Mat MatrixSpace::inv(const Mat& x) const {
  Mat r;
  if (eliminate(*f_, n_, x, &r).first < n_) throw ArithmeticError("singular matrix");
  return r;
}

unsigned long MatrixSpace::order(const Mat& x) const {
  if (det(x) == 0) throw ArithmeticError("order of a singular matrix");
  const Mat id = identity();
  Mat y = x;
  for (unsigned long k = 1; k <= 100'000'000UL; ++k) {
    if (y == id) return k;
    y = mul(y, x);
  }
  throw CapExceeded("element order search exceeded its limit");
}

std::string MatrixSpace::to_string(const Mat& x) const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < n_; ++i) {
    os << (i ? ";" : "");
    for (int j = 0; j < n_; ++j) os << (j ? "," : "") << int(x.at(i, j));
  }
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------------------

OracleGroup::OracleGroup(MatrixSpace space, std::vector<Mat> elements, std::vector<Mat> generators,
                         std::string tag)
    : space_(space),
      elements_(std::move(elements)),
      generators_(std::move(generators)),
      tag_(std::move(tag)) {
  index_.reserve(elements_.size());
  for (std::uint32_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
}

std::optional<std::uint32_t> OracleGroup::index_of(const Mat& m) const {
  const auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

GroupBuilder::GroupBuilder(MatrixSpace space, std::size_t cap)
    : space_(space), cap_(resolve_cap(cap)) {
  insert(space_.identity());
}

void GroupBuilder::insert(const Mat& m) {
  if (index_.count(m)) return;
  if (elements_.size() >= cap_) {
    throw CapExceeded("group closure exceeds the element cap of " + std::to_string(cap_));
  }
  index_.emplace(m, static_cast<std::uint32_t>(elements_.size()));
  elements_.push_back(m);
}

void GroupBuilder::drain() {
  while (frontier_ < elements_.size()) {
    const Mat x = elements_[frontier_++];
    for (const auto& g : gens_) insert(space_.mul(x, g));
  }
}

bool GroupBuilder::add_generator(const Mat& g) {
  if (contains(g)) return false;
  if (space_.det(g) == 0) throw InvalidArgument("singular generator");
  gens_.push_back(g);
  const std::size_t done = frontier_;
  for (std::size_t i = 0; i < done; ++i) insert(space_.mul(elements_[i], g));
  drain();
  return true;
}

OracleGroup GroupBuilder::build(std::string tag) && {
  return OracleGroup(space_, std::move(elements_), std::move(gens_), std::move(tag));
}

OracleGroup close_group(const MatrixSpace& space, const std::vector<Mat>& gens, std::string tag,
                        std::size_t cap) {
  GroupBuilder b(space, cap);
  for (const auto& g : gens) b.add_generator(g);
  return std::move(b).build(std::move(tag));
}

// ---------------------------------------------------------------------------

FormSpec standard_form(FormKind kind, FormType type, int dim, unsigned q) {
  if (!prime_power(q)) throw InvalidArgument("q must be a prime power");
  if (dim < 1 || dim > kMaxDim) throw InvalidArgument("form dimension out of range");
  FormSpec s;
  s.kind = kind;
  s.type = type;
  s.dim = dim;
  s.q = kind == FormKind::Hermitian ? q * q : q;
  const FqField& f = FqField::get(s.q);
  const Elem minus_one = f.neg(1);
  auto need = [&](bool ok, const char* what) {
    if (!ok) throw InvalidArgument(std::string("standard form: ") + what);
  };
  switch (kind) {
    case FormKind::Alternating:
      need(dim % 2 == 0, "alternating forms need even dimension");
      for (int i = 0; i + 1 < dim; i += 2) {
        s.gram.at(i, i + 1) = 1;
        s.gram.at(i + 1, i) = minus_one;
      }
      break;
    case FormKind::SymmetricBilinear: {
      need(q % 2 == 1, "symmetric bilinear forms are used in odd characteristic");
      const int pairs = type == FormType::Odd ? (dim - 1) / 2 : dim / 2 - (type == FormType::Minus);
      need(type == FormType::Odd ? dim % 2 == 1 : (dim % 2 == 0 && type != FormType::None),
           "type does not match dimension parity");
      for (int i = 0; i < pairs; ++i) {
        s.gram.at(2 * i, 2 * i + 1) = 1;
        s.gram.at(2 * i + 1, 2 * i) = 1;
      }
      if (type == FormType::Odd) {
        s.gram.at(dim - 1, dim - 1) = 1;
      } else if (type == FormType::Minus) {
        s.gram.at(dim - 2, dim - 2) = 1;
        s.gram.at(dim - 1, dim - 1) = f.neg(f.least_nonsquare());
      }
      break;
    }
    case FormKind::Quadratic: {
      need(dim % 2 == 0 && (type == FormType::Plus || type == FormType::Minus),
           "quadratic forms are built in even dimension with type plus or minus");
      for (int i = 0; i + 1 < dim; i += 2) s.gram.at(i, i + 1) = 1;
      if (type == FormType::Minus) {
        Elem delta = 0;
        for (unsigned a = 1; a < f.q(); ++a) {
          if (f.absolute_trace(static_cast<Elem>(a)) == 1) {
            delta = static_cast<Elem>(a);
            break;
          }
        }
        need(delta != 0 && f.p() == 2, "minus-type quadratic standard form is for even q");
        s.gram.at(dim - 2, dim - 2) = 1;
        s.gram.at(dim - 1, dim - 1) = delta;
      }
      break;
    }
    case FormKind::Hermitian:
      for (int i = 0; i < dim; ++i) s.gram.at(i, i) = 1;
      break;
  }
  return s;
}

bool form_nondegenerate(const FormSpec& form) {
  const FqField& f = FqField::get(form.q);
  MatrixSpace sp(f, form.dim);
  if (form.kind == FormKind::Quadratic) {
    const Mat p = polar_gram(f, form.dim, form.gram);
    const int r = sp.rank(p);
    if (f.p() != 2 || form.dim % 2 == 0) return r == form.dim;
    if (r != form.dim - 1) return false;
    for (const auto& v : all_vectors(f, form.dim)) {
      if (is_zero(v, form.dim)) continue;
      bool radical = true;
      for (int j = 0; j < form.dim && radical; ++j) {
        Vec e{};
        e[j] = 1;
        radical = bilinear(f, form.dim, p, v, e) == 0;
      }
      if (radical) return quadratic_value(f, form.dim, form.gram, v) != 0;
    }
    return false;
  }
  return sp.det(form.gram) != 0;
}

OracleGroup isometry_group(const FormSpec& form, std::size_t cap) {
  if (!form_nondegenerate(form)) throw InvalidArgument("degenerate form");
  cap = resolve_cap(cap);
  const FormEval ev = form_eval(form);
  const FqField& f = *ev.f;
  const int n = form.dim;
  MatrixSpace space(f, n);
  const auto vecs = all_vectors(f, n);

  // Candidates per column: vectors with the right self-value.
  std::vector<std::vector<const Vec*>> cands(n);
  for (const auto& v : vecs) {
    if (is_zero(v, n)) continue;
    const Elem sv = ev.self(v);
    for (int j = 0; j < n; ++j) {
      if (sv == ev.self_target(j)) cands[j].push_back(&v);
    }
  }

  std::vector<Mat> found;
  std::vector<Vec> cols(n);
  // Row vectors conj(col_i)^T G, used to test pair values quickly.
  std::vector<Vec> rows(n);
  std::function<void(int)> search = [&](int j) {
    if (j == n) {
      if (found.size() >= cap) {
        throw CapExceeded("isometry group exceeds the element cap of " + std::to_string(cap));
      }
      Mat m;
      for (int c = 0; c < n; ++c) {
        for (int r = 0; r < n; ++r) m.at(r, c) = cols[c][r];
      }
      found.push_back(m);
      return;
    }
    for (const Vec* v : cands[j]) {
      // Pair values with earlier columns; the transposed pair follows from
      // the symmetry of the form and the diagonal from the self-value.
      bool ok = true;
      for (int i = 0; i < j && ok; ++i) {
        Elem s = 0;
        for (int k = 0; k < n; ++k) s = f.add(s, f.mul(rows[i][k], (*v)[k]));
        ok = s == ev.pair_gram.at(i, j);
      }
      if (!ok) continue;
      cols[j] = *v;
      const Vec left = ev.conj_e ? conj(f, n, *v, ev.conj_e) : *v;
      for (int k = 0; k < n; ++k) {
        Elem s = 0;
        for (int r = 0; r < n; ++r) s = f.add(s, f.mul(left[r], ev.pair_gram.at(r, k)));
        rows[j][k] = s;
      }
      search(j + 1);
    }
  };
  search(0);
  auto gens = greedy_generators(space, found);
  const char* name = form.kind == FormKind::Alternating ? "sp"
                     : form.kind == FormKind::Hermitian ? "gu"
                                                        : "o";
  unsigned base_q = form.q;
  if (form.kind == FormKind::Hermitian) {
    base_q = 1;
    for (unsigned i = 0; i < f.k() / 2; ++i) base_q *= f.p();
  }
  return OracleGroup(space, std::move(found), std::move(gens), group_tag(name, n, base_q));
}

OracleGroup isometry_group_generated(const FormSpec& form, std::size_t cap) {
  if (!form_nondegenerate(form)) throw InvalidArgument("degenerate form");
  if (form.kind == FormKind::Hermitian) {
    throw InvalidArgument("generated isometry groups are not built for hermitian forms");
  }
  const FormEval ev = form_eval(form);
  const FqField& f = *ev.f;
  const int n = form.dim;
  MatrixSpace space(f, n);
  GroupBuilder b(space, cap);
  for (const auto& v : all_vectors(f, n)) {
    if (is_zero(v, n)) continue;
    // w = G v so that B(x, v) = x^T G v = w . x
    const Vec w = apply(f, n, ev.pair_gram, v);
    switch (form.kind) {
      case FormKind::Alternating:
        // x -> x + a B(x, v) v
        for (unsigned a = 1; a < f.q(); ++a) {
          b.add_generator(rank_one_update(space, v, w, static_cast<Elem>(a)));
        }
        break;
      case FormKind::SymmetricBilinear: {
        // x -> x - 2 B(x, v) / B(v, v) v
        const Elem bvv = ev.pair(v, v);
        if (!bvv) break;
        b.add_generator(rank_one_update(space, v, w, f.neg(f.mul(2, f.inv(bvv)))));
        break;
      }
      case FormKind::Quadratic: {
        // x -> x - B(x, v) / Q(v) v, B the polar form
        const Elem qv = ev.self(v);
        if (!qv) break;
        b.add_generator(rank_one_update(space, v, w, f.neg(f.inv(qv))));
        break;
      }
      case FormKind::Hermitian:
        break;
    }
  }
  return std::move(b).build(group_tag(form.kind == FormKind::Alternating ? "sp" : "o", n, form.q));
}

OracleGroup subgroup_where(const OracleGroup& g, const std::function<bool(const Mat&)>& pred,
                           std::string tag) {
  std::vector<Mat> els;
  for (const auto& x : g.elements()) {
    if (pred(x)) els.push_back(x);
  }
  auto gens = greedy_generators(g.space(), els);
  return OracleGroup(g.space(), std::move(els), std::move(gens), std::move(tag));
}

OracleGroup determinant_kernel(const OracleGroup& g) {
  const auto& s = g.space();
  return subgroup_where(g, [&](const Mat& x) { return s.det(x) == 1; }, "det-kernel " + g.tag());
}

OracleGroup dickson_kernel(const OracleGroup& g) {
  const auto& s = g.space();
  const Mat id = s.identity();
  return subgroup_where(
      g, [&](const Mat& x) { return s.rank(s.sub(x, id)) % 2 == 0; }, "dickson-kernel " + g.tag());
}

OracleGroup derived_subgroup(const OracleGroup& g) {
  const auto& s = g.space();
  GroupBuilder b(s, g.order());
  std::vector<Mat> hgens;
  const auto& gg = g.generators();
  std::vector<Mat> ginv;
  for (const auto& x : gg) ginv.push_back(s.inv(x));
  for (std::size_t i = 0; i < gg.size(); ++i) {
    for (std::size_t j = i + 1; j < gg.size(); ++j) {
      const Mat c = s.mul(s.mul(ginv[i], ginv[j]), s.mul(gg[i], gg[j]));
      if (b.add_generator(c)) hgens.push_back(c);
    }
  }
  for (std::size_t h = 0; h < hgens.size(); ++h) {
    for (std::size_t k = 0; k < gg.size(); ++k) {
      const Mat c = s.mul(s.mul(ginv[k], hgens[h]), gg[k]);
      if (b.add_generator(c)) hgens.push_back(c);
    }
  }
  return std::move(b).build("derived " + g.tag());
}

OracleGroup permutation_group(int m, bool alternating) {
  if (m < 1 || m > kMaxDim) throw InvalidArgument("permutation degree out of range");
  MatrixSpace s(FqField::get(3), m);
  auto perm = [&](const std::vector<int>& images) {
    Mat x;
    for (int i = 0; i < m; ++i) x.at(images[i], i) = 1;
    return x;
  };
  std::vector<Mat> gens;
  if (alternating) {
    for (int k = 2; k < m; ++k) {
      std::vector<int> im(m);
      std::iota(im.begin(), im.end(), 0);
      im[0] = 1;
      im[1] = k;
      im[k] = 0;
      gens.push_back(perm(im));
    }
  } else if (m >= 2) {
    std::vector<int> t(m), c(m);
    std::iota(t.begin(), t.end(), 0);
    std::swap(t[0], t[1]);
    for (int i = 0; i < m; ++i) c[i] = (i + 1) % m;
    gens = {perm(t), perm(c)};
  }
  return close_group(s, gens, std::string(alternating ? "alt(" : "sym(") + std::to_string(m) + ")");
}

namespace {

OracleGroup general_linear(int dim, unsigned q, bool special) {
  const FqField& f = FqField::get(q);
  MatrixSpace s(f, dim);
  std::vector<Mat> gens;
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      if (i == j) continue;
      for (unsigned a = 1; a < q; ++a) {
        Mat t = s.identity();
        t.at(i, j) = static_cast<Elem>(a);
        gens.push_back(t);
      }
    }
  }
  if (!special) {
    Mat d = s.identity();
    d.at(0, 0) = f.primitive();
    gens.push_back(d);
  }
  return close_group(s, gens, group_tag(special ? "sl" : "gl", dim, q));
}

OracleGroup orthogonal(FormType type, int dim, unsigned q) {
  const bool odd_q = q % 2 == 1;
  if (type == FormType::Odd && !odd_q) {
    throw InvalidArgument("odd-dimensional orthogonal groups are built for odd q only");
  }
  const FormKind kind = odd_q ? FormKind::SymmetricBilinear : FormKind::Quadratic;
  OracleGroup g = isometry_group(standard_form(kind, type, dim, q));
  const char* name = type == FormType::Plus ? "o-plus" : type == FormType::Minus ? "o-minus" : "o";
  return OracleGroup(g.space(), g.elements(), g.generators(), group_tag(name, dim, q));
}

OracleGroup retag(OracleGroup g, std::string_view name, int dim, unsigned q) {
  return OracleGroup(g.space(), g.elements(), g.generators(), group_tag(name, dim, q));
}

}  // namespace

OracleGroup realize_group(Family fam, int dim, unsigned q) {
  auto odd_only = [&] {
    if (q % 2 == 0) throw InvalidArgument("this family is realized for odd q only");
  };
  switch (fam) {
    case Family::GL:
      return general_linear(dim, q, false);
    case Family::SL:
      return general_linear(dim, q, true);
    case Family::GU:
      return retag(isometry_group(standard_form(FormKind::Hermitian, FormType::None, dim, q)),
                   "gu", dim, q);
    case Family::SU:
      return retag(determinant_kernel(realize_group(Family::GU, dim, q)), "su", dim, q);
    case Family::Sp:
      return retag(isometry_group(standard_form(FormKind::Alternating, FormType::None, dim, q)),
                   "sp", dim, q);
    case Family::OPlus:
      return orthogonal(FormType::Plus, dim, q);
    case Family::OMinus:
      return orthogonal(FormType::Minus, dim, q);
    case Family::OOdd:
      return orthogonal(FormType::Odd, dim, q);
    case Family::SOPlus:
    case Family::SOMinus: {
      const OracleGroup o = orthogonal(fam == Family::SOPlus ? FormType::Plus : FormType::Minus,
                                       dim, q);
      return retag(q % 2 ? determinant_kernel(o) : dickson_kernel(o),
                   fam == Family::SOPlus ? "so-plus" : "so-minus", dim, q);
    }
    case Family::SOOdd:
      return retag(determinant_kernel(orthogonal(FormType::Odd, dim, q)), "so", dim, q);
    case Family::OmegaPlus:
      odd_only();
      return retag(derived_subgroup(orthogonal(FormType::Plus, dim, q)), "omega-plus", dim, q);
    case Family::OmegaMinus:
      odd_only();
      return retag(derived_subgroup(orthogonal(FormType::Minus, dim, q)), "omega-minus", dim, q);
    case Family::OmegaOdd:
      return retag(derived_subgroup(orthogonal(FormType::Odd, dim, q)), "omega", dim, q);
    case Family::SymmetricGroup:
      return permutation_group(dim, false);
    case Family::AlternatingGroup:
      return permutation_group(dim, true);
    default:
      throw InvalidArgument("the oracle does not realize family '" +
                            std::string(family_name(fam)) + "' as a matrix group");
  }
}

// ---------------------------------------------------------------------------

ConjugacyData conjugacy_data(const OracleGroup& g) {
  const auto& s = g.space();
  const std::size_t n = g.order();
  if (n > caps().group_elements) throw CapExceeded("group too large for class enumeration");
  const unsigned p = g.field().p();
  std::vector<Mat> gens = g.generators(), inv;
  for (const auto& x : gens) inv.push_back(s.inv(x));

  ConjugacyData d;
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  d.class_of.assign(n, kUnset);
  std::vector<std::uint32_t> queue;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (d.class_of[i] != kUnset) continue;
    const auto cls = static_cast<std::uint32_t>(d.classes.size());
    queue.assign(1, i);
    d.class_of[i] = cls;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Mat& x = g.elements()[queue[head]];
      for (std::size_t k = 0; k < gens.size(); ++k) {
        const auto j = *g.index_of(s.mul(s.mul(inv[k], x), gens[k]));
        if (d.class_of[j] == kUnset) {
          d.class_of[j] = cls;
          queue.push_back(j);
        }
      }
    }
    ClassInfo c;
    c.rep = i;
    c.size = queue.size();
    c.centralizer = n / c.size;
    c.element_order = s.order(g.elements()[i]);
    c.semisimple = c.element_order % p != 0;
    unsigned long o = c.element_order;
    while (o % p == 0) o /= p;
    c.unipotent = o == 1;
    d.classes.push_back(c);
  }
  return d;
}

std::uint64_t burnside_class_count(const OracleGroup& g) {
  if (g.order() > caps().burnside_order) {
    throw CapExceeded("group order " + std::to_string(g.order()) +
                      " exceeds the commuting-pair cap of " +
                      std::to_string(caps().burnside_order));
  }
  const auto& s = g.space();
  const auto& els = g.elements();
  std::uint64_t pairs = 0;
  for (std::size_t i = 0; i < els.size(); ++i) {
    ++pairs;  // (x, x)
    for (std::size_t j = i + 1; j < els.size(); ++j) {
      if (s.mul(els[i], els[j]) == s.mul(els[j], els[i])) pairs += 2;
    }
  }
  if (pairs % els.size()) throw ArithmeticError("commuting pairs not divisible by |G|");
  return pairs / els.size();
}

std::vector<Mat> scalar_elements(const OracleGroup& g) {
  std::vector<Mat> out;
  for (unsigned c = 1; c < g.field().q(); ++c) {
    const Mat m = g.space().scalar(static_cast<Elem>(c));
    if (g.contains(m)) out.push_back(m);
  }
  return out;
}

std::size_t central_quotient_class_count(const OracleGroup& g, const ConjugacyData& data,
                                         const std::vector<Mat>& central) {
  const auto& s = g.space();
  std::vector<std::size_t> parent(data.classes.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (const auto& z : central) {
    for (std::size_t c = 0; c < data.classes.size(); ++c) {
      const Mat& x = g.elements()[data.classes[c].rep];
      const Mat y = s.mul(z, x);
      if (s.mul(x, z) != y) throw InvalidArgument("element is not central");
      const auto idx = g.index_of(y);
      if (!idx) throw InvalidArgument("central element not in the group");
      parent[find(c)] = find(data.class_of[*idx]);
    }
  }
  std::size_t roots = 0;
  for (std::size_t c = 0; c < parent.size(); ++c) roots += find(c) == c;
  return roots;
}

std::size_t oracle_class_count(Family f, int dim, unsigned q) {
  Family base = f;
  bool projective = true;
  switch (f) {
    case Family::PGL:
      base = Family::GL;
      break;
    case Family::PSL:
      base = Family::SL;
      break;
    case Family::PGU:
      base = Family::GU;
      break;
    case Family::PSU:
      base = Family::SU;
      break;
    default:
      projective = false;
  }
  const OracleGroup g = realize_group(base, dim, q);
  const auto data = conjugacy_data(g);
  if (!projective) return data.classes.size();
  return central_quotient_class_count(g, data, scalar_elements(g));
}

std::vector<int> jordan_blocks(const MatrixSpace& s, const Mat& x, FqField::Elem lambda) {
  const int n = s.dim();
  const Mat a = s.sub(x, s.scalar(lambda));
  std::vector<int> r(n + 2);
  r[0] = n;
  Mat pw = s.identity();
  for (int k = 1; k <= n + 1; ++k) {
    pw = s.mul(pw, a);
    r[k] = s.rank(pw);
  }
  std::vector<int> blocks;
  for (int k = n; k >= 1; --k) {
    const int at_least_k = r[k - 1] - r[k];
    const int at_least_k1 = k + 1 <= n + 1 ? r[k] - r[k + 1] : 0;
    for (int c = 0; c < at_least_k - at_least_k1; ++c) blocks.push_back(k);
  }
  return blocks;
}

CosetDistribution coset_class_distribution(const OracleGroup& g, const OracleGroup& n,
                                           const std::vector<std::uint64_t>& primes) {
  const auto& s = g.space();
  for (const auto& x : n.elements()) {
    if (!g.contains(x)) throw InvalidArgument("N is not contained in G");
  }
  for (const auto& h : n.generators()) {
    for (const auto& x : g.generators()) {
      if (!n.contains(s.mul(s.mul(s.inv(x), h), x))) {
        throw InvalidArgument("N is not normal in G");
      }
    }
  }
  CosetDistribution out;
  std::vector<int> label(g.order(), -1);
  std::vector<std::uint32_t> coset_rep;
  for (std::uint32_t i = 0; i < g.order(); ++i) {
    if (label[i] >= 0) continue;
    const int c = static_cast<int>(coset_rep.size());
    coset_rep.push_back(i);
    for (const auto& y : n.elements()) label[*g.index_of(s.mul(g.elements()[i], y))] = c;
  }
  out.index = coset_rep.size();
  for (auto r : coset_rep) {
    Mat x = g.elements()[r];
    std::size_t k = 1;
    while (!n.contains(x)) {
      x = s.mul(x, g.elements()[r]);
      ++k;
    }
    out.generating.push_back(k == out.index);
  }
  out.cyclic = std::find(out.generating.begin(), out.generating.end(), true) != out.generating.end();

  const auto data = conjugacy_data(g);
  out.single_orbit_classes.assign(out.index, 0);
  out.classes_in_coset.assign(out.index, 0);
  for (const auto& c : data.classes) {
    if (!is_pi_number(c.element_order, primes)) continue;
    const Mat& x = g.elements()[c.rep];
    std::size_t cn = 0;
    for (const auto& y : n.elements()) cn += s.mul(x, y) == s.mul(y, x);
    const int lab = label[c.rep];
    ++out.classes_in_coset[lab];
    if (c.size * cn == n.order()) ++out.single_orbit_classes[lab];
  }
  out.alpha = out.single_orbit_classes[label[*g.index_of(s.identity())]];
  return out;
}

Rational derangement_proportion(const OracleGroup& g, const OracleGroup& h) {
  for (const auto& x : h.elements()) {
    if (!g.contains(x)) throw InvalidArgument("H is not a subgroup of G");
  }
  if (g.order() % h.order()) throw InvalidArgument("|H| does not divide |G|");
  if (g.order() / h.order() > 10'000) throw CapExceeded("index of H exceeds 10^4");
  const auto data = conjugacy_data(g);
  std::vector<bool> meets(data.classes.size(), false);
  for (const auto& x : h.elements()) meets[data.class_of[*g.index_of(x)]] = true;
  std::uint64_t der = 0;
  for (std::size_t c = 0; c < data.classes.size(); ++c) {
    if (!meets[c]) der += data.classes[c].size;
  }
  Rational r(BigInt(static_cast<unsigned long>(der)), BigInt(static_cast<unsigned long>(g.order())));
  r.canonicalize();
  return r;
}

}  // namespace chev
