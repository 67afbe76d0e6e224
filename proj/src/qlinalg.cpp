#include "qlin/qlinalg.hpp"

#include <cctype>
#include <cstring>
#include <sstream>

namespace qlin {

bool QuatVector::is_zero() const {
  for (const auto& q : e)
    if (!q.is_zero()) return false;
  return true;
}

QuatVector QuatVector::operator+(const QuatVector& o) const {
  if (dim() != o.dim()) throw DimensionError("vector dims differ");
  QuatVector r(dim());
  for (int i = 0; i < dim(); ++i) r.e[i] = e[i] + o.e[i];
  return r;
}

QuatVector QuatVector::operator-(const QuatVector& o) const {
  if (dim() != o.dim()) throw DimensionError("vector dims differ");
  QuatVector r(dim());
  for (int i = 0; i < dim(); ++i) r.e[i] = e[i] - o.e[i];
  return r;
}

QuatVector QuatVector::operator*(const Quaternion& s) const {
  QuatVector r(dim());
  for (int i = 0; i < dim(); ++i) r.e[i] = e[i] * s;
  return r;
}

std::string QuatVector::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < dim(); ++i) {
    if (i) os << ", ";
    os << e[i].str();
  }
  os << "]";
  return os.str();
}

QuatMatrix QuatMatrix::identity(int d) {
  QuatMatrix m(d, d);
  for (int i = 0; i < d; ++i) m.at(i, i) = Quaternion(1);
  return m;
}

QuatMatrix QuatMatrix::diag(const Quaternion& p, const Quaternion& q) {
  QuatMatrix m(2, 2);
  m.at(0, 0) = p;
  m.at(1, 1) = q;
  return m;
}

QuatMatrix scalar_matrix(int d, const Quaternion& s) {
  QuatMatrix m(d, d);
  for (int i = 0; i < d; ++i) m.at(i, i) = s;
  return m;
}

QuatMatrix QuatMatrix::operator*(const QuatMatrix& o) const {
  if (cols != o.rows) throw DimensionError("matrix product dims");
  QuatMatrix r(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < o.cols; ++j) {
      Quaternion s;
      for (int k = 0; k < cols; ++k) s += at(i, k) * o.at(k, j);
      r.at(i, j) = s;
    }
  return r;
}

QuatVector QuatMatrix::operator*(const QuatVector& v) const {
  if (cols != v.dim()) throw DimensionError("matrix*vector dims");
  QuatVector r(rows);
  for (int i = 0; i < rows; ++i) {
    Quaternion s;
    for (int k = 0; k < cols; ++k) s += at(i, k) * v[k];
    r[i] = s;
  }
  return r;
}

QuatMatrix QuatMatrix::operator+(const QuatMatrix& o) const {
  if (rows != o.rows || cols != o.cols) throw DimensionError("matrix sum dims");
  QuatMatrix r(rows, cols);
  for (size_t i = 0; i < e.size(); ++i) r.e[i] = e[i] + o.e[i];
  return r;
}

QuatMatrix QuatMatrix::operator-(const QuatMatrix& o) const {
  if (rows != o.rows || cols != o.cols) throw DimensionError("matrix diff dims");
  QuatMatrix r(rows, cols);
  for (size_t i = 0; i < e.size(); ++i) r.e[i] = e[i] - o.e[i];
  return r;
}

bool QuatMatrix::operator==(const QuatMatrix& o) const {
  return rows == o.rows && cols == o.cols && e == o.e;
}

QuatMatrix QuatMatrix::conj_transpose() const {
  QuatMatrix r(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j).conj();
  return r;
}

bool QuatMatrix::is_unitary() const {
  if (rows != cols) return false;
  return conj_transpose() * *this == identity(rows);
}

std::string QuatMatrix::str() const {
  std::ostringstream os;
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      if (j) os << ", ";
      os << at(i, j).str();
    }
    os << "\n";
  }
  return os.str();
}

std::string QuatMatrix::key() const {
  return std::to_string(rows) + "x" + std::to_string(cols) + ":" + str();
}

Quaternion inner_product(const QuatVector& v, const QuatVector& w) {
  if (v.dim() != w.dim()) throw DimensionError("inner product dims differ");
  Quaternion s;
  for (int i = 0; i < v.dim(); ++i) s += v[i].conj() * w[i];
  return s;
}

FieldElem angle(const QuatVector& v, const QuatVector& w) {
  if (v.is_zero() || w.is_zero()) throw FieldError("angle of zero vector");
  FieldElem num = inner_product(v, w).norm();
  FieldElem den = inner_product(v, v).re() * inner_product(w, w).re();
  return num * den.inverse();
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& o) const {
  if (cols != o.rows) throw DimensionError("complex matrix product dims");
  ComplexMatrix r(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < o.cols; ++j) {
      CElem s{FieldElem(0), FieldElem(0)};
      for (int k = 0; k < cols; ++k) s = s + at(i, k) * o.at(k, j);
      r.at(i, j) = s;
    }
  return r;
}

bool ComplexMatrix::operator==(const ComplexMatrix& o) const {
  return rows == o.rows && cols == o.cols && e == o.e;
}

ComplexMatrix complexify(const QuatMatrix& g) {
  // q = (a + b i) + (c + d i) j
  int d = g.rows;
  ComplexMatrix m(2 * d, 2 * g.cols);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < g.cols; ++c) {
      const Quaternion& q = g.at(r, c);
      m.at(r, c) = {q.a, q.b};                              // A
      m.at(r, c + g.cols) = {-q.c, -q.d};                   // -B
      m.at(r + d, c) = {q.c, -q.d};                         // conj B
      m.at(r + d, c + g.cols) = {q.a, -q.b};                // conj A
    }
  return m;
}

ComplexMatrix complexify_vec(const QuatVector& v) {
  int d = v.dim();
  ComplexMatrix m(2 * d, 1);
  for (int r = 0; r < d; ++r) {
    const Quaternion& q = v[r];
    m.at(r, 0) = {q.a, q.b};        // z
    m.at(r + d, 0) = {q.c, -q.d};   // conj w
  }
  return m;
}

int quat_rank(const QuatMatrix& m) {
  QuatMatrix a = m;
  int rank = 0;
  int prow = 0;
  for (int col = 0; col < a.cols && prow < a.rows; ++col) {
    int pivot = -1;
    for (int r = prow; r < a.rows; ++r)
      if (!a.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != prow)
      for (int c = 0; c < a.cols; ++c) std::swap(a.at(pivot, c), a.at(prow, c));
    Quaternion pinv = a.at(prow, col).inverse();
    for (int c = col; c < a.cols; ++c) a.at(prow, c) = pinv * a.at(prow, c);
    for (int r = 0; r < a.rows; ++r) {
      if (r == prow || a.at(r, col).is_zero()) continue;
      Quaternion f = a.at(r, col);
      for (int c = col; c < a.cols; ++c)
        a.at(r, c) = a.at(r, c) - f * a.at(prow, c);
    }
    ++prow;
    ++rank;
  }
  return rank;
}

QuatVector perp_vector(const QuatVector& v) {
  if (v.dim() != 2) throw DimensionError("perp_vector needs dim 2");
  if (v.is_zero()) throw FieldError("perp_vector of zero vector");
  const Quaternion& a = v[0];
  const Quaternion& b = v[1];
  if (a.is_zero()) return {b.conj(), Quaternion(0)};
  Quaternion ac = a.conj();
  return {-(ac.inverse() * b.conj() * ac), ac};
}

QuatVector canonical_line_rep(const QuatVector& v) {
  if (v.is_zero()) throw FieldError("canonical rep of zero vector");
  int p = 0;
  while (v[p].is_zero()) ++p;
  QuatVector r = v * v[p].inverse();
  // clear denominators across all 32 rational coordinates
  mpz_class l(1);
  for (const auto& q : r.e)
    for (const FieldElem* f : {&q.a, &q.b, &q.c, &q.d})
      for (int m = 0; m < 8; ++m)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), f->coord(m).get_den().get_mpz_t());
  // then divide out the integer content
  mpz_class g(0);
  for (auto& q : r.e)
    for (FieldElem* f : {&q.a, &q.b, &q.c, &q.d})
      for (int m = 0; m < 8; ++m) {
        f->coord(m) *= Rational(l);
        f->coord(m).canonicalize();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), f->coord(m).get_num().get_mpz_t());
      }
  if (g > 1)
    for (auto& q : r.e)
      for (FieldElem* f : {&q.a, &q.b, &q.c, &q.d})
        for (int m = 0; m < 8; ++m) {
          f->coord(m) /= Rational(g);
          f->coord(m).canonicalize();
        }
  return r;
}

std::string line_key(const QuatVector& v) {
  return canonical_line_rep(v).key();
}

namespace {

struct Tokenizer {
  const std::string& s;
  size_t i = 0;
  explicit Tokenizer(const std::string& str) : s(str) {}
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
};

// one multiplicative factor: rational, rN, or i/j/k
bool parse_factor(Tokenizer& t, Quaternion& out) {
  t.skip_ws();
  if (t.i >= t.s.size()) return false;
  char c = t.s[t.i];
  if (std::isdigit(static_cast<unsigned char>(c))) {
    size_t j = t.i;
    while (j < t.s.size() && (std::isdigit(static_cast<unsigned char>(t.s[j])) || t.s[j] == '/'))
      ++j;
    out = Quaternion(FieldElem(rat_parse(t.s.substr(t.i, j - t.i))));
    t.i = j;
    return true;
  }
  if (c == 'r' && t.i + 1 < t.s.size() && std::isdigit(static_cast<unsigned char>(t.s[t.i + 1]))) {
    size_t j = t.i + 1;
    while (j < t.s.size() && std::isdigit(static_cast<unsigned char>(t.s[j]))) ++j;
    out = Quaternion(FieldElem::sqrt_of(std::stoi(t.s.substr(t.i + 1, j - t.i - 1))));
    t.i = j;
    return true;
  }
  if (c == 'i' || c == 'j' || c == 'k') {
    out = (c == 'i') ? Quaternion::i() : (c == 'j') ? Quaternion::j() : Quaternion::k();
    ++t.i;
    return true;
  }
  return false;
}

Quaternion parse_quat_expr(Tokenizer& t, const char* stops) {
  Quaternion sum;
  bool first = true;
  while (true) {
    char c = t.peek();
    if (c == '\0' || strchr(stops, c)) break;
    int sign = 1;
    if (c == '+' || c == '-') {
      sign = (c == '-') ? -1 : 1;
      ++t.i;
    } else if (!first) {
      throw FieldError("expected + or - in quaternion: " + t.s);
    }
    Quaternion term(1);
    bool any = false;
    while (true) {
      Quaternion f;
      if (!parse_factor(t, f)) break;
      term = term * f;
      any = true;
      t.skip_ws();
      if (t.i < t.s.size() && t.s[t.i] == '*') ++t.i;
    }
    if (!any) throw FieldError("empty term in quaternion: " + t.s);
    if (sign < 0) term = -term;
    sum += term;
    first = false;
  }
  if (first) throw FieldError("empty quaternion: " + t.s);
  return sum;
}

}  // namespace

Quaternion parse_quaternion(const std::string& s) {
  Tokenizer t(s);
  Quaternion q = parse_quat_expr(t, "");
  if (!t.done()) throw FieldError("trailing input in quaternion: " + s);
  return q;
}

QuatVector parse_vector(const std::string& s) {
  Tokenizer t(s);
  if (t.peek() != '(') throw FieldError("vector must start with '(': " + s);
  ++t.i;
  QuatVector v;
  while (true) {
    v.e.push_back(parse_quat_expr(t, ",)"));
    char c = t.peek();
    if (c == ',') {
      ++t.i;
      continue;
    }
    if (c == ')') {
      ++t.i;
      break;
    }
    throw FieldError("unterminated vector: " + s);
  }
  if (!t.done()) throw FieldError("trailing input in vector: " + s);
  return v;
}

std::vector<QuatMatrix> parse_matrices(const std::string& text) {
  std::vector<QuatMatrix> out;
  std::vector<std::vector<Quaternion>> rows;
  auto flush = [&] {
    if (rows.empty()) return;
    size_t cols = rows[0].size();
    QuatMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols));
    for (size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw FieldError("ragged matrix rows");
      for (size_t c = 0; c < cols; ++c) m.at(static_cast<int>(r), static_cast<int>(c)) = rows[r][c];
    }
    out.push_back(std::move(m));
    rows.clear();
  };
  std::istringstream is(text);
  std::string lineb;
  while (std::getline(is, lineb)) {
    std::string trimmed = lineb;
    size_t a = trimmed.find_first_not_of(" \t\r");
    if (a == std::string::npos || trimmed[a] == '#') {
      flush();
      continue;
    }
    std::vector<Quaternion> row;
    Tokenizer t(lineb);
    while (!t.done()) {
      row.push_back(parse_quat_expr(t, ","));
      if (t.peek() == ',') ++t.i;
    }
    rows.push_back(std::move(row));
  }
  flush();
  return out;
}

}  // namespace qlin
