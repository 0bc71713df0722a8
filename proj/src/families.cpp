#include "cgseries/errors.hpp"
#include "cgseries/group_model.hpp"

namespace cgs {

namespace {

using Row = std::vector<Cyclo>;

Cyclo z(long m, long k) { return Cyclo::zeta(m, k); }

CycloMatrix mat2(const Cyclo& a, const Cyclo& b, const Cyclo& c, const Cyclo& d) {
  CycloMatrix m(2, 2);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

// a + b i + c j + d k as an SU(2) matrix.
CycloMatrix quaternion(const Cyclo& a, const Cyclo& b, const Cyclo& c, const Cyclo& d) {
  const Cyclo i = z(4, 1);
  return mat2(a + b * i, c + d * i, -c + d * i, a - b * i);
}

CycloMatrix quaternion(const std::vector<Cyclo>& v, const Cyclo& scale) {
  return quaternion(v[0] * scale, v[1] * scale, v[2] * scale, v[3] * scale);
}

const Cyclo kHalf = Cyclo(Rational(1, 2));

Cyclo sqrt2() { return z(8, 1) - z(8, 3); }
Cyclo golden() { return Cyclo(1) + z(5, 1) + z(5, 4); }

void fill_table(GroupModel& g, const std::vector<Row>& rows) {
  const std::size_t n = rows.size();
  g.char_table = CycloMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g.char_table(i, j) = rows[i][j];
}

GroupModel finish(GroupModel g) {
  require_valid(g);
  return g;
}

}  // namespace

GroupModel make_cyclic_su2(int m) {
  if (m < 2) throw DomainError("cyclic group requires m >= 2");
  GroupModel g;
  g.name = "cyclic:" + std::to_string(m);
  g.family = Family::Cyclic;
  g.param = m;
  g.order = m;
  g.dim = 2;
  g.conductor = normalized_conductor(m);
  g.class_sizes.assign(m, 1);
  std::vector<Row> rows(m, Row(m));
  std::vector<CycloMatrix> reps;
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k < m; ++k) rows[i][k] = z(m, static_cast<long>(i) * k);
    g.irrep_labels.push_back("chi" + std::to_string(i));
    g.class_labels.push_back(i == 0 ? "1" : "g^" + std::to_string(i));
  }
  for (int k = 0; k < m; ++k) {
    g.defining_row.push_back(z(m, k) + z(m, -k));
    reps.push_back(mat2(z(m, k), Cyclo(), Cyclo(), z(m, -k)));
  }
  fill_table(g, rows);
  g.class_reps = std::move(reps);
  return finish(std::move(g));
}

GroupModel make_binary_dihedral(int n) {
  if (n < 2) throw DomainError("binary dihedral group requires n >= 2");
  const long m = 2L * n;
  GroupModel g;
  g.name = "bd:" + std::to_string(n);
  g.family = Family::BinaryDihedral;
  g.param = n;
  g.order = 4L * n;
  g.dim = 2;
  g.conductor = normalized_conductor(lcm_conductor(m, 4));
  // Class order: 1, -1, a^1..a^{n-1}, b, ba.
  g.class_sizes = {1, 1};
  g.class_labels = {"1", "-1"};
  for (int k = 1; k < n; ++k) {
    g.class_sizes.push_back(2);
    g.class_labels.push_back("a^" + std::to_string(k));
  }
  g.class_sizes.push_back(n);
  g.class_sizes.push_back(n);
  g.class_labels.push_back("b");
  g.class_labels.push_back("ba");

  auto one_dim = [&](int s, const Cyclo& t) {
    Row r{Cyclo(1), Cyclo(n % 2 == 0 ? 1 : s)};
    for (int k = 1; k < n; ++k) r.push_back(Cyclo(k % 2 == 0 ? 1 : s));
    r.push_back(t);
    r.push_back(t * Cyclo(s));
    return r;
  };
  std::vector<Row> rows;
  rows.push_back(one_dim(1, Cyclo(1)));
  rows.push_back(one_dim(1, Cyclo(-1)));
  g.irrep_labels = {"1", "1'"};
  for (int h = 1; h < n; ++h) {
    Row r{Cyclo(2), Cyclo(h % 2 == 0 ? 2 : -2)};
    for (int k = 1; k < n; ++k) r.push_back(z(m, static_cast<long>(h) * k) + z(m, -static_cast<long>(h) * k));
    r.push_back(Cyclo());
    r.push_back(Cyclo());
    rows.push_back(r);
    g.irrep_labels.push_back("rho" + std::to_string(h));
  }
  const Cyclo t = n % 2 == 0 ? Cyclo(1) : z(4, 1);
  rows.push_back(one_dim(-1, t));
  rows.push_back(one_dim(-1, -t));
  g.irrep_labels.push_back("1''");
  g.irrep_labels.push_back("1'''");
  fill_table(g, rows);
  g.defining_row = rows[2];

  const CycloMatrix a = mat2(z(m, 1), Cyclo(), Cyclo(), z(m, -1));
  const CycloMatrix b = mat2(Cyclo(), Cyclo(1), Cyclo(-1), Cyclo());
  std::vector<CycloMatrix> reps{CycloMatrix::identity(2), Cyclo(-1) * CycloMatrix::identity(2)};
  CycloMatrix ak = CycloMatrix::identity(2);
  for (int k = 1; k < n; ++k) {
    ak = ak * a;
    reps.push_back(ak);
  }
  reps.push_back(b);
  reps.push_back(b * a);
  g.class_reps = std::move(reps);
  return finish(std::move(g));
}

GroupModel make_binary_tetrahedral() {
  GroupModel g;
  g.name = "2T";
  g.family = Family::Tetrahedral;
  g.order = 24;
  g.dim = 2;
  g.conductor = 12;
  g.class_sizes = {1, 1, 6, 4, 4, 4, 4};
  g.class_labels = {"1", "-1", "i", "g", "g^2", "g^4", "g^5"};
  const Cyclo w = z(3, 1), w2 = z(3, 2);
  const Row v{2, -2, 0, 1, -1, -1, 1};
  const Row chi_w{1, 1, 1, w, w2, w, w2};
  const Row chi_w2{1, 1, 1, w2, w, w2, w};
  Row v_w(7), v_w2(7);
  for (int k = 0; k < 7; ++k) {
    v_w[k] = v[k] * chi_w[k];
    v_w2[k] = v[k] * chi_w2[k];
  }
  fill_table(g, {Row(7, Cyclo(1)), v, Row{3, 3, -1, 0, 0, 0, 0}, v_w, chi_w, v_w2, chi_w2});
  g.irrep_labels = {"1", "2", "3", "2w", "w", "2w^2", "w^2"};
  g.defining_row = v;
  const Cyclo h = kHalf;
  g.class_reps = std::vector<CycloMatrix>{
      quaternion(1, 0, 0, 0),         quaternion(-1, 0, 0, 0),        quaternion(0, 1, 0, 0),
      quaternion({1, 1, 1, 1}, h),    quaternion({-1, 1, 1, 1}, h),   quaternion({-1, -1, -1, -1}, h),
      quaternion({1, -1, -1, -1}, h),
  };
  return finish(std::move(g));
}

GroupModel make_binary_octahedral() {
  GroupModel g;
  g.name = "2O";
  g.family = Family::Octahedral;
  g.order = 48;
  g.dim = 2;
  g.conductor = 8;
  g.class_sizes = {1, 1, 6, 8, 8, 6, 6, 12};
  g.class_labels = {"1", "-1", "i", "(1+i+j+k)/2", "(-1+i+j+k)/2", "(1+i)/r2", "(-1+i)/r2", "(i+j)/r2"};
  const Cyclo s = sqrt2();
  const Row v{2, -2, 0, 1, -1, s, -s, 0};
  const Row v2{2, -2, 0, 1, -1, -s, s, 0};
  fill_table(g, {Row(8, Cyclo(1)), v, Row{3, 3, -1, 0, 0, 1, 1, -1}, Row{4, -4, 0, -1, 1, 0, 0, 0},
                 Row{3, 3, -1, 0, 0, -1, -1, 1}, v2, Row{1, 1, 1, 1, 1, -1, -1, -1}, Row{2, 2, 2, -1, -1, 0, 0, 0}});
  g.irrep_labels = {"1", "2", "3", "4", "3'", "2'", "1'", "2''"};
  g.defining_row = v;
  const Cyclo h = kHalf;
  const Cyclo r = s.inverse();
  g.class_reps = std::vector<CycloMatrix>{
      quaternion(1, 0, 0, 0),      quaternion(-1, 0, 0, 0),        quaternion(0, 1, 0, 0),
      quaternion({1, 1, 1, 1}, h), quaternion({-1, 1, 1, 1}, h),   quaternion({1, 1, 0, 0}, r),
      quaternion({-1, 1, 0, 0}, r), quaternion({0, 1, 1, 0}, r),
  };
  return finish(std::move(g));
}

GroupModel make_binary_icosahedral() {
  GroupModel g;
  g.name = "2I";
  g.family = Family::Icosahedral;
  g.order = 120;
  g.dim = 2;
  g.conductor = 20;
  g.class_sizes = {1, 1, 30, 20, 20, 12, 12, 12, 12};
  g.class_labels = {"1", "-1", "i", "ord3", "ord6", "ord10a", "ord10b", "ord5a", "ord5b"};
  const Cyclo p = golden();
  const Cyclo pi = p - Cyclo(1);  // 1/phi
  const Cyclo q = Cyclo(1) - p;
  const Row v{2, -2, 0, -1, 1, p, q, pi, -p};
  fill_table(g, {
                    Row(9, Cyclo(1)),
                    v,
                    Row{3, 3, -1, 0, 0, p, q, q, p},
                    Row{4, -4, 0, 1, -1, 1, 1, -1, -1},
                    Row{5, 5, 1, -1, -1, 0, 0, 0, 0},
                    Row{6, -6, 0, 0, 0, -1, -1, 1, 1},
                    Row{4, 4, 0, 1, 1, -1, -1, -1, -1},
                    Row{2, -2, 0, -1, 1, q, p, -p, pi},
                    Row{3, 3, -1, 0, 0, q, p, p, q},
                });
  g.irrep_labels = {"1", "2", "3", "4", "5", "6", "4'", "2'", "3'"};
  g.defining_row = v;
  const Cyclo h = kHalf;
  g.class_reps = std::vector<CycloMatrix>{
      quaternion(1, 0, 0, 0),          quaternion(-1, 0, 0, 0),          quaternion(0, 1, 0, 0),
      quaternion({-1, 1, 1, 1}, h),    quaternion({1, 1, 1, 1}, h),      quaternion({p, 1, 0, pi}, h),
      quaternion({-pi, p, 0, 1}, h),   quaternion({pi, p, 0, 1}, h),     quaternion({-p, 1, 0, pi}, h),
  };
  return finish(std::move(g));
}

std::vector<CycloMatrix> standard_generators(const GroupModel& g) {
  const Cyclo h = kHalf;
  switch (g.family) {
    case Family::Cyclic: {
      const long m = g.param;
      return {mat2(z(m, 1), Cyclo(), Cyclo(), z(m, -1))};
    }
    case Family::BinaryDihedral: {
      const long m = 2L * g.param;
      return {mat2(z(m, 1), Cyclo(), Cyclo(), z(m, -1)), mat2(Cyclo(), Cyclo(1), Cyclo(-1), Cyclo())};
    }
    case Family::Tetrahedral: return {quaternion(0, 1, 0, 0), quaternion({1, 1, 1, 1}, h)};
    case Family::Octahedral:
      return {quaternion(0, 1, 0, 0), quaternion({1, 1, 1, 1}, h), quaternion({1, 1, 0, 0}, sqrt2().inverse())};
    case Family::Icosahedral: {
      const Cyclo p = golden();
      return {quaternion(0, 1, 0, 0), quaternion({1, 1, 1, 1}, h), quaternion({p, 1, 0, p - Cyclo(1)}, h)};
    }
    case Family::Symmetric: {
      const int d = g.dim;
      std::vector<CycloMatrix> gens;
      CycloMatrix swap(d, d), cycle(d, d);
      for (int a = 0; a < d; ++a) {
        swap(a, a) = Cyclo(1);
        cycle((a + 1) % d, a) = Cyclo(1);
      }
      if (d >= 2) {
        swap(0, 0) = swap(1, 1) = Cyclo();
        swap(0, 1) = swap(1, 0) = Cyclo(1);
      }
      gens.push_back(swap);
      gens.push_back(cycle);
      return gens;
    }
    case Family::Imported: break;
  }
  throw MissingRepresentationData(g.name + ": no standard generators for imported groups");
}

}  // namespace cgs
