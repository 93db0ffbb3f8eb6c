#include "cluspat/pattern.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "cluspat/errors.hpp"

namespace cluspat {

namespace {

void check_direction(int l, int rank, const char* op) {
  if (l < 1 || l > rank)
    throw IndexOutOfRange(std::string(op) + ": direction " + std::to_string(l) + " not in 1.." +
                          std::to_string(rank));
}

void check_eps(int eps, const char* op) {
  if (eps != 1 && eps != -1) throw InvalidArgument(std::string(op) + ": eps must be +1 or -1");
}

IntMatrix scaled(const IntMatrix& m, int s) { return s >= 0 ? m : -m; }

}  // namespace

Walk Walk::parse(const std::string& text) {
  Walk walk;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == ',')) ++pos;
    if (pos == text.size()) break;
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw InvalidArgument("walk parse: expected a 1-based label in '" + text + "'");
    walk.labels.push_back(std::stoi(text.substr(start, pos - start)));
  }
  return walk;
}

bool Walk::has_immediate_repeat() const {
  for (std::size_t i = 1; i < labels.size(); ++i)
    if (labels[i] == labels[i - 1]) return true;
  return false;
}

void Walk::validate(int rank) const {
  for (int l : labels)
    if (l < 1 || l > rank)
      throw IndexOutOfRange("walk label " + std::to_string(l) + " not in 1.." +
                            std::to_string(rank));
}

Walk Walk::prefix(std::size_t len) const {
  return Walk(std::vector<int>(labels.begin(), labels.begin() + len));
}

Walk Walk::appended(int label) const {
  Walk out = *this;
  out.labels.push_back(label);
  return out;
}

Walk Walk::prepended(int label) const {
  Walk out;
  out.labels.reserve(labels.size() + 1);
  out.labels.push_back(label);
  out.labels.insert(out.labels.end(), labels.begin(), labels.end());
  return out;
}

Walk Walk::reversed() const {
  Walk out = *this;
  std::reverse(out.labels.begin(), out.labels.end());
  return out;
}

std::string Walk::to_text() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) os << ",";
    os << labels[i];
  }
  return os.str();
}

PatternNode initial_node(const ExchangeMatrix& b) {
  PatternNode node{b, b, IntMatrix::identity(b.rank()), IntMatrix::identity(b.rank()),
                   IntMatrix::zero(b.rank(), b.rank()),
                   std::vector<SparsePoly>(),
                   Walk()};
  VarSet yv = y_vars(b.rank());
  node.fpolys.reserve(b.rank());
  for (int j = 0; j < b.rank(); ++j) node.fpolys.push_back(SparsePoly::one(yv));
  return node;
}

int tropical_sign_column(const IntMatrix& m, int l) {
  check_direction(l, m.cols(), "tropical_sign_column");
  int sign = 0;
  for (int i = 0; i < m.rows(); ++i) {
    int s = sign_of(m(i, l - 1));
    if (s == 0) continue;
    if (sign == 0)
      sign = s;
    else if (sign != s)
      throw SignIncoherent("column " + std::to_string(l) + " is mixed-sign");
  }
  if (sign == 0) throw SignIncoherent("column " + std::to_string(l) + " is zero");
  return sign;
}

int tropical_sign_row(const IntMatrix& m, int l) {
  check_direction(l, m.rows(), "tropical_sign_row");
  int sign = 0;
  for (int j = 0; j < m.cols(); ++j) {
    int s = sign_of(m(l - 1, j));
    if (s == 0) continue;
    if (sign == 0)
      sign = s;
    else if (sign != s)
      throw SignIncoherent("row " + std::to_string(l) + " is mixed-sign");
  }
  if (sign == 0) throw SignIncoherent("row " + std::to_string(l) + " is zero");
  return sign;
}

IntMatrix mutate_c(const PatternNode& node, int l, int eps) {
  check_direction(l, node.rank(), "mutate_c");
  check_eps(eps, "mutate_c");
  const IntMatrix& bt = node.b.matrix();
  int n = node.rank();
  return node.c * (j_matrix(n, l) + row_restrict(positive_part(scaled(bt, eps)), l)) +
         col_restrict(positive_part(scaled(node.c, -eps)), l) * bt;
}

IntMatrix mutate_g(const PatternNode& node, int l, int eps) {
  check_direction(l, node.rank(), "mutate_g");
  check_eps(eps, "mutate_g");
  const IntMatrix& bt = node.b.matrix();
  int n = node.rank();
  return node.g * (j_matrix(n, l) + col_restrict(positive_part(scaled(bt, eps)), l)) -
         node.initial_b.matrix() * col_restrict(positive_part(scaled(node.c, eps)), l);
}

std::vector<SparsePoly> mutate_fpolys(const PatternNode& node, int l) {
  check_direction(l, node.rank(), "mutate_fpolys");
  int n = node.rank();
  const VarSet& yv = node.fpolys[0].vars();
  SparsePoly::Exp pos_c(n), neg_c(n);
  for (int i = 0; i < n; ++i) {
    pos_c[i] = to_int32(positive_part(node.c(i, l - 1)), "c-column exponent");
    neg_c[i] = to_int32(positive_part(-node.c(i, l - 1)), "c-column exponent");
  }
  SparsePoly plus = SparsePoly::monomial(yv, pos_c);
  SparsePoly minus = SparsePoly::monomial(yv, neg_c);
  for (int i = 0; i < n; ++i) {
    int b_il = to_int32(node.b.matrix()(i, l - 1), "exchange entry");
    if (b_il > 0)
      plus = plus * node.fpolys[i].pow(b_il);
    else if (b_il < 0)
      minus = minus * node.fpolys[i].pow(-b_il);
  }
  std::vector<SparsePoly> out = node.fpolys;
  out[l - 1] = exact_div(plus + minus, node.fpolys[l - 1]);
  return out;
}

IntMatrix mutate_fmat_max(const PatternNode& node, int l) {
  check_direction(l, node.rank(), "mutate_fmat_max");
  int n = node.rank();
  const IntMatrix& bt = node.b.matrix();
  IntMatrix plus = col_restrict(positive_part(node.c), l) +
                   node.f * col_restrict(positive_part(bt), l);
  IntMatrix minus = col_restrict(positive_part(-node.c), l) +
                    node.f * col_restrict(positive_part(-bt), l);
  return node.f * j_matrix(n, l) + entrywise_max(plus, minus);
}

IntMatrix mutate_fmat_eps(const PatternNode& node, int l, int eps, const IntMatrix& c_neg) {
  check_direction(l, node.rank(), "mutate_fmat_eps");
  check_eps(eps, "mutate_fmat_eps");
  if (c_neg.rows() != node.rank() || c_neg.cols() != node.rank())
    throw DimensionMismatch("mutate_fmat_eps: companion C-matrix has wrong shape");
  int n = node.rank();
  const IntMatrix& bt = node.b.matrix();
  return node.f * (j_matrix(n, l) + col_restrict(positive_part(scaled(bt, -eps)), l)) +
         col_restrict(positive_part(scaled(node.c, -eps)), l) +
         col_restrict(positive_part(scaled(c_neg, eps)), l);
}

IntMatrix mutate_c_signed(const PatternNode& node, int l) {
  check_direction(l, node.rank(), "mutate_c_signed");
  int eps = tropical_sign_column(node.c, l);
  int n = node.rank();
  return node.c *
         (j_matrix(n, l) + row_restrict(positive_part(scaled(node.b.matrix(), eps)), l));
}

IntMatrix mutate_g_signed(const PatternNode& node, int l) {
  check_direction(l, node.rank(), "mutate_g_signed");
  int eps = tropical_sign_column(node.c, l);
  int n = node.rank();
  return node.g *
         (j_matrix(n, l) + col_restrict(positive_part(scaled(node.b.matrix(), -eps)), l));
}

IntMatrix mutate_fmat_signed(const PatternNode& node, int l, const IntMatrix& c_neg) {
  check_direction(l, node.rank(), "mutate_fmat_signed");
  if (c_neg.rows() != node.rank() || c_neg.cols() != node.rank())
    throw DimensionMismatch("mutate_fmat_signed: companion C-matrix has wrong shape");
  int n = node.rank();
  const IntMatrix& bt = node.b.matrix();
  int eps_neg = tropical_sign_column(c_neg, l);
  IntMatrix first = node.f * (j_matrix(n, l) +
                              col_restrict(positive_part(scaled(bt, eps_neg)), l)) +
                    col_restrict(positive_part(scaled(node.c, eps_neg)), l);
  int eps_pos = tropical_sign_column(node.c, l);
  IntMatrix second = node.f * (j_matrix(n, l) +
                               col_restrict(positive_part(scaled(bt, -eps_pos)), l)) +
                     col_restrict(positive_part(scaled(c_neg, eps_pos)), l);
  if (first != second)
    throw HMismatch("mutate_fmat_signed: the two tropical-sign forms disagree at direction " +
                    std::to_string(l));
  return first;
}

PatternNode mutate_node(const PatternNode& node, int l) {
  PatternNode out{node.initial_b,
                  node.b.mutated(l),
                  mutate_c(node, l, +1),
                  mutate_g(node, l, +1),
                  mutate_fmat_max(node, l),
                  mutate_fpolys(node, l),
                  node.walk.appended(l)};
  return out;
}

std::string WalkCache::key(const ExchangeMatrix& b, const Walk& walk) {
  std::ostringstream os;
  os << b.rank() << ":";
  for (int i = 0; i < b.rank(); ++i)
    for (int j = 0; j < b.rank(); ++j) os << b.matrix()(i, j).get_str() << ",";
  os << "|";
  for (const auto& d : b.symmetrizer()) os << d.get_str() << ",";
  os << "|" << walk.to_text();
  return os.str();
}

std::shared_ptr<const PatternNode> WalkCache::find(const ExchangeMatrix& b,
                                                   const Walk& walk) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = nodes_.find(key(b, walk));
  return it == nodes_.end() ? nullptr : it->second;
}

void WalkCache::store(std::shared_ptr<const PatternNode> node) {
  std::lock_guard<std::mutex> lock(mutex_);
  nodes_.emplace(key(node->initial_b, node->walk), std::move(node));
}

namespace {

void require(bool condition, const char* what, const PatternNode& node, int l) {
  if (!condition)
    throw Error(std::string("checked walk: ") + what + " failed at walk (" +
                node.walk.to_text() + ") step " + std::to_string(l));
}

// All the redundant-formula and invariant checks for one step t -> t'.
void verify_step(const PatternNode& node, const PatternNode& neg, int l, const PatternNode& next) {
  require(mutate_c(node, l, -1) == next.c, "eps-independence of the C-recursion", node, l);
  require(mutate_g(node, l, -1) == next.g, "eps-independence of the G-recursion", node, l);
  require(mutate_c_signed(node, l) == next.c, "reduced C-recursion", node, l);
  require(mutate_g_signed(node, l) == next.g, "reduced G-recursion", node, l);
  require(mutate_fmat_eps(node, l, +1, neg.c) == next.f, "eps=+1 F-matrix recursion", node, l);
  require(mutate_fmat_eps(node, l, -1, neg.c) == next.f, "eps=-1 F-matrix recursion", node, l);
  require(mutate_fmat_signed(node, l, neg.c) == next.f, "reduced F-matrix recursion", node, l);
}

void verify_node(const PatternNode& node) {
  int n = node.rank();
  require(node.g * node.b.matrix() == node.initial_b.matrix() * node.c, "G_t B_t = B C_t", node,
          0);
  BigInt det = determinant(node.c);
  require(det == 1 || det == -1, "det C = +-1", node, 0);
  for (int l = 1; l <= n; ++l) {
    tropical_sign_column(node.c, l);  // throws SignIncoherent on violation
    tropical_sign_row(node.g, l);
  }
  for (int j = 0; j < n; ++j) {
    const SparsePoly& fp = node.fpolys[j];
    require(!fp.is_zero() && fp.has_positive_coefficients(), "F-polynomial positivity", node, 0);
    require(fp.constant_term() == 1, "F-polynomial constant term 1", node, 0);
    require(fp.has_unique_maximal_monomial(), "unique maximal monomial", node, 0);
    auto degrees = fp.max_degree_vector();
    for (int i = 0; i < n; ++i)
      require(node.f(i, j) == degrees[i], "F-matrix equals F-polynomial degrees", node, 0);
  }
}

}  // namespace

PatternNode walk_node(const ExchangeMatrix& b, const Walk& walk, WalkCache* cache,
                      VerifyLevel level) {
  walk.validate(b.rank());

  if (level == VerifyLevel::checked) {
    PatternNode node = initial_node(b);
    PatternNode neg = initial_node(b.negated());
    for (int l : walk.labels) {
      PatternNode next = mutate_node(node, l);
      PatternNode next_neg = mutate_node(neg, l);
      verify_step(node, neg, l, next);
      node = std::move(next);
      neg = std::move(next_neg);
      verify_node(node);
      verify_node(neg);
      IdentityReport rel = negated_pattern_relations(node, neg);
      if (!rel.ok)
        throw Error("checked walk: " + rel.failures.front() + " at walk (" +
                    node.walk.to_text() + ")");
      h_matrix(node);  // throws HMismatch if the two routes split
      h_matrix(neg);
    }
    if (cache) cache->store(std::make_shared<PatternNode>(node));
    return node;
  }

  PatternNode node = initial_node(b);
  std::size_t start = 0;
  if (cache) {
    for (std::size_t len = walk.length(); len > 0; --len) {
      if (auto hit = cache->find(b, walk.prefix(len))) {
        node = *hit;
        start = len;
        break;
      }
    }
  }
  for (std::size_t i = start; i < walk.length(); ++i) {
    node = mutate_node(node, walk.labels[i]);
    if (cache) cache->store(std::make_shared<PatternNode>(node));
  }
  return node;
}

IntMatrix h_matrix(const PatternNode& node) {
  int n = node.rank();
  IntMatrix by_degrees(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      by_degrees(i, j) = h_entry(node.fpolys[j], i + 1, node.initial_b);
  IntMatrix by_g = -positive_part(-node.g);
  if (by_degrees != by_g)
    throw HMismatch("h_matrix: tropical-degree route and -[-G]_+ disagree at walk (" +
                    node.walk.to_text() + ")");
  return by_degrees;
}

bool seed_data_equal(const PatternNode& a, const PatternNode& b) {
  if (!(a.b == b.b) || a.c != b.c || a.g != b.g || a.f != b.f) return false;
  if (a.fpolys.size() != b.fpolys.size()) return false;
  for (std::size_t j = 0; j < a.fpolys.size(); ++j)
    if (a.fpolys[j] != b.fpolys[j]) return false;
  return true;
}

IdentityReport negated_pattern_relations(const PatternNode& node, const PatternNode& node_neg) {
  if (node_neg.initial_b.matrix() != -node.initial_b.matrix())
    throw InvalidArgument("negated_pattern_relations: companion was not rooted at -B");
  if (!(node_neg.walk == node.walk))
    throw InvalidArgument("negated_pattern_relations: companion walked a different path");
  IdentityReport report;
  if (node_neg.c != node.c + node.f * node.b.matrix())
    report.fail("C^{-B} = C^B + F^B B_t fails at walk (" + node.walk.to_text() + ")");
  if (node_neg.g != node.g + node.initial_b.matrix() * node.f)
    report.fail("G^{-B} = G^B + B F^B fails at walk (" + node.walk.to_text() + ")");
  if (node_neg.f != node.f)
    report.fail("F^{-B} = F^B fails at walk (" + node.walk.to_text() + ")");
  return report;
}

}  // namespace cluspat
