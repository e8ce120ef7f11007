#include "sectorlab/maps.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "sectorlab/sector.hpp"

namespace sectorlab {

namespace {

constexpr double kUnitalTol = 1e-12;

std::string join(const std::vector<Index>& v, char sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << sep;
    os << v[i];
  }
  return os.str();
}

std::vector<Index> parse_indices(std::string_view text, char sep, std::string_view context) {
  std::vector<Index> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t next = std::min(text.find(sep, pos), text.size());
    const std::string_view tok = text.substr(pos, next - pos);
    long long value = 0;
    auto res = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || res.ec != std::errc() || res.ptr != tok.data() + tok.size()) {
      throw Error(ErrorKind::InvalidArgument, std::string(context) + ": bad index list '" + std::string(text) + "'");
    }
    out.push_back(static_cast<Index>(value));
    pos = next + 1;
  }
  return out;
}

std::uint64_t parse_seed(std::string_view text, std::string_view context) {
  std::uint64_t value = 0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw Error(ErrorKind::InvalidArgument, std::string(context) + ": bad seed '" + std::string(text) + "'");
  }
  return value;
}

// Random correlation matrix: normalized Gram matrix of random columns.
Matrix random_correlation(Index n, Rng& rng) {
  const Matrix g = random_gaussian(n, n, rng);
  Matrix c = g.adjoint() * g;
  RealVector d(n);
  for (Index i = 0; i < n; ++i) d(i) = 1.0 / std::sqrt(c(i, i).real());
  c = d.asDiagonal() * c * d.asDiagonal();
  for (Index i = 0; i < n; ++i) c(i, i) = 1.0;
  return Hermitian(c).matrix();
}

}  // namespace

void PositiveMap::finalize(bool hadamard_multiplicative) {
  const Matrix image = apply(Matrix::Identity(in_, in_));
  if (image.rows() != out_ || image.cols() != out_) {
    throw Error(ErrorKind::DimensionMismatch, id_ + ": output shape mismatch");
  }
  flags_.unital = frobenius_norm(image - Matrix::Identity(out_, out_)) <= kUnitalTol;
  flags_.hadamard_multiplicative = hadamard_multiplicative;

  // positivity spot-check on 20 random Gram matrices
  Rng rng(0x5EC7042ULL + static_cast<std::uint64_t>(in_));
  for (int k = 0; k < 20; ++k) {
    const Matrix g = random_gaussian(in_, in_, rng);
    const Hermitian img(apply(g.adjoint() * g));
    const double scale = spectral_norm(img);
    if (lambda_min(img) < -1e-10 * (1.0 + scale)) {
      throw Error(ErrorKind::InvalidArgument, id_ + ": failed the positivity spot-check");
    }
  }
}

PositiveMap PositiveMap::identity(Index n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "identity map: n must be >= 1");
  PositiveMap m;
  m.kind_ = MapKind::Identity;
  m.in_ = m.out_ = n;
  m.id_ = "identity";
  m.finalize(true);
  return m;
}

PositiveMap PositiveMap::unitary_congruence(const Matrix& u) {
  require_square(u, "unitary_congruence");
  if (frobenius_norm(u.adjoint() * u - Matrix::Identity(u.rows(), u.cols())) > 1e-12 * u.rows()) {
    throw Error(ErrorKind::InvalidArgument, "unitary_congruence: operand is not unitary");
  }
  PositiveMap m;
  m.kind_ = MapKind::UnitaryCongruence;
  m.in_ = m.out_ = u.rows();
  m.operand_ = u;
  m.id_ = "unitary";
  m.finalize(false);
  return m;
}

PositiveMap PositiveMap::permutation_congruence(std::vector<Index> perm) {
  const auto n = static_cast<Index>(perm.size());
  std::vector<Index> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (Index i = 0; i < n; ++i) {
    if (sorted[static_cast<std::size_t>(i)] != i) {
      throw Error(ErrorKind::InvalidArgument, "perm: not a permutation of 0..n-1");
    }
  }
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "perm: empty permutation");
  PositiveMap m;
  m.kind_ = MapKind::PermutationCongruence;
  m.in_ = m.out_ = n;
  m.id_ = "perm:" + join(perm, ',');
  m.indices_ = std::move(perm);
  m.finalize(true);
  return m;
}

PositiveMap PositiveMap::isometry_compression(const Matrix& v) {
  if (v.rows() < v.cols() || v.cols() < 1) {
    throw Error(ErrorKind::DimensionMismatch, "compress: isometry must be n x m with n >= m >= 1");
  }
  if (frobenius_norm(v.adjoint() * v - Matrix::Identity(v.cols(), v.cols())) > 1e-12 * v.cols()) {
    throw Error(ErrorKind::InvalidArgument, "compress: operand fails X*X = I");
  }
  PositiveMap m;
  m.kind_ = MapKind::IsometryCompression;
  m.in_ = v.rows();
  m.out_ = v.cols();
  m.operand_ = v;
  m.id_ = "compress";
  m.finalize(false);
  return m;
}

PositiveMap PositiveMap::principal_submatrix(Index n, std::vector<Index> indices) {
  if (indices.empty()) throw Error(ErrorKind::InvalidArgument, "submatrix: empty index set");
  std::vector<Index> sorted = indices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() || sorted.front() < 0 ||
      sorted.back() >= n) {
    throw Error(ErrorKind::InvalidArgument, "submatrix: indices must be distinct and within 0..n-1");
  }
  PositiveMap m;
  m.kind_ = MapKind::PrincipalSubmatrix;
  m.in_ = n;
  m.out_ = static_cast<Index>(indices.size());
  m.id_ = "submatrix:" + join(indices, ',');
  m.indices_ = std::move(indices);
  m.finalize(true);
  return m;
}

PositiveMap PositiveMap::pinching(std::vector<Index> block_sizes) {
  if (block_sizes.empty() ||
      std::any_of(block_sizes.begin(), block_sizes.end(), [](Index b) { return b < 1; })) {
    throw Error(ErrorKind::InvalidArgument, "pinch: block sizes must be positive");
  }
  PositiveMap m;
  m.kind_ = MapKind::Pinching;
  m.in_ = m.out_ = std::accumulate(block_sizes.begin(), block_sizes.end(), Index{0});
  m.id_ = "pinch:" + join(block_sizes, '+');
  m.indices_ = std::move(block_sizes);
  m.finalize(false);
  return m;
}

PositiveMap PositiveMap::trace_normalized(Index n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "trace: n must be >= 1");
  PositiveMap m;
  m.kind_ = MapKind::TraceNormalized;
  m.in_ = m.out_ = n;
  m.id_ = "trace";
  m.finalize(false);
  return m;
}

PositiveMap PositiveMap::schur_multiplier(const Matrix& c) {
  require_square(c, "schur_multiplier");
  const Hermitian h(c);
  if (frobenius_norm(h.matrix() - c) > 1e-12 * (1.0 + frobenius_norm(c))) {
    throw Error(ErrorKind::InvalidArgument, "schur: multiplier is not Hermitian");
  }
  for (Index i = 0; i < c.rows(); ++i) {
    if (std::abs(c(i, i) - 1.0) > 1e-12) {
      throw Error(ErrorKind::InvalidArgument, "schur: multiplier needs a unit diagonal");
    }
  }
  if (lambda_min(h) < -1e-12) throw Error(ErrorKind::InvalidArgument, "schur: multiplier is not PSD");
  PositiveMap m;
  m.kind_ = MapKind::SchurMultiplier;
  m.in_ = m.out_ = c.rows();
  m.operand_ = h.matrix();
  m.id_ = "schur";
  m.finalize(false);
  return m;
}

PositiveMap PositiveMap::compose(const PositiveMap& first, const PositiveMap& second) {
  if (first.out_ != second.in_) {
    throw Error(ErrorKind::DimensionMismatch, "compose: output of first map does not feed second");
  }
  PositiveMap m;
  m.kind_ = MapKind::Composition;
  m.in_ = first.in_;
  m.out_ = second.out_;
  m.id_ = first.id_ + "|" + second.id_;
  m.parts_ = {first, second};
  m.finalize(first.flags_.hadamard_multiplicative && second.flags_.hadamard_multiplicative);
  return m;
}

Matrix PositiveMap::apply(const Matrix& x) const {
  if (x.rows() != in_ || x.cols() != in_) {
    std::ostringstream os;
    os << id_ << ": expected " << in_ << "x" << in_ << " input, got " << x.rows() << "x" << x.cols();
    throw Error(ErrorKind::DimensionMismatch, os.str());
  }
  switch (kind_) {
    case MapKind::Identity:
      return x;
    case MapKind::UnitaryCongruence:
    case MapKind::IsometryCompression:
      return operand_.adjoint() * x * operand_;
    case MapKind::PermutationCongruence: {
      Matrix out(in_, in_);
      for (Index i = 0; i < in_; ++i)
        for (Index j = 0; j < in_; ++j) out(i, j) = x(indices_[i], indices_[j]);
      return out;
    }
    case MapKind::PrincipalSubmatrix: {
      Matrix out(out_, out_);
      for (Index i = 0; i < out_; ++i)
        for (Index j = 0; j < out_; ++j) out(i, j) = x(indices_[i], indices_[j]);
      return out;
    }
    case MapKind::Pinching: {
      Matrix out = Matrix::Zero(in_, in_);
      Index offset = 0;
      for (Index b : indices_) {
        out.block(offset, offset, b, b) = x.block(offset, offset, b, b);
        offset += b;
      }
      return out;
    }
    case MapKind::TraceNormalized:
      return Matrix::Identity(in_, in_) * (x.trace() / static_cast<double>(in_));
    case MapKind::SchurMultiplier:
      return hadamard(operand_, x);
    case MapKind::Composition:
      return parts_[1].apply(parts_[0].apply(x));
  }
  return x;
}

std::string default_permutation_id(Index n) {
  std::vector<Index> perm(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = (i + 1) % n;
  return "perm:" + join(perm, ',');
}

PositiveMap parse_map(std::string_view id, Index n) {
  if (const auto bar = id.find('|'); bar != std::string_view::npos) {
    const PositiveMap first = parse_map(id.substr(0, bar), n);
    const PositiveMap second = parse_map(id.substr(bar + 1), first.output_dim());
    return PositiveMap::compose(first, second);
  }
  if (id == "identity") return PositiveMap::identity(n);
  if (id == "trace") return PositiveMap::trace_normalized(n);
  if (id == "cyclic") return parse_map(default_permutation_id(n), n);
  if (id.starts_with("perm:")) {
    auto perm = parse_indices(id.substr(5), ',', "perm");
    if (static_cast<Index>(perm.size()) != n) {
      throw Error(ErrorKind::DimensionMismatch, "perm: permutation length does not match dimension");
    }
    return PositiveMap::permutation_congruence(std::move(perm));
  }
  if (id.starts_with("submatrix:")) return PositiveMap::principal_submatrix(n, parse_indices(id.substr(10), ',', "submatrix"));
  if (id.starts_with("pinch:")) {
    auto blocks = parse_indices(id.substr(6), '+', "pinch");
    if (std::accumulate(blocks.begin(), blocks.end(), Index{0}) != n) {
      throw Error(ErrorKind::DimensionMismatch, "pinch: block sizes do not sum to the dimension");
    }
    return PositiveMap::pinching(std::move(blocks));
  }
  if (id.starts_with("unitary:")) {
    Rng rng(parse_seed(id.substr(8), "unitary"));
    PositiveMap m = PositiveMap::unitary_congruence(random_unitary(n, rng));
    m.id_ = std::string(id);
    return m;
  }
  if (id.starts_with("schur:")) {
    Rng rng(parse_seed(id.substr(6), "schur"));
    PositiveMap m = PositiveMap::schur_multiplier(random_correlation(n, rng));
    m.id_ = std::string(id);
    return m;
  }
  if (id.starts_with("compress:")) {
    const std::string_view rest = id.substr(9);
    const auto colon = rest.find(':');
    if (colon == std::string_view::npos) throw Error(ErrorKind::InvalidArgument, "compress: expected compress:<m>:<seed>");
    const auto m_dims = parse_indices(rest.substr(0, colon), ',', "compress");
    const Index m = m_dims.front();
    if (m < 1 || m > n) throw Error(ErrorKind::InvalidArgument, "compress: need 1 <= m <= n");
    Rng rng(parse_seed(rest.substr(colon + 1), "compress"));
    const Matrix v = random_unitary(n, rng).leftCols(m);
    PositiveMap out = PositiveMap::isometry_compression(v);
    out.id_ = std::string(id);
    return out;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown map id '" + std::string(id) + "'");
}

MapCheck check_re_commutes(const PositiveMap& phi, const Matrix& a, const TolerancePolicy&) {
  MapCheck c;
  const Matrix lhs = phi.apply(re_part(a).matrix());
  const Matrix rhs = re_part(phi.apply(a)).matrix();
  c.residual = frobenius_norm(lhs - rhs);
  c.tolerance = 1e-12 * (1.0 + frobenius_norm(a));
  c.ok = c.residual <= c.tolerance;
  return c;
}

MapCheck check_hadamard_multiplicative(const PositiveMap& phi, const Matrix& a, const Matrix& b,
                                       const TolerancePolicy&) {
  MapCheck c;
  const Matrix lhs = phi.apply(hadamard(a, b));
  const Matrix rhs = hadamard(phi.apply(a), phi.apply(b));
  c.residual = frobenius_norm(lhs - rhs);
  c.tolerance = 1e-12 * (1.0 + frobenius_norm(a) * frobenius_norm(b));
  c.ok = c.residual <= c.tolerance;
  return c;
}

}  // namespace sectorlab
