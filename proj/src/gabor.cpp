#include "etf/gabor.hpp"

#include <sstream>

namespace etf {
namespace detail {

void check_index(const GroupShape& shape, const GroupIndex& index) {
  if (static_cast<int>(index.digits.size()) != shape.factors()) {
    throw Error(ErrorCode::kIndexOutOfRange, "group index has wrong number of components");
  }
  for (int l = 0; l < shape.factors(); ++l) {
    if (index.digits[l] < 0 || index.digits[l] >= shape.moduli()[l]) {
      throw Error(ErrorCode::kIndexOutOfRange, "group index component out of range");
    }
  }
}

long inverse_of_two(long modulus) { return (modulus + 1) / 2; }

long mod(long long value, long modulus) {
  long long r = value % modulus;
  if (r < 0) r += modulus;
  return static_cast<long>(r);
}

}  // namespace detail

GroupShape::GroupShape(std::vector<long> moduli) : moduli_(std::move(moduli)) {
  if (moduli_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "group shape must have at least one factor");
  }
  for (long m : moduli_) {
    if (m < 3 || m % 2 == 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "group shape factors must be odd integers >= 3");
    }
    size_ *= m;
    lcm_ = std::lcm(lcm_, m);
  }
}

GroupShape GroupShape::parse(const std::string& comma_separated) {
  std::vector<long> moduli;
  std::stringstream ss(comma_separated);
  std::string token;
  while (std::getline(ss, token, ',')) {
    try {
      size_t pos = 0;
      const long value = std::stol(token, &pos);
      if (pos != token.size()) throw std::invalid_argument(token);
      moduli.push_back(value);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kInvalidArgument, "invalid shape component: '" + token + "'");
    }
  }
  return GroupShape(moduli);
}

std::string GroupShape::to_string() const {
  std::string out;
  for (size_t i = 0; i < moduli_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(moduli_[i]);
  }
  return out;
}

long rank_of(const GroupShape& shape, const GroupIndex& index) {
  detail::check_index(shape, index);
  long rank = 0;
  for (int l = 0; l < shape.factors(); ++l) {
    rank = rank * shape.moduli()[l] + index.digits[l];
  }
  return rank;
}

GroupIndex index_at(const GroupShape& shape, long rank) {
  if (rank < 0 || rank >= shape.size()) {
    throw Error(ErrorCode::kIndexOutOfRange, "group rank out of range");
  }
  GroupIndex index;
  index.digits.assign(static_cast<size_t>(shape.factors()), 0);
  for (int l = shape.factors() - 1; l >= 0; --l) {
    index.digits[l] = rank % shape.moduli()[l];
    rank /= shape.moduli()[l];
  }
  return index;
}

std::vector<GroupIndex> fiducial_index_set(const GroupShape& shape) {
  const long half = (shape.size() - 1) / 2;
  std::vector<GroupIndex> out;
  out.reserve(static_cast<size_t>(half));
  for (long rank = 0; rank < half; ++rank) out.push_back(index_at(shape, rank));
  return out;
}

namespace {

std::string pair_label(const GroupShape& shape, long pair_rank) {
  const GroupIndex k = index_at(shape, pair_rank / shape.size());
  const GroupIndex kappa = index_at(shape, pair_rank % shape.size());
  std::string out = "(";
  for (int l = 0; l < shape.factors(); ++l) {
    if (l > 0) out += ",";
    out += std::to_string(k.digits[l]);
  }
  out += ";";
  for (int l = 0; l < shape.factors(); ++l) {
    if (l > 0) out += ",";
    out += std::to_string(kappa.digits[l]);
  }
  out += ")";
  return out;
}

}  // namespace

Frame gabor_steiner(const GroupShape& shape) {
  MatrixXc vectors = orbit_synthesis<Complex>(shape);
  const long count = shape.etf_count();
  std::vector<std::string> labels(static_cast<size_t>(count));
  for (long j = 0; j < count; ++j) labels[static_cast<size_t>(j)] = pair_label(shape, j);
  return make_frame(std::move(vectors), std::move(labels), NormConvention::kRaw);
}

MatrixXcy gram_exact(const GroupShape& shape) {
  const MatrixXcy synthesis = orbit_synthesis<Cyclotomic>(shape);
  return adjoint_exact(synthesis) * synthesis;
}

MatrixXcy gram_closed_form(const GroupShape& shape) {
  const long size = shape.size();
  const long count = shape.etf_count();
  const Cyclotomic diag(size - 1);

  MatrixXcy out = MatrixXcy::Constant(count, count, Cyclotomic(0));
  for (long row = 0; row < count; ++row) {
    const GroupIndex kt = index_at(shape, row / size);      // k~
    const GroupIndex qt = index_at(shape, row % size);      // kappa~
    for (long col = 0; col < count; ++col) {
      if (row == col) {
        out(row, col) = diag;
        continue;
      }
      const GroupIndex k = index_at(shape, col / size);
      const GroupIndex q = index_at(shape, col % size);
      Cyclotomic value(-1);
      for (int l = 0; l < shape.factors(); ++l) {
        const long m = shape.moduli()[l];
        const long long exponent =
            static_cast<long long>(q.digits[l] - qt.digits[l]) *
            (kt.digits[l] + k.digits[l] - 1) * detail::inverse_of_two(m);
        value *= Cyclotomic::root_of_unity(m, detail::mod(exponent, m));
      }
      out(row, col) = value;
    }
  }
  return out;
}

Complex weyl_commutation_phase(const GroupShape& shape, const GroupIndex& k,
                               const GroupIndex& kappa) {
  Complex phase(1.0, 0.0);
  for (int l = 0; l < shape.factors(); ++l) {
    const long m = shape.moduli()[l];
    phase *= ScalarTraits<Complex>::root(
        m, detail::mod(static_cast<long long>(k.digits[l]) * kappa.digits[l], m));
  }
  return phase;
}

}  // namespace etf
