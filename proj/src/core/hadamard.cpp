#include "hadcode/hadamard.hpp"

#include <string>

#include "hadcode/error.hpp"
#include "hadcode/gf.hpp"

namespace hadcode {

namespace {

void check_cap(std::uint64_t order, std::uint64_t cap) {
  if (order > cap) {
    throw Error(Errc::SizeCapExceeded,
                "order " + std::to_string(order) + " exceeds cap " + std::to_string(cap));
  }
}

gf::PrimePower require_prime_power(std::uint64_t q) {
  const auto pp = gf::prime_power(q);
  if (!pp) throw Error(Errc::NotPrimePower, std::to_string(q) + " is not a prime power");
  return *pp;
}

BipolarMatrix verified(BipolarMatrix m, const char* what) {
  if (!is_hadamard(m)) {
    throw Error(Errc::ConstructionFailed, std::string(what) + " output failed the Hadamard check");
  }
  return m;
}

}  // namespace

BipolarMatrix sylvester(unsigned a, std::uint64_t order_cap) {
  if (a >= 63) throw Error(Errc::SizeCapExceeded, "Sylvester exponent too large");
  const std::uint64_t order = std::uint64_t{1} << a;
  check_cap(order, order_cap);

  BipolarMatrix h(1, 1, +1);
  for (unsigned step = 0; step < a; ++step) {
    const std::size_t n = h.rows();
    BipolarMatrix next(2 * n, 2 * n, +1);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        const int s = h.at(r, c);
        next.set(r, c, s);
        next.set(r, n + c, s);
        next.set(n + r, c, s);
        next.set(n + r, n + c, -s);
      }
    }
    h = std::move(next);
  }
  return verified(std::move(h), "Sylvester");
}

BipolarMatrix paley_one(std::uint64_t q, std::uint64_t order_cap) {
  require_prime_power(q);
  if (q % 4 != 3) throw Error(Errc::BadResidueClass, std::to_string(q) + " is not 3 mod 4");
  check_cap(q + 1, order_cap);

  const auto field = gf::make_field_of_order(q);
  const auto chi = field.character_table();
  const auto size = static_cast<std::uint32_t>(q);

  BipolarMatrix h(size + 1, size + 1, +1);
  for (std::uint32_t j = 1; j <= size; ++j) h.set(j, 0, -1);
  for (std::uint32_t i = 0; i < size; ++i) {
    for (std::uint32_t j = 0; j < size; ++j) {
      if (i != j && chi[field.sub_encoded(i, j)] < 0) h.set(1 + i, 1 + j, -1);
    }
  }
  return verified(std::move(h), "Paley I");
}

BipolarMatrix paley_two(std::uint64_t q, std::uint64_t order_cap) {
  require_prime_power(q);
  if (q % 4 != 1) throw Error(Errc::BadResidueClass, std::to_string(q) + " is not 1 mod 4");
  check_cap(2 * (q + 1), order_cap);

  const auto field = gf::make_field_of_order(q);
  const auto chi = field.character_table();
  const auto size = static_cast<std::uint32_t>(q);

  auto conference = [&](std::uint32_t r, std::uint32_t c) -> int {
    if (r == 0 && c == 0) return 0;
    if (r == 0 || c == 0) return 1;
    return chi[field.sub_encoded(r - 1, c - 1)];
  };

  BipolarMatrix h(2 * (size + 1), 2 * (size + 1), +1);
  for (std::uint32_t r = 0; r <= size; ++r) {
    for (std::uint32_t c = 0; c <= size; ++c) {
      int block[2][2];
      switch (conference(r, c)) {
        case 0: block[0][0] = 1, block[0][1] = -1, block[1][0] = -1, block[1][1] = -1; break;
        case 1: block[0][0] = 1, block[0][1] = 1, block[1][0] = 1, block[1][1] = -1; break;
        default: block[0][0] = -1, block[0][1] = -1, block[1][0] = -1, block[1][1] = 1; break;
      }
      for (int dr = 0; dr < 2; ++dr) {
        for (int dc = 0; dc < 2; ++dc) h.set(2 * r + dr, 2 * c + dc, block[dr][dc]);
      }
    }
  }
  return verified(std::move(h), "Paley II");
}

BipolarMatrix twin_prime(std::uint64_t q, std::uint64_t order_cap) {
  if (q % 2 == 0 || !gf::prime_power(q) || !gf::prime_power(q + 2)) {
    throw Error(Errc::NotTwinPrimePowers,
                std::to_string(q) + " and " + std::to_string(q + 2) + " are not both odd prime powers");
  }
  const std::uint64_t n_core = q * (q + 2);
  check_cap(n_core + 1, order_cap);

  const auto f1 = gf::make_field_of_order(q);
  const auto f2 = gf::make_field_of_order(q + 2);
  const auto chi1 = f1.character_table();
  const auto chi2 = f2.character_table();
  const auto q1 = static_cast<std::uint32_t>(q);
  const auto q2 = static_cast<std::uint32_t>(q + 2);
  const auto n = static_cast<std::uint32_t>(n_core);

  // Group element (x, y) has index x * (q + 2) + y.
  std::vector<std::uint8_t> in_set(n, 0);
  std::uint64_t set_size = 0;
  for (std::uint32_t x = 0; x < q1; ++x) {
    for (std::uint32_t y = 0; y < q2; ++y) {
      const bool member = y == 0 || chi1[x] * chi2[y] == 1;
      in_set[x * q2 + y] = member;
      set_size += member;
    }
  }
  if (set_size != (n_core - 1) / 2) {
    throw Error(Errc::ConstructionFailed, "twin prime power difference set has wrong size");
  }

  BipolarMatrix core(n, n, -1);
  for (std::uint32_t u = 0; u < n; ++u) {
    const std::uint32_t xu = u / q2, yu = u % q2;
    for (std::uint32_t v = 0; v < n; ++v) {
      const std::uint32_t dx = f1.sub_encoded(v / q2, xu);
      const std::uint32_t dy = f2.sub_encoded(v % q2, yu);
      if (in_set[dx * q2 + dy]) core.set(u, v, +1);
    }
  }

  for (int sign : {+1, -1}) {
    BipolarMatrix h(n + 1, n + 1, +1);
    for (std::uint32_t u = 0; u < n; ++u) {
      for (std::uint32_t v = 0; v < n; ++v) h.set(1 + u, 1 + v, sign * core.at(u, v));
    }
    if (is_hadamard(h)) return h;
  }
  throw Error(Errc::ConstructionFailed, "twin prime construction failed for both signs");
}

BipolarMatrix kronecker_product(const BipolarMatrix& a, const BipolarMatrix& b) {
  BipolarMatrix out(a.rows() * b.rows(), a.cols() * b.cols(), +1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < b.rows(); ++k) {
      const std::size_t r = i * b.rows() + k;
      for (std::size_t j = 0; j < a.cols(); ++j) {
        const int s = a.at(i, j);
        for (std::size_t l = 0; l < b.cols(); ++l) out.set(r, j * b.cols() + l, s * b.at(k, l));
      }
    }
  }
  return out;
}

BipolarMatrix kronecker(const BipolarMatrix& a, const BipolarMatrix& b, std::uint64_t order_cap) {
  if (!a.is_square() || !b.is_square() || !is_hadamard(a) || !is_hadamard(b)) {
    throw Error(Errc::NotHadamardInput, "Kronecker factors must be Hadamard matrices");
  }
  check_cap(static_cast<std::uint64_t>(a.rows()) * b.rows(), order_cap);
  return verified(kronecker_product(a, b), "Kronecker");
}

bool is_hadamard(const BipolarMatrix& m) {
  if (!m.is_square()) {
    throw Error(Errc::NotSquare, std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " matrix");
  }
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = i + 1; j < m.rows(); ++j) {
      if (m.inner_product(i, j) != 0) return false;
    }
  }
  return true;
}

BipolarMatrix normalize(const BipolarMatrix& h) {
  if (!h.is_square() || !is_hadamard(h)) throw Error(Errc::NotHadamardInput, "normalize expects a Hadamard matrix");
  BipolarMatrix out = h;
  for (std::size_t c = 0; c < out.cols(); ++c) {
    if (out.at(0, c) < 0) out.negate_column(c);
  }
  for (std::size_t r = 1; r < out.rows(); ++r) {
    if (out.at(r, 0) < 0) out.negate_row(r);
  }
  return out;
}

}  // namespace hadcode
