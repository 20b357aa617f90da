#include "antiatom/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "antiatom/error.hpp"
#include "antiatom/pf_structure.hpp"

namespace antiatom {

std::string_view to_string(Family f) {
  switch (f) {
    case Family::nf:
      return "NF";
    case Family::ndf:
      return "NDF";
    case Family::five_multiples:
      return "five_multiples";
    case Family::interleaved_odd:
      return "interleaved_odd";
    case Family::med_example:
      return "med_example";
  }
  return "NF";
}

std::optional<Family> parse_family(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "nf") return Family::nf;
  if (lower == "ndf") return Family::ndf;
  if (lower == "five_multiples") return Family::five_multiples;
  if (lower == "interleaved_odd") return Family::interleaved_odd;
  if (lower == "med_example") return Family::med_example;
  return std::nullopt;
}

namespace {

void require_params(Family f, std::span<const Element> params, std::size_t count) {
  if (params.size() != count) {
    throw InvalidInput(std::string(to_string(f)) + " takes " + std::to_string(count) +
                       " parameter(s), got " + std::to_string(params.size()));
  }
}

NumericalSemigroup from_members(Element frobenius, const std::vector<Element>& small) {
  boost::dynamic_bitset<> flags(static_cast<std::size_t>(frobenius + 1));
  for (Element x : small) flags.set(static_cast<std::size_t>(x));
  return NumericalSemigroup::from_set(NumericalSet::from_membership(flags));
}

}  // namespace

FamilyInstance make_family(Family name, std::span<const Element> params) {
  FamilyInstance out{name, {params.begin(), params.end()}, NumericalSemigroup{}, {}, {}};
  switch (name) {
    case Family::nf: {
      require_params(name, params, 1);
      const Element f = params[0];
      if (f < 1) throw InvalidInput("NF needs F >= 1");
      out.semigroup = from_members(f, {0});
      break;
    }
    case Family::ndf: {
      if (params.empty()) throw InvalidInput("NDF takes [F, d1, ..., dk]");
      const Element f = params[0];
      std::vector<Element> small{0};
      Element largest = 0;
      for (std::size_t i = 1; i < params.size(); ++i) {
        if (params[i] < 1) throw InvalidInput("NDF offsets must be positive");
        largest = std::max(largest, params[i]);
        small.push_back(f - params[i]);
      }
      if (f < 1 || f <= 2 * largest) {
        throw InvalidInput("NDF needs F > 2 max(D); got F = " + std::to_string(f) +
                           ", max(D) = " + std::to_string(largest));
      }
      out.semigroup = from_members(f, small);
      break;
    }
    case Family::five_multiples: {
      require_params(name, params, 1);
      const Element n = params[0];
      if (n < 1) throw InvalidInput("five_multiples needs n >= 1");
      std::vector<Element> small;
      for (Element k = 0; k < n; ++k) small.push_back(5 * k);
      out.semigroup = from_members(5 * n - 1, small);
      out.predicted_type = 4;
      out.predicted_P = static_cast<std::uint64_t>(2 * n + 4);
      break;
    }
    case Family::interleaved_odd: {
      require_params(name, params, 1);
      const Element n = params[0];
      if (n < 1) throw InvalidInput("interleaved_odd needs n >= 1");
      const Element m = 2 * n + 1;
      std::vector<Element> small{0};
      for (Element k = 0; k < n; ++k) small.push_back(m + 2 * k);
      out.semigroup = from_members(2 * m - 1, small);
      out.predicted_type = static_cast<std::size_t>(n + 1);
      out.predicted_P = 2;
      break;
    }
    case Family::med_example: {
      require_params(name, params, 1);
      const Element m = params[0];
      if (m < 2) throw InvalidInput("med_example needs m >= 2");
      if (m > 62) throw InvalidInput("med_example supports m <= 62");
      std::vector<Element> generators{m};
      for (Element k = 1; k <= m - 2; ++k) generators.push_back(m * (m + k - 1) + k);
      generators.push_back(m * (2 * m - 1) + m - 1);
      out.semigroup = NumericalSemigroup::from_generators(generators);
      out.predicted_type = static_cast<std::size_t>(m - 1);
      // F = m(2m-2) + m - 1 is odd whenever m is even.
      const Element exponent = m % 2 == 1 ? (m - 1) / 2 : (m - 2) / 2;
      out.predicted_P = std::uint64_t{1} << exponent;
      break;
    }
  }
  return out;
}

std::uint64_t classify_type2(const NumericalSemigroup& s) {
  if (s.type() != 2) {
    throw InvalidInput("expected a semigroup of type 2, got type " + std::to_string(s.type()));
  }
  return 2;
}

Type3Classification classify_type3(const NumericalSemigroup& s) {
  if (s.type() != 3) {
    throw InvalidInput("expected a semigroup of type 3, got type " + std::to_string(s.type()));
  }
  Type3Classification out;
  const auto& pf = s.pseudo_frobenius();
  out.p = pf[0];
  out.q = pf[1];
  out.f = pf[2];
  const bool connected = s.contains(out.p + out.q - out.f);
  const bool difference_in_void = s.in_void(out.q - out.p);
  if (!connected) {
    out.case_number = 1;
    out.predicted_P = 4;
  } else if (!difference_in_void) {
    out.case_number = 2;
    out.predicted_P = 2;
  } else if (out.f + out.p == 2 * out.q) {
    out.case_number = 3;
    out.predicted_P = 3;
  } else {
    out.case_number = 4;
    out.predicted_P = 4;
  }
  out.p_minimal = !difference_in_void;
  return out;
}

bool has_maximal_embedding_dimension(const NumericalSemigroup& s) {
  return static_cast<Element>(s.embedding_dimension()) == s.multiplicity();
}

std::uint64_t med_triangle_free_P(const NumericalSemigroup& s) {
  if (!has_maximal_embedding_dimension(s)) {
    throw InvalidInput("not of maximal embedding dimension: e(S) = " +
                       std::to_string(s.embedding_dimension()) +
                       ", m(S) = " + std::to_string(s.multiplicity()));
  }
  if (!is_triangle_free(s)) throw InvalidInput("not triangle-free: Tr(S) is nonempty");
  const Element m = s.multiplicity();
  const Element f = s.frobenius();
  Element exponent = 0;
  if (m % 2 == 1) {
    exponent = (m - 1) / 2;
  } else if (f % 2 != 0) {
    exponent = (m - 2) / 2;
  } else {
    exponent = m / 2;
  }
  if (exponent >= 64) throw InvalidInput("multiplicity too large for a 64-bit count");
  return std::uint64_t{1} << exponent;
}

bool void_order_is_congruence(const NumericalSemigroup& s) {
  const auto& void_elements = s.void_elements();
  const Element m = s.multiplicity();
  for (std::size_t i = 0; i < void_elements.size(); ++i) {
    for (std::size_t j = i; j < void_elements.size(); ++j) {
      const Element d = void_elements[j] - void_elements[i];
      if (s.contains(d) != (d % m == 0)) return false;
    }
  }
  return true;
}

}  // namespace antiatom
