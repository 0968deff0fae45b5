#include "sumset/ground_set.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "sumset/errors.hpp"

namespace sumset {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 n) { return static_cast<u64>(static_cast<u128>(a) * b % n); }

u64 pow_mod(u64 base, u64 exp, u64 n) {
  u64 result = 1 % n;
  base %= n;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, n);
    base = mul_mod(base, base, n);
    exp >>= 1;
  }
  return result;
}

std::string trim(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

template <typename T>
T parse_number(std::string_view token, std::string_view context) {
  T value{};
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError("bad token '" + std::string(token) + "' in " + std::string(context) +
                     "; expected comma-separated integers with optional 'mod p'");
  }
  return value;
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  constexpr u64 kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 p : kBases) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : kBases) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

GroundSet::GroundSet(std::vector<Element> elements, std::optional<u64> modulus)
    : elements_(std::move(elements)), modulus_(modulus) {
  if (elements_.empty()) throw DomainError("ground set must be nonempty (k >= 1)");
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  if (modulus_) {
    if (!is_prime(*modulus_))
      throw DomainError("modulus " + std::to_string(*modulus_) + " is not prime");
    if (elements_.front() < 0 || static_cast<u64>(elements_.back()) >= *modulus_)
      throw DomainError("residues must lie in [0, p-1] for p = " + std::to_string(*modulus_));
  }
}

bool GroundSet::contains(Element x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

std::string GroundSet::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i) os << ',';
    os << elements_[i];
  }
  if (modulus_) os << " mod " << *modulus_;
  return os.str();
}

Split split_h(std::int64_t h, std::int64_t r) {
  if (h < 1) throw DomainError("h >= 1 violated (h = " + std::to_string(h) + ")");
  if (r < 1) throw DomainError("r >= 1 violated (r = " + std::to_string(r) + ")");
  return {h / r, h % r};
}

SumParams::SumParams(std::int64_t h, std::int64_t r) : h_(h), r_(r) {
  auto [m, eps] = split_h(h, r);
  m_ = m;
  epsilon_ = eps;
}

ParsedSet parse_set_literal(std::string_view text, std::optional<u64> modulus) {
  std::string s = trim(text);
  std::optional<u64> literal_modulus;
  if (auto pos = s.find("mod"); pos != std::string::npos) {
    literal_modulus = parse_number<u64>(std::string_view(s).substr(pos + 3), "modulus");
    s.resize(pos);
  }
  if (literal_modulus && modulus && *literal_modulus != *modulus) {
    throw ParseError("set literal says mod " + std::to_string(*literal_modulus) +
                     " but modulus " + std::to_string(*modulus) + " was also given");
  }
  if (!literal_modulus) literal_modulus = modulus;
  if (s.empty()) throw ParseError("empty set literal; expected e.g. \"0,1,3,7 mod 11\"");

  std::vector<Element> values;
  std::string_view rest = s;
  while (true) {
    auto comma = rest.find(',');
    values.push_back(parse_number<Element>(rest.substr(0, comma), "set literal"));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }

  ParsedSet out{GroundSet(values, literal_modulus), {}};
  if (!std::is_sorted(values.begin(), values.end()))
    out.warnings.push_back("set literal was not sorted; sorted on parse");
  if (out.set.size() != values.size())
    out.warnings.push_back("set literal contained duplicates; removed on parse");
  return out;
}

}  // namespace sumset
