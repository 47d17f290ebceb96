#include "grouplat/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>

#include "grouplat/automorphism.hpp"
#include "grouplat/errors.hpp"

namespace grouplat {

namespace {

std::string trimmed(const std::string& s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

int parse_positive_int(const std::string& s, const std::string& context) {
  if (s.empty() ||
      !std::all_of(s.begin(), s.end(),
                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw ParseError("expected a positive integer in " + context + ": '" + s + "'");
  long long v = 0;
  for (char c : s) {
    v = v * 10 + (c - '0');
    if (v > 1000000) throw ParseError("number too large in " + context);
  }
  if (v == 0) throw ParseError("expected a positive integer in " + context);
  return static_cast<int>(v);
}

PermGroup cyclic_group(int n, const GroupCaps& caps) {
  std::vector<std::uint16_t> img(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    img[static_cast<size_t>(i)] = static_cast<std::uint16_t>((i + 1) % n);
  return PermGroup::close_generators(n, {Perm(std::move(img))},
                                     "C" + std::to_string(n), caps);
}

PermGroup dihedral_group(int order, const GroupCaps& caps) {
  if (order % 2 != 0 || order < 6)
    throw ParseError("dihedral spec D<m> needs even m >= 6 (use C2 or C2xC2 "
                     "for the degenerate cases); got D" + std::to_string(order));
  int n = order / 2;
  std::vector<std::uint16_t> rot(static_cast<size_t>(n));
  std::vector<std::uint16_t> ref(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    rot[static_cast<size_t>(i)] = static_cast<std::uint16_t>((i + 1) % n);
    ref[static_cast<size_t>(i)] = static_cast<std::uint16_t>((n - i) % n);
  }
  return PermGroup::close_generators(
      n, {Perm(std::move(rot)), Perm(std::move(ref))},
      "D" + std::to_string(order), caps);
}

PermGroup symmetric_group(int n, const GroupCaps& caps) {
  std::vector<Perm> gens;
  if (n >= 2) gens.push_back(Perm::from_cycles(n, "(1 2)"));
  if (n >= 3) {
    std::string cycle = "(";
    for (int i = 1; i <= n; ++i) cycle += (i > 1 ? " " : "") + std::to_string(i);
    cycle += ")";
    gens.push_back(Perm::from_cycles(n, cycle));
  }
  return PermGroup::close_generators(n, std::move(gens),
                                     "S" + std::to_string(n), caps);
}

PermGroup alternating_group(int n, const GroupCaps& caps) {
  std::vector<Perm> gens;
  if (n >= 3) gens.push_back(Perm::from_cycles(n, "(1 2 3)"));
  if (n >= 4) {
    // An n-cycle for odd n, an (n-1)-cycle on 2..n for even n; both are even.
    std::string cycle = "(";
    int first = (n % 2 == 1) ? 1 : 2;
    for (int i = first; i <= n; ++i)
      cycle += (i > first ? " " : "") + std::to_string(i);
    cycle += ")";
    gens.push_back(Perm::from_cycles(n, cycle));
  }
  return PermGroup::close_generators(n, std::move(gens),
                                     "A" + std::to_string(n), caps);
}

// Regular action of a group given in normal form a^i b^j with b a b⁻¹ = a^t
// and b^2 = a^s: covers Q8 (m=4, t=-1, s=2) and M16 (m=8, t=5, s=0).
PermGroup two_generator_metacyclic(int m, int t, int s, std::string name,
                                   const GroupCaps& caps) {
  const int n = 2 * m;
  auto point = [m](int i, int j) { return i + m * j; };
  std::vector<std::uint16_t> ga(static_cast<size_t>(n));
  std::vector<std::uint16_t> gb(static_cast<size_t>(n));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < 2; ++j) {
      // left multiplication by a: a · a^i b^j = a^(i+1) b^j
      ga[static_cast<size_t>(point(i, j))] =
          static_cast<std::uint16_t>(point((i + 1) % m, j));
      // left multiplication by b: b · a^i b^j = a^(t·i mod m) b^(j+1), and
      // b^2 = a^s folds in when j = 1.
      int ti = ((t * i) % m + m) % m;
      int ni = (j == 1) ? (ti + s) % m : ti;
      int nj = (j + 1) % 2;
      gb[static_cast<size_t>(point(i, j))] =
          static_cast<std::uint16_t>(point(ni, nj));
    }
  PermGroup G = PermGroup::close_generators(
      n, {Perm(std::move(ga)), Perm(std::move(gb))}, std::move(name), caps);
  GROUPLAT_CHECK(G.order() == n, "metacyclic regular action has wrong order");
  return G;
}

PermGroup direct_product(const PermGroup& A, const PermGroup& B,
                         const GroupCaps& caps) {
  const int deg = A.degree() + B.degree();
  std::vector<Perm> gens;
  for (int gi : A.generator_indices()) {
    std::vector<std::uint16_t> img(static_cast<size_t>(deg));
    for (int p = 0; p < A.degree(); ++p)
      img[static_cast<size_t>(p)] = A.element(gi)[p];
    for (int p = 0; p < B.degree(); ++p)
      img[static_cast<size_t>(A.degree() + p)] =
          static_cast<std::uint16_t>(A.degree() + p);
    gens.emplace_back(std::move(img));
  }
  for (int gi : B.generator_indices()) {
    std::vector<std::uint16_t> img(static_cast<size_t>(deg));
    for (int p = 0; p < A.degree(); ++p)
      img[static_cast<size_t>(p)] = static_cast<std::uint16_t>(p);
    for (int p = 0; p < B.degree(); ++p)
      img[static_cast<size_t>(A.degree() + p)] =
          static_cast<std::uint16_t>(A.degree() + B.element(gi)[p]);
    gens.emplace_back(std::move(img));
  }
  PermGroup G = PermGroup::close_generators(deg, std::move(gens),
                                            A.name() + "x" + B.name(), caps);
  GROUPLAT_CHECK(static_cast<long long>(G.order()) ==
                     static_cast<long long>(A.order()) * B.order(),
                 "direct product has wrong order");
  return G;
}

PermGroup parse_atom(const std::string& spec, const GroupCaps& caps) {
  if (spec == "Q8") return two_generator_metacyclic(4, -1, 2, "Q8", caps);
  if (spec == "M16") return two_generator_metacyclic(8, 5, 0, "M16", caps);
  if (spec.size() >= 2) {
    char kind = spec[0];
    std::string rest = spec.substr(1);
    switch (kind) {
      case 'C':
        return cyclic_group(parse_positive_int(rest, "C<n>"), caps);
      case 'D':
        return dihedral_group(parse_positive_int(rest, "D<m>"), caps);
      case 'S':
        return symmetric_group(parse_positive_int(rest, "S<n>"), caps);
      case 'A':
        return alternating_group(parse_positive_int(rest, "A<n>"), caps);
      default:
        break;
    }
  }
  throw ParseError("unrecognized group spec: '" + spec + "'");
}

PermGroup parse_perm_spec(const std::string& body, const GroupCaps& caps) {
  size_t colon = body.find(':');
  if (colon == std::string::npos)
    throw ParseError("perm spec needs 'perm:<degree>:<generators>'");
  int degree = parse_positive_int(trimmed(body.substr(0, colon)), "perm degree");
  std::string gens_text = body.substr(colon + 1);

  std::vector<Perm> gens;
  std::string current;
  int paren_depth = 0;
  auto flush = [&] {
    std::string g = trimmed(current);
    if (!g.empty()) gens.push_back(Perm::from_cycles(degree, g));
    current.clear();
  };
  for (char c : gens_text) {
    if (c == '(') ++paren_depth;
    if (c == ')') --paren_depth;
    if (c == ',' && paren_depth == 0) {
      flush();
      continue;
    }
    current += c;
  }
  if (paren_depth != 0) throw ParseError("unbalanced parentheses in perm spec");
  flush();
  return PermGroup::close_generators(degree, std::move(gens), "", caps);
}

PermGroup parse_sd_spec(const std::string& body, const GroupCaps& caps) {
  // sd:<N>:<H>:<k> where N and H are colon-free specs.
  size_t c1 = body.find(':');
  size_t c2 = (c1 == std::string::npos) ? std::string::npos
                                        : body.find(':', c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos)
    throw ParseError("sd spec needs 'sd:<N>:<H>:<k>'");
  PermGroup N = parse_group_spec(body.substr(0, c1), caps);
  PermGroup H = parse_group_spec(body.substr(c1 + 1, c2 - c1 - 1), caps);
  int k = parse_positive_int(trimmed(body.substr(c2 + 1)), "sd index");
  std::vector<SemidirectProduct> products = semidirect_products(N, H, caps);
  if (k > static_cast<int>(products.size()))
    throw ParseError("sd index " + std::to_string(k) + " out of range: only " +
                     std::to_string(products.size()) + " homomorphisms");
  return std::move(products[static_cast<size_t>(k - 1)].group);
}

}  // namespace

PermGroup parse_group_spec(const std::string& text, const GroupCaps& caps) {
  std::string spec = trimmed(text);
  if (spec.empty()) throw ParseError("empty group spec");

  if (spec.rfind("perm:", 0) == 0) {
    PermGroup G = parse_perm_spec(spec.substr(5), caps);
    G.set_name(spec);
    return G;
  }
  if (spec.rfind("sd:", 0) == 0) return parse_sd_spec(spec.substr(3), caps);

  // Direct products: split on 'x' at top level.
  std::vector<std::string> parts;
  std::string current;
  for (char c : spec) {
    if (c == 'x') {
      parts.push_back(trimmed(current));
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(trimmed(current));

  PermGroup result = parse_atom(parts[0], caps);
  for (size_t i = 1; i < parts.size(); ++i)
    result = direct_product(result, parse_atom(parts[i], caps), caps);
  return result;
}

}  // namespace grouplat
