#include "nsw2v/reductions.hpp"

#include <cmath>

#include "text.hpp"

namespace nsw2v {

Rational parse_rational(std::string_view tok) {
  const auto slash = tok.find('/');
  try {
    if (slash == std::string_view::npos) {
      const auto dot = tok.find('.');
      if (dot == std::string_view::npos) return Rational(BigInt(std::string(tok)));
      // Decimal: digits after the point over a power of ten.
      std::string digits(tok.substr(0, dot));
      const std::string frac(tok.substr(dot + 1));
      if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("bad decimal '" + std::string(tok) + "'");
      const bool negative = !digits.empty() && digits[0] == '-';
      if (digits.empty() || digits == "-" || digits == "+") digits += '0';
      BigInt whole(digits);
      BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac.size()));
      BigInt part(frac);
      Rational r(whole * scale + (negative ? -part : part), scale);
      return r;
    }
    const BigInt num(std::string(tok.substr(0, slash)));
    const BigInt den(std::string(tok.substr(slash + 1)));
    if (den == 0) throw ParseError("zero denominator in '" + std::string(tok) + "'");
    return Rational(num, den);
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("bad rational '" + std::string(tok) + "'");
  }
}

std::string format_rational(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

LpCertificate parse_certificate(std::string_view text) {
  const auto lines = text::split_lines(text);
  if (lines.empty() || lines[0] != "lpcert 1") throw ParseError("certificate: missing 'lpcert 1' header");
  if (lines.size() < 2) throw ParseError("certificate: missing alpha line");
  const auto head = text::split_tokens(lines[1], "certificate alpha");
  if (head.size() != 2 || head[0] != "alpha") throw ParseError("certificate: expected 'alpha <num>/<den>'");
  LpCertificate cert;
  cert.alpha = parse_rational(head[1]);
  for (std::size_t k = 2; k < lines.size(); ++k) {
    if (lines[k].empty()) continue;
    const auto tok = text::split_tokens(lines[k], "certificate entry");
    if (tok.size() != 3) throw ParseError("certificate: expected 'i j <num>/<den>'");
    const int i = text::parse_number<int>(tok[0], "certificate i");
    const int j = text::parse_number<int>(tok[1], "certificate j");
    if (!cert.x.emplace(std::make_pair(i, j), parse_rational(tok[2])).second)
      throw ParseError("certificate: duplicate entry " + std::to_string(i) + " " + std::to_string(j));
  }
  return cert;
}

std::string serialize_certificate(const LpCertificate& cert) {
  std::string out = "lpcert 1\nalpha " + format_rational(cert.alpha) + '\n';
  for (const auto& [type, frac] : cert.x)
    out += std::to_string(type.first) + ' ' + std::to_string(type.second) + ' ' + format_rational(frac) + '\n';
  return out;
}

LpCertificate reference_certificate() {
  LpCertificate c;
  c.alpha = 0;
  c.x[{4, 0}] = Rational(53, 162);
  c.x[{1, 4}] = Rational(1, 162);
  c.x[{3, 1}] = Rational(1, 162);
  c.x[{0, 5}] = Rational(107, 162);
  return c;
}

LpReport verify_apx_lp(const LpCertificate& cert, const Rational& eps) {
  Rational total = 0;
  Rational matched = 0;
  Rational big = 0;
  Rational small = 0;
  Rational min_bound = std::min(cert.alpha, Rational(1) - cert.alpha);
  bool types_ok = true;
  double objective = 0;
  for (const auto& [type, frac] : cert.x) {
    const auto [i, j] = type;
    if (i < 0 || i > 4 || j < 0 || j > 6) types_ok = false;
    total += frac;
    if (i == 4) matched += frac;
    big += frac * i;
    small += frac * j;
    min_bound = std::min(min_bound, frac);
    if (frac != 0) objective += frac.convert_to<double>() * std::log((5.0 * i + 4.0 * j) / 5.0);
  }

  LpReport rep;
  auto add = [&](std::string name, ConstraintKind kind, Rational slack, bool ok) {
    rep.constraints.push_back({std::move(name), kind, std::move(slack), ok});
  };
  const Rational one = 1;
  const Rational third(1, 3);
  const Rational eq_slack = one - total;
  add("total", ConstraintKind::equality, eq_slack, eq_slack == 0);
  const Rational matched_slack = third * (Rational(53, 54) + eps) - matched;
  add("matched", ConstraintKind::at_most, matched_slack, matched_slack >= 0);
  const Rational big_slack = Rational(4, 3) * (one - cert.alpha) - big;
  add("big_goods", ConstraintKind::at_most, big_slack, big_slack >= 0);
  const Rational small_slack = third * (Rational(10) + 5 * eps) + Rational(4, 3) * cert.alpha - small;
  add("small_goods", ConstraintKind::at_most, small_slack, small_slack >= 0);
  add("bounds", ConstraintKind::at_most, min_bound, types_ok && min_bound >= 0);

  rep.feasible = true;
  for (const auto& c : rep.constraints) rep.feasible = rep.feasible && c.satisfied;
  rep.objective = objective;
  return rep;
}

int LpReport::tight_inequalities() const {
  int tight = 0;
  for (const auto& c : constraints)
    if (c.kind == ConstraintKind::at_most && c.name != "bounds" && c.tight()) ++tight;
  return tight;
}

double LpReport::implied_factor() const { return 4.0 / std::exp(objective); }

HardnessConstants hardness_constants() {
  HardnessConstants h{};
  h.approx_upper = 24.0 / 29.0 * std::exp(110.0 / 493.0);
  h.apx_lower = 4.0 / (std::pow(4.2 * 3.8, 1.0 / 162.0) * std::pow(4.0, 160.0 / 162.0));
  return h;
}

}  // namespace nsw2v
