#include "pborel/ideal.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

namespace pborel {

MonomialIdeal MonomialIdeal::zero(std::size_t n) {
  MonomialIdeal I;
  I.n_ = n;
  return I;
}

MonomialIdeal MonomialIdeal::unit(std::size_t n) {
  return minimalize(n, {Monomial::one(n)});
}

bool MonomialIdeal::contains(const Monomial& m) const {
  if (m.var_count() != n_) throw std::invalid_argument("variable count mismatch");
  for (const Monomial& g : gens_) {
    if (g.divides(m)) return true;
  }
  return false;
}

MonomialIdeal minimalize(std::size_t n, std::vector<Monomial> gens) {
  for (const Monomial& g : gens) {
    if (g.var_count() != n)
      throw std::invalid_argument("generator length does not match variable count");
  }
  std::sort(gens.begin(), gens.end(), std::greater<>());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  std::vector<Monomial> minimal;
  for (const Monomial& g : gens) {
    bool redundant = false;
    for (const Monomial& h : gens) {
      if (h != g && h.divides(g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(g);
  }

  MonomialIdeal I;
  I.n_ = n;
  I.gens_ = std::move(minimal);
  return I;
}

MonomialIdeal colon_power(const MonomialIdeal& I, std::size_t var, Exponent t) {
  if (var < 1 || var > I.var_count()) throw std::invalid_argument("variable index out of range");
  std::vector<Monomial> gens;
  gens.reserve(I.generators().size());
  for (const Monomial& g : I.generators()) {
    std::vector<Exponent> e = g.exponents();
    e[var - 1] -= std::min(t, e[var - 1]);
    gens.emplace_back(std::move(e));
  }
  return minimalize(I.var_count(), std::move(gens));
}

MonomialIdeal saturate_var(const MonomialIdeal& I, std::size_t var) {
  if (var < 1 || var > I.var_count()) throw std::invalid_argument("variable index out of range");
  std::vector<Monomial> gens;
  gens.reserve(I.generators().size());
  for (const Monomial& g : I.generators()) {
    std::vector<Exponent> e = g.exponents();
    e[var - 1] = 0;
    gens.emplace_back(std::move(e));
  }
  return minimalize(I.var_count(), std::move(gens));
}

MonomialIdeal add_power(const MonomialIdeal& I, std::size_t var, Exponent t) {
  if (t == 0)
    throw std::invalid_argument("add_power with exponent 0 would adjoin the unit ideal");
  std::vector<Monomial> gens = I.generators();
  gens.push_back(Monomial::var_power(I.var_count(), var, t));
  return minimalize(I.var_count(), std::move(gens));
}

Monomial lcm_multidegree(const MonomialIdeal& I) {
  if (I.is_zero()) throw std::invalid_argument("lcm of the zero ideal is undefined");
  Monomial m = I.generators().front();
  for (const Monomial& g : I.generators()) m = m.lcm_with(g);
  return m;
}

Exponent lcm_degree(const MonomialIdeal& I) { return lcm_multidegree(I).total_degree(); }

namespace {

// Strips comments and surrounding whitespace; empty result means skip.
std::string clean_line(const std::string& raw) {
  std::string s = raw.substr(0, raw.find('#'));
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return {};
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

Exponent parse_nat(const std::string& tok, std::size_t line_no) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("line " + std::to_string(line_no) + ": expected a natural number, got '" +
                     tok + "'");
  try {
    return std::stoull(tok);
  } catch (const std::out_of_range&) {
    throw ParseError("line " + std::to_string(line_no) + ": value out of range: '" + tok + "'");
  }
}

}  // namespace

MonomialIdeal parse_ideal(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  std::size_t n = 0;
  bool have_n = false;
  std::vector<Monomial> gens;

  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = clean_line(raw);
    if (line.empty()) continue;

    if (!have_n) {
      if (line.rfind("n=", 0) != 0)
        throw ParseError("line " + std::to_string(line_no) + ": expected 'n=<vars>' first");
      const Exponent v = parse_nat(line.substr(2), line_no);
      if (v == 0 || v > 64)
        throw ParseError("line " + std::to_string(line_no) + ": variable count must be in 1..64");
      n = static_cast<std::size_t>(v);
      have_n = true;
      continue;
    }

    std::istringstream toks(line);
    std::vector<Exponent> exps;
    std::string tok;
    while (toks >> tok) exps.push_back(parse_nat(tok, line_no));
    if (exps.size() != n)
      throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(n) +
                       " exponents, got " + std::to_string(exps.size()));
    gens.emplace_back(std::move(exps));
  }

  if (!have_n) throw ParseError("missing 'n=<vars>' header");
  return minimalize(n, std::move(gens));
}

MonomialIdeal parse_ideal(const std::string& text) {
  std::istringstream in(text);
  return parse_ideal(in);
}

MonomialIdeal load_ideal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_ideal(in);
}

void write_ideal(std::ostream& out, const MonomialIdeal& I) {
  out << "n=" << I.var_count() << "\n";
  for (const Monomial& g : I.generators()) {
    const auto& e = g.exponents();
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (k) out << ' ';
      out << e[k];
    }
    out << "\n";
  }
}

std::string format_ideal(const MonomialIdeal& I) {
  std::ostringstream os;
  write_ideal(os, I);
  return os.str();
}

}  // namespace pborel
