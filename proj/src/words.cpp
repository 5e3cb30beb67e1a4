#include "cartan/words.hpp"

#include <algorithm>
#include <limits>

#include "cartan/integer.hpp"

namespace cartan {

namespace {

void require_prime(unsigned long p) {
  if (!is_prime(p))
    throw std::invalid_argument("word prime must be prime, got " + std::to_string(p));
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    throw std::overflow_error("word degree overflows 64 bits");
  return a * b;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b)
    throw std::overflow_error("word degree overflows 64 bits");
  return a + b;
}

std::string subscript(const Symbol& s) {
  if (s.kind == SymbolKind::Psi && s.psi_exponent > 1)
    return "_{" + std::to_string(s.prime) + "^" + std::to_string(s.psi_exponent) + "}";
  return "_" + std::to_string(s.prime);
}

}  // namespace

Symbol Symbol::gamma(unsigned long p) {
  require_prime(p);
  return {SymbolKind::Gamma, p, 0};
}

Symbol Symbol::phi(unsigned long p) {
  require_prime(p);
  return {SymbolKind::Phi, p, 0};
}

Symbol Symbol::psi(unsigned long p, unsigned long f) {
  require_prime(p);
  if (f == 0) throw std::invalid_argument("psi exponent must be positive");
  return {SymbolKind::Psi, p, f};
}

Word::Word(std::vector<Symbol> symbols, unsigned long prime)
    : symbols_(std::move(symbols)), prime_(prime) {
  require_prime(prime);
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    const Symbol& s = symbols_[i];
    if (s.kind == SymbolKind::Sigma) {
      if (s.prime != 0 || s.psi_exponent != 0)
        throw std::invalid_argument("sigma carries no prime");
      continue;
    }
    if (s.prime != prime)
      throw std::invalid_argument("word mixes primes " + std::to_string(prime) +
                                  " and " + std::to_string(s.prime));
    if (s.kind == SymbolKind::Psi) {
      if (i + 1 != symbols_.size())
        throw std::invalid_argument("psi must be the last letter of a word");
      if (s.psi_exponent == 0) throw std::invalid_argument("psi exponent must be positive");
    } else if (s.psi_exponent != 0) {
      throw std::invalid_argument("only psi carries an exponent");
    }
  }
}

Word Word::prepend(const Symbol& s) const {
  std::vector<Symbol> out;
  out.reserve(symbols_.size() + 1);
  out.push_back(s);
  out.insert(out.end(), symbols_.begin(), symbols_.end());
  return Word(std::move(out), prime_);
}

Word parse_word(std::string_view text, unsigned long p, unsigned long psi_exponent) {
  std::vector<Symbol> symbols;
  for (char c : text) {
    switch (c) {
      case 's': symbols.push_back(Symbol::sigma()); break;
      case 'g': symbols.push_back(Symbol::gamma(p)); break;
      case 'f': symbols.push_back(Symbol::phi(p)); break;
      case 'y': symbols.push_back(Symbol::psi(p, psi_exponent)); break;
      default:
        throw std::invalid_argument(std::string("unknown word letter '") + c + "'");
    }
  }
  return Word(std::move(symbols), p);
}

std::string to_string(const Word& w, bool ascii) {
  if (w.empty()) return ascii ? "()" : "∅";
  std::string out;
  for (const Symbol& s : w.symbols()) {
    switch (s.kind) {
      case SymbolKind::Sigma: out += ascii ? "s" : "σ"; continue;
      case SymbolKind::Gamma: out += ascii ? "g" : "γ"; break;
      case SymbolKind::Phi: out += ascii ? "f" : "φ"; break;
      case SymbolKind::Psi: out += ascii ? "y" : "ψ"; break;
    }
    out += subscript(s);
  }
  return out;
}

std::uint64_t degree(const Word& w) {
  std::uint64_t deg = 0;
  const auto& syms = w.symbols();
  for (auto it = syms.rbegin(); it != syms.rend(); ++it) {
    switch (it->kind) {
      case SymbolKind::Sigma: deg = checked_add(deg, 1); break;
      case SymbolKind::Gamma: deg = checked_mul(deg, it->prime); break;
      case SymbolKind::Phi: deg = checked_add(checked_mul(deg, it->prime), 2); break;
      case SymbolKind::Psi: deg = 2; break;  // always the last letter
    }
  }
  return deg;
}

unsigned height(const Word& w) {
  return static_cast<unsigned>(std::count_if(
      w.symbols().begin(), w.symbols().end(),
      [](const Symbol& s) { return s.kind != SymbolKind::Gamma; }));
}

bool is_admissible(const Word& w, unsigned long p) {
  const auto& syms = w.symbols();
  for (const Symbol& s : syms) {
    if (s.kind == SymbolKind::Psi)
      throw AuxiliaryWordError("words containing psi are auxiliary, not admissible");
    if (s.kind != SymbolKind::Sigma && s.prime != p) return false;
  }
  if (syms.empty()) return false;
  auto end_ok = [](const Symbol& s) {
    return s.kind == SymbolKind::Sigma || s.kind == SymbolKind::Phi;
  };
  if (!end_ok(syms.front()) || !end_ok(syms.back())) return false;
  // Each gamma/phi needs an even number of sigmas strictly to its right.
  unsigned sigmas_right = 0;
  for (auto it = syms.rbegin(); it != syms.rend(); ++it) {
    if (it->kind == SymbolKind::Sigma) {
      ++sigmas_right;
    } else if (sigmas_right % 2 != 0) {
      return false;
    }
  }
  return true;
}

Word auxiliary_word(unsigned long p, unsigned long f, unsigned h) {
  if (h == 0) throw std::invalid_argument("auxiliary word height must be positive");
  std::vector<Symbol> symbols(h - 1, Symbol::sigma());
  symbols.push_back(Symbol::psi(p, f));
  return Word(std::move(symbols), p);
}

namespace {

struct Suffix {
  std::vector<Symbol> reversed;  // letters from the right end
  std::uint64_t degree;
  unsigned sigmas;
};

void grow(const Suffix& s, unsigned long p, std::uint64_t max_degree,
          std::vector<WordEntry>& out) {
  const Symbol& first = s.reversed.back();
  if (first.kind != SymbolKind::Gamma) {
    std::vector<Symbol> symbols(s.reversed.rbegin(), s.reversed.rend());
    out.push_back({Word(std::move(symbols), p), s.degree,
                   static_cast<unsigned>(std::count_if(
                       s.reversed.begin(), s.reversed.end(),
                       [](const Symbol& x) { return x.kind != SymbolKind::Gamma; }))});
  }
  // Every prepend strictly raises the degree (degree >= 1 here), so the
  // recursion terminates.
  auto extend = [&](const Symbol& sym, std::uint64_t deg, unsigned sigmas) {
    if (deg > max_degree) return;
    Suffix next{s.reversed, deg, sigmas};
    next.reversed.push_back(sym);
    grow(next, p, max_degree, out);
  };
  if (s.degree < max_degree) extend(Symbol::sigma(), s.degree + 1, s.sigmas + 1);
  if (s.sigmas % 2 == 0) {
    if (s.degree <= max_degree / p) extend(Symbol::gamma(p), s.degree * p, s.sigmas);
    if (max_degree >= 2 && s.degree <= (max_degree - 2) / p)
      extend(Symbol::phi(p), s.degree * p + 2, s.sigmas);
  }
}

}  // namespace

std::vector<WordEntry> enumerate_words(unsigned long p, unsigned long r,
                                       std::uint64_t max_degree) {
  require_prime(p);
  if (r == 0) throw std::invalid_argument("psi exponent r must be positive");
  std::vector<WordEntry> out;
  // Admissible words end in sigma or phi.
  if (max_degree >= 1) grow({{Symbol::sigma()}, 1, 1}, p, max_degree, out);
  if (max_degree >= 2) grow({{Symbol::phi(p)}, 2, 0}, p, max_degree, out);
  for (unsigned h = 1; h + 1 <= max_degree; ++h) {
    Word w = auxiliary_word(p, r, h);
    out.push_back({w, static_cast<std::uint64_t>(h) + 1, h});
  }
  std::sort(out.begin(), out.end(), [](const WordEntry& a, const WordEntry& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (a.height != b.height) return a.height < b.height;
    return a.word.symbols() < b.word.symbols();
  });
  return out;
}

}  // namespace cartan
