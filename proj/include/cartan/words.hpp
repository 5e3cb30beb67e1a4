#pragma once

// Cartan's word calculus for the homology of K(Z/n, 2): words in the
// symbols sigma, gamma_p, phi_p and psi_{p^f}.

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cartan {

enum class SymbolKind { Sigma = 0, Gamma = 1, Phi = 2, Psi = 3 };

/// One letter of a word. `prime` is 0 for sigma; `psi_exponent` is 0 unless
/// the kind is Psi.
struct Symbol {
  SymbolKind kind = SymbolKind::Sigma;
  unsigned long prime = 0;
  unsigned long psi_exponent = 0;

  static Symbol sigma() { return {}; }
  static Symbol gamma(unsigned long p);
  static Symbol phi(unsigned long p);
  static Symbol psi(unsigned long p, unsigned long f);

  auto operator<=>(const Symbol&) const = default;
};

/// Raised when a word containing psi is handed to the admissibility test.
class AuxiliaryWordError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An ordered sequence of symbols over a single prime. Psi, if present, is
/// the last letter.
class Word {
 public:
  Word() = default;
  /// Throws std::invalid_argument if a non-sigma symbol carries a prime
  /// other than `prime` or psi is not the last letter.
  Word(std::vector<Symbol> symbols, unsigned long prime);

  const std::vector<Symbol>& symbols() const { return symbols_; }
  unsigned long prime() const { return prime_; }
  bool empty() const { return symbols_.empty(); }
  std::size_t size() const { return symbols_.size(); }

  /// Returns the word s·this.
  Word prepend(const Symbol& s) const;

  bool operator==(const Word&) const = default;

 private:
  std::vector<Symbol> symbols_;
  unsigned long prime_ = 0;
};

/// Parses the ASCII spelling: s = sigma, g = gamma_p, f = phi_p, y = psi_{p^f}
/// (with f = psi_exponent).
Word parse_word(std::string_view text, unsigned long p,
                unsigned long psi_exponent = 1);

/// Unicode rendering such as "σγ_2φ_2"; with `ascii`, "sg_2f_2".
std::string to_string(const Word& w, bool ascii = false);

std::uint64_t degree(const Word& w);
unsigned height(const Word& w);

/// Throws AuxiliaryWordError when w contains psi.
bool is_admissible(const Word& w, unsigned long p);

/// The auxiliary word sigma^{h-1} psi_{p^f}; h >= 1.
Word auxiliary_word(unsigned long p, unsigned long f, unsigned h);

struct WordEntry {
  Word word;
  std::uint64_t degree = 0;
  unsigned height = 0;
};

/// All admissible p-words of degree <= max_degree together with the
/// auxiliary words sigma^{h-1} psi_{p^r} of degree <= max_degree, ordered by
/// (degree, height, symbols) with Sigma < Gamma < Phi < Psi.
std::vector<WordEntry> enumerate_words(unsigned long p, unsigned long r,
                                       std::uint64_t max_degree);

}  // namespace cartan
