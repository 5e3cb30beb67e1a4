#include "cartan/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "cartan/bounds.hpp"
#include "cartan/complexes.hpp"
#include "cartan/serialize.hpp"
#include "cartan/verify.hpp"
#include "cartan/words.hpp"

namespace cartan {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Code points, which is what a terminal column count needs for the symbols
// used here.
std::size_t display_width(const std::string& s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

class Table {
 public:
  explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print(std::ostream& os, bool color) const {
    std::vector<std::size_t> width(header_.size());
    for (std::size_t i = 0; i < header_.size(); ++i) width[i] = display_width(header_[i]);
    for (const auto& row : rows_)
      for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], display_width(row[i]));
    auto line = [&](const std::vector<std::string>& row) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        os << row[i];
        if (i + 1 < row.size()) os << std::string(width[i] - display_width(row[i]) + 2, ' ');
      }
      os << '\n';
    };
    if (color) os << "\033[1m";
    line(header_);
    if (color) os << "\033[0m";
    for (const auto& row : rows_) line(row);
  }

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

std::uint64_t positive(std::int64_t v, const char* name) {
  if (v <= 0) throw UsageError(std::string(name) + " must be a positive integer");
  return static_cast<std::uint64_t>(v);
}

std::string render_group(const DegreeComponent& c, bool ascii) {
  if (c.trivial()) return "0";
  const std::string plus = ascii ? " + " : " ⊕ ";
  std::vector<std::string> parts;
  if (c.free_rank == 1) parts.push_back("Z");
  if (c.free_rank > 1) parts.push_back("Z^" + std::to_string(c.free_rank));
  for (const Integer& t : c.torsion) parts.push_back("Z/" + to_string(t));
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? plus : "") + parts[i];
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

struct BoundArgs {
  std::int64_t n = 0;
  std::int64_t d = 0;
  std::string format = "pretty";
  bool compare = false;
};

void cmd_bound(const BoundArgs& a, std::ostream& out, const CliOptions& opt) {
  const std::uint64_t n = positive(a.n, "n"), d = positive(a.d, "d");
  const BoundReport report = index_bound(n, d);
  const BoundComparison cmp = compare_bounds(n, d);
  const std::string sharp_value = report.known_sharp ? to_string(report.known_sharp->value) : "";
  const std::string sharp_source = report.known_sharp ? report.known_sharp->source : "";

  if (a.format == "json") {
    out << (a.compare ? to_json(cmp) : to_json(report)).dump(2) << '\n';
    return;
  }
  if (a.format == "csv") {
    out << "n,d,theorem_a,corollary_b,sharp,sharp_source";
    if (a.compare) out << ",ratio,sharp_strictly_better";
    out << '\n' << n << ',' << d << ',' << to_string(report.theorem_a_bound) << ','
        << (report.corollary_b_applies ? "true" : "false") << ',' << sharp_value << ','
        << sharp_source;
    if (a.compare)
      out << ',' << (cmp.ratio ? to_string(*cmp.ratio) : "") << ','
          << (cmp.sharp_strictly_better ? "true" : "false");
    out << '\n';
    return;
  }
  out << "period n = " << n << ", half-dimension d = " << d << "\n\n";
  Table t({"p", "r", "bound"});
  for (const PrimeBound& p : report.primes)
    t.add({std::to_string(p.p), std::to_string(p.r), to_string(p.bound)});
  if (!report.primes.empty()) {
    t.print(out, opt.color);
    out << '\n';
  }
  out << "index bound (Theorem A): " << to_string(report.theorem_a_bound) << '\n';
  out << "coprime to (d-1)! (Corollary B): " << yes_no(report.corollary_b_applies) << '\n';
  out << "known sharp bound: " << (report.known_sharp ? sharp_value + " [" + sharp_source + "]" : "unknown")
      << '\n';
  if (a.compare) {
    out << "ratio: " << (cmp.ratio ? to_string(*cmp.ratio) : "n/a") << '\n';
    out << "sharp bound strictly better: " << yes_no(cmp.sharp_strictly_better) << '\n';
  }
}

struct TableArgs {
  std::int64_t n_max = 10;
  std::int64_t d_max = 5;
  std::string format = "pretty";
};

void cmd_table(const TableArgs& a, std::ostream& out, const CliOptions& opt) {
  const std::uint64_t n_max = positive(a.n_max, "--n-max"), d_max = positive(a.d_max, "--d-max");
  if (a.format == "csv") {
    out << "n,d,theorem_a,corollary_b\n";
    for (std::uint64_t n = 1; n <= n_max; ++n)
      for (std::uint64_t d = 1; d <= d_max; ++d) {
        BoundReport r = index_bound(n, d);
        out << n << ',' << d << ',' << to_string(r.theorem_a_bound) << ','
            << (r.corollary_b_applies ? "true" : "false") << '\n';
      }
    return;
  }
  if (a.format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (std::uint64_t n = 1; n <= n_max; ++n)
      for (std::uint64_t d = 1; d <= d_max; ++d) {
        BoundReport r = index_bound(n, d);
        rows.push_back({{"n", n}, {"d", d}, {"theorem_a", to_string(r.theorem_a_bound)},
                        {"corollary_b", r.corollary_b_applies}});
      }
    out << rows.dump(2) << '\n';
    return;
  }
  std::vector<std::string> header{"n \\ d"};
  for (std::uint64_t d = 1; d <= d_max; ++d) header.push_back(std::to_string(d));
  Table t(std::move(header));
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    std::vector<std::string> row{std::to_string(n)};
    for (std::uint64_t d = 1; d <= d_max; ++d) row.push_back(to_string(index_bound(n, d).theorem_a_bound));
    t.add(std::move(row));
  }
  t.print(out, opt.color);
}

struct HomologyArgs {
  std::optional<std::int64_t> n;
  std::optional<std::int64_t> prime;
  std::optional<std::int64_t> exponent;
  std::int64_t max_degree = 10;
  std::string format = "pretty";
  bool ascii = false;
};

void cmd_homology(const HomologyArgs& a, std::ostream& out, const CliOptions& opt) {
  const bool has_n = a.n.has_value();
  const bool has_pr = a.prime.has_value() || a.exponent.has_value();
  if (has_n == has_pr) throw UsageError("give either n or both --prime and --exponent");
  if (has_pr && !(a.prime && a.exponent)) throw UsageError("--prime and --exponent go together");
  if (a.max_degree < 0) throw UsageError("--max-degree must be non-negative");
  const auto cap = static_cast<std::size_t>(a.max_degree);

  GradedAbelianGroup g;
  if (has_n) {
    if (*a.n < 2) throw UsageError("n must be at least 2");
    g = homology_X(static_cast<std::uint64_t>(*a.n), cap);
  } else {
    const std::uint64_t p = positive(*a.prime, "--prime"), r = positive(*a.exponent, "--exponent");
    if (!is_prime(p)) throw UsageError("--prime must be prime");
    g = homology_Xp(p, r, cap);
  }

  if (a.format == "json") {
    out << to_json(g).dump(2) << '\n';
    return;
  }
  if (a.format == "csv") {
    out << "degree,free,torsion,exponent\n";
    for (std::size_t k = 0; k <= cap; ++k) {
      const DegreeComponent& c = g.at(k);
      std::string torsion;
      for (std::size_t i = 0; i < c.torsion.size(); ++i) torsion += (i ? ";" : "") + to_string(c.torsion[i]);
      out << k << ',' << c.free_rank << ',' << torsion << ','
          << to_string(exponent(g, k).torsion_exponent) << '\n';
    }
    return;
  }
  Table t({"degree", "H_k", "exponent"});
  for (std::size_t k = 0; k <= cap; ++k)
    t.add({std::to_string(k), render_group(g.at(k), a.ascii), to_string(exponent(g, k).torsion_exponent)});
  t.print(out, opt.color);
}

struct WordsArgs {
  std::int64_t p = 0;
  std::int64_t r = 0;
  std::int64_t max_degree = 10;
  std::optional<std::int64_t> height;
  std::string format = "pretty";
  bool ascii = false;
};

void cmd_words(const WordsArgs& a, std::ostream& out, const CliOptions& opt) {
  const std::uint64_t p = positive(a.p, "p"), r = positive(a.r, "r");
  if (!is_prime(p)) throw UsageError("p must be prime");
  if (a.max_degree < 0) throw UsageError("--max-degree must be non-negative");
  std::vector<WordEntry> words = enumerate_words(p, r, static_cast<std::uint64_t>(a.max_degree));
  if (a.height)
    std::erase_if(words, [&](const WordEntry& w) { return static_cast<std::int64_t>(w.height) != *a.height; });

  if (a.format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const WordEntry& w : words) rows.push_back(to_json(w, a.ascii));
    out << rows.dump(2) << '\n';
    return;
  }
  if (a.format == "csv") {
    out << "degree,height,word\n";
    for (const WordEntry& w : words) out << w.degree << ',' << w.height << ',' << to_string(w.word, a.ascii) << '\n';
    return;
  }
  Table t({"degree", "height", "word"});
  for (const WordEntry& w : words)
    t.add({std::to_string(w.degree), std::to_string(w.height), to_string(w.word, a.ascii)});
  t.print(out, opt.color);
}

struct VerifyArgs {
  std::string suite = "all";
  std::uint64_t seed = 1;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  std::vector<CheckResult> results = run_suite(a.suite, a.seed);
  std::size_t failed = 0;
  for (const CheckResult& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name;
    if (!r.passed) {
      ++failed;
      out << ": " << r.detail;
    }
    out << '\n';
  }
  out << results.size() - failed << "/" << results.size() << " checks passed\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
            CliOptions options) {
  CLI::App app{"Index bounds for topological Brauer classes and the homology of K(Z/n,2)", "cartan"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"pretty", "json", "csv"};

  BoundArgs bound;
  auto* bound_cmd = app.add_subcommand("bound", "Index bound for period n on a 2d-dimensional complex");
  bound_cmd->add_option("n", bound.n, "period")->required();
  bound_cmd->add_option("d", bound.d, "half-dimension")->required();
  bound_cmd->add_option("--format", bound.format)->check(CLI::IsMember(formats));
  bound_cmd->add_flag("--compare", bound.compare, "compare with the best known sharp bound");

  TableArgs table;
  auto* table_cmd = app.add_subcommand("table", "Grid of index bounds");
  table_cmd->add_option("--n-max", table.n_max)->capture_default_str();
  table_cmd->add_option("--d-max", table.d_max)->capture_default_str();
  table_cmd->add_option("--format", table.format)->check(CLI::IsMember(formats));

  HomologyArgs hom;
  auto* hom_cmd = app.add_subcommand("homology", "Homology of X (for n) or X_p (for --prime/--exponent)");
  hom_cmd->add_option("n", hom.n, "period n >= 2");
  hom_cmd->add_option("--prime", hom.prime);
  hom_cmd->add_option("--exponent", hom.exponent);
  hom_cmd->add_option("--max-degree", hom.max_degree)->capture_default_str();
  hom_cmd->add_option("--format", hom.format)->check(CLI::IsMember(formats));
  hom_cmd->add_flag("--ascii", hom.ascii, "ASCII output");

  WordsArgs words;
  auto* words_cmd = app.add_subcommand("words", "Admissible and auxiliary p-words");
  words_cmd->add_option("p", words.p, "prime")->required();
  words_cmd->add_option("r", words.r, "exponent of p in n")->required();
  words_cmd->add_option("--max-degree", words.max_degree)->capture_default_str();
  words_cmd->add_option("--height", words.height, "only words of this height");
  words_cmd->add_option("--format", words.format)->check(CLI::IsMember(formats));
  words_cmd->add_flag("--ascii", words.ascii, "spell symbols as s, g, f, y");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run oracle cross-checks");
  verify_cmd->add_option("--suite", verify.suite)->check(CLI::IsMember(suite_names()))->capture_default_str();
  verify_cmd->add_option("--seed", verify.seed)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << '\n';
    err << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return 2;
  }

  try {
    if (*bound_cmd) cmd_bound(bound, out, options);
    if (*table_cmd) cmd_table(table, out, options);
    if (*hom_cmd) cmd_homology(hom, out, options);
    if (*words_cmd) cmd_words(words, out, options);
    if (*verify_cmd) return cmd_verify(verify, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace cartan
