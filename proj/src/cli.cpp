#include "compreco/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "compreco/cyclotomic.hpp"
#include "compreco/errors.hpp"
#include "compreco/generating.hpp"
#include "compreco/interleave.hpp"
#include "compreco/multiset.hpp"
#include "compreco/multiset_io.hpp"
#include "compreco/oracle.hpp"
#include "compreco/reconstruct.hpp"

namespace compreco {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string text;
  std::string file;
  std::string alphabet;
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  std::uint64_t budget = 0;
  bool budget_set = false;
  bool all = false;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t length = 0;
  std::vector<std::string> crlcnf;
  std::string core;
  std::string seps;
  std::uint64_t cap = kDefaultEnumerationCap;
};

// Reads from the named file, or from `in` when the name is empty or "-".
template <typename F>
auto with_input(const std::string& file, std::istream& in, F&& f) {
  if (file.empty() || file == "-") return f(in);
  std::ifstream stream(file);
  if (!stream) throw std::runtime_error("cannot open " + file);
  return f(stream);
}

std::string signature_text(const PrimeSignature& sig) {
  if (sig.empty()) return "1";
  std::string out;
  for (const auto& [p, e] : sig) {
    if (!out.empty()) out += "*";
    out += std::to_string(p);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

int cmd_gen(const Options& o, std::ostream& out) {
  if (o.text.empty()) throw UsageError("gen needs a nonempty string");
  const Alphabet alphabet = o.alphabet.empty() ? Alphabet::infer(o.text) : Alphabet(o.alphabet);
  write_multiset(out, composition_multiset(alphabet, o.text));
  return 0;
}

int cmd_reconstruct(const Options& o, std::ostream& out, std::istream& in) {
  const CompositionMultiset s = with_input(o.file, in, [](std::istream& is) { return parse_multiset(is); });
  std::set<std::string> strings;
  if (o.all) {
    strings = reconstruct_all(s);
  } else if (o.budget_set) {
    strings = reconstruct(s, o.budget);
  } else {
    strings = reconstruct_first(s).strings;
    if (strings.empty()) throw NoSolution("the multiset is not realizable");
  }
  if (strings.empty()) throw NoSolution("the multiset is not realizable");
  for (const auto& str : canonical_order(strings)) out << str << '\n';
  return 0;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  if (o.n == 0) throw UsageError("enumerate needs --n N with N >= 1");
  const Alphabet alphabet = o.alphabet.empty() ? Alphabet::binary() : Alphabet(o.alphabet);
  const ClassTable table = enumerate_classes(o.n, alphabet, o.cap);
  std::map<std::size_t, std::uint64_t> sizes;
  for (const auto& c : table.classes) ++sizes[c.size()];
  out << "# n=" << table.n << " alphabet=" << std::string(table.alphabet.symbols().begin(), table.alphabet.symbols().end())
      << " classes=" << table.classes.size() << " e_n=" << table.e_n << '\n';
  out << "size\tclasses\n";
  for (const auto& [size, count] : sizes) out << size << '\t' << count << '\n';
  out << "size\tmembers\n";
  for (const auto& c : table.classes) {
    out << c.size() << '\t';
    for (std::size_t i = 0; i < c.size(); ++i) out << (i ? "," : "") << c[i];
    out << '\n';
  }
  return 0;
}

int cmd_bounds(const Options& o, std::ostream& out) {
  if (o.n == 0) throw UsageError("bounds needs a positive length");
  const BoundReport r = en_bounds(o.n);
  std::ostringstream poly;
  poly << std::fixed << std::setprecision(4) << r.upper_poly;
  const std::string exact = r.exact ? r.exact->str() : "-";
  const auto row = [&](const char* name, const std::string& value) {
    out << std::left << std::setw(12) << name << value << '\n';
  };
  row("n", std::to_string(r.n));
  row("n+1", signature_text(r.prime_signature));
  row("divisors", std::to_string(r.divisor_count));
  row("lower", r.lower.str());
  row("upper_pow2", r.upper_pow2.str());
  row("upper_poly", poly.str());
  row("exact", exact);
  out << r.n << ' ' << r.lower << ' ' << r.upper_pow2 << ' ' << poly.str() << ' ' << exact << '\n';
  return 0;
}

int cmd_confuse(const Options& o, std::ostream& out) {
  if (!o.crlcnf.empty()) {
    const auto [first, second] = crlcnf_pair(o.crlcnf, o.core, o.seps);
    out << first << '\n' << second << '\n';
    return 0;
  }
  if (o.length == 0) throw UsageError("confuse needs --length N or --crlcnf PARTS --core S --seps XS");
  for (const auto& s : canonical_order(lower_bound_witness(o.length))) out << s << '\n';
  return 0;
}

int cmd_stats(const Options& o, std::ostream& out) {
  if (o.n == 0 || o.k < 2 || o.trials == 0) throw UsageError("stats needs --n N --k K (K >= 2) --trials T");
  const EllDistribution d = ell_statistics(o.n, o.k, o.trials, o.seed);
  out << "# n=" << d.n << " k=" << d.k << " trials=" << d.trials << " seed=" << d.seed << " generator=" << d.generator
      << " mean=" << d.mean << " p_hat=" << d.p_hat() << '\n';
  out << "ell\tcount\ttail\n";
  for (std::uint64_t l = 0; l < d.histogram.size(); ++l) {
    out << l << '\t' << d.histogram[l] << '\t' << d.tail(l) << '\n';
  }
  return 0;
}

int cmd_turnpike(const Options& o, std::ostream& out, std::istream& in) {
  const CompositionMultiset s = with_input(o.file, in, [](std::istream& is) { return parse_multiset(is); });
  const auto distances = to_turnpike(s);
  for (std::size_t i = 0; i < distances.size(); ++i) out << (i ? " " : "") << distances[i];
  out << '\n';
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out, std::istream& in) {
  const auto strings = with_input(o.file, in, [](std::istream& is) { return read_strings(is); });
  const Alphabet binary = Alphabet::binary();
  std::vector<CompositionMultiset> multisets;
  std::vector<BivariatePoly> products;
  for (const auto& s : strings) {
    multisets.push_back(composition_multiset(binary, s));
    products.push_back(self_reciprocal_product(s));
  }
  std::uint64_t pairs = 0, equal = 0, disagree = 0;
  for (std::size_t i = 0; i < strings.size(); ++i) {
    for (std::size_t j = i + 1; j < strings.size(); ++j) {
      if (strings[i].size() != strings[j].size()) continue;
      ++pairs;
      const bool by_multiset = multisets[i] == multisets[j];
      const bool by_poly = products[i] == products[j];
      if (by_multiset) ++equal;
      if (by_multiset != by_poly) {
        ++disagree;
        out << "disagree\t" << strings[i] << '\t' << strings[j] << "\tmultiset=" << by_multiset
            << "\tpolynomial=" << by_poly << '\n';
      }
    }
  }
  out << "pairs=" << pairs << " equicomposable=" << equal << " disagreements=" << disagree << '\n';
  return disagree == 0 ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  CLI::App app{"Reconstruct strings from substring composition multisets", "compreco"};
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("gen", "Print the composition multiset of a string");
  gen->add_option("string", o.text, "String to decompose")->required();
  gen->add_option("--alphabet", o.alphabet, "Alphabet symbols (default: inferred)");

  auto* rec = app.add_subcommand("reconstruct",
                                 "Recover the strings whose composition multiset is given in a file "
                                 "(stdin when omitted or '-')");
  rec->add_option("file", o.file, "Multiset file");
  rec->add_flag("--all", o.all, "Return every string with this multiset");
  rec->add_option("--budget", o.budget, "Maximum number of guesses per branch")->each([&](const std::string&) {
    o.budget_set = true;
  });

  auto* en = app.add_subcommand("enumerate", "Group all strings of one length by composition multiset");
  en->add_option("--n", o.n, "String length")->required();
  en->add_option("--alphabet", o.alphabet, "Alphabet symbols (default: 01)");
  en->add_option("--cap", o.cap, "Largest number of strings to enumerate");

  auto* bounds = app.add_subcommand("bounds", "Lower and upper bounds on the largest confusable class");
  bounds->add_option("n", o.n, "String length")->required();

  auto* confuse = app.add_subcommand("confuse", "Construct families of equicomposable strings");
  confuse->add_option("--length", o.length, "Print the largest known family for this length");
  confuse->add_option("--crlcnf", o.crlcnf, "Parts sharing one composition for the paired construction");
  confuse->add_option("--core", o.core, "Core string interleaved into every part");
  confuse->add_option("--seps", o.seps, "Separator symbols between parts");

  auto* stats = app.add_subcommand("stats", "Distribution of forced guesses over random strings");
  stats->add_option("--n", o.n, "String length")->required();
  stats->add_option("--k", o.k, "Alphabet size")->required();
  stats->add_option("--trials", o.trials, "Number of random strings")->required();
  stats->add_option("--seed", o.seed, "Seed for the mt19937_64 generator");

  auto* turnpike = app.add_subcommand("turnpike", "Print the distance multiset of a binary composition multiset");
  turnpike->add_option("file", o.file, "Multiset file");

  auto* verify = app.add_subcommand(
      "verify", "Check that multiset equality and equality of P*reciprocal(P) agree on all pairs of strings in a file");
  verify->add_option("file", o.file, "File with one binary string per line");

  std::vector<std::string> reversed_args(args.rbegin(), args.rend());
  try {
    app.parse(reversed_args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) return cmd_gen(o, out);
    if (rec->parsed()) return cmd_reconstruct(o, out, in);
    if (en->parsed()) return cmd_enumerate(o, out);
    if (bounds->parsed()) return cmd_bounds(o, out);
    if (confuse->parsed()) return cmd_confuse(o, out);
    if (stats->parsed()) return cmd_stats(o, out);
    if (turnpike->parsed()) return cmd_turnpike(o, out, in);
    if (verify->parsed()) return cmd_verify(o, out, in);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace compreco
