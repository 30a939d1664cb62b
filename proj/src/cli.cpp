#include "neckslime/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>

#include "CLI11.hpp"
#include "neckslime/bijection.hpp"
#include "neckslime/code.hpp"
#include "neckslime/error.hpp"
#include "neckslime/json_io.hpp"
#include "neckslime/necklace.hpp"
#include "neckslime/slime.hpp"
#include "neckslime/verifier.hpp"

namespace neckslime::cli {

namespace {

enum class Format { kDefault, kJson, kCsv, kText };

struct Options {
  std::string format = "default";
  std::string code;
  std::string word;
  std::size_t n = 0;
  Entry k = 0;
  std::optional<std::int64_t> residue;
  std::int64_t steps = 1;
  bool backward = false;
  bool inverse = false;
  bool full_period = false;
  std::string riwi = "slime";
  std::string chooser = "lexmin";
  std::string map_file;
  std::string check = "all";
  bool sweep = false;
  SweepConfig sweep_cfg;
  std::string jsonl_file;
};

Format parse_format(const std::string& s) {
  if (s == "json") return Format::kJson;
  if (s == "csv") return Format::kCsv;
  if (s == "text") return Format::kText;
  return Format::kDefault;
}

// Code-valued commands print a code literal unless JSON is asked for.
void print_code(std::ostream& out, const Code& f, Format fmt) {
  if (fmt == Format::kJson) {
    out << to_json(f).dump() << '\n';
  } else {
    out << f.to_string() << '\n';
  }
}

void print_codes(std::ostream& out, std::size_t n, Entry k, const std::vector<Code>& codes, Format fmt) {
  if (fmt == Format::kText || fmt == Format::kCsv) {
    for (const Code& f : codes) out << f.to_string() << '\n';
    return;
  }
  Json doc;
  doc["n"] = n;
  doc["k"] = k;
  doc["count"] = codes.size();
  Json items = Json::array();
  for (const Code& f : codes) {
    Json row = Json::array();
    for (Entry e : f.entries()) row.push_back(e);
    items.push_back(std::move(row));
  }
  doc["items"] = std::move(items);
  out << doc.dump() << '\n';
}

void print_table(std::ostream& out, const BijectionTable& table, Format fmt) {
  switch (fmt) {
    case Format::kCsv:
      out << table_to_csv(table);
      break;
    case Format::kText:
      out << table_to_text(table);
      break;
    default:
      out << to_json(table).dump() << '\n';
  }
}

Chooser parse_chooser(const std::string& s) { return s == "lexmax" ? Chooser::kLexMax : Chooser::kLexMin; }

std::string map_name(const std::string& path) { return std::filesystem::path(path).stem().string(); }

int run_verify(const Options& o, Format fmt, std::ostream& out) {
  std::vector<Certificate> certs;
  if (o.sweep) {
    certs = run_sweep(o.sweep_cfg);
  } else if (o.check == "all") {
    for (const auto& name : applicable_checks(o.n, o.k)) certs.push_back(run_check(name, o.n, o.k));
  } else {
    certs.push_back(run_check(o.check, o.n, o.k));
  }

  if (!o.jsonl_file.empty()) {
    std::ofstream file(o.jsonl_file);
    if (!file) throw DomainError("cannot write " + o.jsonl_file);
    for (const auto& c : certs) file << to_json(c).dump() << '\n';
  }
  if (fmt == Format::kText) {
    out << std::left << std::setw(18) << "check" << std::setw(10) << "n" << std::setw(14) << "k" << std::setw(8)
        << "verdict" << "failures\n";
    for (const auto& c : certs) {
      const auto range = [](auto lo, auto hi) {
        return lo == hi ? std::to_string(lo) : std::to_string(lo) + ".." + std::to_string(hi);
      };
      out << std::setw(18) << c.check << std::setw(10) << range(c.envelope.n_min, c.envelope.n_max) << std::setw(14)
          << range(c.envelope.k_min, c.envelope.k_max) << std::setw(8) << (c.pass ? "pass" : "FAIL") << c.failures
          << '\n';
    }
  } else {
    for (const auto& c : certs) out << to_json(c).dump() << '\n';
  }
  const bool all_pass = std::all_of(certs.begin(), certs.end(), [](const Certificate& c) { return c.pass; });
  return all_pass ? kOk : kFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Slime migration on cyclic codes and the necklace bijection for prime n", "neckslime"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"default", "json", "csv", "text"}));
  app.fallthrough();

  auto code_arg = [&](CLI::App* sub) { sub->add_option("code", o.code, "Code literal, e.g. 3,0,0")->required(); };
  auto nk_args = [&](CLI::App* sub, bool required = true) {
    auto* n = sub->add_option("n", o.n, "Number of black beads / code length")->check(CLI::PositiveNumber);
    auto* k = sub->add_option("k", o.k, "Number of white beads / code sum")->check(CLI::NonNegativeNumber);
    if (required) {
      n->required();
      k->required();
    }
  };

  auto* slimes = app.add_subcommand("slimes", "Print the slime decomposition");
  code_arg(slimes);
  auto* migrate = app.add_subcommand("migrate", "Iterated forward or backward migration");
  migrate->add_flag("--backward", o.backward);
  migrate->add_option("--steps", o.steps)->check(CLI::NonNegativeNumber);
  code_arg(migrate);
  auto* phi_cmd = app.add_subcommand("phi", "Apply phi or its inverse");
  phi_cmd->add_flag("--inverse", o.inverse);
  code_arg(phi_cmd);
  auto* ws = app.add_subcommand("ws", "Weighted sum modulo n");
  code_arg(ws);
  auto* rot = app.add_subcommand("rotate", "Rotate left by --steps");
  rot->add_option("--steps", o.steps)->required();
  code_arg(rot);
  auto* per = app.add_subcommand("period", "Smallest period");
  code_arg(per);
  auto* canon = app.add_subcommand("canon", "Canonical (least) rotation");
  code_arg(canon);
  auto* word = app.add_subcommand("word", "Bead word of a code");
  code_arg(word);
  auto* unword = app.add_subcommand("unword", "Gap code of a bead word");
  unword->add_option("word", o.word)->required();

  auto* enumerate = app.add_subcommand("enum", "Enumerate codes or necklaces");
  enumerate->require_subcommand(1);
  auto* enum_codes = enumerate->add_subcommand("codes", "Compositions of k into n parts");
  nk_args(enum_codes);
  enum_codes->add_option("--t", o.residue, "Weighted-sum residue");
  enum_codes->add_flag("--full-period", o.full_period);
  auto* enum_necks = enumerate->add_subcommand("necklaces", "Necklaces with n black and k white beads");
  nk_args(enum_necks);
  enum_necks->add_flag("--full-period", o.full_period);

  auto* count = app.add_subcommand("count", "Necklace count by formula and by enumeration");
  nk_args(count);

  auto* bij = app.add_subcommand("bijection", "Emit the code -> necklace table");
  nk_args(bij);
  bij->add_option("--riwi", o.riwi)->check(CLI::IsMember({"slime", "rotation"}));
  bij->add_option("--map", o.map_file, "JSON riwi-map for composite n");
  bij->add_option("--chooser", o.chooser)->check(CLI::IsMember({"lexmin", "lexmax"}));

  auto* verify = app.add_subcommand("verify", "Run brute-force checks and emit certificates");
  nk_args(verify, false);
  verify->add_option("--check", o.check)->check(CLI::IsMember([] {
    auto names = check_names();
    names.push_back("all");
    return names;
  }()));
  verify->add_flag("--sweep", o.sweep, "Run the full envelope instead of one (n, k) cell");
  verify->add_option("--grid-n", o.sweep_cfg.grid_n_max);
  verify->add_option("--grid-k", o.sweep_cfg.grid_k_max);
  verify->add_option("--max-codes", o.sweep_cfg.max_codes);
  verify->add_option("--k-cap", o.sweep_cfg.k_cap);
  verify->add_option("--jsonl", o.jsonl_file, "Also write certificates to this file");

  auto* verify_riwi_cmd = app.add_subcommand("verify-riwi", "Check a user-supplied map for the riwi properties");
  verify_riwi_cmd->add_option("--map", o.map_file)->required();
  nk_args(verify_riwi_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const Format fmt = parse_format(o.format);
  try {
    if (*slimes) {
      const SlimeDecomposition d = decompose(Code::parse(o.code));
      if (fmt == Format::kText) {
        out << "m=" << d.max_pair_sum << " valid=" << (d.valid ? "true" : "false");
        if (d.weight) out << " weight=" << *d.weight;
        for (const auto& s : d.slimes) out << " [" << s.start << "+" << s.length << "]";
        out << '\n';
      } else {
        out << to_json(d).dump() << '\n';
      }
    } else if (*migrate) {
      Code f = Code::parse(o.code);
      for (std::int64_t s = 0; s < o.steps; ++s) f = o.backward ? migrate_backward(f) : migrate_forward(f);
      print_code(out, f, fmt);
    } else if (*phi_cmd) {
      const Code f = Code::parse(o.code);
      print_code(out, o.inverse ? phi_inverse(f) : phi(f), fmt);
    } else if (*ws) {
      out << weighted_sum(Code::parse(o.code)) << '\n';
    } else if (*rot) {
      print_code(out, rotate(Code::parse(o.code), o.steps), fmt);
    } else if (*per) {
      out << period(Code::parse(o.code)) << '\n';
    } else if (*canon) {
      const Necklace x = canonicalize(Code::parse(o.code));
      if (fmt == Format::kJson) {
        out << to_json(x).dump() << '\n';
      } else {
        out << x.canonical().to_string() << '\n';
      }
    } else if (*word) {
      out << code_to_word(Code::parse(o.code)).str() << '\n';
    } else if (*unword) {
      print_code(out, word_to_code(parse_word(o.word)), fmt);
    } else if (*enum_codes) {
      print_codes(out, o.n, o.k,
                  enumerate_codes(o.n, o.k, {.residue = o.residue, .full_period_only = o.full_period}), fmt);
    } else if (*enum_necks) {
      std::vector<Code> canon_codes;
      for (const auto& x : enumerate_necklaces(o.n, o.k, o.full_period)) canon_codes.push_back(x.canonical());
      print_codes(out, o.n, o.k, canon_codes, fmt);
    } else if (*count) {
      const BigInt formula = count_necklaces(o.n, o.k);
      const std::size_t enumerated = enumerate_necklaces(o.n, o.k).size();
      if (fmt == Format::kText) {
        out << "formula=" << formula.str() << " enumerated=" << enumerated << '\n';
      } else {
        Json doc;
        doc["n"] = o.n;
        doc["k"] = o.k;
        doc["formula"] = formula.str();
        doc["enumerated"] = enumerated;
        out << doc.dump() << '\n';
      }
      return BigInt(enumerated) == formula ? kOk : kFailed;
    } else if (*bij) {
      const Chooser chooser = parse_chooser(o.chooser);
      if (!o.map_file.empty()) {
        const auto pairs = load_map_file(o.map_file);
        const RiwiMap chi = riwi_from_pairs(map_name(o.map_file), pairs);
        const RiwiReport report = verify_riwi(chi, o.n, o.k);
        if (!report.pass()) {
          err << "map is not a riwi-map on full-period (" << o.n << "," << o.k << ")-codes:\n"
              << to_json(report).dump(2) << '\n';
          return kFailed;
        }
        print_table(out, build_sigma(o.n, o.k, chi, chooser), fmt);
      } else {
        const PrimeRiwi riwi = o.riwi == "rotation" ? PrimeRiwi::kRotation : PrimeRiwi::kSlime;
        print_table(out, prime_bijection(o.n, o.k, riwi, chooser), fmt);
      }
    } else if (*verify) {
      if (!o.sweep && (verify->count("n") == 0 || verify->count("k") == 0)) {
        err << "verify needs <n> <k> or --sweep\n";
        return kUsage;
      }
      return run_verify(o, fmt, out);
    } else if (*verify_riwi_cmd) {
      const auto pairs = load_map_file(o.map_file);
      const RiwiReport report = verify_riwi(riwi_from_pairs(map_name(o.map_file), pairs), o.n, o.k);
      out << to_json(report).dump() << '\n';
      return report.pass() ? kOk : kFailed;
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kFailed;
  }
  return kOk;
}

}  // namespace neckslime::cli
