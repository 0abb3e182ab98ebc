// Command-line front end: bounds, construct, verify, table, search, dualize.
//
// Exit codes: 0 success / valid / clean, 1 domain failure (invalid design,
// refuted target, table mismatch), 2 usage error.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "concov/bounds.hpp"
#include "concov/catalog.hpp"
#include "concov/construct.hpp"
#include "concov/design.hpp"
#include "concov/design_io.hpp"
#include "concov/solver.hpp"
#include "concov/table.hpp"
#include "concov/verify.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace concov;

namespace {

std::string big(const BigInt& v) { return v.get_str(); }

json entry_json(const CatalogEntry& e) {
  return json{{"lower", big(e.lower)},
              {"upper", big(e.upper)},
              {"lower_source", e.lower_source},
              {"upper_source", e.upper_source},
              {"exact", e.exact()}};
}

json blocks_json(const DesignFamily& fam) {
  json arr = json::array();
  for (const auto& b : fam.blocks()) arr.push_back(b.elements());
  return arr;
}

json params_json(const DesignFamily& fam) {
  if (fam.is_covering_kind()) {
    const CoverParams p = fam.cover_params();
    return json{{"kind", "covering"}, {"n", p.n}, {"k", p.k}, {"r", p.r}};
  }
  const TuranParams p = fam.turan_params();
  return json{{"kind", "turan"}, {"n", p.n}, {"m", p.m}, {"p", p.p}};
}

std::string params_text(const DesignFamily& fam) {
  if (fam.is_covering_kind()) {
    const CoverParams p = fam.cover_params();
    return "covering n=" + std::to_string(p.n) + " k=" + std::to_string(p.k) +
           " r=" + std::to_string(p.r);
  }
  const TuranParams p = fam.turan_params();
  return "turan n=" + std::to_string(p.n) + " m=" + std::to_string(p.m) +
         " p=" + std::to_string(p.p);
}

Catalog make_catalog(const std::string& dir) {
  return dir.empty() ? Catalog() : Catalog(fs::path(dir));
}

void warn_loads(const Catalog& cat) {
  for (const auto& w : cat.load_warnings()) std::cerr << "warning: " << w << '\n';
}

// Writes the family to `out` when given, else to stdout.  Returns whether a
// file was written; callers route their prose to stderr in the stdout case
// so the design text stays pipeable.
bool emit_design(const DesignFamily& fam, const std::string& out) {
  if (out.empty()) {
    serialize_design(std::cout, fam);
    return false;
  }
  save_design(fs::path(out), fam);
  return true;
}

std::ostream& summary_stream(const std::string& out_file) {
  return out_file.empty() ? std::cerr : std::cout;
}

// ---- bounds ---------------------------------------------------------------

struct BoundsCmd {
  int n = 0;
  int r = -1;
  int k = -1;  // block size for the plain problem; defaults to r + 1
  std::string format = "text";
  std::string witness_dir;

  int run() const {
    const int block = k >= 0 ? k : r + 1;
    Catalog cat = make_catalog(witness_dir);
    warn_loads(cat);

    const CatalogEntry plain = cat.covering_number(n, block, r);
    std::optional<CatalogEntry> connected;
    if (block == r + 1) connected = cat.connected_covering_number(n, r);

    json formulas = json::object();
    formulas["schoenheim"] = big(bounds::covering_lower_schoenheim(n, block, r));
    if (block == r + 1) {
      if (r >= 1) {
        const auto c = bounds::counting_lower(n, r);
        formulas["counting"] = {{"exact", c.exact.get_str()}, {"ceil", big(c.rounded_up)}};
      }
      if (r >= 1 && n >= r + 2) {
        const auto d = bounds::density_lower(n, r);
        formulas["density"] = {{"exact", d.exact.get_str()}, {"ceil", big(d.rounded_up)}};
        formulas["density_beats_counting"] = bounds::density_beats_counting(n, r);
        formulas["density_dominance_criterion"] = bounds::density_dominance_criterion(n, r);
      }
      if (r >= 1) {
        formulas["star_chain"] = big(bounds::star_chain_size(n, r));
        formulas["deletion"] = big(bounds::deletion_upper(n, r));
      }
      if (r >= 2 && n >= r + 2) {
        const CatalogEntry sub = cat.covering_number(n - 2, r - 1, r - 2);
        formulas["layered"] = big(bounds::layered_size(n, r, sub.upper));
      }
      if (r == n - 3 && n >= 4) formulas["two_clique"] = big(bounds::mantel_exact(n));
      if (r == n - 4 && n >= 5) formulas["triple_system"] = big(bounds::kostochka_formula(n));
    }

    if (format == "json") {
      json out{{"n", n}, {"r", r}, {"k", block}, {"plain", entry_json(plain)},
               {"formulas", formulas}};
      if (connected) out["connected"] = entry_json(*connected);
      std::cout << out.dump(2) << '\n';
      return 0;
    }

    std::cout << "plain covering  n=" << n << " k=" << block << " r=" << r << "\n"
              << "  lower " << plain.lower << "  (" << plain.lower_source << ")\n"
              << "  upper " << plain.upper << "  (" << plain.upper_source << ")\n";
    if (connected) {
      std::cout << "connected covering  n=" << n << " r=" << r << "\n"
                << "  lower " << connected->lower << "  (" << connected->lower_source << ")\n"
                << "  upper " << connected->upper << "  (" << connected->upper_source << ")\n"
                << "  status " << (connected->exact() ? "settled" : "open") << "\n";
    }
    std::cout << "formulas\n";
    for (auto it = formulas.begin(); it != formulas.end(); ++it) {
      if (it.value().is_object()) {
        std::cout << "  " << it.key() << " = " << it.value()["exact"].get<std::string>()
                  << " -> " << it.value()["ceil"].get<std::string>() << "\n";
      } else if (it.value().is_boolean()) {
        std::cout << "  " << it.key() << " = " << (it.value().get<bool>() ? "yes" : "no") << "\n";
      } else {
        std::cout << "  " << it.key() << " = " << it.value().get<std::string>() << "\n";
      }
    }
    return 0;
  }
};

// ---- construct --------------------------------------------------------------

struct ConstructCmd {
  std::string method;
  int n = 0;
  int r = -1;
  std::string sub_file;    // layered
  std::string base_file;   // extend / apex
  std::string plain_file;  // extend
  std::string out_file;
  std::string turan_out;   // thick
  std::string format = "text";

  int run() const {
    std::optional<DesignFamily> built_fam;
    std::optional<DesignFamily> turan_side;
    bool optimality_open = false;

    if (method == "trivial") {
      built_fam = construct::trivial_cases(n, r);
    } else if (method == "triangle") {
      built_fam = construct::triangle_chain(n);
    } else if (method == "layered") {
      std::optional<DesignFamily> sub;
      if (!sub_file.empty()) sub = load_design(fs::path(sub_file));
      built_fam = construct::layered_covering(n, r, sub);
    } else if (method == "two-clique") {
      built_fam = construct::two_clique_covering(n);
    } else if (method == "thick") {
      construct::ThickSystem sys = construct::thick_triple_system(n);
      built_fam = sys.covering;
      turan_side = sys.triples;
      optimality_open = sys.optimality_open;
    } else if (method == "loose-nine") {
      built_fam = construct::nine_point_loose_system();
    } else if (method == "extend") {
      if (base_file.empty() || plain_file.empty()) {
        throw std::domain_error("construct: extend needs --base and --plain");
      }
      built_fam = construct::extend_ground(load_design(fs::path(base_file)),
                                           load_design(fs::path(plain_file)));
    } else if (method == "apex") {
      if (base_file.empty()) throw std::domain_error("construct: apex needs --base");
      built_fam = construct::assemble_apex_extension(load_design(fs::path(base_file)));
      if (!built_fam) {
        std::cerr << "no dropped block yields a valid extension\n";
        return 1;
      }
    } else {
      throw std::domain_error("construct: unknown method '" + method + "'");
    }
    const DesignFamily& fam = *built_fam;

    if (turan_side && !turan_out.empty()) save_design(fs::path(turan_out), *turan_side);

    if (format == "json") {
      json out{{"method", method}, {"params", params_json(fam)},
               {"size", fam.size()}, {"blocks", blocks_json(fam)}};
      if (turan_side) {
        out["complementary_side"] = {{"params", params_json(*turan_side)},
                                     {"size", turan_side->size()},
                                     {"optimality_open", optimality_open}};
      }
      if (!out_file.empty()) {
        save_design(fs::path(out_file), fam);
        out["file"] = out_file;
      }
      std::cout << out.dump(2) << '\n';
      return 0;
    }

    const bool saved = emit_design(fam, out_file);
    std::ostream& os = summary_stream(out_file);
    os << method << ": " << params_text(fam) << ", " << fam.size() << " blocks";
    if (saved) os << " -> " << out_file;
    os << '\n';
    if (turan_side) {
      os << "complementary side: " << params_text(*turan_side) << ", "
         << turan_side->size() << " blocks";
      if (!turan_out.empty()) os << " -> " << turan_out;
      if (optimality_open) os << "  (best known; optimality open)";
      os << '\n';
    }
    return 0;
  }
};

// ---- verify -----------------------------------------------------------------

struct VerifyCmd {
  std::string file;
  bool allow_disconnected = false;
  std::string format = "text";

  int run() const {
    const DesignFamily fam = load_design(fs::path(file));
    const VerifyReport rep = verify_family(fam);
    const bool ok = rep.covers && (rep.connected || allow_disconnected);

    if (format == "json") {
      json out{{"file", file}, {"params", params_json(fam)}, {"blocks", fam.size()},
               {"covers", rep.covers}, {"connected", rep.connected},
               {"component_count", rep.component_count},
               {"component_sizes", rep.component_sizes}, {"ok", ok}};
      out["first_violation"] =
          rep.first_violation ? json(rep.first_violation->elements()) : json(nullptr);
      std::cout << out.dump(2) << '\n';
      return ok ? 0 : 1;
    }

    std::cout << "file: " << file << "\n"
              << params_text(fam) << ", " << fam.size() << " blocks\n"
              << "covers: " << (rep.covers ? "yes" : "no") << "\n";
    if (rep.first_violation) {
      std::cout << "first violation:";
      for (int e : rep.first_violation->elements()) std::cout << ' ' << e;
      std::cout << '\n';
    }
    std::cout << "connected: " << (rep.connected ? "yes" : "no") << " ("
              << rep.component_count << " component"
              << (rep.component_count == 1 ? "" : "s") << ")\n"
              << "result: " << (ok ? "valid" : "invalid") << '\n';
    return ok ? 0 : 1;
  }
};

// ---- table ------------------------------------------------------------------

std::string cell_value_text(const CatalogEntry& e) {
  if (e.exact()) return big(e.lower);
  return "[" + big(e.lower) + "," + big(e.upper) + "]";
}

std::string reference_text(const table::ReferenceCell* ref) {
  if (ref == nullptr) return "";
  auto tagged = [](long v, const std::string& tag) {
    std::string s = std::to_string(v);
    if (!tag.empty()) s += "(" + tag + ")";
    return s;
  };
  if (ref->exact()) return tagged(ref->lo, ref->lo_tag);
  return "[" + tagged(ref->lo, ref->lo_tag) + "," + tagged(ref->hi, ref->hi_tag) + "]";
}

struct TableCmd {
  int n_max = 14;
  bool cells = false;
  std::string format = "text";
  std::string witness_dir;

  int run() const {
    Catalog cat = make_catalog(witness_dir);
    warn_loads(cat);
    const table::TableReport rep = table::build_table(cat, n_max);

    if (format == "json") {
      json cell_arr = json::array();
      for (const auto& c : rep.cells) {
        json jc{{"n", c.n}, {"r", c.r}, {"entry", entry_json(c.entry)},
                {"match", table::match_name(c.match)}};
        jc["reference"] =
            c.reference ? json{{"lo", c.reference->lo}, {"hi", c.reference->hi},
                               {"lo_tag", c.reference->lo_tag}, {"hi_tag", c.reference->hi_tag}}
                        : json(nullptr);
        cell_arr.push_back(std::move(jc));
      }
      json out{{"n_max", rep.n_max},
               {"summary", {{"agree", rep.agree}, {"within", rep.within},
                            {"mismatch", rep.mismatch}, {"unmatched", rep.unmatched},
                            {"clean", rep.clean()}}},
               {"cells", std::move(cell_arr)}};
      std::cout << out.dump(2) << '\n';
      return rep.clean() ? 0 : 1;
    }

    if (format == "csv") {
      std::cout << "n,r,lower,upper,exact,lower_source,upper_source,"
                   "ref_lo,ref_hi,ref_lo_tag,ref_hi_tag,match\n";
      for (const auto& c : rep.cells) {
        std::cout << c.n << ',' << c.r << ',' << big(c.entry.lower) << ','
                  << big(c.entry.upper) << ',' << (c.entry.exact() ? 1 : 0) << ','
                  << c.entry.lower_source << ',' << c.entry.upper_source << ',';
        if (c.reference) {
          std::cout << c.reference->lo << ',' << c.reference->hi << ','
                    << c.reference->lo_tag << ',' << c.reference->hi_tag;
        } else {
          std::cout << ",,,";
        }
        std::cout << ',' << table::match_name(c.match) << '\n';
      }
      return rep.clean() ? 0 : 1;
    }

    // Matrix, rows r, columns n.  Markers: '~' inside reference interval,
    // '!' mismatch, '?' no reference.
    std::vector<std::string> rendered(rep.cells.size());
    std::vector<std::size_t> width(static_cast<std::size_t>(n_max) + 1, 0);
    for (std::size_t i = 0; i < rep.cells.size(); ++i) {
      const auto& c = rep.cells[i];
      std::string s = cell_value_text(c.entry);
      if (c.match == table::Match::within) s += "~";
      if (c.match == table::Match::mismatch) s += "!";
      if (c.match == table::Match::none) s += "?";
      rendered[i] = std::move(s);
      width[static_cast<std::size_t>(c.n)] =
          std::max(width[static_cast<std::size_t>(c.n)], rendered[i].size());
    }
    std::cout << "connected covering numbers, n up to " << n_max << "\n      ";
    for (int n = 1; n <= n_max; ++n) {
      std::string h = "n=" + std::to_string(n);
      width[static_cast<std::size_t>(n)] = std::max(width[static_cast<std::size_t>(n)], h.size());
      std::cout << std::string(width[static_cast<std::size_t>(n)] - h.size(), ' ') << h << ' ';
    }
    std::cout << '\n';
    std::size_t idx = 0;
    for (int r = 0; r < n_max; ++r) {
      std::cout << "r=" << r << (r < 10 ? "  " : " ") << ' ';
      for (int n = 1; n <= n_max; ++n) {
        const std::size_t w = width[static_cast<std::size_t>(n)];
        if (n <= r) {
          std::cout << std::string(w, ' ') << ' ';
          continue;
        }
        const std::string& s = rendered[idx++];
        std::cout << std::string(w - s.size(), ' ') << s << ' ';
      }
      std::cout << '\n';
    }
    std::cout << "matches: " << rep.agree << " agree, " << rep.within
              << " within reference interval, " << rep.mismatch << " mismatch, "
              << rep.unmatched << " without reference\n";

    if (cells) {
      std::cout << '\n';
      for (const auto& c : rep.cells) {
        std::cout << "n=" << c.n << " r=" << c.r << "  " << cell_value_text(c.entry)
                  << "  lower: " << c.entry.lower_source
                  << "  upper: " << c.entry.upper_source;
        if (c.reference) std::cout << "  ref " << reference_text(c.reference);
        std::cout << "  " << table::match_name(c.match) << '\n';
      }
    }
    return rep.clean() ? 0 : 1;
  }
};

// ---- search -----------------------------------------------------------------

struct SearchCmd {
  int n = 0;
  int r = -1;
  int k = -1;
  std::optional<int> target;
  std::uint64_t budget = 1'000'000;
  std::uint64_t seed = 1;
  int parallel = 1;
  bool connected = false;
  bool exhaustive = false;
  int cap = -1;
  bool register_witness = false;
  std::string out_file;
  std::string witness_dir;
  std::string format = "text";

  int run() const {
    const int block = k >= 0 ? k : r + 1;
    const CoverParams params{n, block, r};

    solver::SearchOutcome outcome;
    if (exhaustive) {
      int size_cap = cap;
      if (size_cap < 0 && target) size_cap = *target;
      if (size_cap < 0) {
        Catalog cat = make_catalog(witness_dir);
        const CatalogEntry e = connected && block == r + 1
                                   ? cat.connected_covering_number(n, r)
                                   : cat.covering_number(n, block, r);
        if (!e.upper.fits_slong_p()) throw std::domain_error("search: give --cap");
        size_cap = static_cast<int>(e.upper.get_si());
      }
      outcome = solver::exhaustive_min(params, connected, size_cap);
    } else {
      solver::SearchConfig cfg;
      cfg.seed = seed;
      cfg.budget = budget;
      cfg.target_size = target;
      cfg.require_connected = connected;
      cfg.parallelism = parallel;
      outcome = solver::local_search(params, cfg);
    }

    const char* status = outcome.status == solver::SearchStatus::exact ? "exact"
                         : outcome.status == solver::SearchStatus::upper_bound_only
                             ? "upper-bound"
                             : "failed";

    if (outcome.witness && register_witness) {
      Catalog cat = make_catalog(witness_dir);
      cat.register_witness(*outcome.witness, connected);
    }

    if (format == "json") {
      json out{{"params", {{"n", n}, {"k", block}, {"r", r}}},
               {"connected_required", connected}, {"exhaustive", exhaustive},
               {"status", status}, {"lower_bound_used", big(outcome.lower_bound_used)}};
      out["size"] = outcome.witness ? json(outcome.witness->size()) : json(nullptr);
      out["blocks"] = outcome.witness ? blocks_json(*outcome.witness) : json(nullptr);
      std::cout << out.dump(2) << '\n';
      return outcome.witness ? 0 : 1;
    }

    if (!outcome.witness) {
      std::cout << "status: failed (nothing found up to the given size)\n";
      if (exhaustive) {
        std::cout << "smallest size not refuted: " << outcome.lower_bound_used << '\n';
      } else {
        std::cout << "best lower bound: " << outcome.lower_bound_used << '\n';
      }
      return 1;
    }
    const bool saved = emit_design(*outcome.witness, out_file);
    std::ostream& os = summary_stream(out_file);
    os << "status: " << status << "\nsize: " << outcome.witness->size()
       << "\nlower bound used: " << outcome.lower_bound_used << '\n';
    if (saved) os << "written to " << out_file << '\n';
    return 0;
  }
};

// ---- dualize ----------------------------------------------------------------

struct DualizeCmd {
  std::string file;
  std::string out_file;
  std::string format = "text";

  int run() const {
    const DesignFamily fam = load_design(fs::path(file));
    const DesignFamily dual = dualize(fam);
    const DesignFamily back = dualize(dual);
    const bool identity = serialize_design(back) == serialize_design(fam);

    // Complementation reverses lexicographic order, so block i of the family
    // corresponds to block size-1-i of the dual; adjacency must transfer
    // across that relabeling whenever both thresholds are defined.
    bool iso_checked = false;
    bool iso = false;
    try {
      const BlockGraph g = block_graph(fam, default_threshold(fam));
      const BlockGraph h = block_graph(dual, default_threshold(dual));
      const int sz = static_cast<int>(fam.size());
      std::vector<std::pair<int, int>> mapped;
      mapped.reserve(g.edges.size());
      for (auto [a, b] : g.edges) {
        int x = sz - 1 - a;
        int y = sz - 1 - b;
        if (x > y) std::swap(x, y);
        mapped.emplace_back(x, y);
      }
      std::sort(mapped.begin(), mapped.end());
      iso = mapped == h.edges;
      iso_checked = true;
    } catch (const std::domain_error&) {
      // Threshold outside [0, p] on the complementary side; nothing to check.
    }

    if (format == "json") {
      json out{{"input", params_json(fam)}, {"dual", params_json(dual)},
               {"size", dual.size()}, {"double_dual_identity", identity},
               {"block_graph_isomorphic", iso_checked ? json(iso) : json(nullptr)},
               {"blocks", blocks_json(dual)}};
      if (!out_file.empty()) {
        save_design(fs::path(out_file), dual);
        out["file"] = out_file;
      }
      std::cout << out.dump(2) << '\n';
      return identity ? 0 : 1;
    }

    const bool saved = emit_design(dual, out_file);
    std::ostream& os = summary_stream(out_file);
    os << "input: " << params_text(fam) << ", " << fam.size() << " blocks\n"
       << "dual: " << params_text(dual) << ", " << dual.size() << " blocks";
    if (saved) os << " -> " << out_file;
    os << "\ndouble dual identical: " << (identity ? "yes" : "no") << '\n';
    if (iso_checked) {
      os << "block graphs isomorphic under index reversal: " << (iso ? "yes" : "no") << '\n';
    }
    return identity ? 0 : 1;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Connected covering designs: bounds, constructions, verification, search"};
  app.require_subcommand(1);

  BoundsCmd bounds_cmd;
  auto* sb = app.add_subcommand("bounds", "Bound battery and catalog enclosure for one parameter pair");
  sb->add_option("-n,--points", bounds_cmd.n, "ground set size")->required();
  sb->add_option("-r,--rank", bounds_cmd.r, "covered subset size")->required();
  sb->add_option("-k,--block-size", bounds_cmd.k, "block size (default r+1)");
  sb->add_option("--witness-dir", bounds_cmd.witness_dir, "witness store directory");
  sb->add_option("--format", bounds_cmd.format)->check(CLI::IsMember({"text", "json"}));

  ConstructCmd construct_cmd;
  auto* sc = app.add_subcommand("construct", "Build one of the explicit families");
  sc->add_option("--method", construct_cmd.method,
                 "trivial|triangle|layered|two-clique|thick|loose-nine|extend|apex")
      ->required();
  sc->add_option("-n,--points", construct_cmd.n, "ground set size");
  sc->add_option("-r,--rank", construct_cmd.r, "covered subset size");
  sc->add_option("--sub", construct_cmd.sub_file, "sub-covering file for layered");
  sc->add_option("--base", construct_cmd.base_file, "base covering file for extend/apex");
  sc->add_option("--plain", construct_cmd.plain_file, "smaller-rank covering file for extend");
  sc->add_option("-o,--out", construct_cmd.out_file, "write the family here");
  sc->add_option("--turan-out", construct_cmd.turan_out, "write thick's complementary side here");
  sc->add_option("--format", construct_cmd.format)->check(CLI::IsMember({"text", "json"}));

  VerifyCmd verify_cmd;
  auto* sv = app.add_subcommand("verify", "Check covering property and block-graph connectivity");
  sv->add_option("file", verify_cmd.file, "design file")->required();
  sv->add_flag("--allow-disconnected", verify_cmd.allow_disconnected,
               "valid even when the block graph is split");
  sv->add_option("--format", verify_cmd.format)->check(CLI::IsMember({"text", "json"}));

  TableCmd table_cmd;
  auto* st = app.add_subcommand("table", "Evaluate all cells and compare against the reference");
  st->add_option("--n-max", table_cmd.n_max, "largest ground set size")->check(CLI::Range(1, 64));
  st->add_flag("--cells", table_cmd.cells, "one provenance line per cell");
  st->add_option("--witness-dir", table_cmd.witness_dir, "witness store directory");
  st->add_option("--format", table_cmd.format)->check(CLI::IsMember({"text", "json", "csv"}));

  SearchCmd search_cmd;
  auto* ss = app.add_subcommand("search", "Randomized or exhaustive minimum-witness search");
  ss->add_option("-n,--points", search_cmd.n, "ground set size")->required();
  ss->add_option("-r,--rank", search_cmd.r, "covered subset size")->required();
  ss->add_option("-k,--block-size", search_cmd.k, "block size (default r+1)");
  int target_holder = -1;
  ss->add_option("--target", target_holder, "exact family size to search at");
  ss->add_option("--budget", search_cmd.budget, "moves per worker");
  ss->add_option("--seed", search_cmd.seed, "base seed");
  ss->add_option("--parallel", search_cmd.parallel, "worker count")->check(CLI::Range(1, 256));
  ss->add_flag("--connected", search_cmd.connected, "require a connected block graph");
  ss->add_flag("--exhaustive", search_cmd.exhaustive, "provably minimum via iterative deepening");
  ss->add_option("--cap", search_cmd.cap, "size cap for --exhaustive");
  ss->add_flag("--register", search_cmd.register_witness, "store the witness in the catalog");
  ss->add_option("-o,--out", search_cmd.out_file, "write the witness here");
  ss->add_option("--witness-dir", search_cmd.witness_dir, "witness store directory");
  ss->add_option("--format", search_cmd.format)->check(CLI::IsMember({"text", "json"}));

  DualizeCmd dualize_cmd;
  auto* sd = app.add_subcommand("dualize", "Complement every block and flip the kind");
  sd->add_option("file", dualize_cmd.file, "design file")->required();
  sd->add_option("-o,--out", dualize_cmd.out_file, "write the dual here");
  sd->add_option("--format", dualize_cmd.format)->check(CLI::IsMember({"text", "json"}));

  int rc = 0;
  sb->callback([&] { rc = bounds_cmd.run(); });
  sc->callback([&] { rc = construct_cmd.run(); });
  sv->callback([&] { rc = verify_cmd.run(); });
  st->callback([&] { rc = table_cmd.run(); });
  ss->callback([&] {
    if (target_holder >= 0) search_cmd.target = target_holder;
    rc = search_cmd.run();
  });
  sd->callback([&] { rc = dualize_cmd.run(); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return rc;
}
