#include "lietrees/cli.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <new>
#include <random>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lietrees/cache.hpp"
#include "lietrees/decorations.hpp"
#include "lietrees/errors.hpp"
#include "lietrees/lie.hpp"
#include "lietrees/magnus.hpp"
#include "lietrees/quotients.hpp"
#include "lietrees/relations.hpp"
#include "lietrees/tree_vector.hpp"

namespace lietrees {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::size_t n = 0;
  std::size_t max_n = 0;
  std::string relations = "as,ihx";
  std::string parity;
  std::string method = "auto";
  std::string group;
  std::string cache_dir;
  std::string format = "text";
  std::uint64_t seed = 1;
  std::string tree;
  std::size_t truncate = 0;
  std::string input;
  std::string vector_text;
};

RelationSelection selection(const RunConfig& cfg) {
  RelationSelection sel = RelationSelection::parse(cfg.relations);
  if (sel.stu2 && cfg.parity.empty()) throw UsageError("--parity is required when stu2 is requested");
  if (!sel.stu2 && !cfg.parity.empty()) throw UsageError("--parity only applies together with stu2");
  if (sel.stu2) sel.parity = parse_parity(cfg.parity);
  return sel;
}

std::string join_factors(const std::vector<BigInt>& fs, const char* sep) {
  std::string out;
  for (const auto& f : fs) out += (out.empty() ? "" : sep) + f.get_str();
  return out;
}

json snf_json(const SnfResult& s) {
  std::size_t units = 0;
  json nontrivial = json::array();
  for (const auto& d : s.invariant_factors)
    if (d == 1)
      ++units;
    else
      nontrivial.push_back(d.get_str());
  return {{"rank", s.rank},
          {"cols", s.cols},
          {"unit_factors", units},
          {"torsion", nontrivial},
          {"cokernel", s.cokernel_string()}};
}

SnfResult snf_from_json(const json& j) {
  SnfResult s;
  s.rank = j.at("rank").get<std::size_t>();
  s.cols = j.at("cols").get<std::size_t>();
  s.invariant_factors.assign(j.at("unit_factors").get<std::size_t>(), BigInt(1));
  for (const auto& d : j.at("torsion")) s.invariant_factors.emplace_back(d.get<std::string>());
  return s;
}

json result_json(const QuotientResult& r) {
  json j{{"n", r.n},
         {"relations", r.relations.to_string()},
         {"method", to_string(r.method)},
         {"rank", r.rank},
         {"certification", to_string(r.certification)}};
  j["snf"] = r.snf ? snf_json(*r.snf) : json(nullptr);
  if (r.modular) {
    json pp = json::array();
    for (const auto& [p, k] : r.modular->per_prime) pp.push_back({{"prime", p}, {"matrix_rank", k}});
    j["modular"] = {{"per_prime", pp}, {"agree", r.modular->agree}};
  } else {
    j["modular"] = nullptr;
  }
  return j;
}

QuotientResult result_from_json(const json& j, const RelationSelection& sel) {
  QuotientResult r;
  r.n = j.at("n").get<std::size_t>();
  r.relations = sel;
  r.method = parse_method(j.at("method").get<std::string>());
  r.rank = j.at("rank").get<std::size_t>();
  r.certification = j.at("certification").get<std::string>() == "exact over Z" ? Certification::ExactOverZ
                                                                                : Certification::ProbabilisticOverQ;
  if (!j.at("snf").is_null()) r.snf = snf_from_json(j.at("snf"));
  if (!j.at("modular").is_null()) {
    ModularRank m;
    for (const auto& e : j.at("modular").at("per_prime"))
      m.per_prime.emplace_back(e.at("prime").get<std::uint32_t>(), e.at("matrix_rank").get<std::size_t>());
    m.agree = j.at("modular").at("agree").get<bool>();
    if (m.agree && !m.per_prime.empty()) m.probable_rank = m.per_prime.front().second;
    r.modular = m;
  }
  return r;
}

struct Computed {
  QuotientResult result;
  bool cached = false;
};

Computed quotient(std::size_t n, const RelationSelection& sel, Method method, const RunConfig& cfg) {
  Method m = resolve_method(n, method);
  std::optional<std::filesystem::path> fallback;
  if (!cfg.cache_dir.empty()) fallback = cfg.cache_dir;
  auto cache = ResultCache::open(fallback);
  std::string key = "quotient;n=" + std::to_string(n) + ";relations=" + sel.to_string() +
                    ";decorations=none;method=" + to_string(m);
  if (cache)
    if (auto j = cache->load(key)) return {result_from_json(*j, sel), true};
  Computed c{compute_quotient(n, sel, m), false};
  if (cache) cache->store(key, result_json(c.result));
  return c;
}

std::string torsion_cell(const QuotientResult& r, const char* sep) {
  if (!r.snf) return "n/a";
  auto t = r.snf->torsion();
  return t.empty() ? "none" : join_factors(t, sep);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

void check_format(const std::string& f) {
  if (f != "text" && f != "json" && f != "csv") throw UsageError("--format must be text, json or csv");
}

// ---- commands -------------------------------------------------------------

int cmd_enum(const RunConfig& cfg, std::ostream& out) {
  if (cfg.n == 0) throw UsageError("--n must be at least 1");
  auto trees = enumerate_trees(cfg.n);
  if (cfg.format == "json") {
    json j{{"n", cfg.n}, {"count", trees.size()}, {"trees", json::array()}};
    for (const auto& t : trees) j["trees"].push_back(t.to_string());
    out << j.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    out << "count," << trees.size() << '\n' << "index,tree\n";
    for (std::size_t i = 0; i < trees.size(); ++i) out << i << ',' << csv_escape(trees[i].to_string()) << '\n';
  } else {
    out << trees.size() << '\n';
    for (const auto& t : trees) out << t.to_string() << '\n';
  }
  return kExitOk;
}

int cmd_rank(const RunConfig& cfg, std::ostream& out) {
  if (cfg.n == 0) throw UsageError("--n must be at least 1");
  auto sel = selection(cfg);
  auto c = quotient(cfg.n, sel, parse_method(cfg.method), cfg);
  const auto& r = c.result;
  if (cfg.format == "json") {
    json j = result_json(r);
    out << j.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    out << "n,relations,method,rank,torsion,certification\n";
    out << r.n << ',' << csv_escape(r.relations.to_string()) << ',' << to_string(r.method) << ',' << r.rank << ','
        << torsion_cell(r, ";") << ',' << to_string(r.certification) << '\n';
  } else {
    out << "n: " << r.n << '\n';
    out << "relations: " << r.relations.to_string() << '\n';
    out << "method: " << to_string(r.method) << '\n';
    out << "rank: " << r.rank << '\n';
    out << "torsion: " << torsion_cell(r, ", ") << '\n';
    if (r.snf) out << "cokernel: " << r.snf->cokernel_string() << '\n';
    if (r.modular)
      for (const auto& [p, k] : r.modular->per_prime)
        out << "matrix rank mod " << p << ": " << k << '\n';
    out << "certification: " << to_string(r.certification) << '\n';
    if (c.cached)
      out << "time: cached\n";
    else
      out << "time: " << std::fixed << std::setprecision(3) << r.seconds << " s\n";
  }
  return kExitOk;
}

int cmd_table(const RunConfig& cfg, std::ostream& out) {
  if (cfg.max_n == 0) throw UsageError("--max-n must be at least 1");
  Method method = parse_method(cfg.method);
  struct Row {
    QuotientResult lie, odd, even;
  };
  std::vector<Row> rows;
  auto start = std::chrono::steady_clock::now();
  RelationSelection lie_sel{true, true, false, Parity::Odd};
  RelationSelection odd_sel{true, true, true, Parity::Odd};
  RelationSelection even_sel{true, true, true, Parity::Even};
  for (std::size_t n = 1; n <= cfg.max_n; ++n)
    rows.push_back({quotient(n, lie_sel, method, cfg).result, quotient(n, odd_sel, method, cfg).result,
                    quotient(n, even_sel, method, cfg).result});
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  auto cert = [](const Row& r) {
    bool exact = r.lie.certification == Certification::ExactOverZ &&
                 r.odd.certification == Certification::ExactOverZ &&
                 r.even.certification == Certification::ExactOverZ;
    return to_string(exact ? Certification::ExactOverZ : Certification::ProbabilisticOverQ);
  };
  if (cfg.format == "csv") {
    out << "n,rank_lie,rank_at_odd,rank_at_even,torsion_lie,torsion_at_odd,torsion_at_even,certification\n";
    for (const auto& r : rows)
      out << r.lie.n << ',' << r.lie.rank << ',' << r.odd.rank << ',' << r.even.rank << ','
          << torsion_cell(r.lie, ";") << ',' << torsion_cell(r.odd, ";") << ',' << torsion_cell(r.even, ";") << ','
          << cert(r) << '\n';
  } else if (cfg.format == "json") {
    json j = json::array();
    for (const auto& r : rows)
      j.push_back({{"n", r.lie.n},
                   {"rank_lie", r.lie.rank},
                   {"rank_at_odd", r.odd.rank},
                   {"rank_at_even", r.even.rank},
                   {"torsion_lie", torsion_cell(r.lie, ";")},
                   {"torsion_at_odd", torsion_cell(r.odd, ";")},
                   {"torsion_at_even", torsion_cell(r.even, ";")},
                   {"certification", cert(r)}});
    out << j.dump(2) << '\n';
  } else {
    out << "| n | rank Lie(n) | rank A^T,odd | rank A^T,even | torsion Lie | torsion odd | torsion even | "
           "certification |\n";
    out << "|---|---|---|---|---|---|---|---|\n";
    for (const auto& r : rows)
      out << "| " << r.lie.n << " | " << r.lie.rank << " | " << r.odd.rank << " | " << r.even.rank << " | "
          << torsion_cell(r.lie, ", ") << " | " << torsion_cell(r.odd, ", ") << " | " << torsion_cell(r.even, ", ")
          << " | " << cert(r) << " |\n";
    out << "time: " << std::fixed << std::setprecision(3) << seconds << " s\n";
  }
  return kExitOk;
}

std::string coordinates_string(const std::vector<BigInt>& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.size(); ++i) out += (i ? ", " : "") + c[i].get_str();
  return out + ")";
}

TreeVector from_lyndon_coordinates(std::size_t n, const std::vector<BigInt>& c) {
  auto basis = lyndon_basis(n);
  TreeVector v;
  for (std::size_t i = 0; i < c.size(); ++i) v.add(basis[i].bracketing, c[i]);
  return v;
}

int cmd_reduce(const RunConfig& cfg, std::ostream& out) {
  std::string text = cfg.vector_text;
  if (!cfg.input.empty()) {
    if (!text.empty()) throw UsageError("give either --input or --vector, not both");
    if (cfg.input == "-") {
      text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
      std::ifstream in(cfg.input);
      if (!in) throw UsageError("cannot read " + cfg.input);
      text.assign(std::istreambuf_iterator<char>(in), {});
    }
  }
  if (text.empty()) throw UsageError("reduce needs --input FILE or --vector TEXT");
  auto sel = selection(cfg);
  if (!sel.lie_complete()) throw UsageError("reduce works modulo as and ihx; include both");
  auto parsed = parse_tree_vector(text);

  if (auto* dv = std::get_if<DecoratedTreeVector>(&parsed)) {
    if (sel.stu2) throw UsageError("stu2 applies to undecorated vectors only");
    std::vector<std::string> gens;
    if (!cfg.group.empty()) {
      gens = GroupSpec::parse(cfg.group).generators();
    } else {
      std::set<std::string> seen;
      for (const auto& [t, c] : *dv)
        for (const auto& w : t.decorations)
          for (const auto& l : w.letters()) seen.insert(l.generator);
      gens.assign(seen.begin(), seen.end());
    }
    auto coords = decorated_normal_form({*dv, GroupSpec(gens)});
    for (const auto& [tuple, c] : coords) out << to_string(tuple) << ": " << coordinates_string(c) << '\n';
    out << (coords.empty() ? "ZERO in Lie_G(n)" : "NONZERO in Lie_G(n)") << '\n';
    out << "note: membership is decided modulo AS and IHX only\n";
    return kExitOk;
  }

  const auto& v = std::get<TreeVector>(parsed);
  if (v.is_zero()) {
    out << "normal form: 0\nZERO in Lie(n)\n";
    return kExitOk;
  }
  std::size_t n = v.degree();
  auto c = to_lyndon_coordinates(v);
  bool zero = std::all_of(c.begin(), c.end(), [](const BigInt& x) { return x == 0; });
  out << "coordinates: " << coordinates_string(c) << '\n';
  out << "normal form: " << from_lyndon_coordinates(n, c).to_string() << '\n';
  out << (zero ? "ZERO in Lie(n)" : "NONZERO in Lie(n)") << '\n';
  if (sel.stu2) {
    std::string name = "A^T," + to_string(sel.parity) + "_n";
    if (n == 1) {
      out << "ZERO in " << name << '\n';
      return kExitOk;
    }
    LieCoordinates lc(n, LieCoordinates::Basis::Lyndon);
    HermiteBasis h(lc.dimension());
    std::vector<std::pair<std::size_t, std::int64_t>> row;
    for_each_stu2_relation(n, sel.parity, [&](const Relation& r) {
      row.clear();
      for (const auto& term : r.terms) lc.accumulate(term.tree, term.sign, row);
      std::vector<std::pair<std::size_t, BigInt>> e;
      for (const auto& [j, x] : row) e.emplace_back(j, BigInt(static_cast<long>(x)));
      h.insert(make_sparse_row(std::move(e)));
    });
    std::vector<std::pair<std::size_t, BigInt>> e;
    for (std::size_t j = 0; j < c.size(); ++j) e.emplace_back(j, c[j]);
    SparseRow red = h.reduce(make_sparse_row(std::move(e)));
    std::vector<BigInt> rc(c.size());
    for (const auto& [j, x] : red) rc[j] = x;
    out << "normal form in " << name << ": " << from_lyndon_coordinates(n, rc).to_string() << '\n';
    out << (red.empty() ? "ZERO in " : "NONZERO in ") << name << '\n';
  }
  return kExitOk;
}

int cmd_magnus(const RunConfig& cfg, std::ostream& out) {
  if (cfg.tree.empty()) throw UsageError("magnus needs --tree");
  Tree t = parse_plain_tree(cfg.tree);
  std::size_t n = t.degree();
  if (cfg.truncate < n)
    throw UsageError("--truncate must be at least the tree degree " + std::to_string(n));
  auto w = tree_to_word(t);
  auto m = magnus_expand(w, cfg.truncate);
  bool low_ok = m.degree_range(0, n - 1) == NcPoly::constant(m.alphabet(), m.truncation(), 1);
  bool lead_ok = m.homogeneous_part(n) == expand(t);
  out << "tree: " << t.to_string() << '\n';
  out << "word: " << w.to_string() << '\n';
  out << "magnus expansion (degree <= " << cfg.truncate << "): " << m.to_string() << '\n';
  out << "lie expansion: " << expand(t).to_string() << '\n';
  out << "leading term agreement: " << (low_ok && lead_ok ? "PASS" : "FAIL") << '\n';
  return low_ok && lead_ok ? kExitOk : kExitFailure;
}

std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  std::size_t max_n = cfg.max_n ? cfg.max_n : 4;
  if (max_n > 6) throw UsageError("verify supports --max-n up to 6");
  std::mt19937_64 rng(cfg.seed);
  int failures = 0;
  auto report = [&](bool ok, const std::string& what) {
    out << (ok ? "PASS " : "FAIL ") << what << '\n';
    if (!ok) ++failures;
  };
  for (std::size_t n = 1; n <= max_n; ++n) {
    auto trees = enumerate_trees(n);
    bool ordered = std::adjacent_find(trees.begin(), trees.end(), [](const Tree& a, const Tree& b) {
                     return !(a < b);
                   }) == trees.end();
    report(trees.size() == tree_count(n) && ordered, "tree count and order n=" + std::to_string(n));

    std::size_t bad = 0, total = 0;
    auto annihilated = [&](const Relation& r) {
      ++total;
      if (!expand(r.vector()).is_zero()) ++bad;
    };
    for_each_as_relation(n, annihilated);
    for_each_ihx_relation(n, annihilated);
    report(bad == 0, "AS/IHX expand to zero n=" + std::to_string(n) + " (" + std::to_string(total) + " vectors)");

    bad = 0;
    for (const auto& t : trees) {
      auto m = magnus_expand(tree_to_word(t), n);
      if (m.degree_range(0, n - 1) != NcPoly::constant(n, n, 1) || m.homogeneous_part(n) != expand(t)) ++bad;
    }
    report(bad == 0, "Magnus leading terms n=" + std::to_string(n));

    std::size_t expect = factorial(n - 1);
    report(expansion_span_rank(n, GradedConfig{0}) == expect && expansion_span_rank(n, GradedConfig{1}) == expect,
           "expansion span rank (n-1)! for both parities n=" + std::to_string(n));

    if (n >= 2 && n <= 5) {
      auto snf = cokernel(relation_source(n, {true, true, false, Parity::Odd}), tree_basis(n));
      report(snf.free_rank() == expect && snf.torsion_free(), "Lie(n) rank and torsion n=" + std::to_string(n));
      for (Parity p : {Parity::Odd, Parity::Even}) {
        RelationSelection sel{true, true, true, p};
        auto a = compute_quotient(n, sel, Method::Snf);
        auto b = compute_quotient(n, sel, Method::Lyndon);
        report(a.rank == b.rank && a.torsion() == b.torsion(), "snf and lyndon routes agree n=" + std::to_string(n) + " " + to_string(p));
      }
    }

    if (n <= 4) {
      std::vector<std::string> gens{"a", "b"};
      std::uniform_int_distribution<int> len(0, 2), gen(0, 1), sign(0, 1), count(1, 3);
      std::set<DecorationTuple> tuples;
      int want = count(rng);
      while (static_cast<int>(tuples.size()) < want) {
        DecorationTuple t;
        for (std::size_t i = 0; i < n; ++i) {
          std::vector<Letter> ls;
          for (int k = len(rng); k > 0; --k) ls.push_back({gens[gen(rng)], sign(rng) ? 1 : -1});
          t.emplace_back(std::move(ls));
        }
        tuples.insert(std::move(t));
      }
      auto snf = decorated_rank(n, {tuples.begin(), tuples.end()});
      report(snf.free_rank() == expect * tuples.size() && snf.torsion_free(),
             "decorated tensor law n=" + std::to_string(n) + " with " + std::to_string(tuples.size()) + " tuples");
    }
  }
  out << (failures == 0 ? "all checks passed" : std::to_string(failures) + " check(s) failed") << '\n';
  return failures == 0 ? kExitOk : kExitFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with Lie trees, their relations and quotients", "lietrees"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) { sub->add_option("--format", cfg.format, "text, json or csv"); };
  auto add_quotient = [&](CLI::App* sub) {
    sub->add_option("--relations", cfg.relations, "comma separated: as, ihx, stu2");
    sub->add_option("--parity", cfg.parity, "odd or even (required with stu2)");
    sub->add_option("--method", cfg.method, "auto, snf, lyndon or modular");
    sub->add_option("--cache-dir", cfg.cache_dir, "result cache directory (overridden by LIETREES_CACHE_DIR)");
  };

  auto* enum_cmd = app.add_subcommand("enum", "list Tree(n)");
  enum_cmd->add_option("--n", cfg.n, "degree")->required();
  add_common(enum_cmd);

  auto* rank_cmd = app.add_subcommand("rank", "structure of a quotient of Z[Tree(n)]");
  rank_cmd->add_option("--n", cfg.n, "degree")->required();
  add_quotient(rank_cmd);
  add_common(rank_cmd);

  auto* table_cmd = app.add_subcommand("table", "ranks of Lie(n) and both Jacobi-tree quotients");
  table_cmd->add_option("--max-n", cfg.max_n, "largest degree")->required();
  table_cmd->add_option("--method", cfg.method, "auto, snf, lyndon or modular");
  table_cmd->add_option("--cache-dir", cfg.cache_dir, "result cache directory");
  add_common(table_cmd);

  auto* reduce_cmd = app.add_subcommand("reduce", "normal form of a tree vector");
  reduce_cmd->add_option("--input", cfg.input, "file with the vector ('-' for stdin)");
  reduce_cmd->add_option("--vector", cfg.vector_text, "the vector, e.g. \"1*[1,2] 1*[2,1]\"");
  reduce_cmd->add_option("--relations", cfg.relations, "as,ihx optionally with stu2");
  reduce_cmd->add_option("--parity", cfg.parity, "odd or even (required with stu2)");
  reduce_cmd->add_option("--group", cfg.group, "generators of the decoration group, e.g. a,b");

  auto* magnus_cmd = app.add_subcommand("magnus", "commutator word and Magnus expansion of a tree");
  magnus_cmd->add_option("--tree", cfg.tree, "tree text")->required();
  magnus_cmd->add_option("--truncate", cfg.truncate, "truncation degree")->required();

  auto* verify_cmd = app.add_subcommand("verify", "run the invariant checks");
  verify_cmd->add_option("--max-n", cfg.max_n, "largest degree (default 4)");
  verify_cmd->add_option("--seed", cfg.seed, "seed for randomized checks");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    check_format(cfg.format);
    if (enum_cmd->parsed()) return cmd_enum(cfg, out);
    if (rank_cmd->parsed()) return cmd_rank(cfg, out);
    if (table_cmd->parsed()) return cmd_table(cfg, out);
    if (reduce_cmd->parsed()) return cmd_reduce(cfg, out);
    if (magnus_cmd->parsed()) return cmd_magnus(cfg, out);
    if (verify_cmd->parsed()) return cmd_verify(cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return kExitResource;
  }
  return kExitUsage;
}

}  // namespace lietrees
