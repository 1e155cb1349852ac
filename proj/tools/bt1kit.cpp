// bt1kit: exact Ekedahl-Oort and cyclic-word calculator for the Jacobians
// of y^d = x(1-x) and their ambient degree-d curves.
//
//   eo        one (p, d) query: type, words, invariants
//   classify  canonical data of a user-supplied word multiset
//   verify    consistency suites (exit 0 iff everything passes)
//   sweep     CSV/JSON table over a prime list and degree range
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "bt1/canonical.hpp"
#include "bt1/eo.hpp"
#include "bt1/error.hpp"
#include "bt1/fermat.hpp"
#include "bt1/invariants.hpp"
#include "bt1/json_io.hpp"
#include "bt1/permdata.hpp"
#include "bt1/verify.hpp"
#include "bt1/word.hpp"

namespace {

using namespace bt1;

std::string vec_str(const std::vector<long long>& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ']';
  return os.str();
}

void print_type(std::ostream& os, const CanonicalType& ct) {
  os << "type: s=" << ct.s << " r=" << ct.r << "\n";
  os << "phi: " << vec_str(ct.phi) << "\n";
  os << "nu: " << vec_str(ct.nu) << "\n";
  os << "rho: " << vec_str(ct.rho) << "\n";
}

void print_perm(std::ostream& os, const PartitionedPermutation& pp) {
  os << "perm:";
  for (const auto& cycle : pp.orbits()) {
    os << " (";
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const std::size_t idx = cycle[i];
      os << (i ? " " : "") << pp.labels()[idx] << ':'
         << static_cast<char>(pp.tag_at(idx));
    }
    os << ')';
  }
  os << "\n";
}

void print_bundle(std::ostream& os, const InvariantBundle& b) {
  os << "p_rank: " << b.p_rank << "\n";
  os << "a_number: " << b.a << "\n";
  os << "s11: " << b.s11 << "\n";
  os << "u11: " << b.u11 << "\n";
  os << "sel_dim: " << b.sel_dim() << "\n";
}

int run_eo(long long p, long long d, bool full_fermat,
           const std::string& format) {
  const FermatSpec spec =
      build_spec(p, d, full_fermat ? CurveKind::FullFermat : CurveKind::Quotient);
  const auto [rle, table] = eo_type(spec);
  const WordMultiset m = word_multiset(spec);
  const WordsCanonicalResult wc = words_to_canonical(m);
  const ElementarySequence es = es_from_canonical(wc.type);
  const InvariantBundle b = invariants_from_words(m);

  if (spec.genus == 0)
    std::cerr << "warning: d <= 2 gives a rational curve; the module is empty\n";

  if (format == "json") {
    Json j;
    j["p"] = p;
    j["d"] = d;
    j["curve"] = full_fermat ? "full" : "quotient";
    j["ell"] = spec.ell;
    j["genus"] = spec.genus;
    j["words"] = m.str();
    j["canonical"] = to_json(wc.type);
    j["es"] = to_json(es);
    j["invariants"] = to_json(b);
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  std::cout << "p: " << p << "\n";
  std::cout << "d: " << d << "\n";
  std::cout << "curve: " << (full_fermat ? "full" : "quotient") << "\n";
  std::cout << "ell: " << spec.ell << "\n";
  std::cout << "genus: " << spec.genus << "\n";
  std::cout << "words: " << m.str() << "\n";
  print_type(std::cout, wc.type);
  std::cout << "psi: " << vec_str(es.psi) << "\n";
  std::cout << "eo: " << rle.str() << "\n";
  std::cout << "eo_pretty: " << rle.pretty() << "\n";
  print_bundle(std::cout, b);
  return 0;
}

int run_classify(const std::string& words, const std::string& format) {
  const WordMultiset m = WordMultiset::parse(words);
  const WordsCanonicalResult wc = words_to_canonical(m);
  const PartitionedPermutation pp = canonical_to_perm(wc.type);
  const bool sd = wc.type.self_dual();
  const bool prim = m.all_primitive();

  if (!sd)
    std::cerr << "warning: multiset is not self-dual; no elementary sequence\n";
  if (!prim)
    std::cerr << "warning: multiset has imprimitive words; invariants omitted\n";

  if (format == "json") {
    Json j;
    j["words"] = m.str();
    j["dim"] = m.total_dim();
    j["self_dual"] = sd;
    j["canonical"] = to_json(wc.type);
    j["perm"] = to_json(pp);
    // The input words themselves form a permutation datum; it is admissible
    // exactly when they are all primitive.  (The printed permutation is the
    // canonical expansion, which is admissible for every valid type.)
    j["admissible"] = prim;
    j["es"] = sd ? to_json(es_from_canonical(wc.type)) : Json(nullptr);
    j["invariants"] = prim ? to_json(invariants_from_words(m)) : Json(nullptr);
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  std::cout << "words: " << m.str() << "\n";
  std::cout << "dim: " << m.total_dim() << "\n";
  std::cout << "self_dual: " << (sd ? "yes" : "no") << "\n";
  print_type(std::cout, wc.type);
  print_perm(std::cout, pp);
  std::cout << "admissible: " << (prim ? "yes" : "no") << "\n";
  if (sd) {
    const ElementarySequence es = es_from_canonical(wc.type);
    std::cout << "psi: " << vec_str(es.psi) << "\n";
    const RunLengthEO rle = RunLengthEO::from_psi(es);
    std::cout << "eo: " << rle.str() << "\n";
    std::cout << "eo_pretty: " << rle.pretty() << "\n";
  }
  if (prim) print_bundle(std::cout, invariants_from_words(m));
  return 0;
}

int report(const std::vector<std::pair<std::string, CheckResult>>& results) {
  bool all = true;
  for (const auto& [name, res] : results) {
    std::cout << name << ": " << (res.pass ? "PASS" : "FAIL") << " ("
              << res.cases << " checks)\n";
    if (!res.detail.empty()) std::cout << "  " << res.detail << "\n";
    all = all && res.pass;
  }
  return all ? 0 : 1;
}

int run_verify(const std::string& suite, long long max_len, long long p,
               long long lmax, long long d_max, long long p_max,
               long long count, long long gmax, std::uint64_t seed) {
  std::vector<std::pair<std::string, CheckResult>> results;
  const bool have_p = p != 0;
  if (suite == "tables") {
    results.emplace_back("golden-tables", verify_golden_tables());
  } else if (suite == "oracle") {
    results.emplace_back("worked-examples", verify_worked_examples());
    results.emplace_back("oracle-equivalence", verify_oracle_equivalence(max_len));
  } else if (suite == "fermat") {
    const std::vector<long long> ps =
        have_p ? std::vector<long long>{p}
               : std::vector<long long>{2, 3, 5, 7, 11, 13};
    results.emplace_back("fermat-consistency",
                         verify_fermat_consistency(ps, d_max ? d_max : 200));
  } else if (suite == "encompassing") {
    const std::vector<long long> ps =
        have_p ? std::vector<long long>{p} : std::vector<long long>{3, 5, 7};
    results.emplace_back("encompassing",
                         verify_encompassing(ps, lmax ? lmax : 4));
  } else if (suite == "hermitian") {
    const std::vector<long long> ps =
        have_p ? std::vector<long long>{p} : std::vector<long long>{3, 5, 7, 11};
    results.emplace_back("hermitian", verify_hermitian(ps, lmax ? lmax : 3));
  } else if (suite == "p2") {
    results.emplace_back("p2", verify_p2(d_max ? d_max : 201));
  } else if (suite == "anumber") {
    results.emplace_back("a-number",
                         verify_anumber(p_max ? p_max : 13, d_max ? d_max : 500));
  } else if (suite == "duality") {
    results.emplace_back("duality", verify_duality(count ? count : 1000, seed));
    results.emplace_back("es-inversion", verify_es_inversion(gmax ? gmax : 6));
  } else {
    std::cerr << "error: unknown suite '" << suite
              << "' (expected tables, oracle, fermat, encompassing, hermitian, "
                 "p2, anumber, duality)\n";
    return 2;
  }
  return report(results);
}

// Quote a CSV field only when it contains a comma, quote or newline.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

struct SweepRow {
  long long p = 0, d = 0, ell = 0, genus = 0;
  InvariantBundle b;
  std::string eo_rle, words;
};

SweepRow sweep_row(long long p, long long d) {
  const FermatSpec spec = build_spec(p, d);
  const auto [rle, table] = eo_type(spec);
  const WordMultiset m = word_multiset(spec);
  SweepRow row;
  row.p = p;
  row.d = d;
  row.ell = spec.ell;
  row.genus = spec.genus;
  row.b = invariants_from_words(m);
  row.eo_rle = rle.str();
  row.words = m.str();
  return row;
}

long long default_jobs() {
  if (const char* env = std::getenv("BT1KIT_JOBS")) {
    const long long n = std::strtoll(env, nullptr, 10);
    if (n > 0) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

int run_sweep(const std::string& p_list, long long d_max,
              const std::string& out, long long jobs,
              const std::string& format) {
  std::vector<long long> ps;
  std::stringstream ss(p_list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    char* end = nullptr;
    const long long p = std::strtoll(item.c_str(), &end, 10);
    if (end == item.c_str() || *end != '\0' || !is_prime(p)) {
      std::cerr << "error: '" << item << "' is not a prime\n";
      return 2;
    }
    ps.push_back(p);
  }
  if (ps.empty()) {
    std::cerr << "error: empty prime list\n";
    return 2;
  }

  std::vector<std::pair<long long, long long>> tasks;
  for (long long p : ps)
    for (long long d = 3; d <= d_max; ++d)
      if (d % p != 0) tasks.emplace_back(p, d);

  if (jobs <= 0) jobs = default_jobs();
  std::vector<SweepRow> rows(tasks.size());
  if (jobs == 1 || tasks.size() < 2) {
    for (std::size_t i = 0; i < tasks.size(); ++i)
      rows[i] = sweep_row(tasks[i].first, tasks[i].second);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next++; i < tasks.size(); i = next++)
        rows[i] = sweep_row(tasks[i].first, tasks[i].second);
    };
    std::vector<std::thread> pool;
    const std::size_t n =
        std::min<std::size_t>(static_cast<std::size_t>(jobs), tasks.size());
    for (std::size_t t = 0; t < n; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  std::ostringstream body;
  if (format == "json") {
    Json arr = Json::array();
    for (const SweepRow& r : rows) {
      Json j;
      j["p"] = r.p;
      j["d"] = r.d;
      j["ell"] = r.ell;
      j["genus"] = r.genus;
      j["p_rank"] = r.b.p_rank;
      j["a_number"] = r.b.a;
      j["s11"] = r.b.s11;
      j["u11"] = r.b.u11;
      j["sel_dim"] = r.b.sel_dim();
      j["eo_rle"] = r.eo_rle;
      j["words"] = r.words;
      arr.push_back(std::move(j));
    }
    body << arr.dump(2) << "\n";
  } else {
    body << "p,d,ell,genus,p_rank,a_number,s11,u11,sel_dim,eo_rle,words\n";
    for (const SweepRow& r : rows) {
      body << r.p << ',' << r.d << ',' << r.ell << ',' << r.genus << ','
           << r.b.p_rank << ',' << r.b.a << ',' << r.b.s11 << ',' << r.b.u11
           << ',' << r.b.sel_dim() << ',' << csv_field(r.eo_rle) << ','
           << csv_field(r.words) << '\n';
    }
  }

  std::ofstream f(out, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open '" << out << "' for writing\n";
    return 3;
  }
  f << body.str();
  f.flush();
  if (!f) {
    std::cerr << "error: write to '" << out << "' failed\n";
    return 3;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact classification data for the kernel-of-p modules of "
               "Jacobians of y^d = x(1-x)"};
  app.require_subcommand(1);

  long long eo_p = 0, eo_d = 0;
  bool eo_full = false;
  std::string eo_format = "text";
  CLI::App* eo = app.add_subcommand("eo", "type and invariants of one curve");
  eo->add_option("--p", eo_p, "prime")->required();
  eo->add_option("--d", eo_d, "degree, coprime to p")->required();
  eo->add_flag("--full-fermat", eo_full, "ambient degree-d curve instead of the quotient");
  eo->add_option("--format", eo_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  std::string cl_words, cl_format = "text";
  CLI::App* cl = app.add_subcommand("classify", "canonical data of a word multiset");
  cl->add_option("--words", cl_words, "multiset, e.g. \"fv^2,ffvv\"")->required();
  cl->add_option("--format", cl_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  std::string vf_suite;
  long long vf_max_len = 10, vf_p = 0, vf_lmax = 0, vf_dmax = 0, vf_pmax = 0;
  long long vf_count = 0, vf_gmax = 0;
  std::uint64_t vf_seed = 20240815;
  CLI::App* vf = app.add_subcommand("verify", "run a consistency suite");
  vf->add_option("--suite", vf_suite,
                 "tables | oracle | fermat | encompassing | hermitian | p2 | "
                 "anumber | duality")
      ->required();
  vf->add_option("--max-len", vf_max_len, "oracle: largest total dimension");
  vf->add_option("--p", vf_p, "restrict the curve suites to one prime");
  vf->add_option("--lmax", vf_lmax, "largest order exponent");
  vf->add_option("--d-max", vf_dmax, "largest degree");
  vf->add_option("--p-max", vf_pmax, "anumber: largest prime");
  vf->add_option("--count", vf_count, "duality: number of random multisets");
  vf->add_option("--gmax", vf_gmax, "duality: largest sequence length inverted");
  vf->add_option("--seed", vf_seed, "duality: random seed");

  std::string sw_plist, sw_out, sw_format = "csv";
  long long sw_dmax = 0, sw_jobs = 0;
  CLI::App* sw = app.add_subcommand("sweep", "table over primes and degrees");
  sw->add_option("--p-list", sw_plist, "comma-separated primes")->required();
  sw->add_option("--d-max", sw_dmax, "largest degree")->required();
  sw->add_option("--out", sw_out, "output path")->required();
  sw->add_option("--jobs", sw_jobs, "worker threads (default: BT1KIT_JOBS or hardware)");
  sw->add_option("--format", sw_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(eo)) return run_eo(eo_p, eo_d, eo_full, eo_format);
    if (app.got_subcommand(cl)) return run_classify(cl_words, cl_format);
    if (app.got_subcommand(vf))
      return run_verify(vf_suite, vf_max_len, vf_p, vf_lmax, vf_dmax, vf_pmax,
                        vf_count, vf_gmax, vf_seed);
    if (app.got_subcommand(sw))
      return run_sweep(sw_plist, sw_dmax, sw_out, sw_jobs, sw_format);
  } catch (const bt1::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
